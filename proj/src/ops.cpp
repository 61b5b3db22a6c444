#include "triadic/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace triadic {

namespace {

Presentation prepare(const Presentation& p, bool* determinized) {
  Presentation t = trim(p);
  if (!t.is_empty() && !is_right_resolving(t)) {
    if (determinized) *determinized = true;
    return determinize(t);
  }
  return t;
}

// Merges states of a right-resolving presentation with identical
// behavior (same enabled digits, equivalent successors); plain Moore
// partition refinement, no acceptance classes.
Presentation merge_equivalent_states(const Presentation& p) {
  if (p.is_empty()) return p;
  const std::size_t n = p.vertex_count();
  std::vector<std::array<long long, kAlphabetSize>> next(n, {-1, -1, -1});
  for (VertexId u = 0; u < n; ++u)
    for (const auto& e : p.out(u)) next[u][e.digit] = e.to;

  std::vector<std::uint32_t> part(n, 0);
  {
    std::map<std::array<bool, kAlphabetSize>, std::uint32_t> classes;
    for (VertexId u = 0; u < n; ++u) {
      std::array<bool, kAlphabetSize> sig{};
      for (int d = 0; d < kAlphabetSize; ++d) sig[d] = next[u][d] >= 0;
      part[u] = classes.try_emplace(sig, static_cast<std::uint32_t>(classes.size())).first->second;
    }
  }
  while (true) {
    std::map<std::array<long long, kAlphabetSize + 1>, std::uint32_t> classes;
    std::vector<std::uint32_t> refined(n);
    for (VertexId u = 0; u < n; ++u) {
      std::array<long long, kAlphabetSize + 1> sig{};
      sig[0] = part[u];
      for (int d = 0; d < kAlphabetSize; ++d)
        sig[d + 1] = next[u][d] >= 0 ? part[next[u][d]] : -1;
      refined[u] = classes.try_emplace(sig, static_cast<std::uint32_t>(classes.size())).first->second;
    }
    if (refined == part) break;
    part = std::move(refined);
  }

  std::uint32_t class_count = *std::max_element(part.begin(), part.end()) + 1;
  if (class_count == n) return p;
  Presentation result;
  for (std::uint32_t c = 0; c < class_count; ++c)
    result.add_vertex("q" + std::to_string(c));
  std::set<Edge> added;
  for (VertexId u = 0; u < n; ++u)
    for (const auto& e : p.out(u)) {
      Edge edge{part[u], part[e.to], e.digit};
      if (added.insert(edge).second) result.add_edge(edge.from, edge.to, edge.digit);
    }
  result.set_marked(part[p.marked()]);
  return trim(result);
}

}  // namespace

InterleaveResult interleave(const Presentation& p, unsigned n) {
  if (n == 0) throw std::invalid_argument("interleave requires n >= 1");
  InterleaveResult res;
  Presentation source = prepare(p, &res.input_determinized);
  if (source.is_empty()) return res;

  const std::size_t k = source.vertex_count();
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > (std::size_t{1} << 26) / k)
      throw std::invalid_argument("interleave state space too large");
    total *= k;
  }
  res.untrimmed_vertex_count = total;
  res.untrimmed_edge_count = source.edge_count() * (total / k);

  // Tuple (i_1,...,i_n) encoded as an n-digit base-k number; an edge
  // u -> v on a yields (i_1,...,i_{n-1},u) -> (v,i_1,...,i_{n-1}) on a.
  Presentation full;
  for (std::size_t code = 0; code < total; ++code) {
    std::string label;
    std::size_t c = code;
    std::vector<std::size_t> tuple(n);
    for (unsigned t = 0; t < n; ++t) {
      tuple[n - 1 - t] = c % k;
      c /= k;
    }
    for (unsigned t = 0; t < n; ++t) {
      if (t) label += "*";
      label += source.label(static_cast<VertexId>(tuple[t]));
    }
    full.add_vertex(label);
  }
  const std::size_t prefix_count = total / k;
  auto edges = source.edges();
  for (std::size_t prefix = 0; prefix < prefix_count; ++prefix)
    for (const auto& e : edges) {
      std::size_t from = prefix * k + e.from;
      std::size_t to = static_cast<std::size_t>(e.to) * prefix_count + prefix;
      full.add_edge(static_cast<VertexId>(from), static_cast<VertexId>(to), e.digit);
    }
  std::size_t marked = 0;
  for (unsigned t = 0; t < n; ++t) marked = marked * k + source.marked();
  full.set_marked(static_cast<VertexId>(marked));
  res.presentation = trim(full);
  return res;
}

Presentation interleave_multi(const std::vector<Presentation>& ps) {
  if (ps.empty()) throw std::invalid_argument("interleave_multi requires a nonempty list");
  std::vector<Presentation> prepared;
  prepared.reserve(ps.size());
  for (const auto& p : ps) {
    prepared.push_back(prepare(p, nullptr));
    if (prepared.back().is_empty()) return {};
  }
  if (prepared.size() == 1) return prepared.front();

  bool all_equal = true;
  CanonicalForm first = canonical_form(prepared.front());
  for (std::size_t i = 1; i < prepared.size(); ++i)
    if (canonical_form(prepared[i]) != first) {
      all_equal = false;
      break;
    }
  if (all_equal)
    return interleave(prepared.front(), static_cast<unsigned>(prepared.size())).presentation;

  // General case: phase-tagged tuples; at phase j component j advances.
  const std::size_t m = prepared.size();
  using State = std::vector<VertexId>;  // [phase, v_0, ..., v_{m-1}]
  std::map<State, VertexId> index;
  std::deque<State> queue;
  Presentation result;

  auto label_of = [&](const State& s) {
    std::string label = "p" + std::to_string(s[0]) + ":";
    for (std::size_t i = 0; i < m; ++i) {
      if (i) label += "*";
      label += prepared[i].label(s[i + 1]);
    }
    return label;
  };

  State start(m + 1);
  start[0] = 0;
  for (std::size_t i = 0; i < m; ++i) start[i + 1] = prepared[i].marked();
  index.emplace(start, result.add_vertex(label_of(start)));
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    State state = std::move(queue.front());
    queue.pop_front();
    VertexId from = index.at(state);
    std::size_t phase = state[0];
    for (const auto& e : prepared[phase].out(state[phase + 1])) {
      State next = state;
      next[0] = static_cast<VertexId>((phase + 1) % m);
      next[phase + 1] = e.to;
      auto [it, inserted] = index.try_emplace(next, 0);
      if (inserted) {
        it->second = result.add_vertex(label_of(next));
        queue.push_back(next);
      }
      result.add_edge(from, it->second, e.digit);
    }
  }
  result.set_marked(0);
  return trim(result);
}

Presentation decimate(const Presentation& p, unsigned j, unsigned m) {
  if (m == 0) throw std::invalid_argument("decimate requires m >= 1");
  Presentation source = trim(p);
  if (source.is_empty()) return {};

  auto successors = [&](const std::set<VertexId>& s) {
    std::set<VertexId> t;
    for (VertexId u : s)
      for (const auto& e : source.out(u)) t.insert(e.to);
    return t;
  };
  auto successors_on = [&](const std::set<VertexId>& s, Digit d) {
    std::set<VertexId> t;
    for (VertexId u : s)
      for (const auto& e : source.out(u))
        if (e.digit == d) t.insert(e.to);
    return t;
  };

  std::set<VertexId> start{source.marked()};
  for (unsigned i = 0; i < j; ++i) start = successors(start);

  std::map<std::set<VertexId>, VertexId> index;
  std::deque<std::set<VertexId>> queue;
  Presentation subset_graph;
  index.emplace(start, subset_graph.add_vertex("s0"));
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    std::set<VertexId> state = std::move(queue.front());
    queue.pop_front();
    VertexId from = index.at(state);
    for (Digit d = 0; d < kAlphabetSize; ++d) {
      std::set<VertexId> next = successors_on(state, d);
      for (unsigned step = 0; step + 1 < m && !next.empty(); ++step) next = successors(next);
      if (next.empty()) continue;
      auto [it, inserted] = index.try_emplace(next, 0);
      if (inserted) {
        it->second = subset_graph.add_vertex("s" + std::to_string(index.size() - 1));
        queue.push_back(next);
      }
      subset_graph.add_edge(from, it->second, d);
    }
  }
  subset_graph.set_marked(0);
  return merge_equivalent_states(trim(subset_graph));
}

}  // namespace triadic
