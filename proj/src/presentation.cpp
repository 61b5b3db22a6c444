#include "triadic/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stack>
#include <stdexcept>

namespace triadic {

VertexId Presentation::add_vertex(std::string label) {
  if (label_index_.contains(label))
    throw std::invalid_argument("duplicate vertex label: " + label);
  VertexId id = static_cast<VertexId>(labels_.size());
  label_index_.emplace(label, id);
  labels_.push_back(std::move(label));
  out_.emplace_back();
  if (marked_ == kNoVertex) marked_ = id;
  return id;
}

void Presentation::add_edge(VertexId from, VertexId to, Digit digit) {
  if (from >= labels_.size() || to >= labels_.size())
    throw std::invalid_argument("edge endpoint out of range");
  if (digit >= kAlphabetSize) throw std::invalid_argument("digit out of range");
  auto& row = out_[from];
  OutEdge e{digit, to};
  auto it = std::lower_bound(row.begin(), row.end(), e);
  if (it != row.end() && *it == e) return;
  row.insert(it, e);
  ++edge_count_;
}

void Presentation::set_marked(VertexId v) {
  if (v >= labels_.size()) throw std::invalid_argument("marked vertex out of range");
  marked_ = v;
}

std::optional<VertexId> Presentation::find_vertex(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Presentation::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (VertexId u = 0; u < labels_.size(); ++u)
    for (const auto& e : out_[u]) result.push_back({u, e.to, e.digit});
  return result;
}

bool Presentation::operator==(const Presentation& other) const {
  return labels_ == other.labels_ && out_ == other.out_ && marked_ == other.marked_;
}

Presentation trim(const Presentation& p) {
  if (p.is_empty()) return {};
  const std::size_t n = p.vertex_count();

  std::vector<bool> reachable(n, false);
  std::deque<VertexId> queue{p.marked()};
  reachable[p.marked()] = true;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const auto& e : p.out(u))
      if (!reachable[e.to]) {
        reachable[e.to] = true;
        queue.push_back(e.to);
      }
  }

  // Kahn-style sink elimination restricted to the reachable part.
  std::vector<std::size_t> live_out(n, 0);
  std::vector<std::vector<VertexId>> in(n);
  for (VertexId u = 0; u < n; ++u) {
    if (!reachable[u]) continue;
    for (const auto& e : p.out(u))
      if (reachable[e.to]) {
        ++live_out[u];
        in[e.to].push_back(u);
      }
  }
  std::vector<bool> alive = reachable;
  std::deque<VertexId> dead;
  for (VertexId u = 0; u < n; ++u)
    if (reachable[u] && live_out[u] == 0) dead.push_back(u);
  while (!dead.empty()) {
    VertexId v = dead.front();
    dead.pop_front();
    alive[v] = false;
    for (VertexId u : in[v]) {
      if (!alive[u]) continue;
      std::size_t loops = 0;
      for (const auto& e : p.out(u))
        if (e.to == v) ++loops;
      live_out[u] -= loops;
      if (live_out[u] == 0) dead.push_back(u);
    }
  }
  if (!alive[p.marked()]) return {};

  Presentation result;
  std::vector<VertexId> remap(n, kNoVertex);
  for (VertexId u = 0; u < n; ++u)
    if (alive[u]) remap[u] = result.add_vertex(p.label(u));
  for (VertexId u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    for (const auto& e : p.out(u))
      if (alive[e.to]) result.add_edge(remap[u], remap[e.to], e.digit);
  }
  result.set_marked(remap[p.marked()]);
  return result;
}

bool is_right_resolving(const Presentation& p) {
  for (VertexId u = 0; u < p.vertex_count(); ++u) {
    const auto& row = p.out(u);
    for (std::size_t i = 1; i < row.size(); ++i)
      if (row[i].digit == row[i - 1].digit) return false;
  }
  return true;
}

namespace {

std::string subset_label(const Presentation& p, const std::vector<VertexId>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += p.label(members[i]);
  }
  s += "}";
  return s;
}

}  // namespace

Presentation determinize(const Presentation& p) {
  Presentation source = trim(p);
  if (source.is_empty()) return {};

  std::map<std::vector<VertexId>, VertexId> index;
  std::deque<std::vector<VertexId>> queue;
  Presentation result;

  std::vector<VertexId> start{source.marked()};
  index.emplace(start, result.add_vertex(subset_label(source, start)));
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    std::vector<VertexId> state = std::move(queue.front());
    queue.pop_front();
    VertexId from = index.at(state);
    for (Digit d = 0; d < kAlphabetSize; ++d) {
      std::set<VertexId> next;
      for (VertexId u : state)
        for (const auto& e : source.out(u))
          if (e.digit == d) next.insert(e.to);
      if (next.empty()) continue;
      std::vector<VertexId> key(next.begin(), next.end());
      auto [it, inserted] = index.try_emplace(key, 0);
      if (inserted) {
        it->second = result.add_vertex(subset_label(source, key));
        queue.push_back(key);
      }
      result.add_edge(from, it->second, d);
    }
  }
  result.set_marked(0);
  return trim(result);
}

Presentation label_product(const Presentation& a, const Presentation& b) {
  Presentation pa = trim(a), pb = trim(b);
  if (pa.is_empty() || pb.is_empty()) return {};

  std::map<std::pair<VertexId, VertexId>, VertexId> index;
  std::deque<std::pair<VertexId, VertexId>> queue;
  Presentation result;

  auto intern = [&](std::pair<VertexId, VertexId> s) {
    auto [it, inserted] = index.try_emplace(s, 0);
    if (inserted) {
      it->second = result.add_vertex("(" + pa.label(s.first) + "&" + pb.label(s.second) + ")");
      queue.push_back(s);
    }
    return it->second;
  };

  intern({pa.marked(), pb.marked()});
  while (!queue.empty()) {
    auto [ua, ub] = queue.front();
    queue.pop_front();
    VertexId from = index.at({ua, ub});
    for (const auto& ea : pa.out(ua))
      for (const auto& eb : pb.out(ub))
        if (ea.digit == eb.digit)
          result.add_edge(from, intern({ea.to, eb.to}), ea.digit);
  }
  result.set_marked(0);
  return trim(result);
}

bool run_automaton(const Presentation& p, const std::vector<Digit>& prefix) {
  if (!is_right_resolving(p))
    throw std::invalid_argument("run_automaton requires a right-resolving presentation");
  if (p.is_empty()) return false;
  VertexId cur = p.marked();
  for (Digit d : prefix) {
    VertexId next = kNoVertex;
    for (const auto& e : p.out(cur))
      if (e.digit == d) {
        next = e.to;
        break;
      }
    if (next == kNoVertex) return false;
    cur = next;
  }
  return true;
}

SccDecomposition scc_decomposition(const Presentation& p) {
  const std::size_t n = p.vertex_count();
  SccDecomposition result;
  result.component_of.assign(n, 0);
  if (n == 0) return result;

  // Iterative Tarjan.
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::uint32_t counter = 0;
  std::vector<std::vector<VertexId>> components;  // reverse topological

  struct Frame {
    VertexId v;
    std::size_t edge;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& row = p.out(f.v);
      if (f.edge < row.size()) {
        VertexId w = row[f.edge++].to;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        VertexId v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<VertexId> comp;
          while (true) {
            VertexId w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == v) break;
          }
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
      }
    }
  }

  // Tarjan emits components in reverse topological order.
  std::reverse(components.begin(), components.end());
  for (std::uint32_t c = 0; c < components.size(); ++c)
    for (VertexId v : components[c]) result.component_of[v] = c;
  std::set<std::pair<std::uint32_t, std::uint32_t>> cedges;
  for (VertexId u = 0; u < n; ++u)
    for (const auto& e : p.out(u)) {
      auto cu = result.component_of[u], cv = result.component_of[e.to];
      if (cu != cv) cedges.insert({cu, cv});
    }
  result.components = std::move(components);
  result.condensation_edges.assign(cedges.begin(), cedges.end());
  return result;
}

namespace {

void require_trimmed_right_resolving(const Presentation& p, const char* who) {
  if (!is_right_resolving(p))
    throw std::invalid_argument(std::string(who) + " requires a right-resolving presentation");
  if (p.is_empty()) return;
  std::vector<bool> seen(p.vertex_count(), false);
  std::deque<VertexId> queue{p.marked()};
  seen[p.marked()] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    if (p.out(u).empty())
      throw std::invalid_argument(std::string(who) + " requires a trimmed presentation");
    for (const auto& e : p.out(u))
      if (!seen[e.to]) {
        seen[e.to] = true;
        ++count;
        queue.push_back(e.to);
      }
  }
  if (count != p.vertex_count())
    throw std::invalid_argument(std::string(who) + " requires a trimmed presentation");
}

}  // namespace

CanonicalForm canonical_form(const Presentation& p) {
  require_trimmed_right_resolving(p, "canonical_form");
  if (p.is_empty()) return {"0;"};

  // Breadth-first renumbering from the marked vertex, out-edges in digit
  // order.  Right-resolving makes the numbering independent of vertex ids.
  const std::size_t n = p.vertex_count();
  std::vector<VertexId> order;
  std::vector<VertexId> number(n, kNoVertex);
  order.reserve(n);
  number[p.marked()] = 0;
  order.push_back(p.marked());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& e : p.out(order[i]))  // sorted by digit
      if (number[e.to] == kNoVertex) {
        number[e.to] = static_cast<VertexId>(order.size());
        order.push_back(e.to);
      }
  }

  std::ostringstream os;
  os << n << ";";
  for (VertexId u : order) {
    std::array<long long, kAlphabetSize> slot{-1, -1, -1};
    for (const auto& e : p.out(u)) slot[e.digit] = number[e.to];
    os << slot[0] << "," << slot[1] << "," << slot[2] << ";";
  }
  return {os.str()};
}

AutomorphismResult verify_automorphism(const Presentation& p,
                                       const std::vector<VertexId>& vertex_map,
                                       const std::array<Digit, 3>& digit_map) {
  const std::size_t n = p.vertex_count();
  if (vertex_map.size() != n)
    throw std::invalid_argument("vertex_map size mismatch");
  std::vector<bool> hit(n, false);
  for (VertexId v : vertex_map) {
    if (v >= n || hit[v]) throw std::invalid_argument("vertex_map is not a bijection");
    hit[v] = true;
  }
  {
    std::array<bool, 3> dhit{false, false, false};
    for (Digit d : digit_map) {
      if (d >= kAlphabetSize || dhit[d])
        throw std::invalid_argument("digit_map is not a permutation");
      dhit[d] = true;
    }
  }

  std::set<Edge> edge_set;
  for (const Edge& e : p.edges()) edge_set.insert(e);
  AutomorphismResult result;
  for (const Edge& e : edge_set)
    if (!edge_set.contains({vertex_map[e.from], vertex_map[e.to], digit_map[e.digit]}))
      return result;
  result.holds = true;

  bool involution = true;
  for (VertexId v = 0; v < n; ++v)
    if (vertex_map[vertex_map[v]] != v) {
      involution = false;
      break;
    }
  if (!involution) return result;

  // Quotient on orbits {v, map(v)}; each edge orbit contributes once,
  // keeping the digit of its lexicographically smaller member.
  std::vector<VertexId> orbit(n, kNoVertex);
  UnpointedGraph q;
  for (VertexId v = 0; v < n; ++v) {
    VertexId rep = std::min(v, vertex_map[v]);
    if (rep == v) {
      orbit[v] = static_cast<VertexId>(q.labels.size());
      q.labels.push_back(p.label(v));
    }
  }
  for (VertexId v = 0; v < n; ++v)
    if (orbit[v] == kNoVertex) orbit[v] = orbit[vertex_map[v]];

  std::set<Edge> qedges;
  for (const Edge& e : edge_set) {
    Edge mirror{vertex_map[e.from], vertex_map[e.to], digit_map[e.digit]};
    if (mirror < e && mirror != e) continue;  // the mirror adds this orbit
    qedges.insert({orbit[e.from], orbit[e.to], e.digit});
  }
  q.edges.assign(qedges.begin(), qedges.end());
  result.quotient = std::move(q);
  return result;
}

}  // namespace triadic
