#include "triadic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triadic {

namespace {

constexpr double kPowerTolerance = 1e-12;
constexpr std::size_t kMaxPowerIterations = 1'000'000;

struct SparseEdge {
  std::uint32_t from;
  std::uint32_t to;
  double weight;
};

// Perron value of an irreducible nonnegative block, by power iteration
// on (B + I), which is primitive.  Convergence is certified with the
// Collatz-Wielandt enclosure min_i (Bx)_i/x_i <= rho <= max_i (Bx)_i/x_i,
// valid for positive x; the Rayleigh-quotient residual is below the same
// gap.  Throws if the enclosure does not reach the tolerance.
double irreducible_block_perron(std::size_t n, const std::vector<SparseEdge>& edges) {
  std::vector<double> x(n, 1.0), y(n);
  double lo = 0.0, hi = 0.0;
  for (std::size_t iter = 0; iter < kMaxPowerIterations; ++iter) {
    // y = (B + I) x
    y = x;
    for (const auto& e : edges) y[e.to] += e.weight * x[e.from];
    lo = std::numeric_limits<double>::infinity();
    hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double ratio = y[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo <= kPowerTolerance) return 0.5 * (lo + hi) - 1.0;
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw std::runtime_error("power iteration did not converge");
}

// SCCs of the support digraph of a matrix, via iterative Tarjan on an
// adjacency list.
std::vector<std::vector<std::uint32_t>> matrix_sccs(const AdjacencyMatrix& a) {
  const std::size_t n = a.n;
  std::vector<std::vector<std::uint32_t>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.at(i, j) > 0) out[i].push_back(static_cast<std::uint32_t>(j));

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 0;
  std::vector<std::vector<std::uint32_t>> components;
  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < out[f.v].size()) {
        std::uint32_t w = out[f.v][f.edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        std::uint32_t v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<std::uint32_t> comp;
          while (true) {
            std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == v) break;
          }
          components.push_back(std::move(comp));
        }
      }
    }
  }
  return components;
}

double block_perron(const AdjacencyMatrix& a, const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> position(a.n, 0);
  for (std::uint32_t i = 0; i < members.size(); ++i) position[members[i]] = i;
  std::vector<SparseEdge> edges;
  for (std::uint32_t i = 0; i < members.size(); ++i)
    for (std::uint32_t j = 0; j < members.size(); ++j) {
      auto c = a.at(members[i], members[j]);
      if (c > 0) edges.push_back({i, j, static_cast<double>(c)});
    }
  return irreducible_block_perron(members.size(), edges);
}

}  // namespace

AdjacencyMatrix adjacency_matrix(const Presentation& p) {
  AdjacencyMatrix a;
  a.n = p.vertex_count();
  a.counts.assign(a.n * a.n, 0);
  for (VertexId u = 0; u < a.n; ++u)
    for (const auto& e : p.out(u)) ++a.at(u, e.to);
  return a;
}

double spectral_radius(const AdjacencyMatrix& a) {
  if (a.n == 0) return 0.0;
  double best = 0.0;
  for (const auto& comp : matrix_sccs(a))
    best = std::max(best, block_perron(a, comp));
  return best;
}

DimensionReport hausdorff_dimension(const Presentation& p) {
  DimensionReport report;
  Presentation t = trim(p);
  if (t.is_empty()) {
    report.degenerate = true;
    return report;
  }
  report.vertex_count = t.vertex_count();
  report.edge_count = t.edge_count();

  AdjacencyMatrix a = adjacency_matrix(t);
  SccDecomposition scc = scc_decomposition(t);
  report.per_scc.reserve(scc.components.size());
  double best = 0.0;
  std::size_t best_component = 0;
  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    double beta = block_perron(a, scc.components[c]);
    report.per_scc.push_back({c, scc.components[c].size(), beta});
    if (beta > best) {
      best = beta;
      best_component = c;
    }
  }
  // A trimmed nonempty presentation always contains a cycle.
  report.beta = std::max(best, 1.0);
  report.dominant_component = best_component;
  report.dimension = std::log(report.beta) / std::log(3.0);
  return report;
}

BigInt count_initial_blocks(const Presentation& p, unsigned length) {
  if (!is_right_resolving(p))
    throw std::invalid_argument("count_initial_blocks requires a right-resolving presentation");
  Presentation t = trim(p);
  if (t.is_empty()) return 0;
  std::vector<BigInt> counts(t.vertex_count(), 0), next(t.vertex_count());
  counts[t.marked()] = 1;
  for (unsigned step = 0; step < length; ++step) {
    for (auto& c : next) c = 0;
    for (VertexId u = 0; u < t.vertex_count(); ++u) {
      if (counts[u] == 0) continue;
      for (const auto& e : t.out(u)) next[e.to] += counts[u];
    }
    counts.swap(next);
  }
  BigInt total = 0;
  for (const auto& c : counts) total += c;
  return total;
}

double entropy_estimate(const Presentation& p, unsigned length) {
  if (length == 0) throw std::invalid_argument("entropy_estimate requires length >= 1");
  BigInt count = count_initial_blocks(p, length);
  if (count == 0) return 0.0;
  double value = count.convert_to<double>();
  return std::log(value) / std::log(3.0) / length;
}

double lk_char_poly_root(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto f = [k](double x) {
    double p = 1.0;
    for (unsigned i = 0; i + 1 < k; ++i) p *= x;
    return p * (x - 1.0) - 1.0;  // x^k - x^(k-1) - 1
  };
  double lo = 1.0, hi = 2.0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace triadic
