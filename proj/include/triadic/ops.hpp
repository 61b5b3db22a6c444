#ifndef TRIADIC_OPS_HPP_
#define TRIADIC_OPS_HPP_

#include <vector>

#include "triadic/presentation.hpp"

namespace triadic {

struct InterleaveResult {
  Presentation presentation;
  /// Size of the full tuple construction before trimming: k^n vertices
  /// and m*k^(n-1) edges for an input with k vertices and m edges.
  std::size_t untrimmed_vertex_count = 0;
  std::size_t untrimmed_edge_count = 0;
  /// True when the input was not right-resolving and was determinized.
  bool input_determinized = false;
};

/// n-interleaving P^(*n): sequences whose n arithmetic subsequences all
/// lie in the path set of p.  States are n-tuples of vertices; reading a
/// digit advances the last coordinate and rotates the register.
InterleaveResult interleave(const Presentation& p, unsigned n);

/// Interleaving of several path sets: component j consumes the digits at
/// positions congruent to j modulo the list size.  A list of structurally
/// identical presentations reduces to interleave(p, n).
Presentation interleave_multi(const std::vector<Presentation>& ps);

/// Decimation psi_{j,m}: extracts the digits at positions j, j+m, j+2m...
/// Subset construction followed by state merging, so equal-behavior
/// states collapse; result is right-resolving and trimmed.
Presentation decimate(const Presentation& p, unsigned j, unsigned m);

}  // namespace triadic

#endif  // TRIADIC_OPS_HPP_
