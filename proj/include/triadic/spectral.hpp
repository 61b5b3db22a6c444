#ifndef TRIADIC_SPECTRAL_HPP_
#define TRIADIC_SPECTRAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "triadic/presentation.hpp"

namespace triadic {

using BigInt = boost::multiprecision::cpp_int;

struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> counts;  // row-major, counts[i*n+j] = #edges i->j

  std::uint32_t at(std::size_t i, std::size_t j) const { return counts[i * n + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return counts[i * n + j]; }
};

AdjacencyMatrix adjacency_matrix(const Presentation& p);

/// Perron eigenvalue (spectral radius) of a nonnegative integer matrix:
/// the maximum over strongly connected blocks of the block's Perron
/// value, each block solved by power iteration on (A_block + I).
/// Returns 0 for the zero or empty matrix.
double spectral_radius(const AdjacencyMatrix& a);

struct SccEigenvalue {
  std::size_t component;
  std::size_t size;
  double beta;
};

struct DimensionReport {
  double beta = 1.0;
  double dimension = 0.0;  // log_3(beta)
  std::vector<SccEigenvalue> per_scc;
  std::size_t dominant_component = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool degenerate = false;  // empty path set
};

/// Dimension log_3(beta) of the path set fractal presented by p.
/// Trims internally; the empty presentation yields the degenerate
/// report (beta = 1, dimension 0).
DimensionReport hausdorff_dimension(const Presentation& p);

/// Number of length-n paths from the marked vertex (equivalently, for a
/// right-resolving presentation, the number of distinct initial blocks of
/// length n of the path set).  Trims internally so that every counted
/// block extends to an infinite walk.
BigInt count_initial_blocks(const Presentation& p, unsigned length);

/// (1/n) log_3 of the initial-block count; converges to the dimension.
double entropy_estimate(const Presentation& p, unsigned length);

/// The unique real root > 1 of lambda^k - lambda^(k-1) - 1 = 0.
double lk_char_poly_root(unsigned k);

}  // namespace triadic

#endif  // TRIADIC_SPECTRAL_HPP_
