#ifndef TRIADIC_FAMILY_HPP_
#define TRIADIC_FAMILY_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "triadic/presentation.hpp"
#include "triadic/spectral.hpp"
#include "triadic/ternary.hpp"

namespace triadic {

enum class SClass { S1, S2 };
enum class TClass { T1, T2 };

struct LabelClass {
  SClass s_class;
  TClass t_class;
  unsigned depth;
};

/// Classifies a vertex label of X(1,P_k): S1 labels omit digit 1 in
/// their k-digit form, S2 labels carry a single 1 with only zeros below
/// it (plus 3^k itself).  Depth of a T1 label is its number of maximal
/// runs of digit 2; a T2 label inherits the depth of its reflection
/// 3^k - label.  Throws when the value exceeds 3^k or fits neither class.
LabelClass classify_pk_vertex(const TernaryString& label, unsigned k);
LabelClass classify_pk_vertex(std::int64_t value, unsigned k);

struct DepthTable {
  unsigned k = 0;
  std::vector<std::size_t> counts;    // counts[j] = vertices at depth j
  std::vector<std::size_t> expected;  // 2*binomial(k+1, 2j+1)
  bool matches() const { return counts == expected; }
};

DepthTable pk_depth_table(unsigned k);

struct PkStructureReport {
  unsigned k = 0;
  bool ok = false;
  std::vector<std::string> failures;
  std::size_t vertex_count = 0;
  std::vector<std::size_t> scc_sizes_by_depth;
  std::size_t quotient_vertex_count = 0;
};

/// Checks, on build([1,P_k]): 2^(k+1) vertices; depth nondecreasing along
/// edges; each depth class is exactly one strongly connected component;
/// the condensation is the chain 0 -> 1 -> ... -> floor(k/2); and the
/// reflection m -> 3^k - m with digits 0 and 1 swapped is a fixed-point
/// free automorphism whose quotient has 2^k vertices.
PkStructureReport pk_structure_check(unsigned k);

struct WitnessReport {
  unsigned k = 0;
  bool verified = false;
  double bound = 0.0;      // (a/(2k-1)) log_3 2, a = floor(k/4)
  double dimension = 0.0;  // dim C(1,P_k)
  std::string failing_string;
  std::size_t strings_checked = 0;
};

/// Witness strings for the positive-entropy subshift inside X(1,P_k):
/// prefix (1100)^a 0^b followed by `periods` copies of the cycle
/// (1 x 0)(0 1 z 0)^(a-1) 0^b (1100)^a 0^b at the vertex 0^b (0022)^a,
/// one free digit per chunk (2^a choices per period, independent across
/// periods).  Digits are in path order (least significant first).
std::vector<std::vector<Digit>> pk_witness_strings(unsigned k, unsigned periods);

/// Verifies every witness string over three periods and the dimension
/// bounds dim >= (a/(2k-1)) log_3 2 and dim >= (1/13) log_3 2.
WitnessReport pk_lower_bound_witness(unsigned k);

struct AppendixSubgraphReport {
  unsigned k = 0;
  bool ok = false;
  std::vector<std::string> failures;
  double dim_pk = 0.0;
  double dim_lk1 = 0.0;  // dim C(1,L_{k+1})
  bool equality = false;  // within 5e-7
};

/// Embeds the explicit (2k+2)-vertex cycle-with-two-loops subgraph H in
/// build([1,P_k]) and checks that identifying antipodal cycle positions
/// exhibits H as a double cover of the underlying digraph of
/// build([1,L_{k+1}]); then checks dim C(1,P_k) >= dim C(1,L_{k+1}).
AppendixSubgraphReport pk_appendix_subgraph(unsigned k);

struct QkReport {
  unsigned k = 0;
  bool ok = false;
  std::vector<std::string> failures;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t scc_count = 0;
  double dimension = 0.0;
};

/// Checks build([1,Q_k]): 4^k vertices, 6*4^(k-1) edges, one strongly
/// connected component, dimension log_3 phi, and pointed isomorphism
/// with interleave(build([1,7]), k).
QkReport qk_identity_check(unsigned k);

struct Alpha2Report {
  std::int64_t bound = 0;
  bool ok = false;
  std::vector<std::int64_t> violations;
  double max_dimension = 0.0;
  std::vector<std::int64_t> maximizers;
};

/// Scans M = 4..bound with M = 1 (mod 3) (at least two nonzero ternary
/// digits) and checks dim C(1,M) <= log_3 phi.  Reports the maximum and
/// every M attaining it.
Alpha2Report alpha2_scan(std::int64_t bound, unsigned jobs = 0);

struct PkTupleReport {
  std::vector<unsigned> ks;
  double dimension = 0.0;
  double dim_l_next = 0.0;       // dim C(1, L_{max(ks)+1})
  double dim_l_next2 = 0.0;      // dim C(1, L_{max(ks)+2})
  bool ge_l_next = false;
  bool ge_l_next2 = false;
  bool positive = false;
};

/// Dimension of C(1, P_{k_1}, ..., P_{k_n}) compared against the two
/// candidate L-family floors; asserts nothing, reports both.
PkTupleReport pk_tuple_intersection(const std::vector<unsigned>& ks);

inline double log3(double x) { return std::log(x) / std::log(3.0); }
inline const double kLog3Phi = log3((1.0 + std::sqrt(5.0)) / 2.0);
inline const double kLog3Two = log3(2.0);

}  // namespace triadic

#endif  // TRIADIC_FAMILY_HPP_
