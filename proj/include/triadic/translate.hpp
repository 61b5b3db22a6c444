#ifndef TRIADIC_TRANSLATE_HPP_
#define TRIADIC_TRANSLATE_HPP_

#include <cstdint>
#include <vector>

#include "triadic/presentation.hpp"

namespace triadic {

/// Distinct positive integers, kept sorted ascending.
class MultiplierSet {
 public:
  explicit MultiplierSet(std::vector<std::int64_t> multipliers);
  const std::vector<std::int64_t>& values() const { return multipliers_; }

 private:
  std::vector<std::int64_t> multipliers_;
};

enum class Family { L, N, P, Q };

/// L_k = (3^k-1)/2, N_k = 3^k+1, P_k = 2*3^k+1, Q_k = 3^(2k)-3^k+1.
std::int64_t family_member(Family family, unsigned k);

/// Carry-transducer presentation of X(M_1,...,M_n): the 3-adic digit
/// sequences of x with M_i*x omitting digit 2 for every i.
///
/// States are carry tuples (s_1,...,s_n), start all zero.  Reading input
/// digit a, each multiplier produces t_i = M_i*a + s_i; the transition
/// exists iff every output digit t_i mod 3 lies in {0,1}, and the new
/// carry is floor(t_i/3).  Carries never exceed M_i.  The result is
/// trimmed and right-resolving; vertex labels are the ternary carries of
/// the multipliers greater than 1, joined by '|'.
Presentation build_translate_presentation(const MultiplierSet& ms);

}  // namespace triadic

#endif  // TRIADIC_TRANSLATE_HPP_
