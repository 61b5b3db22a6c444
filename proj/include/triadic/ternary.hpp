#ifndef TRIADIC_TERNARY_HPP_
#define TRIADIC_TERNARY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triadic/presentation.hpp"  // Digit

namespace triadic {

/// Finite digit sequence over {0,1,2}, least-significant digit first.
/// Normalized: no most-significant zeros except the string "0".
class TernaryString {
 public:
  TernaryString() : digits_{0} {}
  static TernaryString from_value(std::int64_t value);
  /// Parses the display form (most-significant digit first).
  static std::optional<TernaryString> parse_msb(std::string_view text);

  std::int64_t value() const;
  std::size_t size() const { return digits_.size(); }
  Digit digit(std::size_t i) const { return i < digits_.size() ? digits_[i] : 0; }
  const std::vector<Digit>& digits() const { return digits_; }

  /// Display form, most-significant digit first.
  std::string to_msb_string() const;

  bool operator==(const TernaryString&) const = default;

 private:
  std::vector<Digit> digits_;
};

struct TernaryStats {
  int d3;  // nonzero digits
  int n3;  // digit sum
  int b3;  // maximal runs of nonzero digits
  int s3;  // maximal runs of equal digits
};

TernaryStats ternary_stats(std::int64_t m);

/// Divides out the largest power of 3.
std::int64_t normalize_multiplier(std::int64_t m);

}  // namespace triadic

#endif  // TRIADIC_TERNARY_HPP_
