#include "triadic/ternary.hpp"

#include <algorithm>
#include <stdexcept>

namespace triadic {

TernaryString TernaryString::from_value(std::int64_t value) {
  if (value < 0) throw std::invalid_argument("negative value");
  TernaryString t;
  t.digits_.clear();
  if (value == 0) {
    t.digits_.push_back(0);
    return t;
  }
  while (value > 0) {
    t.digits_.push_back(static_cast<Digit>(value % 3));
    value /= 3;
  }
  return t;
}

std::optional<TernaryString> TernaryString::parse_msb(std::string_view text) {
  if (text.empty()) return std::nullopt;
  TernaryString t;
  t.digits_.clear();
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    if (*it < '0' || *it > '2') return std::nullopt;
    t.digits_.push_back(static_cast<Digit>(*it - '0'));
  }
  while (t.digits_.size() > 1 && t.digits_.back() == 0) t.digits_.pop_back();
  return t;
}

std::int64_t TernaryString::value() const {
  std::int64_t v = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * 3 + *it;
  return v;
}

std::string TernaryString::to_msb_string() const {
  std::string s;
  s.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it)
    s.push_back(static_cast<char>('0' + *it));
  return s;
}

TernaryStats ternary_stats(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("ternary_stats requires m >= 1");
  const auto digits = TernaryString::from_value(m).digits();
  TernaryStats st{0, 0, 0, 0};
  Digit prev = 255;
  bool in_nonzero_run = false;
  // Scan most-significant first to match the display reading.
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    Digit d = *it;
    if (d != 0) {
      ++st.d3;
      st.n3 += d;
      if (!in_nonzero_run) ++st.b3;
      in_nonzero_run = true;
    } else {
      in_nonzero_run = false;
    }
    if (d != prev) ++st.s3;
    prev = d;
  }
  return st;
}

std::int64_t normalize_multiplier(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("normalize_multiplier requires m >= 1");
  while (m % 3 == 0) m /= 3;
  return m;
}

}  // namespace triadic
