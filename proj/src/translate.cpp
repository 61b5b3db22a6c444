#include "triadic/translate.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>

#include "triadic/ternary.hpp"

namespace triadic {

MultiplierSet::MultiplierSet(std::vector<std::int64_t> multipliers)
    : multipliers_(std::move(multipliers)) {
  if (multipliers_.empty()) throw std::invalid_argument("empty multiplier set");
  for (auto m : multipliers_)
    if (m < 1) throw std::invalid_argument("multipliers must be positive integers");
  std::sort(multipliers_.begin(), multipliers_.end());
  multipliers_.erase(std::unique(multipliers_.begin(), multipliers_.end()),
                     multipliers_.end());
}

std::int64_t family_member(Family family, unsigned k) {
  if (k < 1) throw std::invalid_argument("family index k must be >= 1");
  unsigned needed = (family == Family::Q) ? 2 * k : k;
  if (needed > 38) throw std::invalid_argument("family index k too large");
  std::int64_t pow = 1;
  for (unsigned i = 0; i < needed; ++i) pow *= 3;
  switch (family) {
    case Family::L:
      return (pow - 1) / 2;
    case Family::N:
      return pow + 1;
    case Family::P:
      return 2 * pow + 1;
    case Family::Q: {
      std::int64_t p3k = 1;
      for (unsigned i = 0; i < k; ++i) p3k *= 3;
      return pow - p3k + 1;
    }
  }
  throw std::invalid_argument("unknown family");
}

Presentation build_translate_presentation(const MultiplierSet& ms) {
  const auto& mult = ms.values();
  const std::size_t n = mult.size();

  std::vector<std::size_t> shown;  // carries displayed in vertex labels
  for (std::size_t i = 0; i < n; ++i)
    if (mult[i] != 1) shown.push_back(i);
  if (shown.empty()) shown.push_back(0);

  auto label_of = [&](const std::vector<std::int64_t>& carries) {
    std::string label;
    for (std::size_t j = 0; j < shown.size(); ++j) {
      if (j) label += "|";
      label += TernaryString::from_value(carries[shown[j]]).to_msb_string();
    }
    return label;
  };

  Presentation result;
  std::map<std::vector<std::int64_t>, VertexId> index;
  std::deque<std::vector<std::int64_t>> queue;

  std::vector<std::int64_t> start(n, 0);
  index.emplace(start, result.add_vertex(label_of(start)));
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    std::vector<std::int64_t> state = std::move(queue.front());
    queue.pop_front();
    VertexId from = index.at(state);
    for (Digit a = 0; a < kAlphabetSize; ++a) {
      std::vector<std::int64_t> next(n);
      bool admissible = true;
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t t = mult[i] * a + state[i];
        if (t % 3 > 1) {
          admissible = false;
          break;
        }
        next[i] = t / 3;
        assert(next[i] <= mult[i]);
      }
      if (!admissible) continue;
      auto [it, inserted] = index.try_emplace(next, 0);
      if (inserted) {
        it->second = result.add_vertex(label_of(next));
        queue.push_back(next);
      }
      result.add_edge(from, it->second, a);
    }
  }
  result.set_marked(0);
  return trim(result);
}

}  // namespace triadic
