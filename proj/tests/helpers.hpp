#ifndef TRIADIC_TESTS_HELPERS_HPP_
#define TRIADIC_TESTS_HELPERS_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "triadic/presentation.hpp"
#include "triadic/translate.hpp"

namespace triadic::testing {

inline Presentation build_x1(std::int64_t m) {
  return build_translate_presentation(MultiplierSet({1, m}));
}

// All length-n label strings of walks from the marked vertex, by direct
// search over walk sets; independent of determinize/count implementations.
inline std::set<std::string> prefix_strings(const Presentation& p, unsigned n) {
  std::set<std::string> result;
  if (p.is_empty()) return result;
  struct Item {
    std::vector<VertexId> states;
    std::string word;
  };
  std::vector<Item> frontier{{{p.marked()}, ""}};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<Item> next;
    for (const auto& item : frontier)
      for (Digit d = 0; d < kAlphabetSize; ++d) {
        std::set<VertexId> targets;
        for (VertexId u : item.states)
          for (const auto& e : p.out(u))
            if (e.digit == d) targets.insert(e.to);
        if (!targets.empty())
          next.push_back({{targets.begin(), targets.end()},
                          item.word + static_cast<char>('0' + d)});
      }
    frontier = std::move(next);
  }
  for (const auto& item : frontier) result.insert(item.word);
  return result;
}

// Random presentation, trimmed; may be empty when trimming kills the
// marked vertex.
inline Presentation random_presentation(std::mt19937& rng, std::size_t max_vertices = 8) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  std::size_t n = nv(rng);
  Presentation p;
  for (std::size_t i = 0; i < n; ++i) p.add_vertex("v" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> ne(1, 2 * n + 2);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::uniform_int_distribution<int> pd(0, 2);
  std::size_t edges = ne(rng);
  for (std::size_t i = 0; i < edges; ++i)
    p.add_edge(pick(rng), pick(rng), static_cast<Digit>(pd(rng)));
  p.set_marked(pick(rng));
  return trim(p);
}

// Rebuilds p with vertex ids permuted.
inline Presentation permute_vertices(const Presentation& p, std::mt19937& rng) {
  std::vector<VertexId> order(p.vertex_count());
  for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);  // order[new] = old
  std::vector<VertexId> position(order.size());
  for (VertexId i = 0; i < order.size(); ++i) position[order[i]] = i;
  Presentation q;
  for (VertexId i = 0; i < order.size(); ++i) q.add_vertex(p.label(order[i]));
  for (const Edge& e : p.edges()) q.add_edge(position[e.from], position[e.to], e.digit);
  if (!p.is_empty()) q.set_marked(position[p.marked()]);
  return q;
}

inline std::vector<Digit> digits_of(const std::string& s) {
  std::vector<Digit> d;
  for (char c : s) d.push_back(static_cast<Digit>(c - '0'));
  return d;
}

}  // namespace triadic::testing

#endif  // TRIADIC_TESTS_HELPERS_HPP_
