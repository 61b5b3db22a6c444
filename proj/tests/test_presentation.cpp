#include "triadic/presentation.hpp"

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "triadic/translate.hpp"

using namespace triadic;
using triadic::testing::build_x1;
using triadic::testing::permute_vertices;
using triadic::testing::prefix_strings;
using triadic::testing::random_presentation;

TEST_CASE("trim keeps a single 0-loop fixed") {
  Presentation p;
  auto v = p.add_vertex("0");
  p.add_edge(v, v, 0);
  p.set_marked(v);
  CHECK(trim(p) == p);
}

TEST_CASE("trim drops unreachable vertices and sink chains") {
  Presentation p;
  auto a = p.add_vertex("a");
  auto b = p.add_vertex("b");
  auto c = p.add_vertex("c");   // sink reachable from a
  auto d = p.add_vertex("d");   // unreachable
  p.add_edge(a, a, 0);
  p.add_edge(a, c, 1);
  p.add_edge(b, a, 0);
  p.add_edge(d, d, 0);
  p.set_marked(a);
  Presentation t = trim(p);
  CHECK(t.vertex_count() == 1);
  CHECK(t.label(t.marked()) == "a");
}

TEST_CASE("trim returns empty when the marked vertex dies") {
  Presentation p;
  auto a = p.add_vertex("a");
  auto b = p.add_vertex("b");
  p.add_edge(a, b, 1);
  p.set_marked(a);
  CHECK(trim(p).is_empty());
}

TEST_CASE("trim of carry automaton for (1,5) is the single 0-loop") {
  Presentation p = build_x1(5);
  CHECK(p.vertex_count() == 1);
  CHECK(p.edge_count() == 1);
  CHECK(p.out(0).front() == OutEdge{0, 0});
}

TEST_CASE("trim is idempotent on random presentations") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 200; ++i) {
    Presentation p = random_presentation(rng);
    CHECK(trim(p) == p);  // random_presentation already trims
  }
}

TEST_CASE("trimmed vertices keep positive out-degree") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    Presentation p = random_presentation(rng);
    for (VertexId v = 0; v < p.vertex_count(); ++v) CHECK(p.out(v).size() >= 1);
  }
}

TEST_CASE("is_right_resolving") {
  CHECK(is_right_resolving(build_x1(7)));
  Presentation p;
  auto a = p.add_vertex("a");
  auto b = p.add_vertex("b");
  p.add_edge(a, a, 0);
  p.add_edge(a, b, 0);
  p.add_edge(b, a, 0);
  p.set_marked(a);
  CHECK_FALSE(is_right_resolving(p));
}

TEST_CASE("every carry automaton is right-resolving") {
  for (std::int64_t m = 1; m <= 200; ++m) CHECK(is_right_resolving(build_x1(m)));
}

TEST_CASE("determinize of right-resolving input is isomorphic to its trim") {
  Presentation p = build_x1(19);
  CHECK(canonical_form(determinize(p)) == canonical_form(p));
}

TEST_CASE("determinize merges duplicate-digit targets") {
  Presentation p;
  auto a = p.add_vertex("a");
  auto b = p.add_vertex("b");
  auto c = p.add_vertex("c");
  p.add_edge(a, b, 0);
  p.add_edge(a, c, 0);
  p.add_edge(b, a, 1);
  p.add_edge(c, a, 1);
  p.set_marked(a);
  Presentation d = determinize(p);
  CHECK(is_right_resolving(d));
  CHECK(d.vertex_count() == 2);  // {a}, {b,c}
}

TEST_CASE("determinize preserves prefix-string sets") {
  std::mt19937 rng(5678);
  for (int i = 0; i < 80; ++i) {
    Presentation p = random_presentation(rng);
    Presentation d = determinize(p);
    CHECK(is_right_resolving(d));
    for (unsigned n : {1u, 4u, 8u}) CHECK(prefix_strings(p, n) == prefix_strings(d, n));
  }
}

TEST_CASE("determinize of empty input is empty") {
  CHECK(determinize(Presentation{}).is_empty());
}

TEST_CASE("label_product with itself is the diagonal") {
  Presentation p = build_x1(7);
  CHECK(canonical_form(label_product(p, p)) == canonical_form(p));
}

TEST_CASE("label_product strings are the intersection of factor strings") {
  std::mt19937 rng(4321);
  for (int i = 0; i < 60; ++i) {
    Presentation a = random_presentation(rng, 5);
    Presentation b = random_presentation(rng, 5);
    Presentation prod = label_product(a, b);
    for (unsigned n : {2u, 5u}) {
      auto sa = prefix_strings(a, n);
      auto sb = prefix_strings(b, n);
      std::set<std::string> expected;
      for (const auto& s : sa)
        if (sb.contains(s)) expected.insert(s);
      // The product can lose strings whose continuations die; prefix sets
      // of the trimmed product are exactly the extendable intersections.
      auto got = prefix_strings(prod, n);
      for (const auto& s : got) CHECK(expected.contains(s));
    }
  }
}

TEST_CASE("label_product of X(1,4) and X(1,7) presents X(1,4,7)") {
  Presentation prod = label_product(build_x1(4), build_x1(7));
  Presentation direct = build_translate_presentation(MultiplierSet({1, 4, 7}));
  CHECK(canonical_form(prod) == canonical_form(direct));
}

TEST_CASE("label_product is commutative up to canonical form") {
  Presentation a = build_x1(4), b = build_x1(19);
  CHECK(canonical_form(label_product(a, b)) == canonical_form(label_product(b, a)));
}

TEST_CASE("scc decomposition of X(1,19)") {
  Presentation p = build_x1(19);
  SccDecomposition scc = scc_decomposition(p);
  REQUIRE(scc.components.size() == 2);
  CHECK(scc.components[0].size() == 6);
  CHECK(scc.components[1].size() == 2);
  REQUIRE(scc.condensation_edges.size() == 1);
  CHECK(scc.condensation_edges[0] == std::pair<std::uint32_t, std::uint32_t>{0, 1});
}

TEST_CASE("scc decomposition of X(1,73) is a single component") {
  SccDecomposition scc = scc_decomposition(build_x1(73));
  CHECK(scc.components.size() == 1);
  CHECK(scc.components[0].size() == 16);
}

TEST_CASE("isolated vertex forms a singleton component") {
  Presentation p;
  auto v = p.add_vertex("v");
  p.set_marked(v);
  SccDecomposition scc = scc_decomposition(p);
  CHECK(scc.components.size() == 1);
  CHECK(scc.condensation_edges.empty());
}

TEST_CASE("condensation is acyclic: edges go forward in topological order") {
  std::mt19937 rng(777);
  for (int i = 0; i < 100; ++i) {
    Presentation p = random_presentation(rng);
    SccDecomposition scc = scc_decomposition(p);
    for (auto [a, b] : scc.condensation_edges) CHECK(a < b);
    // every cycle stays in one component: successors inside the component
    for (const Edge& e : p.edges())
      CHECK(scc.component_of[e.from] <= scc.component_of[e.to]);
  }
}

TEST_CASE("canonical form is invariant under vertex renaming") {
  std::mt19937 rng(31415);
  Presentation p = build_x1(19);
  CanonicalForm base = canonical_form(p);
  for (int i = 0; i < 100; ++i)
    CHECK(canonical_form(permute_vertices(p, rng)) == base);
}

TEST_CASE("canonical form distinguishes non-isomorphic graphs") {
  CHECK(canonical_form(build_x1(4)) != canonical_form(build_x1(7)));
  CHECK(canonical_form(build_x1(7)) != canonical_form(build_x1(19)));
}

TEST_CASE("canonical form rejects non-right-resolving input") {
  Presentation p;
  auto a = p.add_vertex("a");
  auto b = p.add_vertex("b");
  p.add_edge(a, a, 0);
  p.add_edge(a, b, 0);
  p.add_edge(b, b, 0);
  p.set_marked(a);
  CHECK_THROWS_AS(canonical_form(p), std::invalid_argument);
}

TEST_CASE("run_automaton walks prefixes") {
  Presentation p = build_x1(4);
  CHECK(run_automaton(p, {}));
  CHECK(run_automaton(p, {1, 0, 1}));
  CHECK_FALSE(run_automaton(p, {1, 1}));  // no adjacent ones
}

TEST_CASE("verify_automorphism identity gives back the graph") {
  Presentation p = build_x1(19);
  std::vector<VertexId> id(p.vertex_count());
  for (VertexId v = 0; v < id.size(); ++v) id[v] = v;
  auto result = verify_automorphism(p, id, {0, 1, 2});
  CHECK(result.holds);
  REQUIRE(result.quotient.has_value());
  CHECK(result.quotient->vertex_count() == p.vertex_count());
  CHECK(result.quotient->edges == p.edges());
}

TEST_CASE("verify_automorphism rejects non-bijections") {
  Presentation p = build_x1(4);
  CHECK_THROWS_AS(verify_automorphism(p, {0, 0}, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(verify_automorphism(p, {0}, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("reflection without the digit swap is not an automorphism of X(1,P_2)") {
  Presentation p = build_x1(19);
  std::vector<VertexId> refl(p.vertex_count());
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    auto img = p.find_vertex(
        TernaryString::from_value(9 - TernaryString::parse_msb(p.label(v))->value())
            .to_msb_string());
    REQUIRE(img.has_value());
    refl[v] = *img;
  }
  CHECK_FALSE(verify_automorphism(p, refl, {0, 1, 2}).holds);
  auto swapped = verify_automorphism(p, refl, {1, 0, 2});
  CHECK(swapped.holds);
  REQUIRE(swapped.quotient.has_value());
  CHECK(swapped.quotient->vertex_count() == 4);
  CHECK(swapped.quotient->edges.size() == p.edge_count() / 2);
}
