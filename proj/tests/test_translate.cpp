#include "triadic/translate.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

#include "helpers.hpp"
#include "triadic/family.hpp"
#include "triadic/ternary.hpp"

using namespace triadic;
using triadic::testing::build_x1;
using triadic::testing::digits_of;

namespace {

std::set<std::tuple<std::string, std::string, int>> edge_labels(const Presentation& p) {
  std::set<std::tuple<std::string, std::string, int>> result;
  for (const Edge& e : p.edges())
    result.insert({p.label(e.from), p.label(e.to), e.digit});
  return result;
}

}  // namespace

TEST_CASE("family members") {
  CHECK(family_member(Family::L, 1) == 1);
  CHECK(family_member(Family::L, 9) == 9841);
  CHECK(family_member(Family::N, 2) == 10);
  CHECK(family_member(Family::P, 2) == 19);
  CHECK(family_member(Family::Q, 2) == 73);
  CHECK(family_member(Family::Q, 6) == 530713);
  CHECK_THROWS_AS(family_member(Family::P, 0), std::invalid_argument);
}

TEST_CASE("multiplier set validation") {
  CHECK_THROWS_AS(MultiplierSet({}), std::invalid_argument);
  CHECK_THROWS_AS(MultiplierSet({0, 4}), std::invalid_argument);
  CHECK(MultiplierSet({7, 1, 7}).values() == std::vector<std::int64_t>{1, 7});
}

TEST_CASE("X(1,1) presents the 3-adic Cantor set") {
  Presentation p = build_x1(1);
  CHECK(p.vertex_count() == 1);
  CHECK(edge_labels(p) ==
        std::set<std::tuple<std::string, std::string, int>>{{"0", "0", 0}, {"0", "0", 1}});
}

TEST_CASE("X(1,7) matches its published four-vertex graph") {
  Presentation p = build_x1(7);
  CHECK(p.label(p.marked()) == "0");
  CHECK(edge_labels(p) == std::set<std::tuple<std::string, std::string, int>>{
                              {"0", "0", 0},
                              {"0", "2", 1},
                              {"2", "10", 1},
                              {"10", "10", 1},
                              {"10", "1", 0},
                              {"1", "0", 0},
                          });
}

TEST_CASE("X(1,19) matches its published eight-vertex graph") {
  Presentation p = build_x1(19);
  CHECK(p.label(p.marked()) == "0");
  CHECK(edge_labels(p) == std::set<std::tuple<std::string, std::string, int>>{
                              {"0", "0", 0},    {"0", "20", 1},   {"20", "2", 0},
                              {"20", "22", 1},  {"2", "21", 1},   {"21", "2", 0},
                              {"22", "100", 1}, {"100", "10", 0}, {"100", "100", 1},
                              {"10", "1", 0},   {"10", "21", 1},  {"1", "0", 0},
                          });
}

TEST_CASE("X(1,73) matches its published sixteen-vertex graph") {
  Presentation p = build_x1(73);
  CHECK(p.vertex_count() == 16);
  CHECK(p.edge_count() == 24);
  CHECK(edge_labels(p) == std::set<std::tuple<std::string, std::string, int>>{
                              {"0", "0", 0},       {"0", "220", 1},     {"220", "22", 0},
                              {"220", "1012", 1},  {"1012", "1022", 1}, {"1022", "1100", 1},
                              {"1100", "110", 0},  {"1100", "1100", 1}, {"110", "11", 0},
                              {"110", "1001", 1},  {"11", "1", 0},      {"1", "0", 0},
                              {"22", "1000", 1},   {"1020", "102", 0},  {"1020", "1022", 1},
                              {"102", "1001", 1},  {"1001", "100", 0},  {"100", "10", 0},
                              {"100", "1000", 1},  {"10", "1", 0},      {"10", "221", 1},
                              {"221", "22", 0},    {"1000", "100", 0},  {"1000", "1020", 1},
                          });
}

TEST_CASE("M = 2 mod 3 collapses to the zero loop") {
  for (std::int64_t m : {2, 5, 11, 14, 20, 2999}) {
    Presentation p = build_x1(m);
    CHECK(p.vertex_count() == 1);
    CHECK(p.edge_count() == 1);
  }
}

TEST_CASE("family vertex counts") {
  for (unsigned k = 1; k <= 8; ++k)
    CHECK(build_x1(family_member(Family::P, k)).vertex_count() == (std::size_t{1} << (k + 1)));
  for (unsigned k = 1; k <= 8; ++k)
    CHECK(build_x1(family_member(Family::N, k)).vertex_count() == (std::size_t{1} << k));
  for (unsigned k = 1; k <= 9; ++k)
    CHECK(build_x1(family_member(Family::L, k)).vertex_count() == k);
  for (unsigned k = 1; k <= 4; ++k) {
    Presentation q = build_x1(family_member(Family::Q, k));
    std::size_t four_k = std::size_t{1} << (2 * k);
    CHECK(q.vertex_count() == four_k);
    CHECK(q.edge_count() == 6 * four_k / 4);
  }
}

TEST_CASE("golden mean shift forbids adjacent ones") {
  Presentation p = build_x1(4);
  CHECK_FALSE(run_automaton(p, digits_of("11")));
  CHECK(run_automaton(p, digits_of("1010")));
  CHECK(run_automaton(p, {}));
}

TEST_CASE("tuple builds use carry tuples") {
  Presentation p = build_translate_presentation(MultiplierSet({1, 10, 19}));
  CHECK(p.vertex_count() > 1);
  CHECK(is_right_resolving(p));
  // marked label shows both carries
  CHECK(p.label(p.marked()) == "0|0");
}

TEST_CASE("S1/S2 label classification covers every P_k vertex") {
  for (unsigned k = 1; k <= 10; ++k) {
    Presentation p = build_x1(family_member(Family::P, k));
    std::size_t s1 = 0, s2 = 0;
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
      auto cls = classify_pk_vertex(*TernaryString::parse_msb(p.label(v)), k);
      (cls.s_class == SClass::S1 ? s1 : s2) += 1;
    }
    CHECK(s1 == (std::size_t{1} << k));
    CHECK(s2 == (std::size_t{1} << k));
  }
}

TEST_CASE("witness prefixes are accepted for k up to 12") {
  for (unsigned k = 4; k <= 12; ++k) {
    Presentation p = build_x1(family_member(Family::P, k));
    auto strings = pk_witness_strings(k, 3);
    CHECK(strings.size() == (std::size_t{1} << (3 * (k / 4))));
    for (const auto& s : strings) {
      REQUIRE(run_automaton(p, s));
      // every prefix of an accepted string is accepted
      std::vector<Digit> half(s.begin(), s.begin() + s.size() / 2);
      CHECK(run_automaton(p, half));
    }
  }
}
