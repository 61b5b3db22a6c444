#ifndef TRIADIC_TABLES_HPP_
#define TRIADIC_TABLES_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

namespace triadic::tables {

/// One row of a reference dimension table.  `perron` and `dim_published`
/// carry the published 6-decimal digits; `dim` carries the value
/// consistent with the row's Perron eigenvalue, which differs from the
/// published digits in a handful of rows (the published tables round
/// their dimension column off by 1-2 units in the last place; the Perron
/// columns are reliable and are what `dim` is derived from).
struct FamilyRow {
  unsigned k;
  std::int64_t m;
  std::size_t vertices;
  double perron;
  double dim_published;
  double dim;
};

struct StatsRow {
  std::int64_t m;
  std::string_view ternary;
  int s3;
  std::size_t vertices;
  double perron;
  double dim_published;
  double dim;
};

struct DepthRow {
  unsigned k;
  std::vector<std::size_t> counts;
};

const std::vector<FamilyRow>& table_p();      // table id "2.1"
const std::vector<FamilyRow>& table_l();      // table id "8.1"
const std::vector<StatsRow>& table_stats();   // table id "7.1"
const std::vector<DepthRow>& table_depths();  // table id "4.2"

/// True when `computed` displays as `published` at 6 decimals under
/// either rounding or truncation (the reference tables mix both).
bool matches_published_6dp(double computed, double published);

}  // namespace triadic::tables

#endif  // TRIADIC_TABLES_HPP_
