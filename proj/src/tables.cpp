#include "triadic/tables.hpp"

#include <cmath>

namespace triadic::tables {

const std::vector<FamilyRow>& table_p() {
  static const std::vector<FamilyRow> rows = {
      {1, 7, 4, 1.618033, 0.438018, 0.438017879486},
      {2, 19, 8, 1.465571, 0.347934, 0.347934471317},
      {3, 55, 16, 1.380278, 0.293358, 0.293356099595},
      {4, 163, 32, 1.324718, 0.255960, 0.255958883060},
      {5, 487, 64, 1.370957, 0.287191, 0.287188860189},
      {6, 1459, 128, 1.388728, 0.298913, 0.298911560665},
      {7, 4375, 256, 1.392067, 0.301010, 0.301098073714},
      {8, 13123, 512, 1.387961, 0.298408, 0.298408877068},
  };
  return rows;
}

const std::vector<FamilyRow>& table_l() {
  static const std::vector<FamilyRow> rows = {
      {1, 1, 1, 2.000000, 0.630929, 0.630929753571},
      {2, 4, 2, 1.618033, 0.438018, 0.438017879486},
      {3, 13, 3, 1.465571, 0.347934, 0.347934471317},
      {4, 40, 4, 1.380278, 0.293358, 0.293356099595},
      {5, 121, 5, 1.324718, 0.255960, 0.255958883060},
      {6, 364, 6, 1.285199, 0.228392, 0.228391397608},
      {7, 1093, 7, 1.255423, 0.207052, 0.207054360524},
      {8, 3280, 8, 1.232055, 0.189948, 0.189951641696},
      {9, 9841, 9, 1.213150, 0.175877, 0.175876472868},
  };
  return rows;
}

const std::vector<StatsRow>& table_stats() {
  static const std::vector<StatsRow> rows = {
      {10, "101", 3, 4, 1.618033, 0.438018, 0.438017879486},
      {16, "121", 3, 5, 1.324718, 0.255960, 0.255958883060},
      {19, "201", 3, 8, 1.465571, 0.347934, 0.347934471317},
      {73, "2201", 3, 16, 1.618033, 0.438018, 0.438017879486},
      {34, "1021", 4, 8, 1.324718, 0.255960, 0.255958883060},
      {46, "1201", 4, 10, 1.112776, 0.097266, 0.097265897674},
      {61, "2021", 4, 14, 1.570147, 0.410672, 0.410672126133},
      {64, "2101", 4, 14, 1.357193, 0.278004, 0.278003916400},
      {70, "2121", 4, 14, 1.360632, 0.280308, 0.280307815960},
      {91, "10101", 5, 9, 1.465571, 0.347934, 0.347934471317},
      {97, "10121", 5, 16, 1.380277, 0.293356, 0.293356099595},
      {100, "10201", 5, 17, 1.354948, 0.276497, 0.276496845043},
      {142, "12021", 5, 20, 1.276393, 0.222133, 0.222132835469},
      {145, "12101", 5, 21, 1.000000, 0.000000, 0.0},
      {151, "12121", 5, 20, 1.227525, 0.186599, 0.186598870981},
      {172, "20101", 5, 22, 1.288329, 0.230606, 0.230605451027},
      {178, "20121", 5, 25, 1.345528, 0.270148, 0.270146492553},
      {181, "20201", 5, 22, 1.324718, 0.255960, 0.255958883060},
      {196, "21021", 5, 24, 1.383785, 0.295666, 0.295666396004},
      {208, "21201", 5, 25, 1.290893, 0.232415, 0.232414889081},
  };
  return rows;
}

const std::vector<DepthRow>& table_depths() {
  static const std::vector<DepthRow> rows = {
      {1, {4}},
      {2, {6, 2}},
      {3, {8, 8}},
      {4, {10, 20, 2}},
      {5, {12, 40, 12}},
      {6, {14, 70, 42, 2}},
      {7, {16, 112, 112, 16}},
      {8, {18, 168, 252, 72, 2}},
      {9, {20, 240, 504, 240, 20}},
  };
  return rows;
}

bool matches_published_6dp(double computed, double published) {
  long long target = std::llround(published * 1e6);
  long long rounded = std::llround(computed * 1e6);
  long long truncated = static_cast<long long>(std::floor(computed * 1e6 + 1e-6));
  return rounded == target || truncated == target;
}

}  // namespace triadic::tables
