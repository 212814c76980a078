#include "avkit/fixtures.hpp"

#include <algorithm>

namespace avkit {

namespace {
const std::vector<std::string> kDefaultNames = {
    "X1",
    "X2",
    "B3_dual_points",
    "ci34_plus_point",
    "root_A2",
    "root_A3",
    "root_A4",
    "root_A5",
    "root_A6",
    "root_Y3",
    "twisted_cubic",
    "plane_cubic",
    "three_disjoint_lines",
    "linked_8_7",
    "linked_7_4",
    "linked_15_28",
    "linked_plus_point",
    "ci_444_points",
    "cone_B3",
    "cone_9general",
    "degenerate_6",
    "ex74_twisted_plus_6",
    "ex74_three_lines",
    "ex74_cubic_plus_7",
    "ex74_cubic_plus_lines",
};

const std::vector<std::string> kDeepNames = {
    "root_A7",
    "linked_surface_P4",
    "ci_44_fat_point",
};
}  // namespace

std::vector<std::string> fixture_names(bool include_deep) {
  std::vector<std::string> out = kDefaultNames;
  if (include_deep) out.insert(out.end(), kDeepNames.begin(), kDeepNames.end());
  return out;
}

bool fixture_is_deep(const std::string& name) {
  return std::find(kDeepNames.begin(), kDeepNames.end(), name) != kDeepNames.end();
}

}  // namespace avkit
