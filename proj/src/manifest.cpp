#include "avkit/manifest.hpp"

namespace avkit {

namespace {

using Tail = IntSequence::Tail;

std::vector<ManifestEntry> build_manifest() {
  std::vector<ManifestEntry> m;

  const std::string g1 =
      "(x0^4, x0^3*x1, x0^3*x2, x0^2*x1^3, x0^2*x1^2*x2, x0^2*x1*x2^3, x0*x1^5)";

  {
    ManifestEntry e;
    e.name = "X1";
    e.recipe = "13 listed points in P^2 (nine dual to B3 plus four)";
    e.hf = {1, 3, 6, 10, 12, 13, 13};
    e.gin_cap = 6;
    e.gin_str = g1;
    e.detect = {{6, 5, Verdict::Unexpected, 1}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "X2";
    e.recipe = "13 listed points in P^2, second configuration";
    e.hf = {1, 3, 6, 10, 12, 13, 13};
    e.gin_cap = 6;
    e.gin_str = g1;
    e.detect = {{6, 5, Verdict::Unexpected, 1}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "B3_dual_points";
    e.recipe = "nine points dual to the B3 root system";
    e.detect = {{4, 3, Verdict::Unexpected, 1}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "ci34_plus_point";
    e.recipe = "CI(3,4) in P^2 union one general point (13 points, same HF as X1)";
    e.hf = {1, 3, 6, 10, 12, 13, 13};
    e.gin_cap = -1;
    e.gin_str =
        "(x0^4, x0^3*x1, x0^3*x2, x0^2*x1^3, x0^2*x1^2*x2, x0^2*x1*x2^3, x0^2*x2^4, x0*x1^6, "
        "x0*x1^5*x2, x0*x1^4*x2^3, x0*x1^3*x2^5, x0*x1^2*x2^7, x0*x1*x2^9, x0*x2^11, x1^13)";
    e.detect = {{6, 5, Verdict::NoHypersurface, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "root_A2";
    e.recipe = "6 points in P^2: coordinate points plus pairwise-difference points";
    // Exact computation (two internal routes plus an external rank check)
    // gives AV(3) = 2 here, so the alpha-degree certificate does not apply;
    // there is still no unexpected cubic (adim = 0). See README.
    e.certified = false;
    e.certificate_av = 2;
    e.detect = {{3, 3, Verdict::NoHypersurface, 0}};
    m.push_back(e);
  }
  for (int n = 3; n <= 6; ++n) {
    ManifestEntry e;
    e.name = "root_A" + std::to_string(n);
    e.recipe = "coordinate points plus pairwise-difference points in P^" + std::to_string(n);
    e.certified = true;
    e.certificate_av = 0;
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "root_Y3";
    e.recipe = "root_A3 with every -1 coordinate flipped to +1";
    e.detect = {{3, 3, Verdict::Unexpected, 1}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "twisted_cubic";
    e.recipe = "2x2 minors of the standard 2x3 catalecticant in P^3";
    e.detect = {{3, 3, Verdict::Unexpected, 1}};
    e.curve = {{3, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "plane_cubic";
    e.recipe = "integral plane cubic (one node) in the plane x3 = 0 of P^3";
    e.curve = {{3, 1}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "three_disjoint_lines";
    e.recipe = "three pairwise disjoint lines in P^3";
    e.curve = {{3, -2}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "linked_8_7";
    e.recipe = "residual of a line in a general CI(3,3) through it (smooth ACM, degree 8, genus 7)";
    e.curve = {{8, 7}};
    e.av = {{1, 5, AVRoute::Both, -1, {1, 2, 1, 0, 0}, true, Tail::Zero, 0},
            {0, 8, AVRoute::Both, -1, {1, 4, 8, 11, 13, 14, 14, 14}, true, Tail::Constant, 14},
            {2, 4, AVRoute::Both, -1, {0, 0, 0, 0}, true, Tail::Zero, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "linked_7_4";
    e.recipe = "residual of two disjoint lines in a general CI(3,3) (non-ACM, degree 7, genus 4)";
    e.curve = {{7, 4}};
    e.av = {{1, 4, AVRoute::Both, -1, {1, 2, 0, 0}, true, Tail::Zero, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "linked_15_28";
    e.recipe = "residual of a line in a general CI(4,4) (degree 15, genus 28)";
    e.curve = {{15, 28}};
    e.av = {{2, 3, AVRoute::Direct, -1, {1, 2, 2}, false, Tail::Unknown, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "linked_plus_point";
    e.recipe = "the degree-8 genus-7 curve union a general point";
    e.av = {{1, 4, AVRoute::Both, -1, {1, 3, 2, 0}, true, Tail::Zero, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "ci_444_points";
    e.recipe = "complete intersection of three general quartics in P^3 (64 points)";
    e.av = {{1, 6, AVRoute::Both, -1, {1, 4, 7, 8, 5, 0}, true, Tail::Zero, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "cone_B3";
    e.recipe = "cone in P^3 over the B3 dual points with a general vertex";
    e.av = {{1, 5, AVRoute::Both, -1, {1, 3, 4, 4, 4}, true, Tail::Constant, 4}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "cone_9general";
    e.recipe = "cone in P^3 over nine general points of P^2 (same HF as cone_B3)";
    e.av = {{1, 5, AVRoute::Both, -1, {1, 3, 3, 3, 3}, true, Tail::Constant, 3}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "degenerate_6";
    e.recipe = "six general points of a plane in P^3";
    e.table_all_zero = true;
    e.table_t_max = 5;
    e.table_m_max = 5;
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "ex74_twisted_plus_6";
    e.recipe = "18 points on a twisted cubic plus 6 general points";
    e.detect = {{2, 2, Verdict::NoHypersurface, 0},
                {3, 3, Verdict::NoHypersurface, 0},
                {4, 4, Verdict::NoHypersurface, 0},
                {5, 5, Verdict::NoHypersurface, 0},
                {6, 6, Verdict::Expected, 4}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "ex74_three_lines";
    e.recipe = "6+7+7 points on three disjoint lines plus 4 general points";
    e.detect = {{5, 5, Verdict::Unexpected, 2}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "ex74_cubic_plus_7";
    e.recipe = "17 points on a plane cubic plus 7 general points";
    e.detect = {{5, 5, Verdict::NoHypersurface, 0}};
    e.av = {{0, 5, AVRoute::Direct, -1, {1, 4, 6, 4, 1}, false, Tail::Unknown, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "ex74_cubic_plus_lines";
    e.recipe = "17 points on a plane cubic plus 4+3 points on two general lines";
    e.detect = {{5, 5, Verdict::Unexpected, 1}};
    m.push_back(e);
  }

  // deep tier
  {
    ManifestEntry e;
    e.name = "root_A7";
    e.recipe = "coordinate points plus pairwise-difference points in P^7";
    e.deep = true;
    e.certified = true;
    e.certificate_av = 0;
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "linked_surface_P4";
    e.recipe = "degree-8 surface in P^4 linked to a plane by two general cubics";
    e.deep = true;
    e.av = {{1, 5, AVRoute::Direct, -1, {1, 3, 4, 4, 4}, false, Tail::Unknown, 0}};
    m.push_back(e);
  }
  {
    ManifestEntry e;
    e.name = "ci_44_fat_point";
    e.recipe = "CI of two general quartics triple at a general point (irreducible, not smooth)";
    e.deep = true;
    e.av = {{1, 13, AVRoute::Direct, -1, {1, 4, 8, 12, 15, 16, 15, 12, 8, 4, 2, 2, 2}, false,
             Tail::Unknown, 0}};
    m.push_back(e);
  }
  return m;
}

}  // namespace

const std::vector<ManifestEntry>& fixtures_manifest() {
  static const std::vector<ManifestEntry> m = build_manifest();
  return m;
}

const ManifestEntry& manifest_entry(const std::string& name) {
  for (const auto& e : fixtures_manifest())
    if (e.name == name) return e;
  throw DimensionError("no manifest entry for fixture: " + name);
}

}  // namespace avkit
