#pragma once

#include "avkit/unexpected.hpp"

namespace avkit {

// Deterministic catalog seed; every fixture derives its own stream from it.
constexpr std::uint64_t kCatalogSeed = 0x5eedf1c5u;

template <typename K>
struct Fixture {
  std::string name;
  std::string description;
  Ideal<K> ideal;
};

// catalog listing; deep entries are the large-budget reproductions
std::vector<std::string> fixture_names(bool include_deep);
bool fixture_is_deep(const std::string& name);

namespace fxdetail {

template <typename K>
std::vector<ProjPoint<K>> from_int_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<ProjPoint<K>> pts;
  pts.reserve(rows.size());
  for (const auto& r : rows) pts.push_back(ProjPoint<K>::of_ints(r));
  return pts;
}

// 13 points of the first tic-tac-toe dual configuration
template <typename K>
std::vector<ProjPoint<K>> x1_points() {
  return from_int_rows<K>({{1, 0, 0},
                           {0, 1, 0},
                           {0, 0, 1},
                           {1, 1, 0},
                           {0, 1, 1},
                           {1, 0, 1},
                           {-1, 1, 0},
                           {0, -1, 1},
                           {-1, 0, 1},
                           {1, 1, 1},
                           {-1, 1, 1},
                           {-1, 1, -1},
                           {1, 1, -1}});
}

template <typename K>
std::vector<ProjPoint<K>> x2_points() {
  return from_int_rows<K>({{1, 0, 0},
                           {0, 1, 0},
                           {0, 0, 1},
                           {1, 1, 0},
                           {0, 1, 1},
                           {1, 0, 1},
                           {-1, 1, 0},
                           {0, -1, 1},
                           {-1, 0, 1},
                           {2, 1, 1},
                           {-2, 1, 1},
                           {-2, 1, -1},
                           {2, 1, -1}});
}

// nine points dual to the B3 root system
template <typename K>
std::vector<ProjPoint<K>> b3_points() {
  return from_int_rows<K>({{1, 0, 0},
                           {0, 1, 0},
                           {0, 0, 1},
                           {1, 1, 0},
                           {1, -1, 0},
                           {1, 0, 1},
                           {1, 0, -1},
                           {0, 1, 1},
                           {0, 1, -1}});
}

// one +1, one -1, rest 0, plus the coordinate points (P^n)
template <typename K>
std::vector<ProjPoint<K>> root_an_points(int n, bool flip_to_plus) {
  std::vector<ProjPoint<K>> pts;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<K> c(static_cast<std::size_t>(n) + 1, K(0));
      c[static_cast<std::size_t>(i)] = K(1);
      c[static_cast<std::size_t>(j)] = flip_to_plus ? K(1) : K(-1);
      pts.emplace_back(std::move(c));
    }
  for (int i = 0; i <= n; ++i) {
    std::vector<K> c(static_cast<std::size_t>(n) + 1, K(0));
    c[static_cast<std::size_t>(i)] = K(1);
    pts.emplace_back(std::move(c));
  }
  return pts;
}

template <typename K>
Ideal<K> twisted_cubic_ideal() {
  int n = 4;
  auto v = [&](int i) { return Polynomial<K>::variable(n, i); };
  Ideal<K> I(n, {v(0) * v(2) - v(1) * v(1), v(0) * v(3) - v(1) * v(2), v(1) * v(3) - v(2) * v(2)});
  I.mark_saturated(true);
  return I;
}

template <typename K>
Ideal<K> line_ideal(int nvars, const std::vector<int>& zero_vars) {
  std::vector<Polynomial<K>> gens;
  for (int i : zero_vars) gens.push_back(Polynomial<K>::variable(nvars, i));
  Ideal<K> I(nvars, std::move(gens));
  I.mark_saturated(true);
  return I;
}

// line through two points: kernel of evaluation at both (nvars-2 linear forms)
template <typename K>
Ideal<K> line_through(const ProjPoint<K>& A, const ProjPoint<K>& B) {
  int n = A.ncoords();
  std::vector<Monomial> mons = monomials_of_degree(n, 1);
  std::vector<std::vector<K>> eval(2, std::vector<K>(mons.size()));
  for (std::size_t c = 0; c < mons.size(); ++c) {
    int var = 0;
    for (int i = 0; i < n; ++i)
      if (mons[c].exp(i) == 1) var = i;
    eval[0][c] = A.coords[static_cast<std::size_t>(var)];
    eval[1][c] = B.coords[static_cast<std::size_t>(var)];
  }
  std::vector<Polynomial<K>> gens;
  for (const auto& v : kernel_basis(eval, static_cast<int>(mons.size()))) {
    std::vector<typename Polynomial<K>::Term> terms;
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (!v[c].is_zero()) terms.emplace_back(mons[c], v[c]);
    gens.push_back(Polynomial<K>::from_terms(n, std::move(terms)));
  }
  Ideal<K> I(n, std::move(gens));
  I.mark_saturated(true);
  return I;
}

template <typename K>
Ideal<K> three_disjoint_lines_ideal(Budget budget = Budget{}) {
  Ideal<K> l1 = line_ideal<K>(4, {2, 3});
  Ideal<K> l2 = line_ideal<K>(4, {0, 1});
  auto v = [&](int i) { return Polynomial<K>::variable(4, i); };
  Ideal<K> l3(4, {v(0) - v(2), v(1) - v(3)});
  Ideal<K> I = minimalized(ideal_intersection(ideal_intersection(l1, l2, budget), l3, budget), budget);
  I.mark_saturated(true);
  return I;
}

}  // namespace fxdetail

// Materializes a catalog entry. Names carry their parameters (root_A4 etc.);
// unknown names throw.
template <typename K>
Fixture<K> make_fixture(const std::string& name, std::uint64_t seed = kCatalogSeed,
                        Budget budget = Budget{}) {
  using namespace fxdetail;
  std::uint64_t s = derive_seed(seed, std::hash<std::string>{}(name));
  auto done = [&](Ideal<K> I, const std::string& desc) {
    return Fixture<K>{name, desc, std::move(I)};
  };

  if (name == "X1") return done(points_ideal(x1_points<K>()), "13 points in P^2 with an unexpected sextic");
  if (name == "X2") return done(points_ideal(x2_points<K>()), "13 points in P^2, second tic-tac-toe configuration");
  if (name == "B3_dual_points") return done(points_ideal(b3_points<K>()), "9 points dual to the B3 root system");
  if (name == "ci34_plus_point") {
    Ideal<K> ci = complete_intersection<K>({3, 4}, 3, derive_seed(s, 1), nullptr, budget);
    Ideal<K> pt = point_ideal(ProjPoint<K>::random(3, derive_seed(s, 2)));
    Ideal<K> I = minimalized(ideal_intersection(ci, pt, budget), budget);
    I.mark_saturated(true);
    return done(std::move(I), "CI(3,4) in P^2 plus one general point (13 points)");
  }
  if (name.rfind("root_A", 0) == 0 || name.rfind("root_Y", 0) == 0) {
    bool flip = name[5] == 'Y';
    int n = std::stoi(name.substr(6));
    if (n < 2 || n + 1 > kMaxUserVars) throw DimensionError("root system parameter out of range");
    return done(points_ideal(root_an_points<K>(n, flip)),
                std::string(flip ? "positive-flipped " : "") + "root-system points in P^" + std::to_string(n));
  }
  if (name == "twisted_cubic") return done(twisted_cubic_ideal<K>(), "twisted cubic curve in P^3");
  if (name == "plane_cubic") return done(nodal_plane_cubic_ideal<K>(), "rational plane cubic in the plane x3 = 0 of P^3");
  if (name == "three_disjoint_lines")
    return done(three_disjoint_lines_ideal<K>(budget), "union of three pairwise disjoint lines in P^3");
  if (name == "linked_8_7") {
    Ideal<K> line = line_ideal<K>(4, {0, 1});
    Ideal<K> ci = complete_intersection<K>({3, 3}, 4, derive_seed(s, 1), &line, budget);
    return done(linked_curve(ci, line, budget), "degree-8 genus-7 curve linked to a line by two cubics");
  }
  if (name == "linked_7_4") {
    Ideal<K> two = minimalized(ideal_intersection(line_ideal<K>(4, {0, 1}), line_ideal<K>(4, {2, 3}), budget), budget);
    Ideal<K> ci = complete_intersection<K>({3, 3}, 4, derive_seed(s, 1), &two, budget);
    return done(linked_curve(ci, two, budget), "degree-7 genus-4 curve linked to two disjoint lines");
  }
  if (name == "linked_15_28") {
    Ideal<K> line = line_ideal<K>(4, {0, 1});
    Ideal<K> ci = complete_intersection<K>({4, 4}, 4, derive_seed(s, 1), &line, budget);
    return done(linked_curve(ci, line, budget), "degree-15 genus-28 curve linked to a line by two quartics");
  }
  if (name == "linked_plus_point") {
    Fixture<K> base = make_fixture<K>("linked_8_7", seed, budget);
    Ideal<K> pt = point_ideal(ProjPoint<K>::random(4, derive_seed(s, 3)));
    Ideal<K> I = minimalized(ideal_intersection(base.ideal, pt, budget), budget);
    I.mark_saturated(true);
    return done(std::move(I), "degree-8 genus-7 curve union a general point");
  }
  if (name == "ci_444_points")
    return done(complete_intersection<K>({4, 4, 4}, 4, derive_seed(s, 1), nullptr, budget),
                "64 points: complete intersection of three general quartics in P^3");
  if (name == "cone_B3") {
    Ideal<K> base = points_ideal(b3_points<K>());
    return done(cone_over(base, ProjPoint<K>::random(4, derive_seed(s, 1))),
                "cone in P^3 over the B3 dual points");
  }
  if (name == "cone_9general") {
    Ideal<K> base = points_ideal(random_points<K>(9, 3, derive_seed(s, 1)));
    return done(cone_over(base, ProjPoint<K>::random(4, derive_seed(s, 2))),
                "cone in P^3 over 9 general points of P^2");
  }
  if (name == "degenerate_6") {
    std::vector<ProjPoint<K>> pts;
    for (const auto& p : random_points<K>(6, 3, derive_seed(s, 1))) {
      std::vector<K> c = p.coords;
      c.push_back(K(0));
      pts.emplace_back(std::move(c));
    }
    return done(points_ideal(pts), "6 general points of a plane in P^3 (degenerate)");
  }
  if (name == "ex74_twisted_plus_6") {
    auto pts = concat_points<K>({points_on_twisted_cubic<K>(18, derive_seed(s, 1)),
                                 random_points<K>(6, 4, derive_seed(s, 2))});
    return done(points_ideal(pts), "18 points on a twisted cubic plus 6 general points");
  }
  if (name == "ex74_three_lines") {
    ProjPoint<K> e0 = ProjPoint<K>::of_ints({1, 0, 0, 0}), e1 = ProjPoint<K>::of_ints({0, 1, 0, 0});
    ProjPoint<K> e2 = ProjPoint<K>::of_ints({0, 0, 1, 0}), e3 = ProjPoint<K>::of_ints({0, 0, 0, 1});
    ProjPoint<K> d0 = ProjPoint<K>::of_ints({1, 0, 1, 0}), d1 = ProjPoint<K>::of_ints({0, 1, 0, 1});
    auto pts = concat_points<K>({points_on_line(e0, e1, 6, derive_seed(s, 1)),
                                 points_on_line(e2, e3, 7, derive_seed(s, 2)),
                                 points_on_line(d0, d1, 7, derive_seed(s, 3)),
                                 random_points<K>(4, 4, derive_seed(s, 4))});
    return done(points_ideal(pts), "6+7+7 points on three disjoint lines plus 4 general points");
  }
  if (name == "ex74_cubic_plus_7") {
    auto pts = concat_points<K>({points_on_plane_cubic<K>(17, derive_seed(s, 1)),
                                 random_points<K>(7, 4, derive_seed(s, 2))});
    return done(points_ideal(pts), "17 points on a plane cubic plus 7 general points");
  }
  if (name == "ex74_cubic_plus_lines") {
    ProjPoint<K> a1 = ProjPoint<K>::random(4, derive_seed(s, 10)), b1 = ProjPoint<K>::random(4, derive_seed(s, 11));
    ProjPoint<K> a2 = ProjPoint<K>::random(4, derive_seed(s, 12)), b2 = ProjPoint<K>::random(4, derive_seed(s, 13));
    auto pts = concat_points<K>({points_on_plane_cubic<K>(17, derive_seed(s, 1)),
                                 points_on_line(a1, b1, 4, derive_seed(s, 2)),
                                 points_on_line(a2, b2, 3, derive_seed(s, 3))});
    return done(points_ideal(pts), "17 points on a plane cubic plus 4+3 points on two general lines");
  }
  if (name == "linked_surface_P4") {
    Ideal<K> plane = line_ideal<K>(5, {0, 1});
    Ideal<K> ci = complete_intersection<K>({3, 3}, 5, derive_seed(s, 1), &plane, budget);
    return done(linked_curve(ci, plane, budget), "degree-8 surface in P^4 linked to a plane by two cubics");
  }
  if (name == "ci_44_fat_point") {
    Ideal<K> fat = fat_point_ideal(ProjPoint<K>::random(4, derive_seed(s, 1)), 3);
    Ideal<K> I = complete_intersection<K>({4, 4}, 4, derive_seed(s, 2), &fat, budget);
    return done(std::move(I), "complete intersection of two quartics triple at a general point");
  }
  throw DimensionError("unknown fixture: " + name);
}

}  // namespace avkit
