#include <doctest.h>

#include "avkit/fixtures.hpp"
#include "avkit/gin.hpp"

using namespace avkit;

TEST_CASE("ring dimension counts monomials") {
  CHECK(ring_dim(3, 0) == 1);
  CHECK(ring_dim(3, 2) == 6);
  CHECK(ring_dim(4, 3) == 20);
  CHECK(ring_dim(3, -1) == 0);
}

TEST_CASE("hilbert function of monomial ideals") {
  int n = 3;
  auto m = [&](int a, int b, int c) { return Monomial(n, {a, b, c}); };
  // artinian: R/(x^2, y^2, z^2) has h = (1, 3, 3, 1)
  HilbertFunction h = hilbert_function(MonomialIdeal(n, {m(2, 0, 0), m(0, 2, 0), m(0, 0, 2)}), 6);
  CHECK(h.values == std::vector<long long>{1, 3, 3, 1, 0, 0, 0});
  REQUIRE(h.stable_from.has_value());
  CHECK(h.stable_value == 0);
  // one point (x, y): constant 1
  h = hilbert_function(MonomialIdeal(n, {m(1, 0, 0), m(0, 1, 0)}), 4);
  CHECK(h.values == std::vector<long long>{1, 1, 1, 1, 1});
  CHECK(h.stable_value == 1);
}

TEST_CASE_TEMPLATE("hilbert function of a points ideal stabilizes at the count", K, Fp, Rat) {
  auto pts = fxdetail::x1_points<K>();
  HilbertFunction h = hilbert_function(points_ideal(pts), 8);
  CHECK(h.values == std::vector<long long>{1, 3, 6, 10, 12, 13, 13, 13, 13});
  REQUIRE(h.stable_from.has_value());
  CHECK(h.stable_value == 13);
  CHECK(*h.stable_from == 5);
}

TEST_CASE("h-vector of the 13-point configuration") {
  Ideal<Fp> X = points_ideal(fxdetail::x1_points<Fp>());
  IntSequence hv = h_vector(X);
  CHECK(hv.values == std::vector<long long>{1, 2, 3, 4, 2, 1});
}

TEST_CASE("graded dimension of the ideal complements the quotient") {
  Ideal<Fp> X = points_ideal(fxdetail::x1_points<Fp>());
  CHECK(graded_dim_ideal(X, 5) == 8);    // 21 - 13
  CHECK(graded_dim_ideal(X, 6) == 15);   // 28 - 13
  CHECK(graded_dim_ideal(X, 2) == 0);
}

TEST_CASE_TEMPLATE("gin of the 13 points, truncated at degree 6", K, Fp, Rat) {
  Ideal<K> X = points_ideal(fxdetail::x1_points<K>());
  GinResult g = gin(X, 2, 7, 6);
  CHECK(g.monomial_ideal.str() ==
        "(x0^4, x0^3*x1, x0^3*x2, x0^2*x1^3, x0^2*x1^2*x2, x0^2*x1*x2^3, x0*x1^5)");
  CHECK(g.borel_certified);
  CHECK(g.seeds_used.size() == 2);
  CHECK(g.degree_cap == 6);
}

TEST_CASE("gin preserves the Hilbert function") {
  Ideal<Fp> C = fxdetail::twisted_cubic_ideal<Fp>();
  GinResult g = gin(C, 2, 3);
  CHECK(g.borel_certified);
  HilbertFunction hI = hilbert_function(C, 8);
  HilbertFunction hG = hilbert_function(g.monomial_ideal, 8);
  CHECK(hI.values == hG.values);
}

TEST_CASE("gin rejects fewer than two trials") {
  Ideal<Fp> C = fxdetail::twisted_cubic_ideal<Fp>();
  CHECK_THROWS_AS(gin(C, 1, 3), DimensionError);
}

TEST_CASE("monomial colon by a power of x0") {
  int n = 3;
  auto m = [&](int a, int b, int c) { return Monomial(n, {a, b, c}); };
  MonomialIdeal M(n, {m(2, 0, 0), m(1, 2, 0), m(0, 0, 4)});
  MonomialIdeal Q = monomial_colon_by_power(M, 1);
  CHECK(Q == MonomialIdeal(n, {m(1, 0, 0), m(0, 2, 0), m(0, 0, 4)}));
  // x^2 : x0^2 = 1, so the colon collapses to the unit ideal
  CHECK(monomial_colon_by_power(M, 2).contains_one());
}

TEST_CASE("lex segment ideal reproducing a Hilbert function") {
  // h = (1, 2, 2, 1) as an artinian O-sequence in 3 variables
  IntSequence h = IntSequence::of({1, 2, 2, 1, 0});
  MonomialIdeal L = lex_segment_ideal_for(h, 3, 4);
  HilbertFunction check = hilbert_function(L, 4);
  CHECK(check.values == std::vector<long long>{1, 2, 2, 1, 0});
  for (int t = 0; t <= 4; ++t) CHECK(L.is_lex_segment(t));
}

TEST_CASE("lex segment construction rejects non-O-sequences") {
  CHECK_THROWS(lex_segment_ideal_for(IntSequence::of({1, 2, 4}), 3, 2));
}
