#include <doctest.h>

#include "avkit/groebner.hpp"
#include "avkit/linalg.hpp"
#include "avkit/monomial_ideal.hpp"
#include "avkit/polynomial.hpp"

using namespace avkit;

namespace {

template <typename K>
Polynomial<K> var(int nvars, int i, int pow = 1) {
  return Polynomial<K>::variable(nvars, i, pow);
}

}  // namespace

TEST_CASE("Fp arithmetic over the default modulus") {
  REQUIRE(Fp::modulus() == 2147483647ULL);
  Fp a(123456789), b(-987654321);
  CHECK(a + b == Fp(123456789 - 987654321));
  CHECK(a * a.inv() == Fp(1));
  CHECK(Fp::from_fraction(1, 2) * Fp(2) == Fp(1));
  CHECK(Fp(-1).str() == "-1");
  CHECK_THROWS_AS(Fp(0).inv(), FieldError);
}

TEST_CASE("Rat arithmetic") {
  Rat half = Rat::from_fraction(2, 4);
  CHECK(half.str() == "1/2");
  CHECK(half + half == Rat(1));
  CHECK(Rat::from_fraction(-3, 6) == -half);
  CHECK_THROWS_AS(Rat::from_fraction(1, 0), FieldError);
}

TEST_CASE("field spec validation") {
  CHECK(FieldSpec::rationals().str() == "rationals");
  CHECK(FieldSpec::prime_field(2147483647ULL).str() == "fp:2147483647");
  CHECK(FieldSpec::prime_field(2147483647ULL).probabilistic());
  CHECK_FALSE(FieldSpec::rationals().probabilistic());
  CHECK_THROWS_AS(FieldSpec::prime_field(1048576), FieldError);  // 2^20, not prime
  CHECK_THROWS_AS(FieldSpec::prime_field(65537), FieldError);    // prime, below floor
}

TEST_CASE("monomial arithmetic and division") {
  Monomial a(3, {2, 1, 0}), b(3, {1, 0, 3});
  CHECK((a * b) == Monomial(3, {3, 1, 3}));
  CHECK(a.lcm(b) == Monomial(3, {2, 1, 3}));
  CHECK(a.colon(b) == Monomial(3, {1, 1, 0}));
  CHECK_FALSE(a.divides(b));
  CHECK(Monomial(3, {1, 0, 0}).divides(a));
  CHECK((a / Monomial(3, {1, 1, 0})) == Monomial(3, {1, 0, 0}));
  CHECK(Monomial(3, {2, 0, 0}).coprime(Monomial(3, {0, 1, 1})));
}

TEST_CASE("degree-2 monomials in 3 variables, both orders") {
  // frozen oracle: descending order listings with x0 > x1 > x2
  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  // lex-descending enumeration
  CHECK(ms[0] == Monomial(3, {2, 0, 0}));
  CHECK(ms[1] == Monomial(3, {1, 1, 0}));
  CHECK(ms[2] == Monomial(3, {1, 0, 1}));
  CHECK(ms[3] == Monomial(3, {0, 2, 0}));
  CHECK(ms[4] == Monomial(3, {0, 1, 1}));
  CHECK(ms[5] == Monomial(3, {0, 0, 2}));
  // degrevlex-descending: x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
  std::vector<Monomial> dr = ms;
  std::sort(dr.begin(), dr.end(), [](const Monomial& x, const Monomial& y) {
    return monomial_greater(x, y, MonomialOrder::DegRevLex);
  });
  CHECK(dr[0] == Monomial(3, {2, 0, 0}));
  CHECK(dr[1] == Monomial(3, {1, 1, 0}));
  CHECK(dr[2] == Monomial(3, {0, 2, 0}));
  CHECK(dr[3] == Monomial(3, {1, 0, 1}));
  CHECK(dr[4] == Monomial(3, {0, 1, 1}));
  CHECK(dr[5] == Monomial(3, {0, 0, 2}));
  // degrevlex compares by degree first
  CHECK(monomial_greater(Monomial(3, {0, 0, 2}), Monomial(3, {1, 0, 0}), MonomialOrder::DegRevLex));
}

TEST_CASE_TEMPLATE("polynomial ring operations", K, Fp, Rat) {
  int n = 3;
  auto x = var<K>(n, 0), y = var<K>(n, 1), z = var<K>(n, 2);
  auto f = x * x - y * z;
  auto g = x * x + y * z;
  CHECK(f + g == (x * x).scaled(K(2)));
  CHECK(f * g == x * x * x * x - y * y * z * z);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK_FALSE((f + x).is_homogeneous());
  CHECK(f.leading_monomial(MonomialOrder::Lex) == Monomial(3, {2, 0, 0}));
  CHECK(f.coeff(Monomial(3, {0, 1, 1})) == K(-1));
  CHECK((f - f).is_zero());
}

TEST_CASE_TEMPLATE("x0 coefficient strip", K, Fp, Rat) {
  int n = 3;
  auto x = var<K>(n, 0), y = var<K>(n, 1), z = var<K>(n, 2);
  auto f = x * x + x * y + z * z;
  auto strips = x0_coefficients(f);
  REQUIRE(strips.size() == 3);
  CHECK(strips[0] == Polynomial<K>::constant(n, K(1)));
  CHECK(strips[1] == y);
  CHECK(strips[2] == z * z);
}

TEST_CASE_TEMPLATE("linear change round trip and composition", K, Fp, Rat) {
  int n = 3;
  auto f = random_form<K>(3, n, 42);
  auto L = LinearChange<K>::random(n, 7);
  auto M = LinearChange<K>::random(n, 8);
  CHECK(apply_linear_change(apply_linear_change(f, L), L.inverse()) == f);
  CHECK(apply_linear_change(f, L.compose(M)) == apply_linear_change(apply_linear_change(f, M), L));
  // point-moving change: columns start with the target point
  std::vector<K> p = {K(2), K(3), K(5)};
  auto P = LinearChange<K>::random_with_first_column(p, 11);
  for (int i = 0; i < n; ++i) CHECK(P.matrix()[i][0] == p[i]);
}

TEST_CASE("random form determinism") {
  CHECK(random_form<Fp>(4, 3, 99) == random_form<Fp>(4, 3, 99));
  CHECK(random_form<Fp>(4, 3, 99) != random_form<Fp>(4, 3, 100));
  CHECK_FALSE(random_form<Rat>(0, 3, 5).is_zero());
}

TEST_CASE_TEMPLATE("row reduction against dimension oracle", K, Fp, Rat) {
  std::vector<std::vector<K>> m = {
      {K(1), K(2), K(3)}, {K(2), K(4), K(6)}, {K(1), K(0), K(1)}};
  CHECK(matrix_rank(m) == 2);
  auto ker = kernel_basis(m, 3);
  CHECK(ker.size() == 1);  // rank-nullity
  // kernel vectors actually annihilate
  for (const auto& row : std::vector<std::vector<K>>{
           {K(1), K(2), K(3)}, {K(2), K(4), K(6)}, {K(1), K(0), K(1)}}) {
    K dot(0);
    for (int j = 0; j < 3; ++j) dot += row[j] * ker[0][j];
    CHECK(dot.is_zero());
  }
  CHECK(determinant<K>({{K(1), K(2)}, {K(3), K(4)}}) == K(-2));
  CHECK(determinant<K>({{K(1), K(2)}, {K(2), K(4)}}) == K(0));
}

TEST_CASE("monomial ideal basics") {
  int n = 3;
  auto m = [&](int a, int b, int c) { return Monomial(n, {a, b, c}); };
  MonomialIdeal I(n, {m(2, 0, 0), m(1, 1, 0), m(2, 1, 0)});  // last is redundant
  CHECK(I.generators().size() == 2);
  CHECK(I.contains(m(2, 2, 2)));
  CHECK_FALSE(I.contains(m(0, 3, 3)));
  // R = k[x,y,z]: dim R_2 = 6, members of I in degree 2: x^2, xy
  CHECK(I.graded_dim(2) == 2);
  CHECK(I.standard_monomial_count(2) == 4);
  CHECK(I.min_degree() == 2);
  CHECK_FALSE(I.is_artinian());
  MonomialIdeal A(n, {m(2, 0, 0), m(0, 2, 0), m(0, 0, 2), m(1, 1, 1)});
  CHECK(A.is_artinian());
}

TEST_CASE("monomial ideal colon and intersection oracles") {
  int n = 2;
  auto m = [&](int a, int b) { return Monomial(n, {a, b}); };
  MonomialIdeal I(n, {m(2, 0), m(1, 1)});
  MonomialIdeal x(n, {m(1, 0)});
  MonomialIdeal colon = I.colon(x);
  CHECK(colon == MonomialIdeal(n, {m(1, 0), m(0, 1)}));
  MonomialIdeal xi(n, {m(1, 0)});
  MonomialIdeal yi(n, {m(0, 1)});
  CHECK(xi.intersect(yi) == MonomialIdeal(n, {m(1, 1)}));
  CHECK(I.colon_x0_power(2) == MonomialIdeal(n, {Monomial(n)}));
}

TEST_CASE("borel fixed and lex segment detection") {
  int n = 3;
  auto m = [&](int a, int b, int c) { return Monomial(n, {a, b, c}); };
  MonomialIdeal B(n, {m(2, 0, 0), m(1, 1, 0), m(0, 2, 0)});
  CHECK(B.is_borel_fixed());
  MonomialIdeal NB(n, {m(0, 2, 0)});  // y^2 in, xy out
  CHECK_FALSE(NB.is_borel_fixed());
  // degree-2 lex segment in k[x,y,z]: x^2, xy, xz is a prefix
  MonomialIdeal L(n, {m(2, 0, 0), m(1, 1, 0), m(1, 0, 1)});
  CHECK(L.is_lex_segment(2));
  CHECK_FALSE(B.is_lex_segment(2));  // contains y^2 but not xz
}

TEST_CASE_TEMPLATE("buchberger on a classical example", K, Fp, Rat) {
  // I = (x^2 + y^2, xy), lex x > y: reduced basis {x^2 + y^2, xy, y^3}
  int n = 2;
  auto x = var<K>(n, 0), y = var<K>(n, 1);
  Ideal<K> I(n, {x * x + y * y, x * y});
  const auto& gb = I.groebner_basis(MonomialOrder::Lex);
  REQUIRE(gb.polys.size() == 3);
  CHECK(gb.polys[0] == x * x + y * y);
  CHECK(gb.polys[1] == x * y);
  CHECK(gb.polys[2] == y * y * y);
  MonomialIdeal in = initial_ideal(I, MonomialOrder::Lex);
  CHECK(in == MonomialIdeal(n, {Monomial(n, {2, 0}), Monomial(n, {1, 1}), Monomial(n, {0, 3})}));
}

TEST_CASE_TEMPLATE("groebner basis idempotence", K, Fp, Rat) {
  int n = 3;
  auto x = var<K>(n, 0), y = var<K>(n, 1), z = var<K>(n, 2);
  for (MonomialOrder ord : {MonomialOrder::Lex, MonomialOrder::DegRevLex}) {
    Ideal<K> I(n, {x * y - z * z, y * y - x * z, x * x * z - y * z * z});
    const auto& gb = I.groebner_basis(ord);
    Ideal<K> J(n, gb.polys);
    CHECK(J.groebner_basis(ord).polys == gb.polys);
  }
}

TEST_CASE_TEMPLATE("normal form and membership", K, Fp, Rat) {
  int n = 2;
  auto x = var<K>(n, 0), y = var<K>(n, 1);
  Ideal<K> I(n, {x * y - Polynomial<K>::constant(n, K(1)),
                 y * y - Polynomial<K>::constant(n, K(1))});
  // lex reduced basis is {x - y, y^2 - 1}
  const auto& gb = I.groebner_basis(MonomialOrder::Lex);
  REQUIRE(gb.polys.size() == 2);
  CHECK(gb.polys[0] == x - y);
  CHECK(I.contains(x - y));
  CHECK_FALSE(I.contains(x + y));
  // remainder has no term divisible by a leading term
  auto r = normal_form(x * x * y + y, gb);
  for (const auto& [m, c] : r.terms())
    for (const auto& g : gb.polys) CHECK_FALSE(g.leading_monomial(MonomialOrder::Lex).divides(m));
}

TEST_CASE_TEMPLATE("intersection, colon, saturation", K, Fp, Rat) {
  int n = 2;
  auto x = var<K>(n, 0), y = var<K>(n, 1);
  Ideal<K> X(n, {x}), Y(n, {y});
  Ideal<K> inter = ideal_intersection(X, Y);
  CHECK(equal_ideals(inter, Ideal<K>(n, {x * y})));

  Ideal<K> I(n, {x * x, x * y});
  Ideal<K> colon = ideal_colon_element(I, x);
  CHECK(equal_ideals(colon, Ideal<K>(n, {x, y})));

  Ideal<K> sat = saturation(I);
  CHECK(equal_ideals(sat, Ideal<K>(n, {x})));
  CHECK(sat.saturated_flag() == Ideal<K>::TriState::Yes);
}

TEST_CASE_TEMPLATE("degree-truncated basis agrees with the full one", K, Fp, Rat) {
  int n = 3;
  auto x = var<K>(n, 0), y = var<K>(n, 1), z = var<K>(n, 2);
  Ideal<K> I(n, {x * x * y - y * y * z, x * z * z - y * y * y});
  Ideal<K> J(n, I.generators());
  const auto& full = I.groebner_basis(MonomialOrder::DegRevLex);
  const auto& trunc = J.groebner_basis(MonomialOrder::DegRevLex, 4);
  MonomialIdeal fi(n), ti(n);
  {
    std::vector<Monomial> a, b;
    for (const auto& p : full.polys)
      if (p.degree() <= 4) a.push_back(p.leading_monomial(MonomialOrder::DegRevLex));
    for (const auto& p : trunc.polys) b.push_back(p.leading_monomial(MonomialOrder::DegRevLex));
    fi = MonomialIdeal(n, a);
    ti = MonomialIdeal(n, b);
  }
  for (int t = 0; t <= 4; ++t) CHECK(fi.graded_dim(t) == ti.graded_dim(t));
}

TEST_CASE("groebner budget is enforced") {
  int n = 3;
  auto x = var<Fp>(n, 0), y = var<Fp>(n, 1), z = var<Fp>(n, 2);
  Budget tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(
      buchberger<Fp>(n, {x * y - z * z, y * y - x * z, x * x * z - y * z * z},
                     MonomialOrder::Lex, -1, tiny),
      BudgetError);
}

TEST_CASE("exact polynomial division") {
  int n = 2;
  auto x = var<Rat>(n, 0), y = var<Rat>(n, 1);
  auto f = (x + y) * (x - y);
  CHECK(divide_exact(f, x + y) == x - y);
  CHECK_THROWS_AS(divide_exact(x * x + y, x + y), DimensionError);
}
