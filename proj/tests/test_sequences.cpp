#include <doctest.h>

#include <stdexcept>

#include "avkit/sequences.hpp"

using namespace avkit;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 2) == 21);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("macaulay representation is the greedy expansion") {
  // 10 = C(5,3) in degree 3
  auto r = macaulay_rep(10, 3);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == std::pair<long long, int>{5, 3});
  // 11 = C(5,3) + C(2,2)
  r = macaulay_rep(11, 3);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == std::pair<long long, int>{5, 3});
  CHECK(r[1] == std::pair<long long, int>{2, 2});
  CHECK(macaulay_rep(0, 4).empty());
}

TEST_CASE("macaulay growth bound values") {
  // classical: 3^<1> = C(4,2) = 6, since 3 = C(3,1)
  CHECK(macaulay_growth(3, 1) == 6);
  // 11 = C(5,3)+C(2,2) -> C(6,4)+C(3,3) = 15+1
  CHECK(macaulay_growth(11, 3) == 16);
  CHECK(macaulay_growth(0, 2) == 0);
  CHECK(macaulay_growth(1, 5) == 1);
}

TEST_CASE("O-sequence recognition") {
  CHECK(is_O_sequence(IntSequence::of({1, 3, 6, 10})).ok);
  CHECK(is_O_sequence(IntSequence::of({1, 2, 3, 4, 2, 1})).ok);
  // h(1) may be anything nonnegative
  CHECK(is_O_sequence(IntSequence::of({1, 100, 5050})).ok);
  // growth violation: 2 -> 4 in degree 1 exceeds 2^<1> = 3
  auto bad = is_O_sequence(IntSequence::of({1, 2, 4}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.violation_index == 1);
  // must start at 1
  CHECK_FALSE(is_O_sequence(IntSequence::of({2, 1})).ok);
  // negative entries are not Hilbert function values
  CHECK_FALSE(is_O_sequence(IntSequence::of({1, 2, -1})).ok);
  // the zero function is allowed (Hilbert function of the zero ring)
  CHECK(is_O_sequence(IntSequence::of({0, 0, 0})).ok);
  CHECK_FALSE(is_O_sequence(IntSequence::of({0, 1, 0})).ok);
}

TEST_CASE("O-sequence check sees one step into a constant tail") {
  IntSequence s = IntSequence::of({1, 2}, IntSequence::Tail::Constant, 100);
  CHECK_FALSE(is_O_sequence(s).ok);
  IntSequence ok = IntSequence::of({1, 2}, IntSequence::Tail::Constant, 3);
  CHECK(is_O_sequence(ok).ok);
}

TEST_CASE("first difference respects tails") {
  IntSequence s = IntSequence::of({1, 3, 6}, IntSequence::Tail::Constant, 6);
  IntSequence d = first_difference(s);
  CHECK(d.values == std::vector<long long>{1, 2, 3, 0});
  CHECK(d.tail == IntSequence::Tail::Zero);
}

TEST_CASE("unimodality and symmetry on positive support") {
  CHECK(is_unimodal(IntSequence::of({1, 2, 1})));
  CHECK(is_unimodal(IntSequence::of({0, 1, 4, 4, 2, 0})));
  CHECK_FALSE(is_unimodal(IntSequence::of({1, 2, 1, 2})));
  CHECK(is_symmetric(IntSequence::of({0, 1, 2, 1})));
  CHECK_FALSE(is_symmetric(IntSequence::of({1, 2, 2, 1, 1})));
  CHECK(is_finite(IntSequence::of({1, 2})).value());
  CHECK_FALSE(is_finite(IntSequence::of({1}, IntSequence::Tail::Constant, 1)).value());
  CHECK_FALSE(is_finite(IntSequence::of({1}, IntSequence::Tail::Unknown)).has_value());
}

TEST_CASE("SI-sequence verdicts") {
  // (1,2,1) is the h-vector of a Gorenstein artinian algebra
  CHECK(is_SI_sequence(IntSequence::of({1, 2, 1})).verdict.value());
  CHECK(is_SI_sequence(IntSequence::of({1, 4, 7, 8, 5})).verdict.value() == false);  // not symmetric
  // symmetric but first half (1,1,2) not differentiable? (1,1,2,1,1): diff of
  // first half (1,1,2) is (1,0,1), not an O-sequence
  auto r = is_SI_sequence(IntSequence::of({1, 1, 2, 1, 1}));
  CHECK(r.verdict.value() == false);
  auto unknown = is_SI_sequence(IntSequence::of({1, 2}, IntSequence::Tail::Unknown));
  CHECK_FALSE(unknown.verdict.has_value());
  CHECK(is_SI_sequence(IntSequence::of({0, 0})).verdict.value() == false);
}

TEST_CASE("sequence access with offset and tails") {
  IntSequence s;
  s.offset = 1;
  s.values = {5, 7};
  s.tail = IntSequence::Tail::Constant;
  s.tail_value = 7;
  CHECK(s.at(0) == 0);
  CHECK(s.at(1) == 5);
  CHECK(s.at(2) == 7);
  CHECK(s.at(99) == 7);
  s.tail = IntSequence::Tail::Unknown;
  CHECK_THROWS_AS(s.at(99), std::out_of_range);
  CHECK(s.positive_support() == std::vector<long long>{5, 7});
}
