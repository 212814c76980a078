#include <doctest.h>

#include "avkit/manifest.hpp"

using namespace avkit;

TEST_CASE("catalog names and tiers") {
  auto names = fixture_names(false);
  CHECK(names.size() == fixtures_manifest().size() - 3);  // three deep entries
  for (const auto& n : names) CHECK_FALSE(fixture_is_deep(n));
  auto all = fixture_names(true);
  CHECK(all.size() == fixtures_manifest().size());
  CHECK(fixture_is_deep("ci_44_fat_point"));
  CHECK_THROWS_AS(make_fixture<Fp>("no_such_fixture"), DimensionError);
  CHECK_THROWS_AS(manifest_entry("no_such_fixture"), DimensionError);
}

TEST_CASE("every manifest entry has a catalog fixture and vice versa") {
  for (const auto& e : fixtures_manifest()) {
    CHECK(fixture_is_deep(e.name) == e.deep);
    // the fixture must at least materialize (cheap ones only; heavy
    // construction is exercised by the replay suite)
    if (!e.deep && e.name.rfind("linked", 0) != 0 && e.name != "ci_444_points")
      CHECK_NOTHROW(make_fixture<Fp>(e.name));
  }
  for (const auto& n : fixture_names(true)) CHECK_NOTHROW(manifest_entry(n));
}

TEST_CASE("parameterized root fixtures validate their range") {
  CHECK_THROWS(make_fixture<Fp>("root_A1"));
  CHECK_THROWS(make_fixture<Fp>("root_A99"));
  CHECK(make_fixture<Fp>("root_A4").ideal.nvars() == 5);
  CHECK(make_fixture<Fp>("root_Y3").ideal.nvars() == 4);
}

TEST_CASE("fixture construction is deterministic in the seed") {
  Ideal<Fp> a = make_fixture<Fp>("ci34_plus_point", 7).ideal;
  Ideal<Fp> b = make_fixture<Fp>("ci34_plus_point", 7).ideal;
  Ideal<Fp> c = make_fixture<Fp>("ci34_plus_point", 8).ideal;
  CHECK(equal_ideals(a, b));
  CHECK_FALSE(equal_ideals(a, c));
}

TEST_CASE("fast manifest entries replay clean") {
  // the full catalog replay (including the heavy linked curves) runs in the
  // acceptance suite; here a quick cross-section guards the plumbing
  for (const char* name : {"X1", "B3_dual_points", "root_A2", "root_A3", "root_Y3",
                           "twisted_cubic", "plane_cubic", "three_disjoint_lines",
                           "degenerate_6", "ex74_three_lines"}) {
    FixtureRunResult r = run_fixture<Fp>(manifest_entry(name));
    for (const auto& f : r.failures) MESSAGE(name, ": ", f);
    CHECK(r.ok);
  }
}

TEST_CASE("replay notices an injected expectation mismatch") {
  ManifestEntry e = manifest_entry("X1");
  e.hf.back() += 1;
  FixtureRunResult r = run_fixture<Fp>(e);
  CHECK_FALSE(r.ok);
  REQUIRE(!r.failures.empty());
}
