#pragma once

#include "avkit/fixtures.hpp"

namespace avkit {

// Stored expectations for the fixture catalog, replayed by `fixtures run`
// and by the acceptance suite. All values are exact integers.

struct AVExpectation {
  int j = 0;
  int m_max = 0;
  AVRoute route = AVRoute::Both;
  int gin_cap = -1;                // forwarded to av_sequence
  std::vector<long long> values;   // expected AV(1..m_max)
  bool check_tail = false;
  IntSequence::Tail tail = IntSequence::Tail::Unknown;
  long long tail_value = 0;
};

struct DetectExpectation {
  int t = 0, m = 0;
  Verdict verdict = Verdict::NoHypersurface;
  long long adim = 0;
};

struct ManifestEntry {
  std::string name;
  std::string recipe;
  bool deep = false;
  std::vector<long long> hf;  // expected h_X(0..k) prefix; empty = unchecked
  int gin_cap = 0;            // 0 = no gin check; -1 = full gin
  std::string gin_str;        // expected generator list, printed form
  std::vector<AVExpectation> av;
  std::vector<DetectExpectation> detect;
  std::optional<bool> certified;            // certify_no_unexpected outcome
  std::optional<long long> certificate_av;  // AV_{X,0}(alpha)
  std::optional<std::pair<long long, long long>> curve;  // (degree, genus)
  std::optional<bool> table_all_zero;
  int table_t_max = 0, table_m_max = 0;
};

const std::vector<ManifestEntry>& fixtures_manifest();
const ManifestEntry& manifest_entry(const std::string& name);

struct FixtureRunResult {
  std::string name;
  bool ok = true;
  std::vector<std::string> failures;  // human-readable mismatch notes
};

// Recomputes every expectation of one catalog entry and compares.
template <typename K>
FixtureRunResult run_fixture(const ManifestEntry& e, std::uint64_t seed = kCatalogSeed,
                             Budget budget = Budget{}) {
  FixtureRunResult res;
  res.name = e.name;
  auto fail = [&](const std::string& msg) {
    res.ok = false;
    res.failures.push_back(msg);
  };
  Fixture<K> fx = make_fixture<K>(e.name, seed, budget);

  if (!e.hf.empty()) {
    HilbertFunction h = hilbert_function(fx.ideal, static_cast<int>(e.hf.size()) - 1,
                                         MonomialOrder::DegRevLex, budget);
    for (std::size_t t = 0; t < e.hf.size(); ++t)
      if (h.values[t] != e.hf[t])
        fail("hf(" + std::to_string(t) + ") = " + std::to_string(h.values[t]) + ", expected " +
             std::to_string(e.hf[t]));
  }

  if (e.gin_cap != 0) {
    GinResult g = gin(fx.ideal, 2, derive_seed(seed, 0x917u), e.gin_cap, budget);
    if (g.monomial_ideal.str() != e.gin_str)
      fail("gin = " + g.monomial_ideal.str() + ", expected " + e.gin_str);
  }

  for (const auto& a : e.av) {
    AVReport rep = av_sequence(fx.ideal, a.j, a.m_max, a.route, 2, derive_seed(seed, 0xA7u),
                               budget, a.gin_cap);
    for (int m = 1; m <= a.m_max; ++m)
      if (rep.values.at(m) != a.values[static_cast<std::size_t>(m - 1)])
        fail("AV_" + std::to_string(a.j) + "(" + std::to_string(m) + ") = " +
             std::to_string(rep.values.at(m)) + ", expected " +
             std::to_string(a.values[static_cast<std::size_t>(m - 1)]));
    if (!rep.o_sequence_ok) fail("shifted AV_" + std::to_string(a.j) + " is not an O-sequence");
    if (a.check_tail) {
      if (rep.values.tail != a.tail)
        fail("AV_" + std::to_string(a.j) + " tail classification mismatch");
      else if (a.tail == IntSequence::Tail::Constant && rep.values.tail_value != a.tail_value)
        fail("AV_" + std::to_string(a.j) + " tail value = " + std::to_string(rep.values.tail_value) +
             ", expected " + std::to_string(a.tail_value));
    }
  }

  for (const auto& d : e.detect) {
    UnexpectednessVerdict v = detect(fx.ideal, d.t, d.m, 2, derive_seed(seed, 0xDEu), budget);
    if (v.verdict != d.verdict || v.dims.adim != d.adim)
      fail("detect(" + std::to_string(d.t) + "," + std::to_string(d.m) + ") = " +
           verdict_name(v.verdict) + " adim " + std::to_string(v.dims.adim) + ", expected " +
           verdict_name(d.verdict) + " adim " + std::to_string(d.adim));
  }

  if (e.certified.has_value()) {
    NoUnexpectedCertificate c = certify_no_unexpected(fx.ideal, 2, derive_seed(seed, 0xCEu), budget);
    if (c.certified != *e.certified)
      fail(std::string("certificate: ") + (c.certified ? "certified" : "not certified") +
           ", expected the opposite");
    if (e.certificate_av && c.av_value != *e.certificate_av)
      fail("certificate AV value = " + std::to_string(c.av_value) + ", expected " +
           std::to_string(*e.certificate_av));
  }

  if (e.curve.has_value()) {
    auto [deg, gen] = curve_degree_genus(fx.ideal, 24, budget);
    if (deg != e.curve->first || gen != e.curve->second)
      fail("(degree, genus) = (" + std::to_string(deg) + "," + std::to_string(gen) +
           "), expected (" + std::to_string(e.curve->first) + "," +
           std::to_string(e.curve->second) + ")");
  }

  if (e.table_all_zero.has_value()) {
    PersistenceTable tab = persistence_table(fx.ideal, e.table_t_max, e.table_m_max, 2,
                                             derive_seed(seed, 0x7Au), budget);
    if (tab.all_zero() != *e.table_all_zero) fail("persistence table zero-pattern mismatch");
  }

  return res;
}

}  // namespace avkit
