// avkit command-line front end: parse schemes, run the computations, emit
// tables or JSON, and replay the fixture catalog against its stored
// expectations.
//
// Exit codes: 0 success, 1 verdict/value mismatch, 2 budget or genericity
// failure, 64 malformed input or usage.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "avkit/io.hpp"
#include "avkit/manifest.hpp"

using json = nlohmann::ordered_json;
using namespace avkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
  std::string command;
  std::string field = "fp";  // "rationals" or "fp" or "fp:<p>"
  std::uint64_t seed = kCatalogSeed;
  int trials = 2;
  Budget budget;
  bool json_output = false;

  json to_json() const {
    return json{{"command", command},
                {"field_mode", field},
                {"seed", seed},
                {"trials", trials},
                {"max_pairs", budget.max_pairs},
                {"max_coeff_bits", budget.max_coeff_bits},
                {"output", json_output ? "json" : "table"}};
  }
};

long long env_ll(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoll(v) : fallback;
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
  return buf;
}

// Report skeleton shared by every subcommand. The timestamp is informational
// only; replay comparisons must ignore it.
json report_base(const RunConfig& cfg, const std::string& scheme) {
  json r;
  r["schema"] = "avkit/1";
  r["timestamp"] = iso_timestamp();
  r["config"] = cfg.to_json();
  if (!scheme.empty()) r["scheme"] = scheme;
  return r;
}

json sequence_json(const IntSequence& s) {
  json j;
  j["offset"] = s.offset;
  j["values"] = s.values;
  switch (s.tail) {
    case IntSequence::Tail::Zero: j["tail"] = "zero"; break;
    case IntSequence::Tail::Constant:
      j["tail"] = "constant";
      j["tail_value"] = s.tail_value;
      break;
    case IntSequence::Tail::Unknown: j["tail"] = "unknown"; break;
  }
  return j;
}

json triple_json(const DimTriple& d, Verdict v) {
  return json{{"t", d.t},         {"m", d.m},         {"adim", d.adim},
              {"vdim", d.vdim},   {"edim", d.edim},   {"verdict", verdict_name(v)},
              {"seeds", d.seeds}, {"trials_agreed", d.trials_agreed}};
}

// ---------------------------------------------------------------------------
// Scheme sources
// ---------------------------------------------------------------------------

struct SchemeOpts {
  std::string fixture;
  std::string points_path;
  std::string ideal_path;

  std::string describe() const {
    if (!fixture.empty()) return "fixture:" + fixture;
    if (!points_path.empty()) return "points:" + points_path;
    return "ideal:" + ideal_path;
  }
};

void add_scheme_options(CLI::App* cmd, SchemeOpts& s) {
  auto* f = cmd->add_option("--fixture", s.fixture, "catalog fixture name");
  auto* p = cmd->add_option("--points", s.points_path, "points file (one point per line)");
  auto* i = cmd->add_option("--ideal", s.ideal_path, "ideal file (ring header + generators)");
  f->excludes(p)->excludes(i);
  p->excludes(i);
}

void require_scheme(const SchemeOpts& s) {
  if (s.fixture.empty() && s.points_path.empty() && s.ideal_path.empty())
    throw CLI::ValidationError("one of --fixture, --points, --ideal is required");
}

template <typename K>
std::vector<ProjPoint<K>> points_from_file(const std::string& path) {
  PointsFileData data = read_points_file_path(path);
  std::vector<ProjPoint<K>> pts;
  for (auto& c : build_points<K>(data)) pts.emplace_back(std::move(c));
  // pairwise-distinct check, projectively: normalize on the first nonzero
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<K>& c = pts[i].coords;
    K pivot(0);
    for (const K& x : c)
      if (!x.is_zero()) { pivot = x; break; }
    if (pivot.is_zero())
      throw ParseError("zero point", data.rows[i].first, 1);
    for (K& x : c) x /= pivot;
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        throw ParseError("duplicate point (same as line " + std::to_string(data.rows[i].first) + ")",
                         data.rows[j].first, 1);
  return pts;
}

template <typename K>
bool same_ideal(const Ideal<K>& A, const Ideal<K>& B, Budget budget) {
  return A.groebner_basis(MonomialOrder::DegRevLex, -1, budget).polys ==
         B.groebner_basis(MonomialOrder::DegRevLex, -1, budget).polys;
}

template <typename K>
Ideal<K> load_scheme(const SchemeOpts& s, const RunConfig& cfg) {
  if (!s.fixture.empty()) return make_fixture<K>(s.fixture, cfg.seed, cfg.budget).ideal;
  if (!s.points_path.empty()) return points_ideal(points_from_file<K>(s.points_path));
  IdealFileData data = read_ideal_file_path(s.ideal_path);
  Ideal<K> I = build_ideal<K>(data);
  Ideal<K> sat = saturation(I, std::optional<Ideal<K>>{}, cfg.budget);
  if (!same_ideal(I, sat, cfg.budget)) {
    std::cerr << "notice: ideal was not saturated; replaced by its saturation\n";
    return minimalized(sat, cfg.budget);
  }
  return I;
}

// ---------------------------------------------------------------------------
// Subcommand bodies, templated over the coefficient field
// ---------------------------------------------------------------------------

template <typename K>
int cmd_hilbert(const SchemeOpts& src, const RunConfig& cfg, int t_max) {
  Ideal<K> X = load_scheme<K>(src, cfg);
  HilbertFunction h = hilbert_function(X, t_max, MonomialOrder::DegRevLex, cfg.budget);
  if (cfg.json_output) {
    json r = report_base(cfg, src.describe());
    r["t_max"] = t_max;
    r["hilbert_function"] = h.values;
    if (h.stable_from) {
      r["stable_from"] = *h.stable_from;
      r["stable_value"] = h.stable_value;
    }
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "t      h(t)   dim[I]_t\n";
    for (int t = 0; t <= t_max; ++t)
      std::cout << t << "\t" << h.at(t) << "\t" << (ring_dim(X.nvars(), t) - h.at(t)) << "\n";
    if (h.stable_from)
      std::cout << "stable at " << h.stable_value << " from t = " << *h.stable_from << "\n";
  }
  return kExitOk;
}

template <typename K>
int cmd_gin(const SchemeOpts& src, const RunConfig& cfg, int cap) {
  Ideal<K> X = load_scheme<K>(src, cfg);
  GinResult g = gin(X, cfg.trials, cfg.seed, cap, cfg.budget);
  if (cfg.json_output) {
    json r = report_base(cfg, src.describe());
    r["degree_cap"] = g.degree_cap;
    r["borel_fixed"] = g.borel_certified;
    r["seeds"] = g.seeds_used;
    json gens = json::array();
    for (const Monomial& m : g.monomial_ideal.generators()) gens.push_back(monomial_str(m));
    r["gin"] = gens;
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "gin = " << g.monomial_ideal.str() << "\n";
    std::cout << "borel_fixed = " << (g.borel_certified ? "true" : "false") << "\n";
    if (g.degree_cap >= 0) std::cout << "degree cap " << g.degree_cap << " (truncated)\n";
  }
  return kExitOk;
}

AVRoute parse_route(const std::string& name) {
  if (name == "direct") return AVRoute::Direct;
  if (name == "gin" || name == "gin_colon") return AVRoute::GinColon;
  if (name == "both") return AVRoute::Both;
  throw CLI::ValidationError("--route must be direct, gin_colon, or both");
}

template <typename K>
int cmd_av(const SchemeOpts& src, const RunConfig& cfg, int j, int m_max,
           const std::string& route, int gin_cap) {
  Ideal<K> X = load_scheme<K>(src, cfg);
  AVReport rep = av_sequence(X, j, m_max, parse_route(route), cfg.trials, cfg.seed, cfg.budget,
                             gin_cap);
  if (cfg.json_output) {
    json r = report_base(cfg, src.describe());
    r["av"] = {{"j", rep.j},
               {"values", sequence_json(rep.values)},
               {"positive_part", rep.values.positive_support()},
               {"o_seq", rep.o_sequence_ok},
               {"si", rep.si.verdict.has_value() ? json(*rep.si.verdict) : json(nullptr)},
               {"si_reason", rep.si.reason},
               {"trials_agreed", rep.trials_agreed}};
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "AV_{X," << j << "}(1.." << m_max << ") = " << rep.values.str() << "\n";
    std::cout << "O-sequence (shifted): " << (rep.o_sequence_ok ? "yes" : "NO") << "\n";
    std::cout << "SI: " << (rep.si.verdict ? (*rep.si.verdict ? "yes" : "no") : "undetermined")
              << " (" << rep.si.reason << ")\n";
  }
  return kExitOk;
}

template <typename K>
int cmd_detect(const SchemeOpts& src, const RunConfig& cfg, int t, int m) {
  Ideal<K> X = load_scheme<K>(src, cfg);
  UnexpectednessVerdict v = detect(X, t, m, cfg.trials, cfg.seed, cfg.budget);
  if (cfg.json_output) {
    json r = report_base(cfg, src.describe());
    r["triples"] = json::array({triple_json(v.dims, v.verdict)});
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "t = " << t << ", m = " << m << ": adim = " << v.dims.adim
              << ", vdim = " << v.dims.vdim << ", edim = " << v.dims.edim << " -> "
              << verdict_name(v.verdict) << "\n";
  }
  return kExitOk;
}

template <typename K>
int cmd_table(const SchemeOpts& src, const RunConfig& cfg, int t_max, int m_max) {
  Ideal<K> X = load_scheme<K>(src, cfg);
  PersistenceTable tab = persistence_table(X, t_max, m_max, cfg.trials, cfg.seed, cfg.budget);
  if (cfg.json_output) {
    json r = report_base(cfg, src.describe());
    r["alpha"] = tab.alpha;
    r["cells"] = tab.cells;
    json regions = json::array();
    for (int t = 1; t <= t_max; ++t) {
      json row = json::array();
      for (int m = 1; m <= m_max; ++m) row.push_back(tab.region_name(t, m));
      regions.push_back(row);
    }
    r["regions"] = regions;
    r["all_zero"] = tab.all_zero();
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "min(adim, AV) by (t down, m across); region I/II/III in brackets\n";
    std::cout << "t\\m";
    for (int m = 1; m <= m_max; ++m) std::cout << "\t" << m;
    std::cout << "\n";
    for (int t = 1; t <= t_max; ++t) {
      std::cout << t;
      for (int m = 1; m <= m_max; ++m)
        std::cout << "\t" << tab.cells[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(m - 1)]
                  << "[" << tab.region_name(t, m) << "]";
      std::cout << "\n";
    }
  }
  return kExitOk;
}

template <typename K>
int cmd_certify(const SchemeOpts& src, const RunConfig& cfg) {
  Ideal<K> X = load_scheme<K>(src, cfg);
  NoUnexpectedCertificate c = certify_no_unexpected(X, cfg.trials, cfg.seed, cfg.budget);
  if (cfg.json_output) {
    json r = report_base(cfg, src.describe());
    r["certificates"] = {{"alpha", c.alpha},
                         {"av_at_alpha", c.av_value},
                         {"certified", c.certified},
                         {"seeds", c.seeds}};
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "alpha = " << c.alpha << ", AV_{X,0}(alpha) = " << c.av_value << "\n";
    std::cout << (c.certified ? "certified: no unexpected hypersurface for any (t, m)\n"
                              : "not certified (AV at alpha is nonzero)\n");
  }
  return kExitOk;
}

template <typename K>
int cmd_ci_witness(const RunConfig& cfg, int a, int b, int j, int nvars) {
  SylvesterWitness<K> w = sylvester_witness<K>(a, b, j, nvars, cfg.seed);
  if (cfg.json_output) {
    json r = report_base(cfg, "ci(" + std::to_string(a) + "," + std::to_string(b) + ")");
    r["witness"] = {{"a", w.a},
                    {"b", w.b},
                    {"j", w.j},
                    {"t", w.t},
                    {"m", w.m},
                    {"det_degree", w.matrix_det.degree()},
                    {"witness_degree", w.witness_form.degree()},
                    {"seed", w.seed}};
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "CI(" << a << "," << b << "), j = " << j << ": witness of degree t = " << w.t
              << " with multiplicity m = " << w.m << " at the point of elimination\n";
    std::cout << "det(M) degree " << w.matrix_det.degree() << ", witness degree "
              << w.witness_form.degree() << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fixtures list | manifest | run
// ---------------------------------------------------------------------------

json manifest_json(const ManifestEntry& e) {
  json j;
  j["name"] = e.name;
  j["recipe"] = e.recipe;
  j["deep"] = e.deep;
  if (!e.hf.empty()) j["hilbert_function"] = e.hf;
  if (e.gin_cap != 0) {
    j["gin"] = e.gin_str;
    j["gin_cap"] = e.gin_cap;
  }
  if (!e.av.empty()) {
    json avs = json::array();
    for (const auto& a : e.av) {
      json one = {{"j", a.j}, {"values", a.values}, {"route", a.route == AVRoute::Direct ? "direct" : "both"}};
      if (a.check_tail)
        one["tail"] = a.tail == IntSequence::Tail::Zero
                          ? json("zero")
                          : json{{"constant", a.tail_value}};
      avs.push_back(one);
    }
    j["av"] = avs;
  }
  if (!e.detect.empty()) {
    json ds = json::array();
    for (const auto& d : e.detect)
      ds.push_back({{"t", d.t}, {"m", d.m}, {"verdict", verdict_name(d.verdict)}, {"adim", d.adim}});
    j["detect"] = ds;
  }
  if (e.certified) j["certified"] = *e.certified;
  if (e.certificate_av) j["certificate_av"] = *e.certificate_av;
  if (e.curve) j["curve"] = {{"degree", e.curve->first}, {"genus", e.curve->second}};
  if (e.table_all_zero) j["table_all_zero"] = *e.table_all_zero;
  return j;
}

template <typename K>
int cmd_fixtures(const RunConfig& cfg, const std::string& action, const std::string& which,
                 bool deep, int jobs) {
  if (action == "list") {
    for (const std::string& n : fixture_names(deep))
      std::cout << n << (fixture_is_deep(n) ? " (deep)" : "") << "\n";
    return kExitOk;
  }
  if (action == "manifest") {
    json r = report_base(cfg, "");
    json entries = json::array();
    for (const auto& e : fixtures_manifest())
      if (deep || !e.deep) entries.push_back(manifest_json(e));
    r["fixtures"] = entries;
    std::cout << r.dump(2) << "\n";
    return kExitOk;
  }
  // action == "run"
  std::vector<const ManifestEntry*> todo;
  for (const auto& e : fixtures_manifest()) {
    if (which != "all" && e.name != which) continue;
    if (which == "all" && e.deep && !deep) continue;
    todo.push_back(&e);
  }
  if (todo.empty()) {
    std::cerr << "no fixture named " << which << "\n";
    return kExitUsage;
  }
  std::vector<FixtureRunResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  std::atomic<int> budget_errors{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      try {
        results[i] = run_fixture<K>(*todo[i], cfg.seed, cfg.budget);
      } catch (const BudgetError& ex) {
        results[i] = {todo[i]->name, false, {std::string("budget: ") + ex.what()}};
        ++budget_errors;
      } catch (const GenericityError& ex) {
        results[i] = {todo[i]->name, false, {std::string("genericity: ") + ex.what()}};
        ++budget_errors;
      } catch (const std::exception& ex) {
        results[i] = {todo[i]->name, false, {std::string("error: ") + ex.what()}};
      }
    }
  };
  int nw = std::min<int>(jobs, static_cast<int>(todo.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < nw; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    if (!r.ok) ++failures;
  }
  std::cout << results.size() - static_cast<std::size_t>(failures) << "/" << results.size()
            << " fixtures match\n";
  if (budget_errors > 0) return kExitBudget;
  return failures == 0 ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

struct Cli {
  RunConfig cfg;
  SchemeOpts src;
  int t_max = 12, t = 0, m = 0, m_max = 6, j = 0, gin_cap = -1;
  int a = 3, b = 3, wj = 1, nvars = 3;
  int table_t_max = 6, table_m_max = 6;
  std::string route = "both";
  std::string fixtures_action = "run";
  std::string fixtures_which = "all";
  bool deep = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

// Picks the coefficient field from --field, or from the ideal-file header
// when the scheme is an ideal file and --field was not given explicitly.
template <typename Fn>
int with_field(Cli& c, bool field_given, Fn&& run) {
  if (!field_given && !c.src.ideal_path.empty()) {
    IdealFileData data = read_ideal_file_path(c.src.ideal_path);
    c.cfg.field = data.field.str();
  }
  if (c.cfg.field == "rationals" || c.cfg.field == "rat") {
    c.cfg.field = "rationals";
    return run.template operator()<Rat>();
  }
  std::string f = c.cfg.field;
  if (f == "fp") f = "fp:" + std::to_string(FieldSpec::kDefaultPrime);
  if (f.rfind("fp:", 0) != 0) throw CLI::ValidationError("--field must be rationals or fp[:p]");
  Fp::set_modulus(std::stoull(f.substr(3)));
  c.cfg.field = f;
  return run.template operator()<Fp>();
}

int dispatch(int argc, char** argv) {
  Cli c;
  c.cfg.budget.max_pairs = env_ll("AVKIT_MAX_PAIRS", c.cfg.budget.max_pairs);
  c.cfg.budget.max_coeff_bits =
      static_cast<std::size_t>(env_ll("AVKIT_MAX_COEFF_BITS",
                                      static_cast<long long>(c.cfg.budget.max_coeff_bits)));

  CLI::App app{"unexpected-hypersurface toolkit"};
  app.require_subcommand(1);
  app.add_option("--field", c.cfg.field, "coefficient field: rationals or fp[:p]");
  app.add_option("--seed", c.cfg.seed, "master seed for all random choices");
  app.add_option("--trials", c.cfg.trials, "independent generic trials per computation");
  app.add_option("--max-pairs", c.cfg.budget.max_pairs, "Groebner S-pair budget");
  app.add_option("--max-coeff-bits", c.cfg.budget.max_coeff_bits, "coefficient size budget");
  app.add_flag("--json", c.cfg.json_output, "emit a JSON report instead of a table");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the quotient ring");
  add_scheme_options(hilbert, c.src);
  hilbert->add_option("--tmax", c.t_max, "tabulate h(0..tmax)");

  auto* gin_cmd = app.add_subcommand("gin", "generic initial ideal (lex)");
  add_scheme_options(gin_cmd, c.src);
  gin_cmd->add_option("--cap", c.gin_cap, "degree cap (-1 = full gin)");

  auto* av = app.add_subcommand("av", "AV sequence AV_{X,j}(m) for m = 1..mmax");
  add_scheme_options(av, c.src);
  av->add_option("--j", c.j, "shift j = t - m");
  av->add_option("--mmax", c.m_max, "largest multiplicity");
  av->add_option("--route", c.route, "direct | gin_colon | both");
  av->add_option("--gin-cap", c.gin_cap, "gin degree cap for the gin_colon route");

  auto* detect_cmd = app.add_subcommand("detect", "unexpectedness verdict for one (t, m)");
  add_scheme_options(detect_cmd, c.src);
  detect_cmd->add_option("--t", c.t, "hypersurface degree")->required();
  detect_cmd->add_option("--m", c.m, "multiplicity at the general point")->required();

  auto* table = app.add_subcommand("table", "persistence table over a (t, m) grid");
  add_scheme_options(table, c.src);
  table->add_option("--tmax", c.table_t_max, "largest degree");
  table->add_option("--mmax", c.table_m_max, "largest multiplicity");

  auto* certify = app.add_subcommand("certify", "alpha-degree no-unexpectedness certificate");
  add_scheme_options(certify, c.src);

  auto* ci = app.add_subcommand("ci-witness", "Sylvester witness form for a CI(a,b)");
  ci->add_option("--a", c.a, "first degree");
  ci->add_option("--b", c.b, "second degree");
  ci->add_option("--j", c.wj, "shift j");
  ci->add_option("--n", c.nvars, "number of variables");

  auto* fx = app.add_subcommand("fixtures", "catalog: list | manifest | run [name|all]");
  fx->add_option("action", c.fixtures_action, "list | manifest | run")
      ->check(CLI::IsMember({"list", "manifest", "run"}));
  fx->add_option("name", c.fixtures_which, "fixture name or 'all'");
  fx->add_flag("--deep", c.deep, "include the deep tier (long runs)");
  fx->add_option("--jobs", c.jobs, "concurrent fixture workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  bool field_given = app.count("--field") > 0;
  CLI::App* sub = app.get_subcommands().front();
  c.cfg.command = sub->get_name();

  auto run = [&]<typename K>() -> int {
    if (sub == hilbert) { require_scheme(c.src); return cmd_hilbert<K>(c.src, c.cfg, c.t_max); }
    if (sub == gin_cmd) { require_scheme(c.src); return cmd_gin<K>(c.src, c.cfg, c.gin_cap); }
    if (sub == av) {
      require_scheme(c.src);
      return cmd_av<K>(c.src, c.cfg, c.j, c.m_max, c.route, c.gin_cap);
    }
    if (sub == detect_cmd) { require_scheme(c.src); return cmd_detect<K>(c.src, c.cfg, c.t, c.m); }
    if (sub == table) {
      require_scheme(c.src);
      return cmd_table<K>(c.src, c.cfg, c.table_t_max, c.table_m_max);
    }
    if (sub == certify) { require_scheme(c.src); return cmd_certify<K>(c.src, c.cfg); }
    if (sub == ci) return cmd_ci_witness<K>(c.cfg, c.a, c.b, c.wj, c.nvars);
    if (sub == fx) return cmd_fixtures<K>(c.cfg, c.fixtures_action, c.fixtures_which, c.deep, c.jobs);
    return kExitUsage;
  };
  return with_field(c, field_given, run);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return kExitBudget;
  } catch (const RouteMismatchError& e) {
    std::cerr << "route mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}
