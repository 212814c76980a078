#pragma once

#include "avkit/geometry.hpp"

namespace avkit {

struct RouteMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// initial degree: smallest t with [I]_t != 0
template <typename K>
int alpha_degree(const Ideal<K>& I) {
  if (I.is_zero_ideal()) throw DimensionError("alpha of the zero ideal");
  int a = -1;
  for (const auto& g : I.generators())
    if (a < 0 || g.degree() < a) a = g.degree();
  return a;
}

struct DimTriple {
  int t = 0, m = 0;
  long long adim = 0, vdim = 0, edim = 0;
  bool trials_agreed = true;
  std::vector<std::uint64_t> seeds;
};

namespace uxdetail {

// Spanning rows for [I_X]_t with pairwise distinct degrevlex leading
// monomials: one monomial multiple u*g per element of [in(I)]_t. They are
// triangular, hence a basis of [I_X]_t.
template <typename K>
std::vector<Polynomial<K>> graded_basis(const Ideal<K>& X, int t, Budget budget) {
  std::vector<Polynomial<K>> rows;
  if (X.is_zero_ideal()) return rows;
  const GroebnerBasis<K>& gb = X.groebner_basis(MonomialOrder::DegRevLex, t, budget);
  std::map<Monomial, bool, LexDesc> taken;
  for (const auto& g : gb.polys) {
    int rem = t - g.degree();
    if (rem < 0) continue;
    const Monomial& lt = g.leading_monomial(MonomialOrder::DegRevLex);
    for (const Monomial& u : monomials_of_degree(X.nvars(), rem)) {
      Monomial w = u * lt;
      auto [it, fresh] = taken.emplace(w, true);
      if (fresh) rows.push_back(g.times_term(u, K(1)));
    }
  }
  return rows;
}

}  // namespace uxdetail

// dim [I_X]_t via the triangular spanning set (agrees with graded_dim_ideal).
template <typename K>
long long graded_dim_direct(const Ideal<K>& X, int t, Budget budget = Budget{}) {
  return static_cast<long long>(uxdetail::graded_basis(X, t, budget).size());
}

// Actual dimension dim [I_X cap I_P^m]_t for a general point P: each trial
// moves a random P to (1:0:...:0) by a linear change and imposes membership
// in I_Q^m (every term of degree >= m in x1..xn, i.e. x0-exponent <= t-m).
// adim is upper semicontinuous in P, so the general value is the minimum over
// trials; a disagreement triggers one extra trial and is flagged.
template <typename K>
DimTriple adim_vdim(const Ideal<K>& X, int t, int m, int trials = 2, std::uint64_t seed = 1,
                    Budget budget = Budget{}) {
  if (t < 1 || m < 1) throw DimensionError("adim needs t, m >= 1");
  DimTriple out;
  out.t = t;
  out.m = m;
  int n = X.nvars();
  std::vector<Polynomial<K>> basis = uxdetail::graded_basis(X, t, budget);
  long long ideal_dim = static_cast<long long>(basis.size());
  out.vdim = ideal_dim - ring_dim(n, m - 1);
  out.edim = std::max(out.vdim, 0LL);
  if (t < m || basis.empty()) {
    out.adim = 0;
    out.trials_agreed = true;
    return out;
  }
  // columns: degree-t monomials outside I_Q^m (x0-exponent > t-m)
  std::vector<Monomial> bad;
  for (const Monomial& w : monomials_of_degree(n, t))
    if (w.exp(0) > t - m) bad.push_back(w);
  std::vector<long long> samples;
  auto run_trial = [&](int trial) {
    std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(trial));
    out.seeds.push_back(s);
    ProjPoint<K> P = ProjPoint<K>::random(n, derive_seed(s, 0xADu));
    LinearChange<K> L = LinearChange<K>::random_with_first_column(P.coords, derive_seed(s, 0xBEu));
    std::vector<std::vector<K>> mat;
    mat.reserve(basis.size());
    for (const auto& f : basis) {
      Polynomial<K> g = apply_linear_change(f, L);
      std::vector<K> row(bad.size(), K(0));
      for (std::size_t c = 0; c < bad.size(); ++c) row[c] = g.coeff(bad[c]);
      mat.push_back(std::move(row));
    }
    samples.push_back(ideal_dim - matrix_rank(std::move(mat)));
  };
  for (int i = 0; i < trials; ++i) run_trial(i);
  bool agree = std::all_of(samples.begin(), samples.end(),
                           [&](long long v) { return v == samples.front(); });
  if (!agree) run_trial(trials);  // escalate once
  out.adim = *std::min_element(samples.begin(), samples.end());
  out.trials_agreed = agree;
  return out;
}

// dim [gin(I_X) cap I_Q^m]_t: count of degree-t gin monomials with
// x0-exponent <= t-m (the combinatorial criterion).
inline long long adim_via_gin(const GinResult& g, int t, int m) {
  if (g.degree_cap >= 0 && g.degree_cap < t) throw DimensionError("gin cap below requested degree");
  long long count = 0;
  for_each_monomial_of_degree(g.monomial_ideal.nvars(), t, [&](const Monomial& w) {
    if (w.exp(0) <= t - m && g.monomial_ideal.contains(w)) ++count;
    return true;
  });
  return count;
}

enum class Verdict { Unexpected, Expected, NoHypersurface };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Unexpected: return "unexpected";
    case Verdict::Expected: return "expected";
    case Verdict::NoHypersurface: return "no_hypersurface";
  }
  return "";
}

struct UnexpectednessVerdict {
  DimTriple dims;
  Verdict verdict = Verdict::NoHypersurface;
};

// Definition 2.5 verdict: unexpected iff adim > 0 and adim > vdim.
template <typename K>
UnexpectednessVerdict detect(const Ideal<K>& X, int t, int m, int trials = 2,
                             std::uint64_t seed = 1, Budget budget = Budget{}) {
  UnexpectednessVerdict v;
  v.dims = adim_vdim(X, t, m, trials, seed, budget);
  if (v.dims.adim == 0)
    v.verdict = Verdict::NoHypersurface;
  else if (v.dims.adim > v.dims.edim)
    v.verdict = Verdict::Unexpected;
  else
    v.verdict = Verdict::Expected;
  return v;
}

enum class AVRoute { Direct, GinColon, Both };

struct AVReport {
  int j = 0;
  AVRoute route = AVRoute::Both;
  IntSequence values;  // offset 1: values.at(m) = AV_{X,j}(m)
  bool o_sequence_ok = false;
  SICheck si;
  bool trials_agreed = true;
  std::uint64_t seed = 0;
};

// AV_{X,j}(m) = adim(X, m+j, m) - vdim(X, m+j, m) for m = 1..m_max.
// Route direct: linear algebra at a random point. Route gin_colon:
// h_{R/(gin(I_X) : x0^{j+1})}(m-1), which also classifies the tail. Route
// both: cross-check, mismatch is a hard error.
template <typename K>
AVReport av_sequence(const Ideal<K>& X, int j, int m_max, AVRoute route = AVRoute::Both,
                     int trials = 2, std::uint64_t seed = 1, Budget budget = Budget{},
                     int gin_cap = -1) {
  if (j < 0 || m_max < 1) throw DimensionError("av_sequence needs j >= 0, m_max >= 1");
  if (gin_cap >= 0 && gin_cap < m_max + j)
    throw DimensionError("gin degree cap is below the largest relevant degree");
  AVReport rep;
  rep.j = j;
  rep.route = route;
  rep.seed = seed;

  std::vector<long long> direct_vals;
  if (route != AVRoute::GinColon) {
    for (int m = 1; m <= m_max; ++m) {
      DimTriple d = adim_vdim(X, m + j, m, trials, derive_seed(seed, static_cast<std::uint64_t>(m)), budget);
      if (!d.trials_agreed) rep.trials_agreed = false;
      direct_vals.push_back(d.adim - d.vdim);
    }
  }

  IntSequence vals;
  vals.offset = 1;
  if (route == AVRoute::Direct) {
    vals.values = direct_vals;
    vals.tail = IntSequence::Tail::Unknown;
  } else {
    GinResult g = gin(X, 2, derive_seed(seed, 0x617Eu), gin_cap, budget);
    MonomialIdeal J = g.monomial_ideal.colon_x0_power(j + 1);
    // A truncated gin only determines J (and hence h) up to degree
    // gin_cap - (j+1); the full gin determines it everywhere.
    int n = X.nvars();
    int D = J.max_degree();
    int probe = (gin_cap < 0) ? std::max(m_max - 1, 1) : gin_cap - (j + 1);
    HilbertFunction h = hilbert_function(J, probe);
    for (int m = 1; m <= m_max; ++m)
      vals.values.push_back(h.values[static_cast<std::size_t>(m - 1)]);
    vals.tail = IntSequence::Tail::Unknown;
    for (int d = 0; d <= probe; ++d) {
      // once the Hilbert function of R/J hits zero it is zero forever
      if (h.values[static_cast<std::size_t>(d)] == 0) {
        vals.tail = IntSequence::Tail::Zero;
        break;
      }
    }
    if (vals.tail == IntSequence::Tail::Unknown && gin_cap < 0 && D >= 0) {
      // J is strongly stable, so its regularity is its largest generator
      // degree D and h agrees with the Hilbert polynomial (degree < n) from
      // there on; n+1 equal consecutive values past D pin it to a constant.
      HilbertFunction hd = hilbert_function(J, D + n + 1);
      bool constant = true;
      for (int d = D; constant && d < D + n + 1; ++d)
        if (hd.values[static_cast<std::size_t>(d)] != hd.values[static_cast<std::size_t>(d) + 1])
          constant = false;
      if (constant) {
        long long c = hd.values[static_cast<std::size_t>(D)];
        vals.tail = c == 0 ? IntSequence::Tail::Zero : IntSequence::Tail::Constant;
        vals.tail_value = c;
      }
    }
    if (route == AVRoute::Both) {
      for (int m = 1; m <= m_max; ++m) {
        if (direct_vals[static_cast<std::size_t>(m - 1)] != vals.at(m))
          throw RouteMismatchError(
              "AV route mismatch at j=" + std::to_string(j) + ", m=" + std::to_string(m) +
              ": direct=" + std::to_string(direct_vals[static_cast<std::size_t>(m - 1)]) +
              ", gin_colon=" + std::to_string(vals.at(m)));
      }
    }
  }
  rep.values = vals;
  IntSequence shifted = vals;
  shifted.offset = 0;  // left shift by one: AV(m) sits at degree m-1
  rep.o_sequence_ok = is_O_sequence(shifted).ok;
  rep.si = is_SI_sequence(vals);
  return rep;
}

// The persistence table T_{t,m} = min(adim, AV_{X,t-m}(m)) with its
// three-region decomposition: I: t < alpha; II: t >= alpha, m >= alpha;
// III: t >= alpha, m < alpha.
struct PersistenceTable {
  int t_max = 0, m_max = 0, alpha = 0;
  std::vector<std::vector<long long>> cells;  // cells[t-1][m-1]

  std::string region_name(int t, int m) const {
    if (t < alpha) return "I";
    return m >= alpha ? "II" : "III";
  }
  bool all_zero() const {
    for (const auto& row : cells)
      for (long long v : row)
        if (v != 0) return false;
    return true;
  }
};

template <typename K>
PersistenceTable persistence_table(const Ideal<K>& X, int t_max, int m_max, int trials = 2,
                                   std::uint64_t seed = 1, Budget budget = Budget{}) {
  if (t_max < 1 || m_max < 1) throw DimensionError("table bounds must be >= 1");
  PersistenceTable table;
  table.t_max = t_max;
  table.m_max = m_max;
  table.alpha = alpha_degree(X);
  table.cells.assign(static_cast<std::size_t>(t_max), std::vector<long long>(static_cast<std::size_t>(m_max), 0));
  for (int t = 1; t <= t_max; ++t)
    for (int m = 1; m <= m_max; ++m) {
      if (t < m) continue;  // no hypersurface of degree t with multiplicity m > t
      DimTriple d = adim_vdim(X, t, m, trials,
                              derive_seed(seed, (static_cast<std::uint64_t>(t) << 32) | static_cast<std::uint64_t>(m)),
                              budget);
      long long av = d.adim - d.vdim;
      table.cells[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(m - 1)] = std::min(d.adim, av);
    }
  return table;
}

// The alpha-degree criterion: AV_{X,0}(alpha) = 0 certifies the absence of unexpected
// hypersurfaces for every (t, m).
struct NoUnexpectedCertificate {
  bool certified = false;
  int alpha = 0;
  long long av_value = 0;
  std::vector<std::uint64_t> seeds;
};

template <typename K>
NoUnexpectedCertificate certify_no_unexpected(const Ideal<K>& X, int trials = 2,
                                              std::uint64_t seed = 1, Budget budget = Budget{}) {
  NoUnexpectedCertificate cert;
  cert.alpha = alpha_degree(X);
  DimTriple d = adim_vdim(X, cert.alpha, cert.alpha, trials, seed, budget);
  cert.av_value = d.adim - d.vdim;
  cert.seeds = d.seeds;
  cert.certified = (cert.av_value == 0);
  return cert;
}

// Lex-segment criterion: if [gin]_t is a lex segment and adim(X,t,m) > 0 then
// AV_{X,t-m}(m) = 0 without further computation.
struct LexSegmentConclusion {
  bool conclusive = false;
  long long av = 0;  // meaningful only when conclusive
};

inline LexSegmentConclusion lex_segment_criterion(const GinResult& g, int t, int m) {
  LexSegmentConclusion c;
  if (!g.monomial_ideal.is_lex_segment(t)) return c;
  if (adim_via_gin(g, t, m) <= 0) return c;
  c.conclusive = true;
  c.av = 0;
  return c;
}

// ---------------------------------------------------------------------------
// Sylvester witness for codimension-2 complete intersections (Prop. 5.1).
// ---------------------------------------------------------------------------

// determinant of a small polynomial matrix, first-column Laplace expansion
template <typename K>
Polynomial<K> poly_determinant(const std::vector<std::vector<Polynomial<K>>>& m) {
  std::size_t n = m.size();
  if (n == 0) throw DimensionError("determinant of an empty matrix");
  if (n == 1) return m[0][0];
  int nv = m[0][0].nvars();
  Polynomial<K> det(nv);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<Polynomial<K>>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    Polynomial<K> term = m[i][0] * poly_determinant(minor);
    det = (i % 2 == 0) ? det + term : det - term;
  }
  return det;
}

template <typename K>
struct SylvesterWitness {
  int a = 0, b = 0, j = 0;
  int t = 0;  // (a-j)(b-j)+j
  int m = 0;  // (a-j)(b-j)
  Polynomial<K> F, G;
  Polynomial<K> matrix_det;   // degree m, free of x0
  Polynomial<K> witness_form; // T, degree t, in (F,G) and in I_Q^m
  std::uint64_t seed = 0;
};

// Builds general F, G of degrees a, b, assembles the (a+b-2j)-square matrix of
// x0-coefficient strips, and forms T = (sum M_i x0^{i-1}) F +
// (sum M_{b-j+i} x0^{i-1}) G. Verifies that the x0-coefficients of T vanish
// above index j and that the coefficient of x0^j equals det(M).
template <typename K>
SylvesterWitness<K> sylvester_witness(int a, int b, int j, int nvars, std::uint64_t seed = 1) {
  if (!(0 <= j && j < a && a <= b)) throw DimensionError("need 0 <= j < a <= b");
  if (nvars < 3) throw DimensionError("need at least 3 variables");
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    SylvesterWitness<K> w;
    w.a = a;
    w.b = b;
    w.j = j;
    w.m = (a - j) * (b - j);
    w.t = w.m + j;
    w.seed = s;
    w.F = random_form<K>(a, nvars, derive_seed(s, 0xFu));
    w.G = random_form<K>(b, nvars, derive_seed(s, 0x6u));
    // f[k] = coefficient of x0^{a-k}, homogeneous of degree k in x1..xn
    std::vector<Polynomial<K>> f = x0_coefficients(w.F);
    std::vector<Polynomial<K>> g = x0_coefficients(w.G);
    auto fk = [&](int k) {
      return (k >= 0 && k <= a) ? f[static_cast<std::size_t>(k)] : Polynomial<K>::zero(nvars);
    };
    auto gk = [&](int k) {
      return (k >= 0 && k <= b) ? g[static_cast<std::size_t>(k)] : Polynomial<K>::zero(nvars);
    };
    int size = a + b - 2 * j;
    std::vector<std::vector<Polynomial<K>>> M(static_cast<std::size_t>(size));
    for (int r = 1; r <= b - j; ++r) {
      for (int c = 1; c <= size; ++c)
        M[static_cast<std::size_t>(r - 1)].push_back(fk(a - j + r - c));
    }
    for (int r = 1; r <= a - j; ++r) {
      for (int c = 1; c <= size; ++c)
        M[static_cast<std::size_t>(b - j + r - 1)].push_back(gk(b - j + r - c));
    }
    w.matrix_det = poly_determinant(M);
    if (w.matrix_det.is_zero()) continue;  // reseed
    // first-column cofactors
    std::vector<Polynomial<K>> cof;
    for (int i = 0; i < size; ++i) {
      std::vector<std::vector<Polynomial<K>>> minor;
      for (int r = 0; r < size; ++r) {
        if (r == i) continue;
        minor.emplace_back(M[static_cast<std::size_t>(r)].begin() + 1, M[static_cast<std::size_t>(r)].end());
      }
      Polynomial<K> d = poly_determinant(minor);
      cof.push_back(i % 2 == 0 ? d : -d);
    }
    Polynomial<K> A(nvars), B(nvars);
    for (int i = 1; i <= b - j; ++i) {
      Monomial u(nvars);
      u.set_exp(0, i - 1);
      A += cof[static_cast<std::size_t>(i - 1)].times_term(u, K(1));
    }
    for (int i = 1; i <= a - j; ++i) {
      Monomial u(nvars);
      u.set_exp(0, i - 1);
      B += cof[static_cast<std::size_t>(b - j + i - 1)].times_term(u, K(1));
    }
    w.witness_form = A * w.F + B * w.G;
    if (w.witness_form.is_zero() || w.witness_form.degree() != w.t) continue;
    // x0-expansion must terminate at x0^j with coefficient det(M)
    std::vector<Polynomial<K>> strips = x0_coefficients(w.witness_form);
    bool ok = true;
    for (int k = 0; k < w.m && ok; ++k)  // x0-exponent t-k > j
      if (!strips[static_cast<std::size_t>(k)].is_zero()) ok = false;
    if (!ok || strips[static_cast<std::size_t>(w.m)] != w.matrix_det) continue;
    return w;
  }
  throw GenericityError("Sylvester witness: forms insufficiently general after reseeding");
}

// Closed form from the Koszul resolution (binomials with negative tops are zero):
// dim [I_C]_t - C(m-1+n, n) for CI(a,b) in P^n.
inline long long ci_vdim_closed_form(int a, int b, int n, int t, int m) {
  return binomial(t - a + n, n) + binomial(t - b + n, n) - binomial(t - a - b + n, n) -
         binomial(m - 1 + n, n);
}

// ---------------------------------------------------------------------------
// The curve tail formula AV_{C,0}(t) = C(e-1,2) - g for t >= e.
// ---------------------------------------------------------------------------

struct CurveFormulaReport {
  long long e = 0, g = 0;
  long long expected = 0;  // C(e-1, 2) - g
  std::vector<std::pair<int, long long>> computed;  // (t, AV_{C,0}(t))
  bool all_match = true;
};

template <typename K>
CurveFormulaReport curve_av_formula_check(const Ideal<K>& C, int t_lo, int t_hi, int trials = 2,
                                          std::uint64_t seed = 1, Budget budget = Budget{}) {
  CurveFormulaReport rep;
  auto [e, g] = curve_degree_genus(C, 24, budget);
  rep.e = e;
  rep.g = g;
  rep.expected = binomial(e - 1, 2) - g;
  for (int t = t_lo; t <= t_hi; ++t) {
    DimTriple d = adim_vdim(C, t, t, trials, derive_seed(seed, static_cast<std::uint64_t>(t)), budget);
    long long av = d.adim - d.vdim;
    rep.computed.emplace_back(t, av);
    if (t >= e && av != rep.expected) rep.all_match = false;
  }
  return rep;
}

}  // namespace avkit
