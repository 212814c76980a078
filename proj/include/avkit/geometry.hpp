#pragma once

#include "avkit/gin.hpp"
#include "avkit/linalg.hpp"

namespace avkit {

// Point of P^{n-1} stored with n coordinates; canonical form has the first
// nonzero coordinate equal to 1, so equality is equality of coordinates.
template <typename K>
struct ProjPoint {
  std::vector<K> coords;

  explicit ProjPoint(std::vector<K> c) : coords(std::move(c)) {
    int pivot = -1;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) throw DimensionError("zero vector is not a projective point");
    K d = coords[static_cast<std::size_t>(pivot)].inv();
    for (auto& x : coords) x *= d;
  }

  static ProjPoint of_ints(const std::vector<std::int64_t>& v) {
    std::vector<K> c;
    c.reserve(v.size());
    for (auto x : v) c.emplace_back(x);
    return ProjPoint(std::move(c));
  }

  static ProjPoint random(int ncoords, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
      std::vector<K> c;
      c.reserve(static_cast<std::size_t>(ncoords));
      bool nonzero = false;
      for (int i = 0; i < ncoords; ++i) {
        c.push_back(random_coeff<K>(rng));
        if (!c.back().is_zero()) nonzero = true;
      }
      if (nonzero) return ProjPoint(std::move(c));
    }
  }

  int ncoords() const { return static_cast<int>(coords.size()); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += " : ";
      s += coords[i].str();
    }
    return s + ")";
  }
};

template <typename K>
K evaluate(const Polynomial<K>& f, const std::vector<K>& point) {
  K total(0);
  for (const auto& [m, c] : f.terms()) {
    K v = c;
    for (int i = 0; i < f.nvars(); ++i)
      for (int e = 0; e < m.exp(i); ++e) v *= point[static_cast<std::size_t>(i)];
    total += v;
  }
  return total;
}

// The n-1 independent linear forms x_i - P_i x_k (k = pivot coordinate).
template <typename K>
std::vector<Polynomial<K>> point_linear_forms(const ProjPoint<K>& P) {
  int n = P.ncoords();
  int pivot = 0;
  while (P.coords[static_cast<std::size_t>(pivot)].is_zero()) ++pivot;
  std::vector<Polynomial<K>> forms;
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    forms.push_back(Polynomial<K>::variable(n, i) -
                    Polynomial<K>::variable(n, pivot).scaled(P.coords[static_cast<std::size_t>(i)]));
  }
  return forms;
}

template <typename K>
Ideal<K> point_ideal(const ProjPoint<K>& P) {
  Ideal<K> I(P.ncoords(), point_linear_forms(P));
  I.mark_saturated(true);
  return I;
}

// I_P^m, generated by all degree-m products of the point's linear forms.
template <typename K>
Ideal<K> fat_point_ideal(const ProjPoint<K>& P, int m) {
  if (m < 1) throw DimensionError("fat point multiplicity must be positive");
  std::vector<Polynomial<K>> forms = point_linear_forms(P);
  int k = static_cast<int>(forms.size());
  std::vector<Polynomial<K>> gens;
  for (const Monomial& e : monomials_of_degree(k, m)) {
    Polynomial<K> g = Polynomial<K>::constant(P.ncoords(), K(1));
    for (int i = 0; i < k; ++i)
      for (int rep = 0; rep < e.exp(i); ++rep) g = g * forms[static_cast<std::size_t>(i)];
    gens.push_back(std::move(g));
  }
  Ideal<K> I(P.ncoords(), std::move(gens));
  I.mark_saturated(true);
  return I;
}

// Saturated ideal of a finite point set via per-degree evaluation kernels.
// Generators are taken in degrees 1..r+1 where r is the first degree whose
// evaluation matrix reaches full rank |X| (point ideals are generated there).
template <typename K>
Ideal<K> points_ideal(const std::vector<ProjPoint<K>>& points) {
  if (points.empty()) throw DimensionError("empty point set");
  int n = points.front().ncoords();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].ncoords() != n) throw DimensionError("points from different spaces");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw DimensionError("duplicate point: " + points[i].str());
  }
  int s = static_cast<int>(points.size());
  std::vector<Polynomial<K>> gens;
  int full_rank_at = -1;
  for (int t = 1; t <= 2 * s + 2; ++t) {
    std::vector<Monomial> mons = monomials_of_degree(n, t);
    std::vector<std::vector<K>> eval(points.size(), std::vector<K>(mons.size(), K(0)));
    for (std::size_t r = 0; r < points.size(); ++r)
      for (std::size_t c = 0; c < mons.size(); ++c) {
        K v(1);
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < mons[c].exp(i); ++e) v *= points[r].coords[static_cast<std::size_t>(i)];
        eval[r][c] = v;
      }
    auto ker = kernel_basis(eval, static_cast<int>(mons.size()));
    int rank = static_cast<int>(mons.size()) - static_cast<int>(ker.size());
    for (const auto& v : ker) {
      std::vector<typename Polynomial<K>::Term> terms;
      for (std::size_t c = 0; c < mons.size(); ++c)
        if (!v[c].is_zero()) terms.emplace_back(mons[c], v[c]);
      gens.push_back(Polynomial<K>::from_terms(n, std::move(terms)));
    }
    if (rank == s) {
      if (full_rank_at < 0)
        full_rank_at = t;
      else
        break;  // this degree is r+1, stop after collecting it
    }
  }
  if (full_rank_at < 0) throw DimensionError("point ideal did not reach full rank");
  Ideal<K> I(n, std::move(gens));
  I.mark_saturated(true);
  return I;
}

// Expected dim [I]_t of a complete intersection of the given degrees (Koszul
// inclusion-exclusion).
long long ci_graded_dim(const std::vector<int>& degrees, int nvars, int t);

// Random element of [I]_d: random combination of monomial multiples of the
// generators.
template <typename K>
Polynomial<K> random_in_ideal(const Ideal<K>& I, int d, std::uint64_t seed) {
  Rng rng(seed);
  Polynomial<K> f(I.nvars());
  for (const auto& g : I.generators()) {
    int rem = d - g.degree();
    if (rem < 0) continue;
    for (const Monomial& u : monomials_of_degree(I.nvars(), rem))
      f += g.times_term(u, random_coeff<K>(rng));
  }
  return f;
}

// Ideal of general forms of the given degrees (optionally inside `through`),
// validated against the Koszul Hilbert function; reseeds up to 3 times.
template <typename K>
Ideal<K> complete_intersection(const std::vector<int>& degrees, int nvars, std::uint64_t seed,
                               const Ideal<K>* through = nullptr, Budget budget = Budget{}) {
  if (degrees.empty() || static_cast<int>(degrees.size()) > nvars)
    throw DimensionError("complete intersection codimension out of range");
  int probe_to = 1;
  for (int d : degrees) probe_to += d;
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Polynomial<K>> forms;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      std::uint64_t s = derive_seed(seed, (static_cast<std::uint64_t>(attempt) << 32) | i);
      forms.push_back(through ? random_in_ideal(*through, degrees[static_cast<std::size_t>(i)], s)
                              : random_form<K>(degrees[static_cast<std::size_t>(i)], nvars, s));
      if (forms.back().is_zero()) throw GenericityError("drew a zero form");
    }
    Ideal<K> I(nvars, forms);
    bool ok = true;
    HilbertFunction h = hilbert_function(I, probe_to, MonomialOrder::DegRevLex, budget);
    for (int t = 0; t <= probe_to && ok; ++t)
      if (ring_dim(nvars, t) - h.at(t) != ci_graded_dim(degrees, nvars, t)) ok = false;
    if (ok) return I;
  }
  throw GenericityError("forms failed the regular-sequence probe after reseeding");
}

// Residual of `inside` in the complete intersection `ci`: sat(ci : inside).
template <typename K>
Ideal<K> linked_curve(const Ideal<K>& ci, const Ideal<K>& inside, Budget budget = Budget{}) {
  Ideal<K> res = ideal_colon(ci, inside, budget);
  return minimalized(saturation(res, std::optional<Ideal<K>>{}, budget), budget);
}

// (degree, arithmetic genus) from the Hilbert function tail h(t) = e t - g + 1.
template <typename K>
std::pair<long long, long long> curve_degree_genus(const Ideal<K>& C, int probe_to = 24,
                                                   Budget budget = Budget{}) {
  HilbertFunction h = hilbert_function(C, probe_to, MonomialOrder::DegRevLex, budget);
  long long e = h.at(probe_to) - h.at(probe_to - 1);
  for (int t = probe_to - 3; t < probe_to; ++t)
    if (h.at(t) - h.at(t - 1) != e)
      throw DimensionError("Hilbert function tail not linear yet; increase degree range");
  long long g = e * probe_to - h.at(probe_to) + 1;
  return {e, g};
}

// Cone over a base in the hyperplane x_n = 0 (base given in the hyperplane's
// own n coordinates) with the given vertex; vertex must be off the hyperplane.
template <typename K>
Ideal<K> cone_over(const Ideal<K>& base, const ProjPoint<K>& vertex) {
  int n = base.nvars();  // base lives in P^{n-1}
  if (vertex.ncoords() != n + 1) throw DimensionError("vertex dimension mismatch");
  if (vertex.coords[static_cast<std::size_t>(n)].is_zero())
    throw DimensionError("vertex lies on the base hyperplane");
  // A fixes the hyperplane pointwise and sends e_n to the vertex; the cone
  // with vertex e_n is the lifted base ideal, so conjugate by A.
  std::vector<std::vector<K>> a(static_cast<std::size_t>(n) + 1,
                                std::vector<K>(static_cast<std::size_t>(n) + 1, K(0)));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = K(1);
  for (int i = 0; i <= n; ++i)
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = vertex.coords[static_cast<std::size_t>(i)];
  LinearChange<K> A(std::move(a), 0);
  LinearChange<K> Ainv = A.inverse();
  std::vector<Polynomial<K>> gens;
  for (const auto& g : base.generators()) {
    std::vector<typename Polynomial<K>::Term> terms;
    for (const auto& [m, c] : g.terms()) {
      Monomial mm(n + 1);
      for (int i = 0; i < n; ++i) mm.set_exp(i, m.exp(i));
      terms.emplace_back(mm, c);
    }
    gens.push_back(apply_linear_change(Polynomial<K>::from_terms(n + 1, std::move(terms)), Ainv));
  }
  Ideal<K> I(n + 1, std::move(gens));
  I.mark_saturated(true);
  return I;
}

// Distraction of an artinian monomial ideal in n variables: the reduced point
// set {(1 : a_1 : ... : a_n)} over the standard monomials x^a, living in P^n.
// Its h-vector equals the artinian Hilbert function.
template <typename K>
std::vector<ProjPoint<K>> distraction_points(const MonomialIdeal& M) {
  if (!M.is_artinian()) throw DimensionError("distraction requires an artinian monomial ideal");
  int n = M.nvars();
  std::vector<ProjPoint<K>> pts;
  for (int t = 0;; ++t) {
    long long count = M.standard_monomial_count(t);
    if (count == 0) break;
    for_each_monomial_of_degree(n, t, [&](const Monomial& m) {
      if (!M.contains(m)) {
        std::vector<K> c;
        c.emplace_back(1);
        for (int i = 0; i < n; ++i) c.emplace_back(m.exp(i));
        pts.emplace_back(std::move(c));
      }
      return true;
    });
  }
  return pts;
}

template <typename K>
Ideal<K> distraction(const MonomialIdeal& M) {
  return points_ideal(distraction_points<K>(M));
}

// ---------------------------------------------------------------------------
// Parameterized curve samplers (the catalog's rational curves).
// ---------------------------------------------------------------------------

// distinct deterministic parameter values, avoiding the listed exceptions
std::vector<std::int64_t> sample_parameters(int count, std::uint64_t seed,
                                            const std::vector<std::int64_t>& avoid);

// points A + t B on the line spanned by A, B
template <typename K>
std::vector<ProjPoint<K>> points_on_line(const ProjPoint<K>& A, const ProjPoint<K>& B, int count,
                                         std::uint64_t seed) {
  std::vector<ProjPoint<K>> out;
  for (std::int64_t t : sample_parameters(count, seed, {})) {
    std::vector<K> c;
    for (int i = 0; i < A.ncoords(); ++i)
      c.push_back(A.coords[static_cast<std::size_t>(i)] + B.coords[static_cast<std::size_t>(i)] * K(t));
    out.emplace_back(std::move(c));
  }
  return out;
}

// (1 : t : t^2 : t^3)
template <typename K>
std::vector<ProjPoint<K>> points_on_twisted_cubic(int count, std::uint64_t seed) {
  std::vector<ProjPoint<K>> out;
  for (std::int64_t t : sample_parameters(count, seed, {})) {
    K v(t);
    out.emplace_back(std::vector<K>{K(1), v, v * v, v * v * v});
  }
  return out;
}

// Nodal plane cubic y^2 z = x^2 (x + z) in the plane x3 = 0 of P^3, with the
// rational parameterization (t^2 - 1 : t (t^2 - 1) : 1 : 0); t = +-1 hits the
// node and is avoided.
template <typename K>
Polynomial<K> nodal_plane_cubic_form() {
  int n = 4;
  auto x = Polynomial<K>::variable(n, 0), y = Polynomial<K>::variable(n, 1),
       z = Polynomial<K>::variable(n, 2);
  return y * y * z - x * x * (x + z);
}

template <typename K>
Ideal<K> nodal_plane_cubic_ideal() {
  Ideal<K> I(4, {nodal_plane_cubic_form<K>(), Polynomial<K>::variable(4, 3)});
  I.mark_saturated(true);
  return I;
}

template <typename K>
std::vector<ProjPoint<K>> points_on_plane_cubic(int count, std::uint64_t seed) {
  std::vector<ProjPoint<K>> out;
  for (std::int64_t t : sample_parameters(count, seed, {-1, 0, 1})) {
    K v(t);
    K u = v * v - K(1);
    out.emplace_back(std::vector<K>{u, v * u, K(1), K(0)});
  }
  return out;
}

// union of finite point sets with distinctness across the union
template <typename K>
std::vector<ProjPoint<K>> concat_points(std::vector<std::vector<ProjPoint<K>>> groups) {
  std::vector<ProjPoint<K>> all;
  for (auto& g : groups)
    for (auto& p : g) all.push_back(std::move(p));
  return all;
}

template <typename K>
std::vector<ProjPoint<K>> random_points(int count, int ncoords, std::uint64_t seed) {
  std::vector<ProjPoint<K>> out;
  for (int i = 0; i < count; ++i) {
    for (std::uint64_t bump = 0;; ++bump) {
      ProjPoint<K> p = ProjPoint<K>::random(
          ncoords, derive_seed(seed, (static_cast<std::uint64_t>(i) << 32) | bump));
      bool dup = false;
      for (const auto& q : out)
        if (q == p) { dup = true; break; }
      if (!dup) {
        out.push_back(std::move(p));
        break;
      }
    }
  }
  return out;
}

}  // namespace avkit
