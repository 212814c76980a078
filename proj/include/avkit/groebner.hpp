#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "avkit/monomial_ideal.hpp"
#include "avkit/polynomial.hpp"

namespace avkit {

// Resource budget converting runaway computations into clean errors.
struct Budget {
  long long max_pairs = 500000;
  std::size_t max_coeff_bits = 1 << 14;
};

struct BudgetError : std::runtime_error {
  BudgetError(const std::string& what, long long pairs, int basis_size)
      : std::runtime_error(what + " (pairs processed: " + std::to_string(pairs) +
                           ", basis size: " + std::to_string(basis_size) + ")"),
        pairs_processed(pairs),
        basis_size(basis_size) {}
  long long pairs_processed;
  int basis_size;
};

template <typename K>
struct GroebnerBasis {
  std::vector<Polynomial<K>> polys;  // reduced, monic, sorted by leading term desc
  MonomialOrder ord = MonomialOrder::DegRevLex;
  int degree_cap = -1;  // -1: full basis; >= 0: valid in degrees <= cap only
};

namespace gbdetail {

template <typename K>
using OTerms = std::vector<std::pair<Monomial, K>>;  // sorted desc by working order

template <typename K>
OTerms<K> to_ordered(const Polynomial<K>& f, MonomialOrder ord) {
  OTerms<K> t(f.terms().begin(), f.terms().end());
  if (ord != MonomialOrder::Lex)
    std::sort(t.begin(), t.end(), [ord](const auto& a, const auto& b) {
      return monomial_greater(a.first, b.first, ord);
    });
  return t;
}

template <typename K>
Polynomial<K> from_ordered(int nvars, const OTerms<K>& t, std::size_t start = 0) {
  std::vector<std::pair<Monomial, K>> terms(t.begin() + static_cast<std::ptrdiff_t>(start), t.end());
  return Polynomial<K>::from_terms(nvars, std::move(terms));
}

// a[start..] -= c * u * g, merged under ord; result replaces a with start = 0
template <typename K>
void sub_scaled_multiple(OTerms<K>& a, std::size_t start, const OTerms<K>& g, const Monomial& u,
                         const K& c, MonomialOrder ord) {
  OTerms<K> out;
  out.reserve(a.size() - start + g.size());
  std::size_t i = start, j = 0;
  while (i < a.size() && j < g.size()) {
    Monomial gm = g[j].first * u;
    int cmp = monomial_compare(a[i].first, gm, ord);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.emplace_back(gm, -(c * g[j].second));
      ++j;
    } else {
      K v = a[i].second - c * g[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j) out.emplace_back(g[j].first * u, -(c * g[j].second));
  a = std::move(out);
}

}  // namespace gbdetail

template <typename K>
class Ideal;

template <typename K>
GroebnerBasis<K> buchberger(int nvars, const std::vector<Polynomial<K>>& generators,
                            MonomialOrder ord, int degree_cap = -1, Budget budget = Budget{});

// Remainder of f on division by the (already computed) basis; no term of the
// result is divisible by any basis leading term.
template <typename K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  using namespace gbdetail;
  if (gb.degree_cap >= 0 && f.degree() > gb.degree_cap)
    throw DimensionError("normal form request beyond the basis degree cap");
  int nvars = f.nvars();
  std::vector<OTerms<K>> basis;
  basis.reserve(gb.polys.size());
  for (const auto& g : gb.polys) basis.push_back(to_ordered(g, gb.ord));
  OTerms<K> work = to_ordered(f, gb.ord);
  OTerms<K> out;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const auto& [m, c] = work[pos];
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Monomial& lt = basis[k].front().first;
      if (lt.divides(m)) {
        K factor = c / basis[k].front().second;
        sub_scaled_multiple(work, pos, basis[k], m / lt, factor, gb.ord);
        pos = 0;
        reduced = true;
        break;
      }
    }
    if (!reduced) out.push_back(work[pos++]);
  }
  std::vector<std::pair<Monomial, K>> terms(out.begin(), out.end());
  return Polynomial<K>::from_terms(nvars, std::move(terms));
}

// ---------------------------------------------------------------------------
// Ideal: generator list plus a cache of reduced Groebner bases per order.
// The cache is internally synchronized; returned bases are immutable values.
// ---------------------------------------------------------------------------

template <typename K>
class Ideal {
 public:
  enum class TriState { Unknown, Yes, No };

  Ideal() : nvars_(0), cache_(std::make_shared<CacheBox>()) {}
  Ideal(int nvars, std::vector<Polynomial<K>> generators)
      : nvars_(nvars), gens_(std::move(generators)), cache_(std::make_shared<CacheBox>()) {
    std::erase_if(gens_, [](const Polynomial<K>& p) { return p.is_zero(); });
    for (const auto& g : gens_)
      if (g.nvars() != nvars_) throw DimensionError("generator from a different ring");
    homogeneous_ = true;
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) { homogeneous_ = false; break; }
  }

  static Ideal zero(int nvars) { return Ideal(nvars, {}); }

  int nvars() const { return nvars_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_homogeneous() const { return homogeneous_; }

  TriState saturated_flag() const { return saturated_; }
  void mark_saturated(bool v) { saturated_ = v ? TriState::Yes : TriState::No; }

  // Reduced Groebner basis, cached per order. A cached basis computed with a
  // higher (or absent) cap satisfies any lower-cap request.
  const GroebnerBasis<K>& groebner_basis(MonomialOrder ord, int degree_cap = -1,
                                         Budget budget = Budget{}) const {
    if (degree_cap >= 0 && !homogeneous_)
      throw DimensionError("degree-truncated basis requires a homogeneous ideal");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) {
      const GroebnerBasis<K>& have = it->second;
      if (have.degree_cap < 0 || (degree_cap >= 0 && have.degree_cap >= degree_cap)) return have;
    }
    GroebnerBasis<K> gb = buchberger(nvars_, gens_, ord, degree_cap, budget);
    auto [pos, ignored] = cache_->bases.insert_or_assign(ord, std::move(gb));
    return pos->second;
  }

  bool contains(const Polynomial<K>& f, MonomialOrder ord = MonomialOrder::DegRevLex) const {
    return normal_form(f, groebner_basis(ord)).is_zero();
  }

 private:
  struct CacheBox {
    std::mutex mutex;
    std::map<MonomialOrder, GroebnerBasis<K>> bases;
  };
  int nvars_;
  std::vector<Polynomial<K>> gens_;
  bool homogeneous_ = true;
  TriState saturated_ = TriState::Unknown;
  std::shared_ptr<CacheBox> cache_;
};

// ---------------------------------------------------------------------------
// Buchberger with product and chain criteria; normal selection strategy
// (lowest lcm degree, order tiebreak), deterministic throughout.
// ---------------------------------------------------------------------------

template <typename K>
GroebnerBasis<K> buchberger(int nvars, const std::vector<Polynomial<K>>& generators,
                            MonomialOrder ord, int degree_cap, Budget budget) {
  using namespace gbdetail;
  GroebnerBasis<K> result;
  result.ord = ord;
  result.degree_cap = degree_cap;

  if (degree_cap >= 0)
    for (const auto& g : generators)
      if (!g.is_zero() && !g.is_homogeneous())
        throw DimensionError("degree-truncated basis requires homogeneous generators");

  struct Elt {
    Polynomial<K> poly;
    OTerms<K> ordered;
    Monomial lt;
  };
  std::vector<Elt> basis;
  auto add_poly = [&](const Polynomial<K>& p) {
    Polynomial<K> q = p.monic(ord);
    Elt e{q, to_ordered(q, ord), q.leading_monomial(ord)};
    basis.push_back(std::move(e));
  };

  std::vector<Polynomial<K>> inputs;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (degree_cap >= 0 && g.degree() > degree_cap) continue;
    inputs.push_back(g);
  }
  if (inputs.empty()) return result;
  for (const auto& g : inputs) add_poly(g);

  // pending pair set ordered by (lcm degree, lcm under ord, i, j)
  struct PairKey {
    int deg;
    Monomial lcm;
    int i, j;
  };
  auto pair_less = [ord](const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = monomial_compare(a.lcm, b.lcm, ord);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<int, int>> pending_idx;

  auto push_pair = [&](int i, int j) {
    Monomial l = basis[static_cast<std::size_t>(i)].lt.lcm(basis[static_cast<std::size_t>(j)].lt);
    if (degree_cap >= 0 && l.degree() > degree_cap) return;
    pending.insert(PairKey{l.degree(), l, i, j});
    pending_idx.emplace(i, j);
  };

  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) push_pair(i, j);

  long long pairs_done = 0;
  while (!pending.empty()) {
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    pending_idx.erase({pk.i, pk.j});
    if (++pairs_done > budget.max_pairs)
      throw BudgetError("Groebner budget exhausted", pairs_done, static_cast<int>(basis.size()));

    const Elt& f = basis[static_cast<std::size_t>(pk.i)];
    const Elt& g = basis[static_cast<std::size_t>(pk.j)];
    if (f.lt.coprime(g.lt)) continue;  // product criterion
    // chain criterion: some k with lt_k | lcm and both spanned pairs settled
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!basis[static_cast<std::size_t>(k)].lt.divides(pk.lcm)) continue;
      auto p1 = std::minmax(pk.i, k);
      auto p2 = std::minmax(pk.j, k);
      if (!pending_idx.count({p1.first, p1.second}) && !pending_idx.count({p2.first, p2.second}))
        skip = true;
    }
    if (skip) continue;

    // S-polynomial of two monic elements
    Polynomial<K> s = f.poly.times_term(pk.lcm / f.lt, K(1)) - g.poly.times_term(pk.lcm / g.lt, K(1));
    // top-reduce against the current basis; tails are cleaned up once at the
    // end, which is much cheaper than full reduction inside the loop
    {
      OTerms<K> work = to_ordered(s, ord);
      while (!work.empty()) {
        const auto& [m, c] = work.front();
        const Elt* red = nullptr;
        for (const Elt& e : basis) {
          if (e.lt.divides(m)) {
            red = &e;
            break;
          }
        }
        if (!red) break;
        sub_scaled_multiple(work, 0, red->ordered, m / red->lt, c, ord);
      }
      s = from_ordered<K>(nvars, work);
    }
    if (s.is_zero()) continue;
    if (s.max_coeff_bits() > budget.max_coeff_bits)
      throw BudgetError("coefficient bit-size budget exhausted", pairs_done,
                        static_cast<int>(basis.size()));
    add_poly(s);
    int idx = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < idx; ++i) push_pair(i, idx);
  }

  // minimalize: drop elements whose leading term is divisible by another's
  // (ties between equal leading terms keep the earliest element)
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!basis[j].lt.divides(basis[i].lt)) continue;
      if (basis[i].lt == basis[j].lt && j > i) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i].poly);
  }

  // tail-reduce each element against the others
  std::vector<Polynomial<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GroebnerBasis<K> others{ {}, ord, degree_cap };
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.polys.push_back(minimal[j]);
    Polynomial<K> r = others.polys.empty() ? minimal[i] : normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic(ord));
  }
  std::sort(reduced.begin(), reduced.end(), [ord](const Polynomial<K>& a, const Polynomial<K>& b) {
    return monomial_greater(a.leading_monomial(ord), b.leading_monomial(ord), ord);
  });
  result.polys = std::move(reduced);
  return result;
}

template <typename K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Ideal<K>& I,
                          MonomialOrder ord = MonomialOrder::DegRevLex) {
  if (I.is_zero_ideal()) return f;
  return normal_form(f, I.groebner_basis(ord));
}

// Minimal monomial generators of the leading-term ideal.
template <typename K>
MonomialIdeal initial_ideal(const Ideal<K>& I, MonomialOrder ord, int degree_cap = -1,
                            Budget budget = Budget{}) {
  if (I.is_zero_ideal()) return MonomialIdeal(I.nvars());
  const GroebnerBasis<K>& gb = I.groebner_basis(ord, degree_cap, budget);
  std::vector<Monomial> lts;
  lts.reserve(gb.polys.size());
  for (const auto& g : gb.polys) lts.push_back(g.leading_monomial(ord));
  return MonomialIdeal(I.nvars(), std::move(lts));
}

// Reduced-GB equality under ord.
template <typename K>
bool equal_ideals(const Ideal<K>& a, const Ideal<K>& b,
                  MonomialOrder ord = MonomialOrder::DegRevLex) {
  if (a.nvars() != b.nvars()) return false;
  if (a.is_zero_ideal() || b.is_zero_ideal()) return a.is_zero_ideal() == b.is_zero_ideal();
  return a.groebner_basis(ord).polys == b.groebner_basis(ord).polys;
}

namespace gbdetail {

// shift variables by one slot to make room for the auxiliary variable at x0
template <typename K>
Polynomial<K> shift_up(const Polynomial<K>& f) {
  int n = f.nvars();
  std::vector<std::pair<Monomial, K>> terms;
  for (const auto& [m, c] : f.terms()) {
    Monomial mm(n + 1);
    for (int i = 0; i < n; ++i) mm.set_exp(i + 1, m.exp(i));
    terms.emplace_back(mm, c);
  }
  return Polynomial<K>::from_terms(n + 1, std::move(terms));
}

template <typename K>
Polynomial<K> shift_down(const Polynomial<K>& f) {
  int n = f.nvars();
  std::vector<std::pair<Monomial, K>> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m.exp(0) != 0) throw DimensionError("cannot drop a live variable");
    Monomial mm(n - 1);
    for (int i = 1; i < n; ++i) mm.set_exp(i - 1, m.exp(i));
    terms.emplace_back(mm, c);
  }
  return Polynomial<K>::from_terms(n - 1, std::move(terms));
}

}  // namespace gbdetail

// I cap J via the single-auxiliary-variable construction: generators
// {t f_i} u {(1-t) g_j}, eliminate t with lex (t largest).
template <typename K>
Ideal<K> ideal_intersection(const Ideal<K>& I, const Ideal<K>& J, Budget budget = Budget{}) {
  using namespace gbdetail;
  if (I.nvars() != J.nvars()) throw DimensionError("intersection across different rings");
  int n = I.nvars();
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal<K>::zero(n);
  if (n + 1 > kMaxVars) throw DimensionError("too many variables for the auxiliary construction");
  Polynomial<K> t = Polynomial<K>::variable(n + 1, 0);
  Polynomial<K> one_minus_t = Polynomial<K>::constant(n + 1, K(1)) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : I.generators()) gens.push_back(t * shift_up(f));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * shift_up(g));
  GroebnerBasis<K> gb = buchberger(n + 1, gens, MonomialOrder::Lex, -1, budget);
  std::vector<Polynomial<K>> out;
  for (const auto& p : gb.polys) {
    bool free_of_t = true;
    for (const auto& [m, c] : p.terms())
      if (m.exp(0) != 0) { free_of_t = false; break; }
    if (free_of_t) out.push_back(shift_down(p));
  }
  return Ideal<K>(n, std::move(out));
}

// exact division f / g (throws if g does not divide f)
template <typename K>
Polynomial<K> divide_exact(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (g.is_zero()) throw DimensionError("division by the zero polynomial");
  Polynomial<K> rem = f;
  Polynomial<K> quot(f.nvars());
  const Monomial& glt = g.leading_monomial(MonomialOrder::Lex);
  const K glc = g.leading_term(MonomialOrder::Lex).second;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading_term(MonomialOrder::Lex);
    if (!glt.divides(m)) throw DimensionError("inexact polynomial division");
    K q = c / glc;
    Monomial u = m / glt;
    quot += Polynomial<K>::from_term(u, q);
    rem -= g.times_term(u, q);
  }
  return quot;
}

// I : g via (I cap (g)) / g
template <typename K>
Ideal<K> ideal_colon_element(const Ideal<K>& I, const Polynomial<K>& g, Budget budget = Budget{}) {
  if (g.is_zero()) throw DimensionError("colon by zero");
  Ideal<K> principal(I.nvars(), {g});
  Ideal<K> inter = ideal_intersection(I, principal, budget);
  std::vector<Polynomial<K>> out;
  for (const auto& h : inter.generators()) out.push_back(divide_exact(h, g));
  return Ideal<K>(I.nvars(), std::move(out));
}

// I : J = cap_j (I : g_j)
template <typename K>
Ideal<K> ideal_colon(const Ideal<K>& I, const Ideal<K>& J, Budget budget = Budget{}) {
  if (I.nvars() != J.nvars()) throw DimensionError("colon across different rings");
  if (J.is_zero_ideal()) throw DimensionError("colon by the zero ideal");
  Ideal<K> acc;
  bool first = true;
  for (const auto& g : J.generators()) {
    Ideal<K> c = ideal_colon_element(I, g, budget);
    acc = first ? c : minimalized(ideal_intersection(acc, c, budget), budget);
    first = false;
  }
  return acc;
}

inline std::vector<int> all_vars(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

// irrelevant maximal ideal (x0, ..., xn)
template <typename K>
Ideal<K> irrelevant_ideal(int nvars) {
  std::vector<Polynomial<K>> gens;
  for (int i = 0; i < nvars; ++i) gens.push_back(Polynomial<K>::variable(nvars, i));
  return Ideal<K>(nvars, std::move(gens));
}

// iterated colon until stabilization (reduced-GB equality)
template <typename K>
Ideal<K> saturation(const Ideal<K>& I, std::optional<Ideal<K>> J = std::nullopt,
                    Budget budget = Budget{}) {
  Ideal<K> wrt = J ? *J : irrelevant_ideal<K>(I.nvars());
  Ideal<K> cur = I;
  for (int iter = 0; iter < 256; ++iter) {
    // trimming the generator list keeps the colon chain from snowballing
    Ideal<K> next = minimalized(ideal_colon(cur, wrt, budget), budget);
    if (equal_ideals(cur, next)) {
      cur.mark_saturated(true);
      return cur;
    }
    cur = next;
  }
  throw BudgetError("saturation did not stabilize", 0, 0);
}

// Replaces the generator list of a homogeneous ideal by a minimal generating
// set, selected degree by degree from the reduced Groebner basis: in degree d
// keep only basis elements outside R_1 * [I]_{d-1}. Colon and saturation
// chains produce badly redundant generator lists; trimming them keeps later
// coordinate changes affordable.
template <typename K>
Ideal<K> minimalized(const Ideal<K>& I, Budget budget = Budget{}) {
  if (I.is_zero_ideal() || !I.is_homogeneous()) return I;
  int n = I.nvars();
  const GroebnerBasis<K>& gb = I.groebner_basis(MonomialOrder::DegRevLex, -1, budget);
  std::map<int, std::vector<const Polynomial<K>*>> by_degree;
  for (const auto& g : gb.polys) by_degree[g.degree()].push_back(&g);
  std::vector<Polynomial<K>> kept;
  std::vector<Polynomial<K>> piece;  // row-echelon basis of [(kept)]_{d}, monic rows
  auto reduce_insert = [&](Polynomial<K> f, std::map<Monomial, std::size_t, LexDesc>& lead) {
    for (;;) {
      if (f.is_zero()) return false;
      Monomial lm = f.leading_monomial(MonomialOrder::DegRevLex);
      auto it = lead.find(lm);
      if (it == lead.end()) {
        f = f.scaled(f.coeff(lm).inv());
        lead.emplace(lm, piece.size());
        piece.push_back(std::move(f));
        return true;
      }
      f = f - piece[it->second].scaled(f.coeff(lm));
    }
  };
  int d_max = by_degree.rbegin()->first;
  for (int d = by_degree.begin()->first; d <= d_max; ++d) {
    std::vector<Polynomial<K>> lifted;
    lifted.reserve(piece.size() * static_cast<std::size_t>(n));
    for (const auto& v : piece)
      for (int i = 0; i < n; ++i) lifted.push_back(v * Polynomial<K>::variable(n, i));
    piece.clear();
    std::map<Monomial, std::size_t, LexDesc> lead;
    for (auto& f : lifted) reduce_insert(std::move(f), lead);
    auto it = by_degree.find(d);
    if (it == by_degree.end()) continue;
    for (const Polynomial<K>* g : it->second)
      if (reduce_insert(*g, lead)) kept.push_back(*g);
  }
  Ideal<K> out(n, std::move(kept));
  if (I.saturated_flag() == Ideal<K>::TriState::Yes) out.mark_saturated(true);
  return out;
}

// Generators free of the dropped variables; drop_count leading variables
// (an initial lex segment, required by the lex elimination property).
template <typename K>
Ideal<K> elimination_ideal(const Ideal<K>& I, int drop_count, Budget budget = Budget{}) {
  if (drop_count < 0 || drop_count >= I.nvars())
    throw DimensionError("elimination variable count out of range");
  const GroebnerBasis<K>& gb = I.groebner_basis(MonomialOrder::Lex, -1, budget);
  std::vector<Polynomial<K>> out;
  for (const auto& p : gb.polys) {
    bool free_of = true;
    for (const auto& [m, c] : p.terms())
      for (int i = 0; i < drop_count && free_of; ++i)
        if (m.exp(i) != 0) free_of = false;
    if (free_of) out.push_back(p);
  }
  return Ideal<K>(I.nvars(), std::move(out));
}

}  // namespace avkit
