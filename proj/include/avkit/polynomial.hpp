#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avkit/field.hpp"
#include "avkit/monomial.hpp"

namespace avkit {

// Sparse multivariate polynomial. Terms are kept sorted lex-descending with
// no zero coefficients, so equality is structural.
template <typename K>
class Polynomial {
 public:
  using Term = std::pair<Monomial, K>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const K& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), c);
    return p;
  }
  static Polynomial variable(int nvars, int i, int power = 1) {
    Polynomial p(nvars);
    Monomial m(nvars);
    m.set_exp(i, power);
    p.terms_.emplace_back(m, K(1));
    return p;
  }
  static Polynomial from_term(const Monomial& m, const K& c) {
    Polynomial p(m.nvars());
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
  }
  // terms need not be sorted or combined
  static Polynomial from_terms(int nvars, std::vector<Term> terms) {
    std::map<Monomial, K, LexDesc> acc;
    for (auto& [m, c] : terms) {
      auto [it, inserted] = acc.emplace(m, c);
      if (!inserted) it->second += c;
    }
    Polynomial p(nvars);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  // leading term under ord (terms are stored lex-desc, so lex is O(1))
  const Term& leading_term(MonomialOrder ord) const {
    if (terms_.empty()) throw DimensionError("leading term of zero polynomial");
    if (ord == MonomialOrder::Lex) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
      if (monomial_greater(t.first, best->first, ord)) best = &t;
    return *best;
  }
  const Monomial& leading_monomial(MonomialOrder ord) const { return leading_term(ord).first; }

  K coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& mm) { return LexDesc{}(t.first, mm); });
    if (it != terms_.end() && it->first == m) return it->second;
    return K(0);
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    std::map<Monomial, K, LexDesc> acc;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        K c = ca * cb;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), std::move(c));
        else
          it->second += c;
      }
    Polynomial r(a.nvars_);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(m, c);
    return r;
  }

  Polynomial scaled(const K& c) const {
    if (c.is_zero()) return zero(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, k] : terms_) r.terms_.emplace_back(m, k * c);
    return r;
  }

  // c * u * this
  Polynomial times_term(const Monomial& u, const K& c) const {
    if (c.is_zero()) return zero(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, k] : terms_) r.terms_.emplace_back(m * u, k * c);
    return r;
  }

  Polynomial monic(MonomialOrder ord) const {
    if (is_zero()) return *this;
    return scaled(leading_term(ord).second.inv());
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // largest coefficient bit size; feeds the Groebner budget
  std::size_t max_coeff_bits() const {
    std::size_t b = 0;
    for (const auto& [m, c] : terms_) b = std::max(b, c.bit_size());
    return b;
  }

 private:
  void check_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomials from different rings");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_same(b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int cmp = monomial_compare(a.terms_[i].first, b.terms_[j].first, MonomialOrder::Lex);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& [m, c] = b.terms_[j++];
        r.terms_.emplace_back(m, subtract ? -c : c);
      } else {
        K c = subtract ? a.terms_[i].second - b.terms_[j].second
                       : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& [m, c] = b.terms_[j];
      r.terms_.emplace_back(m, subtract ? -c : c);
    }
    return r;
  }

  int nvars_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// LinearChange: invertible change of variables x_i -> sum_j M[i][j] x_j.
// ---------------------------------------------------------------------------

template <typename K>
class LinearChange {
 public:
  LinearChange(std::vector<std::vector<K>> matrix, std::uint64_t seed)
      : m_(std::move(matrix)), seed_(seed) {
    n_ = static_cast<int>(m_.size());
    inv_ = invert(m_);  // throws on singular input
  }

  static LinearChange identity(int n) {
    std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = K(1);
    return LinearChange(std::move(m), 0);
  }

  static LinearChange random(int n, std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<std::vector<K>> m(n, std::vector<K>(n));
      for (auto& row : m)
        for (auto& x : row) x = random_coeff<K>(rng);
      try {
        return LinearChange(std::move(m), seed);
      } catch (const FieldError&) {
        // singular draw, retry
      }
    }
    throw FieldError("could not draw an invertible change of variables");
  }

  // Random invertible change whose *columns* start with the given point, so
  // that (f o L)(e0) = f(P) and multiplicities at e0/P correspond.
  static LinearChange random_with_first_column(const std::vector<K>& p, std::uint64_t seed) {
    int n = static_cast<int>(p.size());
    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<std::vector<K>> m(n, std::vector<K>(n));
      for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)][0] = p[static_cast<std::size_t>(i)];
        for (int j = 1; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = random_coeff<K>(rng);
      }
      try {
        return LinearChange(std::move(m), seed);
      } catch (const FieldError&) {
      }
    }
    throw FieldError("could not complete point to an invertible change");
  }

  int nvars() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<std::vector<K>>& matrix() const { return m_; }

  LinearChange inverse() const {
    LinearChange r(*this);
    std::swap(r.m_, r.inv_);
    return r;
  }

  // composition: apply(f, a.compose(b)) == apply(apply(f, b), a)
  LinearChange compose(const LinearChange& o) const {
    int n = n_;
    std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
              o.m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
              m_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return LinearChange(std::move(m), seed_);
  }

 private:
  static std::vector<std::vector<K>> invert(std::vector<std::vector<K>> a) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<K>> inv(n, std::vector<K>(n, K(0)));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = K(1);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) { piv = r; break; }
      if (piv < 0) throw FieldError("singular matrix in LinearChange");
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
      std::swap(inv[static_cast<std::size_t>(piv)], inv[static_cast<std::size_t>(col)]);
      K d = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)].inv();
      for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= d;
        inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= d;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        K f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (f.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
          inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
      }
    }
    return inv;
  }

  std::vector<std::vector<K>> m_;
  std::vector<std::vector<K>> inv_;
  std::uint64_t seed_ = 0;
  int n_ = 0;
};

// Substitutes x_i by the linear form given by row i of L's matrix.
template <typename K>
Polynomial<K> apply_linear_change(const Polynomial<K>& f, const LinearChange<K>& L) {
  if (f.nvars() != L.nvars()) throw DimensionError("linear change dimension mismatch");
  int n = f.nvars();
  std::vector<Polynomial<K>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<typename Polynomial<K>::Term> terms;
    for (int j = 0; j < n; ++j) {
      Monomial m(n);
      m.set_exp(j, 1);
      terms.emplace_back(m, L.matrix()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    rows.push_back(Polynomial<K>::from_terms(n, std::move(terms)));
  }
  Polynomial<K> out(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial<K> t = Polynomial<K>::constant(n, c);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < m.exp(i); ++e) t = t * rows[static_cast<std::size_t>(i)];
    out += t;
  }
  return out;
}

// Writes f = sum_k out[k] * x0^(d-k) with each out[k] free of x0, d = deg f.
// out[0] is the coefficient of x0^d, out[d] the x0-free part.
template <typename K>
std::vector<Polynomial<K>> x0_coefficients(const Polynomial<K>& f) {
  int n = f.nvars();
  int d = std::max(0, f.degree());
  std::vector<Polynomial<K>> out(static_cast<std::size_t>(d) + 1, Polynomial<K>::zero(n));
  for (const auto& [m, c] : f.terms()) {
    int s = m.exp(0);
    Monomial rest = m;
    rest.set_exp(0, 0);
    out[static_cast<std::size_t>(d - s)] += Polynomial<K>::from_term(rest, c);
  }
  return out;
}

// Dense random form of the given degree; deterministic per seed.
template <typename K>
Polynomial<K> random_form(int degree, int nvars, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<typename Polynomial<K>::Term> terms;
  for (const Monomial& m : monomials_of_degree(nvars, degree)) {
    terms.emplace_back(m, random_coeff<K>(rng));
  }
  Polynomial<K> f = Polynomial<K>::from_terms(nvars, std::move(terms));
  if (f.is_zero() && degree == 0) {
    // degree-0 draw must be a nonzero constant
    Rng rng2(seed + 1);
    return Polynomial<K>::constant(nvars, random_nonzero_coeff<K>(rng2));
  }
  return f;
}

}  // namespace avkit
