#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace avkit {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// User-facing rings are capped at 8 variables; two extra slots cover the
// auxiliary variables used internally by intersection/saturation.
constexpr int kMaxUserVars = 8;
constexpr int kMaxVars = 10;

enum class MonomialOrder { Lex, DegRevLex };

inline std::string order_name(MonomialOrder o) {
  return o == MonomialOrder::Lex ? "lex" : "degrevlex";
}

// Monomial in a ring with a fixed variable count; convention x0 > x1 > ... > xn.
class Monomial {
 public:
  Monomial() : n_(0), deg_(0) { e_.fill(0); }
  explicit Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)), deg_(0) {
    if (nvars < 1 || nvars > kMaxVars) throw DimensionError("variable count out of range");
    e_.fill(0);
  }
  Monomial(int nvars, const std::vector<int>& exps) : Monomial(nvars) {
    if (static_cast<int>(exps.size()) != nvars) throw DimensionError("exponent vector length mismatch");
    for (int i = 0; i < nvars; ++i) set_exp(i, exps[i]);
  }

  int nvars() const { return n_; }
  int degree() const { return deg_; }
  int exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set_exp(int i, int v) {
    if (v < 0) throw DimensionError("negative exponent");
    deg_ = static_cast<std::uint16_t>(deg_ - e_[static_cast<std::size_t>(i)] + v);
    e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
  }

  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    check_same(o);
    Monomial r(*this);
    for (int i = 0; i < n_; ++i) r.e_[static_cast<std::size_t>(i)] += o.e_[static_cast<std::size_t>(i)];
    r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    return r;
  }

  bool divides(const Monomial& o) const {
    check_same(o);
    for (int i = 0; i < n_; ++i)
      if (e_[static_cast<std::size_t>(i)] > o.e_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  // this / o, requires o | this
  Monomial operator/(const Monomial& o) const {
    check_same(o);
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) {
      int d = exp(i) - o.exp(i);
      if (d < 0) throw DimensionError("monomial division with remainder");
      r.e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(d);
    }
    r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    check_same(o);
    Monomial r(n_);
    int d = 0;
    for (int i = 0; i < n_; ++i) {
      int m = std::max(exp(i), o.exp(i));
      r.e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(m);
      d += m;
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  bool coprime(const Monomial& o) const {
    check_same(o);
    for (int i = 0; i < n_; ++i)
      if (exp(i) > 0 && o.exp(i) > 0) return false;
    return true;
  }

  // colon m : t = m / gcd(m, t)
  Monomial colon(const Monomial& t) const {
    check_same(t);
    Monomial r(n_);
    int d = 0;
    for (int i = 0; i < n_; ++i) {
      int v = std::max(0, exp(i) - t.exp(i));
      r.e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
      d += v;
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.exp(i) != b.exp(i)) return false;
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  void check_same(const Monomial& o) const {
    if (n_ != o.n_) throw DimensionError("monomials from different rings");
  }
  std::array<std::uint16_t, kMaxVars> e_;
  std::uint8_t n_;
  std::uint16_t deg_;
};

// Total order comparison: >0 if a > b, 0 if equal, <0 if a < b.
inline int monomial_compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (a.nvars() != b.nvars()) throw DimensionError("comparing monomials from different rings");
  switch (ord) {
    case MonomialOrder::Lex:
      for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
      return 0;
    case MonomialOrder::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (int i = a.nvars() - 1; i >= 0; --i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
      return 0;
  }
  return 0;
}

inline bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  return monomial_compare(a, b, ord) > 0;
}

// strict descending-lex comparator for canonical term storage
struct LexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_compare(a, b, MonomialOrder::Lex) > 0;
  }
};

// Enumerates all degree-d monomials in nvars variables, lex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Iterates f over all degree-d monomials (lex-descending); stops early if f
// returns false.
void for_each_monomial_of_degree(int nvars, int d, const std::function<bool(const Monomial&)>& f);

std::string monomial_str(const Monomial& m);

}  // namespace avkit
