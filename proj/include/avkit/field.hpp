#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "avkit/seeds.hpp"

namespace avkit {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m <= 0xFFFFFFFFULL) return (a * b) % m;  // operands already reduced
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// deterministic Miller-Rabin for 64-bit inputs
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldSpec: runtime description of the coefficient field.
// ---------------------------------------------------------------------------

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::PrimeField;
  std::uint64_t p = kDefaultPrime;

  static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1
  static constexpr std::uint64_t kPrimeFloor = 1ULL << 20;

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime_field(std::uint64_t p) {
    if (!detail::is_prime_u64(p)) throw FieldError("PrimeField modulus is not prime");
    if (p < kPrimeFloor) throw FieldError("PrimeField modulus below 2^20 floor");
    return FieldSpec{Kind::PrimeField, p};
  }

  bool is_rationals() const { return kind == Kind::Rationals; }
  bool probabilistic() const { return kind == Kind::PrimeField; }

  std::string str() const {
    return is_rationals() ? std::string("rationals") : ("fp:" + std::to_string(p));
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && (a.kind == Kind::Rationals || a.p == b.p);
  }
};

// Coefficient pool for "general" choices (see random_coeff below): uniform
// integers in [-2^15, 2^15] over the rationals, uniform residues mod p.
constexpr std::int64_t kRationalPoolHalf = 1 << 15;

// ---------------------------------------------------------------------------
// Fp: prime-field scalar. The modulus is process-wide, set once per run.
// ---------------------------------------------------------------------------

class Fp {
 public:
  Fp() : v_(0) {}
  Fp(std::int64_t x) {
    std::int64_t m = static_cast<std::int64_t>(modulus());
    std::int64_t r = x % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t p) {
    if (!detail::is_prime_u64(p)) throw FieldError("modulus is not prime");
    if (p < FieldSpec::kPrimeFloor) throw FieldError("modulus below 2^20 floor");
    modulus_ref() = p;
  }
  static std::uint64_t modulus() { return modulus_ref(); }

  static Fp from_raw(std::uint64_t v) { Fp x; x.v_ = v % modulus(); return x; }
  static Fp from_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw FieldError("zero denominator");
    return Fp(num) / Fp(den);
  }
  static FieldSpec spec() { return FieldSpec::prime_field(modulus()); }

  std::uint64_t raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= modulus()) v_ -= modulus();
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ += modulus() - o.v_;
    if (v_ >= modulus()) v_ -= modulus();
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = detail::mulmod_u64(v_, o.v_, modulus());
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  Fp inv() const {
    if (v_ == 0) throw FieldError("division by zero in Fp");
    return from_raw(detail::powmod_u64(v_, modulus() - 2, modulus()));
  }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  // prints as a balanced representative so small integers stay readable
  std::string str() const {
    std::uint64_t p = modulus();
    if (v_ > p / 2) return "-" + std::to_string(p - v_);
    return std::to_string(v_);
  }

  std::size_t bit_size() const { return 64; }

 private:
  static std::uint64_t& modulus_ref() {
    static std::uint64_t p = FieldSpec::kDefaultPrime;
    return p;
  }
  std::uint64_t v_;
};

// ---------------------------------------------------------------------------
// Rat: arbitrary-precision rational (GMP-backed).
// ---------------------------------------------------------------------------

class Rat {
 public:
  Rat() : q_(0) {}
  Rat(std::int64_t x) : q_(static_cast<long>(x)) {}
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rat from_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw FieldError("zero denominator");
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Rat(std::move(q));
  }
  static FieldSpec spec() { return FieldSpec::rationals(); }

  bool is_zero() const { return q_ == 0; }
  const mpq_class& value() const { return q_; }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw FieldError("division by zero in Rat");
    q_ /= o.q_;
    return *this;
  }
  Rat inv() const {
    if (is_zero()) throw FieldError("division by zero in Rat");
    return Rat(mpq_class(1) / q_);
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }

  std::string str() const { return q_.get_str(); }

  std::size_t bit_size() const {
    return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
  }

 private:
  mpq_class q_;
};

// Uniform draw from the configured coefficient pool.
template <typename K>
K random_coeff(Rng& rng);

template <>
inline Fp random_coeff<Fp>(Rng& rng) {
  return Fp::from_raw(rng.next_below(Fp::modulus()));
}

template <>
inline Rat random_coeff<Rat>(Rng& rng) {
  return Rat(rng.next_in(-kRationalPoolHalf, kRationalPoolHalf));
}

template <typename K>
K random_nonzero_coeff(Rng& rng) {
  for (;;) {
    K c = random_coeff<K>(rng);
    if (!c.is_zero()) return c;
  }
}

template <typename K>
FieldSpec field_spec_of() { return K::spec(); }

}  // namespace avkit
