#pragma once

#include <cstdint>

namespace avkit {

// splitmix64; the project's only PRNG primitive.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Splittable derived seeds: derive(s, tag) streams are independent for
// distinct tags, so whole runs replay bit-identically from one root seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() { return splitmix64(state_); }
  // uniform in [0, bound)
  std::uint64_t next_below(std::uint64_t bound) {
    // bound is tiny relative to 2^64; modulo bias is negligible here
    return next() % bound;
  }
  // uniform in [lo, hi] inclusive
  std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace avkit
