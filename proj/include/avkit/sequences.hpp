#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace avkit {

// exact binomial coefficient, modest arguments
long long binomial(long long n, long long k);

// Finite integer sequence with a declared offset and tail behaviour.
struct IntSequence {
  enum class Tail { Zero, Constant, Unknown };

  std::vector<long long> values;
  int offset = 0;
  Tail tail = Tail::Zero;
  long long tail_value = 0;

  static IntSequence of(std::vector<long long> v, Tail t = Tail::Zero, long long tv = 0) {
    IntSequence s;
    s.values = std::move(v);
    s.tail = t;
    s.tail_value = tv;
    return s;
  }

  long long at(int i) const;  // honors offset and tail
  int end_index() const { return offset + static_cast<int>(values.size()); }

  // entries with leading/trailing zeros stripped (tail-aware); empty if the
  // sequence is identically zero
  std::vector<long long> positive_support() const;

  std::string str() const;
};

// Macaulay representation of a in degree d: the unique expansion
// a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j) with k_d > ... > k_j >= j >= 1.
// Returned as (k_i, i) pairs, top degree first; empty for a = 0.
std::vector<std::pair<long long, int>> macaulay_rep(long long a, int d);

// a^<d> = C(k_d+1, d+1) + ... + C(k_j+1, j+1); 0^<d> = 0
long long macaulay_growth(long long a, int d);

struct OSequenceCheck {
  bool ok = true;
  int violation_index = -1;  // first d with s(d+1) > s(d)^<d>, or bad start
};

// O-sequence test: s(0) = 1 and s(d+1) <= s(d)^<d> for all d >= 1 (s(1) may be
// anything nonnegative). Entries before the offset are treated as zero.
OSequenceCheck is_O_sequence(const IntSequence& s);

// backward difference, Delta s(i) = s(i) - s(i-1), keeping the offset
IntSequence first_difference(const IntSequence& s);

bool is_unimodal(const IntSequence& s);

// symmetry of the positive support
bool is_symmetric(const IntSequence& s);

// nullopt when the tail is unknown
std::optional<bool> is_finite(const IntSequence& s);

struct SICheck {
  std::optional<bool> verdict;
  std::string reason;
};

// finite, nonzero, symmetric O-sequence whose first half is a differentiable
// O-sequence. Evaluated on the positive support; the "first half" of a
// length-L support is indices 0 .. ceil(L/2)-1.
SICheck is_SI_sequence(const IntSequence& s);

}  // namespace avkit
