#pragma once

#include <optional>

#include "avkit/groebner.hpp"
#include "avkit/sequences.hpp"

namespace avkit {

// Hilbert function h_{R/I}(t) tabulated up to some degree, with stabilization
// detected for 0-dimensional quotients (finite point sets and artinian rings).
struct HilbertFunction {
  std::vector<long long> values;  // h(0), h(1), ...
  std::optional<int> stable_from;
  long long stable_value = 0;

  long long at(int t) const {
    if (t < static_cast<int>(values.size())) return values[static_cast<std::size_t>(t)];
    if (stable_from) return stable_value;
    throw std::out_of_range("Hilbert function not tabulated that far");
  }

  IntSequence sequence() const {
    return IntSequence::of(values,
                           stable_from ? IntSequence::Tail::Constant : IntSequence::Tail::Unknown,
                           stable_value);
  }
};

inline long long ring_dim(int nvars, int t) {
  if (t < 0) return 0;
  return binomial(t + nvars - 1, nvars - 1);
}

// h_{R/M}(t) for a monomial ideal, t = 0..t_max, with stabilization detection
// (two equal consecutive values past the last generator degree).
HilbertFunction hilbert_function(const MonomialIdeal& M, int t_max);

template <typename K>
HilbertFunction hilbert_function(const Ideal<K>& I, int t_max,
                                 MonomialOrder ord = MonomialOrder::DegRevLex,
                                 Budget budget = Budget{}) {
  if (!I.is_homogeneous()) throw DimensionError("Hilbert function of a non-homogeneous ideal");
  if (I.is_zero_ideal()) {
    HilbertFunction h;
    for (int t = 0; t <= t_max; ++t) h.values.push_back(ring_dim(I.nvars(), t));
    return h;
  }
  return hilbert_function(initial_ideal(I, ord, t_max, budget), t_max);
}

// dim [I]_t = C(t+n-1, n-1) - h_{R/I}(t)
template <typename K>
long long graded_dim_ideal(const Ideal<K>& I, int t, MonomialOrder ord = MonomialOrder::DegRevLex,
                           Budget budget = Budget{}) {
  return ring_dim(I.nvars(), t) - hilbert_function(I, t, ord, budget).at(t);
}

// First differences of the Hilbert function up to stabilization; requires the
// HF to stabilize within the probe budget.
template <typename K>
IntSequence h_vector(const Ideal<K>& I, Budget budget = Budget{}, int probe_limit = 128) {
  for (int t_max = 8; t_max <= probe_limit; t_max *= 2) {
    HilbertFunction h = hilbert_function(I, t_max, MonomialOrder::DegRevLex, budget);
    if (!h.stable_from) continue;
    IntSequence full = h.sequence();
    full.values.resize(static_cast<std::size_t>(*h.stable_from) + 1);
    full.tail = IntSequence::Tail::Constant;
    full.tail_value = h.stable_value;
    IntSequence d = first_difference(full);
    while (!d.values.empty() && d.values.back() == 0) d.values.pop_back();
    d.tail = IntSequence::Tail::Zero;
    return d;
  }
  throw DimensionError("Hilbert function did not stabilize within the probe budget");
}

}  // namespace avkit
