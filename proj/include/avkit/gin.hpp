#pragma once

#include "avkit/hilbert.hpp"

namespace avkit {

// Raised when random choices fail to behave generically (trial disagreement,
// repeated degenerate draws). Distinct from BudgetError so callers can map it
// to the dedicated exit code.
struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GinResult {
  MonomialIdeal monomial_ideal{0};
  std::vector<std::uint64_t> seeds_used;
  int trials = 0;
  bool borel_certified = false;
  FieldSpec field_mode = FieldSpec::rationals();
  int degree_cap = -1;  // -1: full gin
};

// Generic initial ideal under lex: in_lex(I after a random change of
// variables), computed for `trials` independent changes which must agree.
template <typename K>
GinResult gin(const Ideal<K>& I, int trials = 2, std::uint64_t seed = 1, int degree_cap = -1,
              Budget budget = Budget{}) {
  if (!I.is_homogeneous()) throw DimensionError("gin requires a homogeneous ideal");
  if (trials < 2) throw DimensionError("gin needs at least two trials for consensus");
  int n = I.nvars();
  GinResult out;
  out.trials = trials;
  out.field_mode = field_spec_of<K>();
  out.degree_cap = degree_cap;
  MonomialIdeal consensus(n);
  for (int trial = 0; trial < trials; ++trial) {
    std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(trial));
    out.seeds_used.push_back(s);
    LinearChange<K> L = LinearChange<K>::random(n, s);
    std::vector<Polynomial<K>> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(apply_linear_change(g, L));
    MonomialIdeal in = initial_ideal(Ideal<K>(n, std::move(gens)), MonomialOrder::Lex, degree_cap, budget);
    if (trial == 0)
      consensus = in;
    else if (in != consensus)
      throw GenericityError(
          "gin trials disagree: insufficient genericity; retry with another seed or a larger "
          "coefficient pool");
  }
  out.monomial_ideal = consensus;
  out.borel_certified = out.monomial_ideal.is_borel_fixed();
  if (field_spec_of<K>().is_rationals() && !out.borel_certified)
    throw GenericityError("char-0 gin failed the strongly-stable test; coordinates not generic");
  return out;
}

// M : x0^k, combinatorial
inline MonomialIdeal monomial_colon_by_power(const MonomialIdeal& M, int k) {
  if (k < 0) throw DimensionError("negative colon power");
  return M.colon_x0_power(k);
}

// The unique lex-segment monomial ideal M with h_{R/M}(t) = h(t) for t <= cap.
// h must be an O-sequence.
MonomialIdeal lex_segment_ideal_for(const IntSequence& h, int nvars, int degree_cap);

}  // namespace avkit
