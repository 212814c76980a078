#include "avkit/gin.hpp"

namespace avkit {

MonomialIdeal lex_segment_ideal_for(const IntSequence& h, int nvars, int degree_cap) {
  OSequenceCheck check = is_O_sequence(h);
  if (!check.ok)
    throw DimensionError("target Hilbert function is not an O-sequence (index " +
                         std::to_string(check.violation_index) + ")");
  std::vector<Monomial> gens;
  MonomialIdeal M(nvars);
  for (int t = 0; t <= degree_cap; ++t) {
    long long target = ring_dim(nvars, t) - h.at(t);
    if (target < 0) throw DimensionError("Hilbert value exceeds the ring dimension");
    long long taken = 0;
    long long shadow = 0;
    std::vector<Monomial> fresh;
    for_each_monomial_of_degree(nvars, t, [&](const Monomial& m) {
      if (taken == target) return false;
      ++taken;
      if (M.contains(m))
        ++shadow;
      else
        fresh.push_back(m);
      return true;
    });
    // the shadow of a lex segment is a lex-initial set, so every ideal member
    // of degree t must have been swept up before the cutoff
    if (shadow + static_cast<long long>(fresh.size()) != target || M.graded_dim(t) != shadow)
      throw DimensionError("lex-segment construction failed: target not achievable");
    if (!fresh.empty()) {
      gens.insert(gens.end(), fresh.begin(), fresh.end());
      M = MonomialIdeal(nvars, gens);
    }
  }
  return M;
}

}  // namespace avkit
