#include "avkit/hilbert.hpp"

namespace avkit {

HilbertFunction hilbert_function(const MonomialIdeal& M, int t_max) {
  HilbertFunction h;
  h.values.reserve(static_cast<std::size_t>(t_max) + 1);
  for (int t = 0; t <= t_max; ++t) h.values.push_back(M.standard_monomial_count(t));
  int settle = M.max_degree();  // -1 for the zero ideal: never stabilizes
  if (settle >= 0) {
    for (int t = std::max(1, settle); t < t_max; ++t) {
      if (h.values[static_cast<std::size_t>(t)] == h.values[static_cast<std::size_t>(t) + 1]) {
        h.stable_from = t;
        h.stable_value = h.values[static_cast<std::size_t>(t)];
        break;
      }
    }
  }
  return h;
}

}  // namespace avkit
