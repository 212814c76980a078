#include "avkit/geometry.hpp"

#include <algorithm>

namespace avkit {

long long ci_graded_dim(const std::vector<int>& degrees, int nvars, int t) {
  int k = static_cast<int>(degrees.size());
  long long total = 0;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    int drop = 0, bits = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) { drop += degrees[static_cast<std::size_t>(i)]; ++bits; }
    long long term = ring_dim(nvars, t - drop);
    total += (bits % 2 == 1) ? term : -term;
  }
  return total;
}

std::vector<std::int64_t> sample_parameters(int count, std::uint64_t seed,
                                            const std::vector<std::int64_t>& avoid) {
  Rng rng(seed);
  std::vector<std::int64_t> out;
  while (static_cast<int>(out.size()) < count) {
    std::int64_t t = rng.next_in(-kRationalPoolHalf, kRationalPoolHalf);
    if (std::find(avoid.begin(), avoid.end(), t) != avoid.end()) continue;
    if (std::find(out.begin(), out.end(), t) != out.end()) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace avkit
