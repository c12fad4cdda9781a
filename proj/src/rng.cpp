#include "queens/rng.hpp"

#include <algorithm>
#include <set>

#include "queens/errors.hpp"

namespace queens {

std::vector<Square> random_squares(Rng& rng, int n, int k) {
  if (n < 1) throw domain_error("board size must be positive");
  const long long total = (long long)n * n;
  if (k < 0 || k > total)
    throw domain_error("cannot draw " + std::to_string(k) +
                       " distinct squares from an n=" + std::to_string(n) +
                       " board");
  std::vector<int> ids;
  if (2LL * k >= total) {
    // Dense draw: partial Fisher-Yates over all square ids.
    std::vector<int> pool(total);
    for (long long i = 0; i < total; ++i) pool[i] = int(i);
    for (int i = 0; i < k; ++i)
      std::swap(pool[i], pool[i + rng.below(int(total - i))]);
    ids.assign(pool.begin(), pool.begin() + k);
  } else {
    std::set<int> seen;
    while (int(seen.size()) < k) seen.insert(rng.below(int(total)));
    ids.assign(seen.begin(), seen.end());
  }
  std::vector<Square> out;
  out.reserve(k);
  for (int id : ids) out.push_back({id % n + 1, id / n + 1});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace queens
