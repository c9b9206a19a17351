#include "eqc/perm.hpp"

#include <algorithm>

namespace eqc {

int perm_order(const Perm& p) {
  int ord = 1;
  Perm cur = p;
  while (!perm_is_identity(cur)) {
    cur = perm_compose(cur, p);
    ++ord;
  }
  return ord;
}

std::vector<std::vector<int>> perm_orbits(int n, const std::vector<Perm>& gens) {
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < n; ++start) {
    if (owner[start] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{start};
    owner[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& g : gens) {
        int y = g[orbit[k]];
        if (owner[y] < 0) {
          owner[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace eqc
