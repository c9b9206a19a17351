#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace eqc {

// Permutation in one-line notation: p[i] is the image of point i.
// Permutations act on the left: (p*q)(i) = p(q(i)).
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline bool perm_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int perm_order(const Perm& p);

// Orbits of the group generated by `gens` on {0..n-1}, each orbit sorted,
// orbits ordered by least element.
std::vector<std::vector<int>> perm_orbits(int n, const std::vector<Perm>& gens);

}  // namespace eqc
