#include "eqc/gset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eqc/errors.hpp"

namespace eqc {

void BiSet::validate() const {
  if (!left || !right) throw ActionMismatch("biset missing a group");
  if (static_cast<int>(lact.size()) != left->order() ||
      static_cast<int>(ract.size()) != right->order())
    throw ActionMismatch("action table has wrong element count");
  auto check_perm = [&](const std::vector<int>& row) {
    if (static_cast<int>(row.size()) != n) throw ActionMismatch("action row size");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw ActionMismatch("action row not bijective");
      seen[v] = 1;
    }
  };
  for (const auto& row : lact) check_perm(row);
  for (const auto& row : ract) check_perm(row);
  for (int x = 0; x < n; ++x) {
    if (lact[left->identity()][x] != x || ract[right->identity()][x] != x)
      throw ActionMismatch("identity must act trivially");
  }
  for (int g : left->generator_indices())
    for (int h : left->generator_indices())
      for (int x = 0; x < n; ++x)
        if (lact[left->mul(g, h)][x] != lact[g][lact[h][x]])
          throw ActionMismatch("left action law fails");
  for (int s : right->generator_indices())
    for (int t : right->generator_indices())
      for (int x = 0; x < n; ++x)
        if (ract[right->mul(s, t)][x] != ract[t][ract[s][x]])
          throw ActionMismatch("right action law fails");
  for (int g : left->generator_indices())
    for (int s : right->generator_indices())
      for (int x = 0; x < n; ++x)
        if (lact[g][ract[s][x]] != ract[s][lact[g][x]])
          throw ActionMismatch("left and right actions do not commute");
}

BiSet trivial_biset(const GroupRef& left, const GroupRef& right, int n) {
  BiSet b;
  b.left = left;
  b.right = right;
  b.n = n;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  b.lact.assign(left->order(), id);
  b.ract.assign(right->order(), id);
  return b;
}

BiSet left_regular_biset(const GroupRef& g, const GroupRef& right) {
  BiSet b = trivial_biset(g, right, g->order());
  for (int e = 0; e < g->order(); ++e)
    for (int x = 0; x < g->order(); ++x) b.lact[e][x] = g->mul(e, x);
  return b;
}

BiSet biregular(const GroupRef& g) {
  BiSet b = left_regular_biset(g, g);
  for (int s = 0; s < g->order(); ++s)
    for (int x = 0; x < g->order(); ++x) b.ract[s][x] = g->mul(x, s);
  return b;
}

BiSet coset_biset(const Subgroup& h, const GroupRef& right) {
  const GroupRef& g = h.parent;
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_index(g->order(), -1);
  for (int x = 0; x < g->order(); ++x) {
    if (coset_index[x] >= 0) continue;
    std::vector<int> coset;
    for (int m : h.members) coset.push_back(g->mul(x, m));
    std::sort(coset.begin(), coset.end());
    // index cosets in order of first discovery = least representative order
    for (int e : coset) coset_index[e] = static_cast<int>(cosets.size());
    cosets.push_back(coset);
  }
  int n = static_cast<int>(cosets.size());
  BiSet b = trivial_biset(g, right, n);
  for (int e = 0; e < g->order(); ++e)
    for (int c = 0; c < n; ++c)
      b.lact[e][c] = coset_index[g->mul(e, cosets[c].front())];
  return b;
}

BiSet biset_from_product_subgroup(const GroupRef& a, const GroupRef& b,
                                  const GroupRef& product, const Subgroup& s) {
  if (s.parent != product) throw GroupMismatch("subgroup of a different group");
  if (product->degree() != a->degree() + b->degree())
    throw GroupMismatch("product group degree mismatch");
  auto embed_a = [&](int ga) {
    Perm p = perm_identity(product->degree());
    const Perm& q = a->elem(ga);
    for (int i = 0; i < a->degree(); ++i) p[i] = q[i];
    int idx = product->index_of(p);
    if (idx < 0) throw GroupMismatch("left factor does not embed in product");
    return idx;
  };
  auto embed_b = [&](int gb) {
    Perm p = perm_identity(product->degree());
    const Perm& q = b->elem(gb);
    for (int i = 0; i < b->degree(); ++i) p[a->degree() + i] = a->degree() + q[i];
    int idx = product->index_of(p);
    if (idx < 0) throw GroupMismatch("right factor does not embed in product");
    return idx;
  };
  BiSet cosets = coset_biset(s, FinGroup::trivial());
  BiSet out = trivial_biset(a, b, cosets.n);
  for (int ga = 0; ga < a->order(); ++ga) out.lact[ga] = cosets.lact[embed_a(ga)];
  for (int gb = 0; gb < b->order(); ++gb)
    out.ract[gb] = cosets.lact[product->inv(embed_b(gb))];
  return out;
}

BiSet disjoint_union(const BiSet& x, const BiSet& y) {
  if (!same_group(x.left, y.left) || !same_group(x.right, y.right))
    throw GroupMismatch("disjoint union over different groups");
  BiSet b = trivial_biset(x.left, x.right, x.n + y.n);
  for (int e = 0; e < x.left->order(); ++e)
    for (int p = 0; p < b.n; ++p)
      b.lact[e][p] = p < x.n ? x.lact[e][p] : x.n + y.lact[e][p - x.n];
  for (int s = 0; s < x.right->order(); ++s)
    for (int p = 0; p < b.n; ++p)
      b.ract[s][p] = p < x.n ? x.ract[s][p] : x.n + y.ract[s][p - x.n];
  return b;
}

BiSet gset_from_generator_action(const GroupRef& g, int n,
                                 const std::vector<Perm>& gen_action) {
  auto gens = g->generator_indices();
  if (gens.size() != gen_action.size())
    throw ActionMismatch("one action permutation per canonical generator required");
  // close over words in the generators
  std::vector<std::vector<int>> table(g->order());
  std::vector<char> known(g->order(), 0);
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  table[g->identity()] = id;
  known[g->identity()] = 1;
  std::vector<int> work{g->identity()};
  for (std::size_t k = 0; k < work.size(); ++k) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int prod = g->mul(gens[gi], work[k]);
      std::vector<int> row(n);
      for (int x = 0; x < n; ++x) row[x] = gen_action[gi][table[work[k]][x]];
      if (!known[prod]) {
        known[prod] = 1;
        table[prod] = std::move(row);
        work.push_back(prod);
      } else if (table[prod] != row) {
        throw ActionMismatch("generator action does not extend to the group");
      }
    }
  }
  BiSet b = trivial_biset(g, FinGroup::trivial(), n);
  b.lact = std::move(table);
  b.validate();
  return b;
}

std::vector<std::vector<int>> left_orbits(const BiSet& x,
                                          const std::vector<int>& members) {
  std::vector<Perm> gens;
  for (int m : members) gens.push_back(Perm(x.lact[m]));
  return perm_orbits(x.n, gens);
}

std::vector<std::vector<int>> left_orbits(const BiSet& x) {
  return left_orbits(x, whole_group(x.left).members);
}

int fixed_subspace_dim(const BiSet& x, const std::vector<int>& members) {
  return static_cast<int>(left_orbits(x, members).size());
}

std::vector<int> fixed_points(const BiSet& x, const std::vector<int>& members) {
  std::vector<int> fixed;
  for (int p = 0; p < x.n; ++p) {
    bool ok = true;
    for (int m : members)
      if (x.lact[m][p] != p) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(p);
  }
  return fixed;
}

bool is_semiregular(const BiSet& x, const Subgroup& h) {
  for (const auto& orbit : left_orbits(x, h.members))
    if (static_cast<int>(orbit.size()) == h.order()) return true;
  return false;
}

bool is_semiregular(const BiSet& x) {
  return is_semiregular(x, whole_group(x.left));
}

void BasedGSet::validate() const {
  set.validate();
  for (int e = 0; e < set.left->order(); ++e)
    if (set.lact[e][basepoint] != basepoint)
      throw ActionMismatch("basepoint is not fixed");
}

BasedGSet based_with_disjoint_basepoint(const BiSet& x) {
  BiSet with = disjoint_union(trivial_biset(x.left, x.right, 1), x);
  return BasedGSet{std::move(with), 0};
}

BasedGSet indexed_smash(const BasedGSet& a, const BiSet& s) {
  a.validate();
  if (!same_group(a.set.left, s.left)) throw GroupMismatch("smash over different groups");
  const GroupRef& g = s.left;
  std::vector<int> nonbase;
  std::vector<int> pos(a.set.n, -1);
  for (int p = 0; p < a.set.n; ++p)
    if (p != a.basepoint) {
      pos[p] = static_cast<int>(nonbase.size());
      nonbase.push_back(p);
    }
  int k = static_cast<int>(nonbase.size());
  double total = 1;
  for (int i = 0; i < s.n; ++i) total *= k;
  if (total > 2'000'000)
    throw OrderCapExceeded("indexed smash power too large to tabulate");
  int npoints = 1;
  for (int i = 0; i < s.n; ++i) npoints *= k;
  BiSet set = trivial_biset(g, FinGroup::trivial(), npoints + 1);
  auto decode = [&](int point, std::vector<int>& vals) {
    int v = point - 1;
    for (int i = 0; i < s.n; ++i) {
      vals[i] = nonbase[v % k];
      v /= k;
    }
  };
  auto encode = [&](const std::vector<int>& vals) {
    int v = 0;
    for (int i = s.n - 1; i >= 0; --i) v = v * k + pos[vals[i]];
    return v + 1;
  };
  std::vector<int> vals(s.n), moved(s.n);
  for (int e = 0; e < g->order(); ++e) {
    int einv = g->inv(e);
    for (int p = 1; p <= npoints; ++p) {
      decode(p, vals);
      bool base = false;
      for (int z = 0; z < s.n; ++z) {
        int image = a.set.lact[e][vals[s.lact[einv][z]]];
        if (image == a.basepoint) {
          base = true;
          break;
        }
        moved[z] = image;
      }
      set.lact[e][p] = base ? 0 : encode(moved);
    }
  }
  BasedGSet out{std::move(set), 0};
  out.set.validate();
  return out;
}

std::vector<int> smash_point_decode(const BasedGSet& a, const BiSet& s, int point) {
  if (point <= 0) throw ValidationError("basepoint has no decoding");
  std::vector<int> nonbase;
  for (int p = 0; p < a.set.n; ++p)
    if (p != a.basepoint) nonbase.push_back(p);
  int k = static_cast<int>(nonbase.size());
  std::vector<int> vals(s.n);
  int v = point - 1;
  for (int i = 0; i < s.n; ++i) {
    vals[i] = nonbase[v % k];
    v /= k;
  }
  return vals;
}

int smash_point_encode(const BasedGSet& a, const BiSet& s,
                       const std::vector<int>& values) {
  std::vector<int> pos(a.set.n, -1);
  int k = 0;
  for (int p = 0; p < a.set.n; ++p)
    if (p != a.basepoint) pos[p] = k++;
  int v = 0;
  for (int i = s.n - 1; i >= 0; --i) {
    if (values[i] == a.basepoint) throw ValidationError("basepoint in tuple");
    v = v * k + pos[values[i]];
  }
  return v + 1;
}

std::vector<OrbitDecomposition> canonical_orbit_decomposition(const BiSet& s) {
  const GroupRef& g = s.left;
  std::vector<OrbitDecomposition> out;
  for (const auto& orbit : left_orbits(s)) {
    OrbitDecomposition d;
    d.rep = orbit.front();
    std::vector<int> stab;
    for (int e = 0; e < g->order(); ++e)
      if (s.lact[e][d.rep] == d.rep) stab.push_back(e);
    d.stabilizer = Subgroup{g, std::move(stab)};
    d.g_of.assign(s.n, -1);
    for (int x : orbit)
      for (int e = 0; e < g->order(); ++e)
        if (s.lact[e][d.rep] == x) {
          d.g_of[x] = e;
          break;
        }
    out.push_back(std::move(d));
  }
  return out;
}

DiagonalResult hhr_diagonal(const BasedGSet& a, const BiSet& s,
                            const std::vector<OrbitDecomposition>& dec) {
  a.validate();
  const GroupRef& g = s.left;
  // validate the decomposition against S
  std::vector<char> covered(s.n, 0);
  for (const auto& d : dec) {
    d.stabilizer.validate();
    std::vector<int> stab;
    for (int e = 0; e < g->order(); ++e)
      if (s.lact[e][d.rep] == d.rep) stab.push_back(e);
    if (stab != d.stabilizer.members)
      throw BadDecomposition("stabilizer does not match the representative");
    for (int x = 0; x < s.n; ++x) {
      if (d.g_of[x] < 0) continue;
      if (covered[x]) throw BadDecomposition("point covered twice");
      covered[x] = 1;
      if (s.lact[d.g_of[x]][d.rep] != x)
        throw BadDecomposition("coset representative does not transport");
    }
  }
  for (int x = 0; x < s.n; ++x)
    if (!covered[x]) throw BadDecomposition("point not covered by any orbit");

  BasedGSet smash = indexed_smash(a, s);
  std::vector<int> fixed = fixed_points(smash.set, whole_group(g).members);
  // fixed non-base points of the smash power
  std::set<int> fixed_nonbase;
  for (int p : fixed)
    if (p != smash.basepoint) fixed_nonbase.insert(p);

  // fixed points of A under each stabilizer, excluding the basepoint
  std::vector<std::vector<int>> choices;
  for (const auto& d : dec) {
    std::vector<int> fp;
    for (int p : fixed_points(a.set, d.stabilizer.members))
      if (p != a.basepoint) fp.push_back(p);
    choices.push_back(std::move(fp));
  }

  DiagonalResult res;
  std::set<int> hit;
  bool ok = true;
  // iterate over all non-base tuples
  // an empty decomposition still contributes one (empty) tuple: the smash
  // over an empty index set is S^0 and the diagonal hits its non-base point
  std::vector<std::size_t> idx(dec.size(), 0);
  bool any_empty = false;
  for (const auto& c : choices) any_empty |= c.empty();
  if (!any_empty) {
    while (true) {
      std::vector<int> tuple(dec.size());
      for (std::size_t i = 0; i < dec.size(); ++i) tuple[i] = choices[i][idx[i]];
      // f(zeta) = g_zeta * a_i on orbit i
      std::vector<int> values(s.n);
      for (std::size_t i = 0; i < dec.size(); ++i)
        for (int x = 0; x < s.n; ++x)
          if (dec[i].g_of[x] >= 0)
            values[x] = a.set.lact[dec[i].g_of[x]][tuple[i]];
      bool base = false;
      for (int v : values) base |= (v == a.basepoint);
      int image;
      if (base) {
        image = smash.basepoint;
        ok = false;  // non-base tuple must land off the basepoint
      } else {
        image = smash_point_encode(a, s, values);
        if (!fixed_nonbase.count(image)) ok = false;  // must be G-fixed
        if (!hit.insert(image).second) ok = false;    // injectivity
      }
      res.graph.push_back({tuple, image});
      std::size_t i = 0;
      while (i < dec.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == dec.size()) break;
    }
  }
  // surjectivity onto the fixed non-base points
  if (hit.size() != fixed_nonbase.size()) ok = false;
  res.bijective = ok;
  return res;
}

}  // namespace eqc
