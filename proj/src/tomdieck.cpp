#include "eqc/tomdieck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "eqc/caps.hpp"
#include "eqc/errors.hpp"
namespace eqc {
namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Stabilizer of a point under the left action.
std::vector<int> point_stabilizer(const BiSet& z, int x) {
  std::vector<int> s;
  for (int g = 0; g < z.left->order(); ++g)
    if (z.lact[g][x] == x) s.push_back(g);
  return s;
}

// Index of the subgroup conjugacy class containing `members`.
int class_of(const std::vector<std::vector<Subgroup>>& classes,
             const std::vector<int>& members) {
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& s : classes[c])
      if (s.members == members) return static_cast<int>(c);
  return -1;
}

BiSet empty_gset(const GroupRef& g) {
  return trivial_biset(g, FinGroup::trivial(), 0);
}

}  // namespace

std::vector<GSetClass> gset_iso_classes(const GroupRef& g, int q,
                                        std::int64_t order_cap) {
  if (q < 0) throw ValidationError("G-set size must be non-negative");
  auto classes = subgroup_conjugacy_classes(g, order_cap);
  std::vector<GSetClass> out;

  // orbit-type multisets: multiplicity per class, weighted by orbit size
  std::vector<int> mult(classes.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int rem) {
    if (rem == 0) {
      GSetClass cls;
      cls.q = q;
      cls.rep = empty_gset(g);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (mult[i] == 0) continue;
        cls.orbit_type.emplace_back(static_cast<int>(i), mult[i]);
        for (int k = 0; k < mult[i]; ++k)
          cls.rep = disjoint_union(
              cls.rep, coset_biset(classes[i][0], FinGroup::trivial()));
      }
      out.push_back(std::move(cls));
      return;
    }
    if (c == classes.size()) return;
    int size = g->order() / classes[c][0].order();
    for (int k = 0; k * size <= rem; ++k) {
      mult[c] = k;
      rec(c + 1, rem - k * size);
    }
    mult[c] = 0;
  };
  rec(0, q);

  // independent count: Sigma_q-conjugacy classes of homs G -> Sigma_q
  if (q >= 1) {
    auto homs = enumerate_homs(g, FinGroup::symmetric(q));
    std::size_t hom_classes = hom_conjugacy_classes(homs).size();
    if (hom_classes != out.size())
      throw Error("G-set classification cross-check failed");
  } else if (out.size() != 1) {
    throw Error("G-set classification cross-check failed");
  }
  return out;
}

AutGSetReport aut_gset(const BiSet& z, std::int64_t order_cap) {
  std::int64_t cap =
      order_cap > 0 ? order_cap : default_caps().materialize_order;
  if (factorial(z.n) > cap && z.n > 1)
    throw CapExceeded("automorphism sweep exceeds the order cap");
  const GroupRef& g = z.left;
  auto gens = g->generator_indices();

  // brute force: all equivariant self-bijections
  std::vector<Perm> equivariant;
  Perm p = perm_identity(z.n);
  do {
    bool ok = true;
    for (int gi : gens) {
      for (int x = 0; x < z.n && ok; ++x)
        if (p[z.lact[gi][x]] != z.lact[gi][p[x]]) ok = false;
      if (!ok) break;
    }
    if (ok) equivariant.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  AutGSetReport out;
  out.aut = z.n == 0 ? FinGroup::trivial()
                     : FinGroup::from_generators(z.n, equivariant);

  // orbit bookkeeping
  auto orbits = left_orbits(z);
  auto classes = subgroup_conjugacy_classes(g);
  std::vector<int> orbit_class(orbits.size());
  std::vector<std::vector<int>> orbit_stab(orbits.size());
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    orbit_stab[j] = point_stabilizer(z, orbits[j][0]);
    orbit_class[j] = class_of(classes, orbit_stab[j]);
    if (orbit_class[j] < 0) throw Error("orbit stabilizer not classified");
  }
  std::vector<int> mult(classes.size(), 0);
  for (int c : orbit_class) ++mult[c];
  out.formula_order = 1;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (mult[c] == 0) continue;
    out.orbit_type.emplace_back(static_cast<int>(c), mult[c]);
    std::int64_t wh =
        weyl_group(classes[c][0]).quotient->order();
    out.formula_order *= factorial(mult[c]) * ipow(wh, mult[c]);
  }

  // explicit bijection from the wreath-product formula: per class, permute
  // the copies and compose with a per-copy automorphism, parametrized by
  // the points of each target orbit whose stabilizer matches the lead
  // orbit's exactly.
  std::vector<int> transporter(z.n, -1);  // transporter[x] * rep = x
  for (std::size_t j = 0; j < orbits.size(); ++j)
    for (int x : orbits[j])
      for (int gi = 0; gi < g->order(); ++gi)
        if (z.lact[gi][orbits[j][0]] == x) {
          transporter[x] = gi;
          break;
        }
  std::set<Perm> images;
  std::vector<Perm> partial{perm_identity(z.n)};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (mult[c] == 0) continue;
    std::vector<int> members;  // orbit ids of this class
    for (std::size_t j = 0; j < orbits.size(); ++j)
      if (orbit_class[j] == static_cast<int>(c))
        members.push_back(static_cast<int>(j));
    const std::vector<int>& h = orbit_stab[members[0]];
    // valid images of the lead representative inside each member orbit
    std::vector<std::vector<int>> valid(members.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int y : orbits[members[k]])
        if (point_stabilizer(z, y) == h) valid[k].push_back(y);
    // all (copy permutation, image tuple) choices for this class
    std::vector<Perm> extended;
    Perm cp = perm_identity(static_cast<int>(members.size()));
    do {
      std::vector<std::size_t> pick(members.size(), 0);
      while (true) {
        Perm block = perm_identity(z.n);
        for (std::size_t j = 0; j < members.size(); ++j) {
          int y = valid[cp[j]][pick[j]];
          for (int x : orbits[members[j]])
            block[x] = z.lact[transporter[x]][y];
        }
        for (const Perm& base : partial)
          extended.push_back(perm_compose(block, base));
        std::size_t j = 0;
        for (; j < pick.size(); ++j) {
          if (++pick[j] < valid[cp[j]].size()) break;
          pick[j] = 0;
        }
        if (j == pick.size()) break;
      }
    } while (std::next_permutation(cp.begin(), cp.end()));
    partial = std::move(extended);
  }
  bool ok = static_cast<std::int64_t>(partial.size()) == out.formula_order;
  for (const Perm& q : partial) {
    if (!images.insert(q).second) ok = false;  // injectivity
    if (z.n > 0 && out.aut->index_of(q) < 0) ok = false;
  }
  out.verified = ok && out.aut->order() == out.formula_order;
  return out;
}

SplittingCatalog splitting_catalog(const GroupRef& g, int m, int q_max,
                                   std::int64_t order_cap) {
  if (m < 0) throw ValidationError("m must be non-negative");
  SplittingCatalog out;
  out.m = m;
  out.q_max = q_max > 0 ? q_max : default_caps().q_max;
  out.truncated = true;
  for (const auto& cls : subgroup_conjugacy_classes(g, order_cap)) {
    SplittingClassEntry e;
    e.h = cls[0];
    auto w = weyl_group(cls[0]);
    e.wh = w.quotient;
    e.index = g->order() / cls[0].order();
    for (int q = 0; q <= out.q_max; ++q) {
      SplittingSummand s;
      s.q = q;
      s.cell_dim = static_cast<std::int64_t>(m + e.index) * q;
      s.suspension_dim = static_cast<std::int64_t>(e.index) * q;
      s.sym_order = factorial(q) * ipow(e.wh->order(), q);
      s.transfer_marker = q == 1;
      e.summands.push_back(s);
    }
    out.classes.push_back(std::move(e));
  }
  return out;
}

BiSet gset_of_perm_hom(const GroupRef& g, const GroupHom& sigma) {
  sigma.validate();
  if (!same_group(sigma.src, g))
    throw GroupMismatch("hom source does not match the group");
  BiSet z = trivial_biset(g, FinGroup::trivial(), sigma.dst->degree());
  for (int gi = 0; gi < g->order(); ++gi)
    z.lact[gi] = sigma.dst->elem(sigma.map[gi]);
  z.validate();
  return z;
}

FixedDims fixed_point_bookkeeping(const GroupRef& g, int m, const BiSet& z) {
  if (!same_group(z.left, g))
    throw GroupMismatch("G-set does not belong to the group");
  FixedDims out;
  std::int64_t z_orbits = static_cast<std::int64_t>(left_orbits(z).size());
  // diagonal G-set G x Z
  BiSet prod = trivial_biset(g, FinGroup::trivial(), g->order() * z.n);
  for (int gi = 0; gi < g->order(); ++gi)
    for (int h = 0; h < g->order(); ++h)
      for (int x = 0; x < z.n; ++x)
        prod.lact[gi][h * z.n + x] = g->mul(gi, h) * z.n + z.lact[gi][x];
  std::int64_t diag = static_cast<std::int64_t>(left_orbits(prod).size());
  out.tensor_dim = static_cast<std::int64_t>(m) * z_orbits + diag;
  out.suspension_dim = diag;
  return out;
}

FixedDims fixed_point_bookkeeping(const GroupRef& g, int m,
                                  const GroupHom& sigma) {
  return fixed_point_bookkeeping(g, m, gset_of_perm_hom(g, sigma));
}

}  // namespace eqc
