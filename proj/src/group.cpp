#include "eqc/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "eqc/errors.hpp"

namespace eqc {

namespace {

std::int64_t cap_or_default(std::int64_t cap, std::int64_t fallback) {
  return cap > 0 ? cap : fallback;
}

std::vector<Perm> closure(int degree, const std::vector<Perm>& gens,
                          std::int64_t order_cap) {
  std::set<Perm> seen;
  std::vector<Perm> elems{perm_identity(degree)};
  seen.insert(elems[0]);
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != degree || !perm_valid(g))
      throw ValidationError("generator is not a permutation of the stated degree");
    if (seen.insert(g).second) elems.push_back(g);
  }
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const Perm& g : gens) {
      Perm p = perm_compose(elems[k], g);
      if (seen.insert(p).second) {
        if (order_cap > 0 &&
            static_cast<std::int64_t>(elems.size()) + 1 > order_cap)
          throw OrderCapExceeded("group closure exceeds order cap");
        elems.push_back(std::move(p));
      }
    }
  }
  return elems;
}

}  // namespace

void FinGroup::finalize() {
  std::sort(elems_.begin(), elems_.end());
  int n = order();
  mult_.assign(static_cast<std::size_t>(n) * n, -1);
  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    if (perm_is_identity(elems_[i])) id_ = i;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Perm p = perm_compose(elems_[i], elems_[j]);
      int k = index_of(p);
      if (k < 0) throw ValidationError("element set not closed under product");
      mult_[static_cast<std::size_t>(i) * n + j] = k;
      if (k == id_) inv_[i] = j;
    }
  }
  // Greedy minimal generating sequence in element-index order.
  std::vector<char> in(n, 0);
  in[id_] = 1;
  int have = 1;
  std::vector<int> current{id_};
  while (have < n) {
    int next = -1;
    for (int i = 0; i < n; ++i)
      if (!in[i]) {
        next = i;
        break;
      }
    gens_.push_back(next);
    in[next] = 1;
    ++have;
    current.push_back(next);
    for (std::size_t k = 0; k < current.size(); ++k) {
      for (int g : gens_) {
        int p = mul(current[k], g);
        if (!in[p]) {
          in[p] = 1;
          ++have;
          current.push_back(p);
        }
      }
    }
  }
}

int FinGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || *it != p) return -1;
  return static_cast<int>(it - elems_.begin());
}

int FinGroup::element_order(int i) const {
  int ord = 1, cur = i;
  while (cur != id_) {
    cur = mul(cur, i);
    ++ord;
  }
  return ord;
}

int FinGroup::power(int i, std::int64_t e) const {
  int n = element_order(i);
  e %= n;
  if (e < 0) e += n;
  int acc = id_;
  for (std::int64_t k = 0; k < e; ++k) acc = mul(acc, i);
  return acc;
}

std::string FinGroup::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(degree_));
  for (const Perm& p : elems_)
    for (int v : p) mix(static_cast<std::uint64_t>(v) + 1);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::vector<Perm> FinGroup::generators() const {
  std::vector<Perm> out;
  for (int i : gens_) out.push_back(elems_[i]);
  if (out.empty()) out.push_back(perm_identity(degree_));
  return out;
}

bool FinGroup::is_abelian() const {
  for (int a : gens_)
    for (int b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupRef FinGroup::from_generators(int degree, std::vector<Perm> gens,
                                   std::int64_t order_cap) {
  auto g = std::shared_ptr<FinGroup>(new FinGroup());
  g->degree_ = degree;
  g->elems_ = closure(degree, gens, order_cap);
  g->finalize();
  return g;
}

GroupRef FinGroup::from_table(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw ValidationError("multiplication table is not square");
    Perm p(n);
    for (int j = 0; j < n; ++j) p[j] = table[i][j];
    if (!perm_valid(p))
      throw ValidationError("multiplication table row is not a permutation");
    gens.push_back(std::move(p));
  }
  return from_generators(n, gens, n + 1);
}

GroupRef FinGroup::trivial() {
  static GroupRef g = from_generators(1, {});
  return g;
}

GroupRef FinGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  if (n == 1) return trivial();
  static std::map<int, GroupRef> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return cache[n] = from_generators(n, {c});
}

GroupRef FinGroup::symmetric(int n) {
  if (n < 1) throw ValidationError("symmetric group rank must be positive");
  if (n == 1) return trivial();
  static std::map<int, GroupRef> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Perm c(n), t = perm_identity(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  std::swap(t[0], t[1]);
  return cache[n] = from_generators(n, {c, t});
}

bool same_group(const GroupRef& a, const GroupRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->degree() == b->degree() && a->elems() == b->elems();
}

GroupRef FinGroup::dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral parameter must be positive");
  if (n == 1) return cyclic(2);
  if (n == 2) return direct_product(cyclic(2), cyclic(2));
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return from_generators(n, {r, s});
}

GroupRef FinGroup::quaternion8() {
  // Elements 0..7 = 1,-1,i,-i,j,-j,k,-k with quaternion multiplication.
  auto enc = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  // unit products: table[u][v] = (unit, sign) for u*v with units 0=1,1=i,2=j,3=k
  static const int uu[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int ss[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2 ? -1 : 1;
      int ub = b / 2, sb = b % 2 ? -1 : 1;
      t[a][b] = enc(uu[ua][ub], sa * sb * ss[ua][ub]);
    }
  return from_table(t);
}

GroupRef FinGroup::direct_product(const GroupRef& a, const GroupRef& b) {
  int d = a->degree() + b->degree();
  std::vector<Perm> gens;
  for (const Perm& g : a->generators()) {
    Perm p = perm_identity(d);
    for (int i = 0; i < a->degree(); ++i) p[i] = g[i];
    gens.push_back(p);
  }
  for (const Perm& g : b->generators()) {
    Perm p = perm_identity(d);
    for (int i = 0; i < b->degree(); ++i) p[a->degree() + i] = a->degree() + g[i];
    gens.push_back(p);
  }
  return from_generators(d, gens,
                         static_cast<std::int64_t>(a->order()) * b->order() + 1);
}

bool Subgroup::contains(int elem_index) const {
  return std::binary_search(members.begin(), members.end(), elem_index);
}

void Subgroup::validate() const {
  if (!parent) throw NotASubgroup("missing parent group");
  if (members.empty() || !std::is_sorted(members.begin(), members.end()))
    throw NotASubgroup("member list must be sorted and nonempty");
  if (!contains(parent->identity())) throw NotASubgroup("missing identity");
  for (int a : members) {
    if (a < 0 || a >= parent->order()) throw NotASubgroup("member out of range");
    if (!contains(parent->inv(a))) throw NotASubgroup("not inverse-closed");
    for (int b : members)
      if (!contains(parent->mul(a, b))) throw NotASubgroup("not product-closed");
  }
}

GroupRef Subgroup::realize() const {
  // memoized: fixed-point decompositions realize the same few stabilizers
  // over and over.  The cached parent reference keeps the keyed address
  // alive, so pointer reuse cannot alias two different parents.
  static std::map<std::pair<const void*, std::vector<int>>,
                  std::pair<GroupRef, GroupRef>>
      cache;
  auto key = std::make_pair(static_cast<const void*>(parent.get()), members);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second.second;
  std::vector<Perm> gens;
  for (int i : members) gens.push_back(parent->elem(i));
  GroupRef out = FinGroup::from_generators(parent->degree(), gens, order() + 1);
  cache.emplace(std::move(key), std::make_pair(parent, out));
  return out;
}

Subgroup whole_group(const GroupRef& g) {
  std::vector<int> m(g->order());
  std::iota(m.begin(), m.end(), 0);
  return Subgroup{g, std::move(m)};
}

Subgroup trivial_subgroup(const GroupRef& g) {
  return Subgroup{g, {g->identity()}};
}

Subgroup generated_subgroup(const GroupRef& g, std::vector<int> idx) {
  std::vector<char> in(g->order(), 0);
  std::vector<int> work{g->identity()};
  in[g->identity()] = 1;
  for (int i : idx)
    if (!in[i]) {
      in[i] = 1;
      work.push_back(i);
    }
  for (std::size_t k = 0; k < work.size(); ++k)
    for (int i : idx) {
      int p = g->mul(work[k], i);
      if (!in[p]) {
        in[p] = 1;
        work.push_back(p);
      }
    }
  std::sort(work.begin(), work.end());
  return Subgroup{g, std::move(work)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw GroupMismatch("subgroups of different groups");
  std::vector<int> m;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(m));
  return Subgroup{a.parent, std::move(m)};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  std::vector<int> m;
  m.reserve(h.members.size());
  for (int a : h.members) m.push_back(h.parent->conj(a, g));
  std::sort(m.begin(), m.end());
  return Subgroup{h.parent, std::move(m)};
}

bool is_normal(const Subgroup& h) {
  for (int g : h.parent->generator_indices())
    if (conjugate_subgroup(h, g).members != h.members) return false;
  return true;
}

Subgroup normalizer(const Subgroup& h) {
  std::vector<int> m;
  for (int g = 0; g < h.parent->order(); ++g)
    if (conjugate_subgroup(h, g).members == h.members) m.push_back(g);
  return Subgroup{h.parent, std::move(m)};
}

Subgroup centralizer_of_subset(const GroupRef& g, const std::vector<int>& xs) {
  std::vector<int> m;
  for (int c = 0; c < g->order(); ++c) {
    bool ok = true;
    for (int x : xs)
      if (g->mul(c, x) != g->mul(x, c)) {
        ok = false;
        break;
      }
    if (ok) m.push_back(c);
  }
  return Subgroup{g, std::move(m)};
}

std::vector<Subgroup> enumerate_subgroups(const GroupRef& g,
                                          std::int64_t order_cap) {
  std::int64_t cap = cap_or_default(order_cap, default_caps().group_order);
  if (g->order() > cap)
    throw OrderCapExceeded("group order exceeds subgroup enumeration cap");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  auto add = [&](const Subgroup& s) {
    if (seen.insert(s.members).second) work.push_back(s.members);
  };
  add(trivial_subgroup(g));
  for (std::size_t k = 0; k < work.size(); ++k) {
    std::vector<int> base = work[k];
    for (int x = 0; x < g->order(); ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> gen = base;
      gen.push_back(x);
      add(generated_subgroup(g, gen));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : seen) out.push_back(Subgroup{g, m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(
    const GroupRef& g, std::int64_t order_cap) {
  auto subs = enumerate_subgroups(g, order_cap);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i].members] = static_cast<int>(i);
  std::vector<char> used(subs.size(), 0);
  std::vector<std::vector<Subgroup>> classes;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (used[i]) continue;
    std::set<std::vector<int>> cls;
    for (int x = 0; x < g->order(); ++x) cls.insert(conjugate_subgroup(subs[i], x).members);
    std::vector<Subgroup> members;
    for (const auto& m : cls) {
      used[index.at(m)] = 1;
      members.push_back(Subgroup{g, m});
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

std::vector<std::vector<int>> element_conjugacy_classes(const GroupRef& g) {
  std::vector<char> used(g->order(), 0);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < g->order(); ++i) {
    if (used[i]) continue;
    std::set<int> cls;
    for (int x = 0; x < g->order(); ++x) cls.insert(g->conj(i, x));
    std::vector<int> v(cls.begin(), cls.end());
    for (int e : v) used[e] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

void GroupHom::validate() const {
  if (!src || !dst) throw ValidationError("hom missing endpoint groups");
  if (static_cast<int>(map.size()) != src->order())
    throw ValidationError("hom map has wrong size");
  for (int v : map)
    if (v < 0 || v >= dst->order())
      throw ValidationError("hom image index out of range");
  for (int a = 0; a < src->order(); ++a)
    for (int b = 0; b < src->order(); ++b)
      if (map[src->mul(a, b)] != dst->mul(map[a], map[b]))
        throw ValidationError("map is not a homomorphism");
}

bool GroupHom::is_injective() const {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == src->order();
}

bool GroupHom::is_trivial() const {
  for (int v : map)
    if (v != dst->identity()) return false;
  return true;
}

std::vector<int> GroupHom::kernel() const {
  std::vector<int> k;
  for (int a = 0; a < src->order(); ++a)
    if (map[a] == dst->identity()) k.push_back(a);
  return k;
}

std::vector<int> GroupHom::image() const {
  std::set<int> img(map.begin(), map.end());
  return std::vector<int>(img.begin(), img.end());
}

GroupHom identity_hom(const GroupRef& g) {
  std::vector<int> m(g->order());
  std::iota(m.begin(), m.end(), 0);
  return GroupHom{g, g, std::move(m)};
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.dst != g.src && f.dst->content_hash() != g.src->content_hash())
    throw GroupMismatch("hom composition endpoints do not match");
  std::vector<int> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return GroupHom{f.src, g.dst, std::move(m)};
}

namespace {

// Extends a partial hom (full map over the subgroup generated by the already
// assigned generators) by one generator image; returns false on conflict.
bool extend_partial_hom(const FinGroup& src, const FinGroup& dst,
                        std::vector<int>& map, std::vector<int>& domain,
                        int gen, int image) {
  if (src.element_order(gen) % dst.element_order(image) != 0) return false;
  std::size_t base = domain.size();
  auto rollback = [&] {
    for (std::size_t t = base; t < domain.size(); ++t) map[domain[t]] = -1;
    domain.resize(base);
  };
  if (map[gen] < 0) {
    map[gen] = image;
    domain.push_back(gen);
  } else {
    return map[gen] == image;
  }
  // close: every pair with at least one element added here gets multiplied
  for (std::size_t k = base; k < domain.size(); ++k) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
      for (int side = 0; side < 2; ++side) {
        int a = side ? domain[j] : domain[k];
        int b = side ? domain[k] : domain[j];
        int p = src.mul(a, b);
        int ip = dst.mul(map[a], map[b]);
        if (map[p] < 0) {
          map[p] = ip;
          domain.push_back(p);
        } else if (map[p] != ip) {
          rollback();
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

GroupHom hom_from_generator_images(const GroupRef& src, const GroupRef& dst,
                                   const std::vector<int>& src_gens,
                                   const std::vector<int>& images) {
  if (src_gens.size() != images.size())
    throw ValidationError("generator/image count mismatch");
  std::vector<int> map(src->order(), -1), domain{src->identity()};
  map[src->identity()] = dst->identity();
  for (std::size_t i = 0; i < src_gens.size(); ++i)
    if (!extend_partial_hom(*src, *dst, map, domain, src_gens[i], images[i]))
      throw ValidationError("generator images do not extend to a homomorphism");
  if (static_cast<int>(domain.size()) != src->order())
    throw ValidationError("generators do not generate the source group");
  GroupHom h{src, dst, std::move(map)};
  h.validate();
  return h;
}

std::vector<GroupHom> enumerate_homs(const GroupRef& src, const GroupRef& dst,
                                     std::int64_t candidate_cap) {
  std::int64_t cap = cap_or_default(candidate_cap, default_caps().hom_candidates);
  std::int64_t tried = 0;
  std::vector<int> gens = src->generator_indices();
  std::vector<GroupHom> out;
  std::vector<int> map(src->order(), -1), domain{src->identity()};
  map[src->identity()] = dst->identity();
  if (gens.empty()) {
    std::vector<int> m(src->order(), dst->identity());
    out.push_back(GroupHom{src, dst, std::move(m)});
    return out;
  }
  // depth-first over generator images in destination index order
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == gens.size()) {
      out.push_back(GroupHom{src, dst, map});
      return;
    }
    for (int img = 0; img < dst->order(); ++img) {
      if (++tried > cap)
        throw EnumerationCapExceeded("hom enumeration exceeds candidate cap");
      std::size_t before = domain.size();
      if (extend_partial_hom(*src, *dst, map, domain, gens[g], img)) {
        rec(g + 1);
        for (std::size_t t = before; t < domain.size(); ++t) map[domain[t]] = -1;
        domain.resize(before);
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; });
  return out;
}

std::vector<std::vector<int>> hom_conjugacy_classes(
    const std::vector<GroupHom>& homs) {
  if (homs.empty()) return {};
  const GroupRef& dst = homs.front().dst;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index[homs[i].map] = static_cast<int>(i);
  std::vector<char> used(homs.size(), 0);
  std::vector<std::vector<int>> classes;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (used[i]) continue;
    std::set<int> cls;
    for (int b = 0; b < dst->order(); ++b) {
      std::vector<int> m(homs[i].map.size());
      for (std::size_t a = 0; a < m.size(); ++a) m[a] = dst->conj(homs[i].map[a], b);
      auto it = index.find(m);
      if (it == index.end())
        throw ValidationError("hom list is not closed under conjugation");
      cls.insert(it->second);
    }
    std::vector<int> v(cls.begin(), cls.end());
    for (int e : v) used[e] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

GroupHom restrict_hom(const GroupHom& f, const Subgroup& h) {
  if (h.parent != f.src) throw GroupMismatch("subgroup of a different group");
  GroupRef hg = h.realize();
  std::vector<int> m(hg->order());
  for (int i = 0; i < hg->order(); ++i) {
    int pidx = f.src->index_of(hg->elem(i));
    if (pidx < 0 || !h.contains(pidx)) throw NotASubgroup("realized subgroup mismatch");
    m[i] = f.map[pidx];
  }
  return GroupHom{hg, f.dst, std::move(m)};
}

WeylGroup weyl_group(const Subgroup& h) {
  h.validate();
  Subgroup n = normalizer(h);
  const FinGroup& g = *h.parent;
  // left cosets of H in N, keyed by sorted member lists, ordered by least rep
  std::map<int, std::vector<int>> coset_of;  // least element -> coset
  std::vector<int> coset_key(g.order(), -1);
  for (int x : n.members) {
    std::vector<int> coset;
    for (int hh : h.members) coset.push_back(g.mul(x, hh));
    std::sort(coset.begin(), coset.end());
    coset_of[coset.front()] = coset;
  }
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_index(g.order(), -1);
  for (auto& [least, coset] : coset_of) {
    for (int e : coset) coset_index[e] = static_cast<int>(cosets.size());
    cosets.push_back(coset);
  }
  int nc = static_cast<int>(cosets.size());
  // left-translation action of N on the cosets
  auto act = [&](int x) {
    Perm p(nc);
    for (int c = 0; c < nc; ++c) p[c] = coset_index[g.mul(x, cosets[c].front())];
    return p;
  };
  std::vector<Perm> qgens;
  for (int x : n.members) qgens.push_back(act(x));
  GroupRef q = FinGroup::from_generators(nc, qgens, nc + 1);
  GroupRef nreal = n.realize();
  std::vector<int> proj(nreal->order());
  for (int i = 0; i < nreal->order(); ++i) {
    int pidx = g.index_of(nreal->elem(i));
    proj[i] = q->index_of(act(pidx));
  }
  GroupHom projection{nreal, q, std::move(proj)};
  projection.validate();
  return WeylGroup{std::move(n), q, std::move(cosets), std::move(projection)};
}

QuotientGroup quotient_group(const GroupRef& g, const Subgroup& n) {
  if (n.parent != g) throw GroupMismatch("subgroup of a different group");
  n.validate();
  if (!is_normal(n)) throw NotNormal("quotient by a non-normal subgroup");
  WeylGroup w = weyl_group(n);
  // normalizer is all of g, so the Weyl data is exactly the quotient
  std::vector<int> proj(g->order());
  GroupRef nreal = w.projection.src;
  for (int i = 0; i < g->order(); ++i) {
    int j = nreal->index_of(g->elem(i));
    proj[i] = w.projection.map[j];
  }
  return QuotientGroup{w.quotient, w.cosets, GroupHom{g, w.quotient, std::move(proj)}};
}

GroupRef materialized_wreath(int q, const GroupRef& base_q,
                             std::int64_t order_cap) {
  if (q < 1) throw ValidationError("wreath copies must be positive");
  std::int64_t cap = cap_or_default(order_cap, default_caps().materialize_order);
  double size = 1;
  for (int i = 2; i <= q; ++i) size *= i;
  for (int i = 0; i < q; ++i) size *= base_q->order();
  if (size > static_cast<double>(cap))
    throw OrderCapExceeded("wreath product exceeds materialization cap");
  int d = base_q->degree();
  int n = q * d;
  std::vector<Perm> gens;
  for (const Perm& g : base_q->generators()) {
    Perm p = perm_identity(n);
    for (int i = 0; i < d; ++i) p[i] = g[i];
    gens.push_back(p);
  }
  if (q >= 2) {
    Perm swap01 = perm_identity(n), cyc = perm_identity(n);
    for (int i = 0; i < d; ++i) {
      std::swap(swap01[i], swap01[d + i]);
      for (int b = 0; b < q; ++b) cyc[b * d + i] = ((b + 1) % q) * d + i;
    }
    gens.push_back(swap01);
    gens.push_back(cyc);
  }
  return FinGroup::from_generators(n, gens, cap);
}

GroupHom cyclic_quotient_iso(int m, int l, int n) {
  if (m < 1 || l < 1 || n < 1) throw ValidationError("tower orders must be positive");
  if (m % l != 0 || n % l != 0)
    throw DivisibilityViolation("cyclic tower requires l | m and l | n");
  return identity_hom(FinGroup::cyclic(m / l));
}

std::vector<GroupRef> small_groups_up_to(int max_order) {
  std::vector<GroupRef> out;
  auto dic3 = []() {
    // dicyclic group of order 12: a^6 = 1, b^2 = a^3, b a b^-1 = a^-1
    auto enc = [](int i, int j) { return i + 6 * j; };
    std::vector<std::vector<int>> t(12, std::vector<int>(12));
    for (int i1 = 0; i1 < 6; ++i1)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int i2 = 0; i2 < 6; ++i2)
          for (int j2 = 0; j2 < 2; ++j2) {
            int a, b;
            if (j1 == 0) {
              a = (i1 + i2) % 6;
              b = j2;
            } else if (j2 == 0) {
              a = ((i1 - i2) % 6 + 6) % 6;
              b = 1;
            } else {
              a = ((i1 - i2 + 3) % 6 + 6) % 6;
              b = 0;
            }
            t[enc(i1, j1)][enc(i2, j2)] = enc(a, b);
          }
    return FinGroup::from_table(t);
  };
  auto alt4 = []() {
    return FinGroup::from_generators(4, {Perm{1, 2, 0, 3}, Perm{1, 0, 3, 2}});
  };
  for (int n = 1; n <= max_order; ++n) {
    switch (n) {
      case 4:
        out.push_back(FinGroup::cyclic(4));
        out.push_back(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(2)));
        break;
      case 6:
        out.push_back(FinGroup::cyclic(6));
        out.push_back(FinGroup::symmetric(3));
        break;
      case 8:
        out.push_back(FinGroup::cyclic(8));
        out.push_back(FinGroup::direct_product(FinGroup::cyclic(4), FinGroup::cyclic(2)));
        out.push_back(FinGroup::direct_product(
            FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(2)),
            FinGroup::cyclic(2)));
        out.push_back(FinGroup::dihedral(4));
        out.push_back(FinGroup::quaternion8());
        break;
      case 9:
        out.push_back(FinGroup::cyclic(9));
        out.push_back(FinGroup::direct_product(FinGroup::cyclic(3), FinGroup::cyclic(3)));
        break;
      case 10:
        out.push_back(FinGroup::cyclic(10));
        out.push_back(FinGroup::dihedral(5));
        break;
      case 12:
        out.push_back(FinGroup::cyclic(12));
        out.push_back(FinGroup::direct_product(FinGroup::cyclic(6), FinGroup::cyclic(2)));
        out.push_back(FinGroup::dihedral(6));
        out.push_back(alt4());
        out.push_back(dic3());
        break;
      default:
        out.push_back(FinGroup::cyclic(n));
    }
  }
  return out;
}

}  // namespace eqc
