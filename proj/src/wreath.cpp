#include "eqc/wreath.hpp"

#include <algorithm>

#include "eqc/errors.hpp"

namespace eqc {

WreathElem WreathGroup::identity() const {
  return WreathElem{std::vector<int>(q, base->identity()), perm_identity(q)};
}

void WreathGroup::validate_elem(const WreathElem& x) const {
  if (static_cast<int>(x.a.size()) != q || static_cast<int>(x.s.size()) != q ||
      !perm_valid(x.s))
    throw InvalidWreathHom("malformed wreath element");
  for (int v : x.a)
    if (v < 0 || v >= base->order())
      throw InvalidWreathHom("wreath cofactor out of range");
}

WreathElem WreathGroup::mul(const WreathElem& x, const WreathElem& y) const {
  WreathElem r;
  r.s = perm_compose(x.s, y.s);
  r.a.resize(q);
  Perm sinv = perm_inverse(x.s);
  for (int i = 0; i < q; ++i) r.a[i] = base->mul(x.a[i], y.a[sinv[i]]);
  return r;
}

WreathElem WreathGroup::inverse(const WreathElem& x) const {
  WreathElem r;
  r.s = perm_inverse(x.s);
  r.a.resize(q);
  for (int i = 0; i < q; ++i) r.a[i] = base->inv(x.a[x.s[i]]);
  return r;
}

WreathElem WreathGroup::conj(const WreathElem& x, const WreathElem& g) const {
  return mul(mul(inverse(g), x), g);
}

bool WreathGroup::is_identity(const WreathElem& x) const {
  if (!perm_is_identity(x.s)) return false;
  for (int v : x.a)
    if (v != base->identity()) return false;
  return true;
}

int WreathGroup::elem_order(const WreathElem& x) const {
  int ord = 1;
  WreathElem cur = x;
  while (!is_identity(cur)) {
    cur = mul(cur, x);
    ++ord;
  }
  return ord;
}

int WreathGroup::perm_degree() const { return q * std::max(base->degree(), 1); }

Perm WreathGroup::to_perm(const WreathElem& x) const {
  int d = std::max(base->degree(), 1);
  Perm p(q * d);
  for (int i = 0; i < q; ++i) {
    const Perm& block = base->elem(x.a[x.s[i]]);
    for (int j = 0; j < d; ++j) {
      int img = base->degree() ? block[j] : j;
      // point (i, j) -> (s[i], a_{s[i]} j)
      p[i * d + j] = x.s[i] * d + img;
    }
  }
  return p;
}

WreathElem WreathGroup::from_perm(const Perm& p) const {
  int d = std::max(base->degree(), 1);
  if (static_cast<int>(p.size()) != q * d)
    throw InvalidWreathHom("permutation degree mismatch");
  WreathElem x;
  x.s.resize(q);
  x.a.assign(q, base->identity());
  for (int i = 0; i < q; ++i) {
    x.s[i] = p[i * d] / d;
    if (base->degree()) {
      Perm block(d);
      for (int j = 0; j < d; ++j) {
        if (p[i * d + j] / d != x.s[i])
          throw InvalidWreathHom("permutation does not preserve blocks");
        block[j] = p[i * d + j] % d;
      }
      int idx = base->index_of(block);
      if (idx < 0) throw InvalidWreathHom("block action is not in the base group");
      x.a[x.s[i]] = idx;
    }
  }
  if (!perm_valid(x.s)) throw InvalidWreathHom("block permutation invalid");
  return x;
}

double WreathGroup::order_double() const {
  double v = 1;
  for (int i = 2; i <= q; ++i) v *= i;
  for (int i = 0; i < q; ++i) v *= base->order();
  return v;
}

void WreathGroup::for_each_element(
    const std::function<bool(const WreathElem&)>& f) const {
  Perm s = perm_identity(q);
  std::sort(s.begin(), s.end());
  do {
    WreathElem x;
    x.s = s;
    x.a.assign(q, 0);
    while (true) {
      if (!f(x)) return;
      int i = 0;
      while (i < q && x.a[i] == base->order() - 1) x.a[i++] = 0;
      if (i == q) break;
      ++x.a[i];
    }
  } while (std::next_permutation(s.begin(), s.end()));
}

GroupRef WreathGroup::materialize(std::int64_t order_cap) const {
  return materialized_wreath(q, base, order_cap);
}

void WreathHom::validate() const {
  if (!lambda || !target.base) throw InvalidWreathHom("missing groups");
  if (static_cast<int>(map.size()) != lambda->order())
    throw InvalidWreathHom("wreath hom map has wrong size");
  for (const auto& x : map) target.validate_elem(x);
  if (!target.is_identity(map[lambda->identity()]))
    throw InvalidWreathHom("identity must map to identity");
  for (int a = 0; a < lambda->order(); ++a)
    for (int b = 0; b < lambda->order(); ++b)
      if (!(map[lambda->mul(a, b)] == target.mul(map[a], map[b])))
        throw InvalidWreathHom("map is not a homomorphism");
}

bool WreathHom::conjugate_by_fixes(const WreathElem& g) const {
  for (int l : lambda->generator_indices())
    if (!(target.conj(map[l], g) == map[l])) return false;
  return true;
}

WreathHom wreath_hom_from_generator_images(const GroupRef& lambda,
                                           const WreathGroup& target,
                                           const std::vector<int>& gens,
                                           const std::vector<WreathElem>& images) {
  if (gens.size() != images.size())
    throw InvalidWreathHom("generator/image count mismatch");
  std::vector<WreathElem> map(lambda->order());
  std::vector<char> known(lambda->order(), 0);
  map[lambda->identity()] = target.identity();
  known[lambda->identity()] = 1;
  std::vector<int> domain{lambda->identity()};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (known[gens[g]]) {
      if (!(map[gens[g]] == images[g]))
        throw InvalidWreathHom("conflicting generator images");
      continue;
    }
    map[gens[g]] = images[g];
    known[gens[g]] = 1;
    domain.push_back(gens[g]);
    for (std::size_t k = 0; k < domain.size(); ++k)
      for (std::size_t j = 0; j < domain.size(); ++j)
        for (int side = 0; side < 2; ++side) {
          int a = side ? domain[j] : domain[k];
          int b = side ? domain[k] : domain[j];
          int p = lambda->mul(a, b);
          WreathElem ip = target.mul(map[a], map[b]);
          if (!known[p]) {
            known[p] = 1;
            map[p] = std::move(ip);
            domain.push_back(p);
          } else if (!(map[p] == ip)) {
            throw InvalidWreathHom("generator images do not extend to a homomorphism");
          }
        }
  }
  if (static_cast<int>(domain.size()) != lambda->order())
    throw InvalidWreathHom("generators do not generate the source group");
  WreathHom h{lambda, target, std::move(map)};
  h.validate();
  return h;
}

std::vector<WreathHom> enumerate_wreath_homs(const GroupRef& lambda,
                                             const WreathGroup& target,
                                             std::int64_t candidate_cap) {
  std::int64_t cap =
      candidate_cap > 0 ? candidate_cap : default_caps().hom_candidates;
  std::vector<int> gens = lambda->generator_indices();
  std::vector<WreathHom> out;
  if (gens.empty()) {
    out.push_back(WreathHom{
        lambda, target,
        std::vector<WreathElem>(lambda->order(), target.identity())});
    return out;
  }
  // candidate images per generator: elements whose order divides the
  // generator order
  std::vector<std::vector<WreathElem>> candidates(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    int need = lambda->element_order(gens[g]);
    std::int64_t budget = cap;
    target.for_each_element([&](const WreathElem& x) {
      if (--budget < 0)
        throw EnumerationCapExceeded("wreath hom enumeration exceeds cap");
      if (need % target.elem_order(x) == 0) candidates[g].push_back(x);
      return true;
    });
  }
  double tuples = 1;
  for (const auto& c : candidates) tuples *= static_cast<double>(c.size());
  if (tuples > static_cast<double>(cap))
    throw EnumerationCapExceeded("wreath hom enumeration exceeds cap");
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    std::vector<WreathElem> images;
    for (std::size_t g = 0; g < gens.size(); ++g)
      images.push_back(candidates[g][idx[g]]);
    try {
      out.push_back(
          wreath_hom_from_generator_images(lambda, target, gens, images));
    } catch (const InvalidWreathHom&) {
    }
    std::size_t i = 0;
    while (i < gens.size() && ++idx[i] == candidates[i].size()) idx[i++] = 0;
    if (i == gens.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const WreathHom& a, const WreathHom& b) {
    return a.map < b.map;
  });
  return out;
}

WreathHom block_sum(const WreathHom& s1, const WreathHom& s2) {
  if (!same_group(s1.lambda, s2.lambda) || !same_group(s1.target.base, s2.target.base))
    throw GroupMismatch("block sum requires matching source and base groups");
  WreathGroup target{s1.target.q + s2.target.q, s1.target.base};
  std::vector<WreathElem> map(s1.lambda->order());
  for (int l = 0; l < s1.lambda->order(); ++l) {
    WreathElem x;
    x.a = s1.map[l].a;
    x.a.insert(x.a.end(), s2.map[l].a.begin(), s2.map[l].a.end());
    x.s = s1.map[l].s;
    for (int v : s2.map[l].s) x.s.push_back(v + s1.target.q);
    map[l] = std::move(x);
  }
  WreathHom h{s1.lambda, target, std::move(map)};
  h.validate();
  return h;
}

WreathHom induced_wreath_hom(const Subgroup& h, const GroupHom& alpha,
                             int q_check) {
  h.validate();
  const GroupRef& lambda = h.parent;
  GroupRef hreal = h.realize();
  if (alpha.src != hreal && alpha.src->elems() != hreal->elems())
    throw GroupMismatch("cofactor hom must be defined on the subgroup");
  // left cosets l H ordered by least representative
  std::vector<int> coset_index(lambda->order(), -1), coset_rep;
  for (int x = 0; x < lambda->order(); ++x) {
    if (coset_index[x] >= 0) continue;
    std::vector<int> coset;
    for (int m : h.members) coset.push_back(lambda->mul(x, m));
    std::sort(coset.begin(), coset.end());
    for (int e : coset) coset_index[e] = static_cast<int>(coset_rep.size());
    coset_rep.push_back(coset.front());
  }
  int q = static_cast<int>(coset_rep.size());
  if (q_check >= 0 && q != q_check)
    throw ValidationError("subgroup index does not match requested cardinality");
  WreathGroup target{q, alpha.dst};
  std::vector<WreathElem> map(lambda->order());
  for (int l = 0; l < lambda->order(); ++l) {
    WreathElem x;
    x.s.resize(q);
    x.a.assign(q, alpha.dst->identity());
    for (int c = 0; c < q; ++c) {
      int moved = lambda->mul(l, coset_rep[c]);
      int j = coset_index[moved];
      x.s[c] = j;
      // l * rep_c = rep_j * hh with hh in H
      int hh = lambda->mul(lambda->inv(coset_rep[j]), moved);
      int hidx = alpha.src->index_of(lambda->elem(hh));
      if (hidx < 0) throw ValidationError("coset cocycle left the subgroup");
      x.a[j] = alpha.map[hidx];
    }
    map[l] = std::move(x);
  }
  WreathHom out{lambda, target, std::move(map)};
  out.validate();
  return out;
}

TwistedDecomposition decompose(const WreathHom& sigma) {
  sigma.validate();
  const GroupRef& lambda = sigma.lambda;
  int q = sigma.target.q;
  TwistedDecomposition d;
  std::vector<Perm> sgens;
  for (int g : lambda->generator_indices()) sgens.push_back(sigma.map[g].s);
  d.orbits = perm_orbits(q, sgens);
  d.orbit_of.assign(q, -1);
  d.transporter.assign(q, -1);
  for (std::size_t j = 0; j < d.orbits.size(); ++j) {
    int m = d.orbits[j].front();
    d.rep.push_back(m);
    for (int p : d.orbits[j]) d.orbit_of[p] = static_cast<int>(j);
    std::vector<int> stab;
    for (int l = 0; l < lambda->order(); ++l) {
      if (sigma.map[l].s[m] == m) stab.push_back(l);
      // canonical transporter: least lambda with s(l)[m] = i
      int i = sigma.map[l].s[m];
      if (d.orbit_of[i] == static_cast<int>(j) && d.transporter[i] < 0)
        d.transporter[i] = l;
    }
    Subgroup hj{lambda, stab};
    GroupRef hreal = hj.realize();
    std::vector<int> amap(hreal->order());
    for (int t = 0; t < hreal->order(); ++t) {
      int pidx = lambda->index_of(hreal->elem(t));
      amap[t] = sigma.map[pidx].a[m];
    }
    GroupHom alpha{hreal, sigma.target.base, std::move(amap)};
    alpha.validate();
    d.stabilizer.push_back(std::move(hj));
    d.alpha.push_back(std::move(alpha));
  }
  return d;
}

}  // namespace eqc
