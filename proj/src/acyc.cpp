#include "eqc/acyc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "eqc/errors.hpp"

namespace eqc {

namespace {

GroupRef sym_factor(int q) {
  return q <= 1 ? FinGroup::trivial() : FinGroup::symmetric(q);
}

// degree of the ambient block for a factor of size q
int block_degree(int q) { return std::max(q, 1); }

std::vector<int> block_offsets(const AcycData& d) {
  std::vector<int> off(d.r + 2, 0);
  for (int i = 0; i <= d.r; ++i) off[i + 1] = off[i] + block_degree(d.q[i]);
  return off;
}

GroupRef ambient_for(const std::vector<int>& q) {
  static std::map<std::vector<int>, GroupRef> cache;
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  GroupRef g = sym_factor(q[0]);
  for (std::size_t i = 1; i < q.size(); ++i)
    g = FinGroup::direct_product(g, sym_factor(q[i]));
  cache.emplace(q, g);
  return g;
}

// assemble an ambient element from true-size factor permutations
int assemble(const GroupRef& ambient, const std::vector<int>& q,
             const std::vector<Perm>& parts) {
  Perm p = perm_identity(ambient->degree());
  int off = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (int x = 0; x < q[i]; ++x) p[off + x] = off + parts[i][x];
    off += block_degree(q[i]);
  }
  return ambient->index_of(p);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

// homs Lambda -> Q by generator image, with per-factor order conditions:
// the image in factor i must have order dividing bound[i] (0 = no bound)
std::vector<GroupHom> homs_by_bounds(const AcycData& d, int lambda_order,
                                     const std::vector<int>& bound) {
  GroupRef lam = FinGroup::cyclic(lambda_order);
  GroupRef qreal = d.Q.realize();
  GroupRef ambient = acyc_ambient(d);
  std::vector<GroupHom> out;
  for (int u = 0; u < qreal->order(); ++u) {
    if (qreal->power(u, lambda_order) != qreal->identity()) continue;
    int amb = ambient->index_of(qreal->elem(u));
    auto parts = acyc_factor_perms(d, amb);
    bool ok = true;
    for (int i = 0; i <= d.r && ok; ++i) {
      if (bound[i] == 0 || d.q[i] == 0) continue;
      ok = bound[i] % perm_order(parts[i]) == 0;
    }
    if (!ok) continue;
    if (lambda_order == 1) {
      out.push_back(GroupHom{lam, qreal, {qreal->identity()}});
    } else {
      out.push_back(hom_from_generator_images(
          lam, qreal, {lam->generator_indices()[0]}, {u}));
    }
  }
  return out;
}

std::vector<int> hom_bounds(const AcycData& d) {
  std::vector<int> bound(d.r + 1, 0);
  for (int i = 1; i <= d.r; ++i) bound[i] = d.n / d.l[i - 1];
  return bound;
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
  std::vector<Perm> gens = {p};
  return perm_orbits(static_cast<int>(p.size()), gens);
}

}  // namespace

GroupRef acyc_ambient(const AcycData& d) { return ambient_for(d.q); }

std::vector<Perm> acyc_factor_perms(const AcycData& d, int elem) {
  GroupRef ambient = acyc_ambient(d);
  const Perm& p = ambient->elem(elem);
  auto off = block_offsets(d);
  std::vector<Perm> parts;
  for (int i = 0; i <= d.r; ++i) {
    Perm blk(d.q[i]);
    for (int x = 0; x < d.q[i]; ++x) blk[x] = p[off[i] + x] - off[i];
    parts.push_back(std::move(blk));
  }
  return parts;
}

AcycData acyc_make(int n, std::vector<int> q, std::vector<int> m,
                   std::vector<int> l, std::vector<BiSet> v, Subgroup qsub,
                   std::string x_tag) {
  AcycData d;
  d.n = n;
  d.r = static_cast<int>(q.size()) - 1;
  d.q = std::move(q);
  d.m = std::move(m);
  d.l = std::move(l);
  d.V = std::move(v);
  d.Q = std::move(qsub);
  d.x_tag = std::move(x_tag);
  auto bad = acyc_validate(d);
  if (!bad.empty()) throw ValidationError("invalid tuple: " + bad.front());
  return d;
}

std::vector<std::string> acyc_validate(const AcycData& d) {
  std::vector<std::string> out;
  auto fail = [&](const std::string& s) { out.push_back(s); };
  if (d.n < 1) fail("n must be >= 1");
  if (d.r < 1) fail("r must be >= 1");
  if (static_cast<int>(d.q.size()) != d.r + 1 ||
      static_cast<int>(d.m.size()) != d.r ||
      static_cast<int>(d.l.size()) != d.r ||
      static_cast<int>(d.V.size()) != d.r) {
    fail("field lengths inconsistent with r");
    return out;
  }
  if (d.q[0] < 0) fail("q0 must be >= 0");
  for (int i = 1; i <= d.r; ++i)
    if (d.q[i] < 1) fail("q_" + std::to_string(i) + " must be >= 1");
  for (int i = 1; i <= d.r; ++i) {
    if (d.m[i - 1] < 1) fail("m_" + std::to_string(i) + " must be >= 1");
    if (d.l[i - 1] < 1) fail("l_" + std::to_string(i) + " must be >= 1");
    if (d.l[i - 1] >= 1 && d.n >= 1 && d.n % d.l[i - 1] != 0)
      fail("l_" + std::to_string(i) + " does not divide n");
    if (d.l[i - 1] >= 1 && d.m[i - 1] >= 1 && d.m[i - 1] % d.l[i - 1] != 0)
      fail("l_" + std::to_string(i) + " does not divide m_" +
           std::to_string(i));
  }
  for (int i = 1; i <= d.r; ++i) {
    if (d.m[i - 1] < 1 || d.l[i - 1] < 1 || d.m[i - 1] % d.l[i - 1] != 0)
      continue;
    GroupRef want = FinGroup::cyclic(d.m[i - 1] / d.l[i - 1]);
    if (!same_group(d.V[i - 1].left, want)) {
      fail("V_" + std::to_string(i) +
           " is not a representation of the cyclic group of order m/l");
      continue;
    }
    if (!same_group(d.V[i - 1].right, FinGroup::trivial()))
      fail("V_" + std::to_string(i) + " must have trivial right action");
    try {
      d.V[i - 1].validate();
    } catch (const ValidationError& e) {
      fail("V_" + std::to_string(i) + ": " + e.what());
    }
  }
  try {
    if (!same_group(d.Q.parent, acyc_ambient(d)))
      fail("Q does not live in the product of the factor symmetric groups");
    else
      d.Q.validate();
  } catch (const ValidationError& e) {
    fail(std::string("Q: ") + e.what());
  }
  return out;
}

std::vector<GroupHom> hom_set(const AcycData& d) {
  return homs_by_bounds(d, d.n, hom_bounds(d));
}

std::vector<GroupHom> hom_set_k(const AcycData& kd, int k) {
  if (kd.n % k != 0) throw DivisibilityViolation("k does not divide n");
  auto bound = hom_bounds(kd);
  bound[0] = kd.n / k;
  return homs_by_bounds(kd, kd.n, bound);
}

Membership in_D_ACyc(const AcycData& d) {
  Membership ms;
  auto bad = acyc_validate(d);
  if (!bad.empty()) return Membership{false, bad};
  GroupRef ambient = acyc_ambient(d);
  for (int u : d.Q.members) {
    if (u == ambient->identity()) continue;
    auto parts = acyc_factor_perms(d, u);
    bool hits = false;
    for (int i = 1; i <= d.r && !hits; ++i)
      hits = !perm_is_identity(parts[i]);
    if (!hits) {
      ms.ok = false;
      ms.reasons.push_back(
          "a non-identity element of Q acts only on the R^{q0} block");
      break;
    }
  }
  for (int i = 1; i <= d.r; ++i)
    if (!is_semiregular(d.V[i - 1])) {
      ms.ok = false;
      ms.reasons.push_back("V_" + std::to_string(i) +
                           " contains no regular orbit");
    }
  return ms;
}

Membership in_D_ACyc_p(const AcycData& d, int p) {
  Membership ms = in_D_ACyc(d);
  auto is_ppow = [&](int x) {
    while (x % p == 0) x /= p;
    return x == 1;
  };
  if (!is_ppow(d.n)) {
    ms.ok = false;
    ms.reasons.push_back("n is not a power of p");
  }
  for (int i = 1; i <= d.r; ++i)
    if (!is_ppow(d.m[i - 1])) {
      ms.ok = false;
      ms.reasons.push_back("m_" + std::to_string(i) + " is not a power of p");
    }
  return ms;
}

StretchResult stretch(const AcycData& d, int k) {
  if (k < 1) throw ValidationError("stretch factor must be >= 1");
  StretchResult res;
  res.data = d;
  res.data.n = k * d.n;
  for (int i = 0; i < d.r; ++i) {
    res.data.m[i] = k * d.m[i];
    res.data.l[i] = k * d.l[i];
  }
  auto before = hom_set(d);
  auto after = hom_set_k(res.data, k);
  if (before.size() != after.size())
    throw ValidationError("stretched hom set has the wrong size");
  // both lists are ordered by generator image; the bijection is positional
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i].map[before[i].src->generator_indices().empty()
                          ? before[i].src->identity()
                          : before[i].src->generator_indices()[0]] !=
        after[i].map[after[i].src->generator_indices().empty()
                         ? after[i].src->identity()
                         : after[i].src->generator_indices()[0]])
      throw ValidationError("stretched hom bijection mismatch");
    res.hom_bijection.push_back({static_cast<int>(i), static_cast<int>(i)});
  }
  if (in_D_ACyc(d).ok && !in_D_ACyc(res.data).ok)
    throw ValidationError("stretching left the cell family");
  return res;
}

AcycData smash(const AcycData& a, const AcycData& b) {
  int n = static_cast<int>(lcm64(a.n, b.n));
  AcycData ea = stretch(a, n / a.n).data;
  AcycData eb = stretch(b, n / b.n).data;
  AcycData d;
  d.n = n;
  d.r = ea.r + eb.r;
  d.q.push_back(ea.q[0] + eb.q[0]);
  for (int i = 1; i <= ea.r; ++i) d.q.push_back(ea.q[i]);
  for (int i = 1; i <= eb.r; ++i) d.q.push_back(eb.q[i]);
  d.m = ea.m;
  d.m.insert(d.m.end(), eb.m.begin(), eb.m.end());
  d.l = ea.l;
  d.l.insert(d.l.end(), eb.l.begin(), eb.l.end());
  d.V = ea.V;
  d.V.insert(d.V.end(), eb.V.begin(), eb.V.end());
  d.x_tag = a.x_tag + "*" + b.x_tag;
  GroupRef ambient = ambient_for(d.q);
  std::vector<int> members;
  for (int ua : ea.Q.members)
    for (int ub : eb.Q.members) {
      auto pa = acyc_factor_perms(ea, ua);
      auto pb = acyc_factor_perms(eb, ub);
      std::vector<Perm> parts;
      Perm p0(d.q[0]);
      for (int x = 0; x < ea.q[0]; ++x) p0[x] = pa[0][x];
      for (int x = 0; x < eb.q[0]; ++x) p0[ea.q[0] + x] = ea.q[0] + pb[0][x];
      parts.push_back(std::move(p0));
      for (int i = 1; i <= ea.r; ++i) parts.push_back(pa[i]);
      for (int i = 1; i <= eb.r; ++i) parts.push_back(pb[i]);
      members.push_back(assemble(ambient, d.q, parts));
    }
  std::sort(members.begin(), members.end());
  d.Q = Subgroup{ambient, members};
  d.Q.validate();
  if (in_D_ACyc(a).ok && in_D_ACyc(b).ok && !in_D_ACyc(d).ok)
    throw ValidationError("smash left the cell family");
  return d;
}

PhiResult phi(const AcycData& d, int k) {
  if (k < 1) throw ValidationError("phi index must be >= 1");
  if (!faithfulness_shadow(d))
    throw FaithfulnessShadowFails("the finite faithfulness shadow fails");
  PhiResult res;
  res.data = d;
  res.data.n = k * d.n;
  auto old_homs = hom_set(d);
  GroupRef qreal = d.Q.realize();
  auto gen_image = [&](const GroupHom& h) {
    return h.src->order() == 1 ? h.dst->identity()
                               : h.map[h.src->generator_indices()[0]];
  };
  std::map<int, int> old_index;
  for (std::size_t i = 0; i < old_homs.size(); ++i)
    old_index[gen_image(old_homs[i])] = static_cast<int>(i);
  for (const auto& h : hom_set(res.data)) {
    int u = gen_image(h);
    int restricted = qreal->power(u, k);
    auto it = old_index.find(restricted);
    if (it == old_index.end())
      throw ValidationError("restriction left the hom set");
    res.restriction.push_back(it->second);
  }
  if (in_D_ACyc(d).ok && !in_D_ACyc(res.data).ok)
    throw ValidationError("phi left the cell family");
  return res;
}

AcycData sym(const AcycData& d, int k, std::int64_t order_cap) {
  if (k < 1) throw ValidationError("symmetric power index must be >= 1");
  std::int64_t cap =
      order_cap > 0 ? order_cap : default_caps().materialize_order;
  AcycData out = d;
  for (int i = 0; i <= d.r; ++i) out.q[i] = k * d.q[i];
  out.x_tag = "S^" + std::to_string(k) + "(" + d.x_tag + ")";
  double amb_order = 1;
  for (int i = 0; i <= d.r; ++i)
    for (int x = 2; x <= out.q[i]; ++x) amb_order *= x;
  if (amb_order > static_cast<double>(cap))
    throw OrderCapExceeded("ambient group of the symmetric power too large");
  GroupRef ambient = ambient_for(out.q);
  // generators: Q in the 0th diagonal slot, plus diagonal slot permutations
  std::vector<int> gens;
  for (int u : d.Q.members) {
    auto parts = acyc_factor_perms(d, u);
    std::vector<Perm> big;
    for (int i = 0; i <= d.r; ++i) {
      Perm p = perm_identity(out.q[i]);
      for (int x = 0; x < d.q[i]; ++x) p[x] = parts[i][x];
      big.push_back(std::move(p));
    }
    gens.push_back(assemble(ambient, out.q, big));
  }
  GroupRef sk = FinGroup::symmetric(std::max(k, 1));
  for (const Perm& w : sk->generators()) {
    std::vector<Perm> big;
    for (int i = 0; i <= d.r; ++i) {
      Perm p(out.q[i]);
      for (int j = 0; j < k; ++j)
        for (int x = 0; x < d.q[i]; ++x) p[j * d.q[i] + x] = w[j] * d.q[i] + x;
      big.push_back(std::move(p));
    }
    gens.push_back(assemble(ambient, out.q, big));
  }
  out.Q = generated_subgroup(ambient, gens);
  if (in_D_ACyc(d).ok && !in_D_ACyc(out).ok)
    throw ValidationError("symmetric power left the cell family");
  return out;
}

AcycData free_smash(const AcycData& d) {
  AcycData out = d;
  out.q[0] = d.q[0] + 1;
  GroupRef ambient = ambient_for(out.q);
  std::vector<int> members;
  for (int u : d.Q.members) {
    auto parts = acyc_factor_perms(d, u);
    Perm p0 = perm_identity(out.q[0]);
    for (int x = 0; x < d.q[0]; ++x) p0[x] = parts[0][x];
    parts[0] = p0;
    members.push_back(assemble(ambient, out.q, parts));
  }
  std::sort(members.begin(), members.end());
  out.Q = Subgroup{ambient, members};
  out.Q.validate();
  return out;
}

ComponentCatalog component_catalog(const AcycData& d) {
  ComponentCatalog cat;
  cat.sigmas = hom_set(d);
  GroupRef qreal = d.Q.realize();
  GroupRef ambient = acyc_ambient(d);
  auto gen_image = [&](const GroupHom& h) {
    return h.src->order() == 1 ? h.dst->identity()
                               : h.map[h.src->generator_indices()[0]];
  };
  std::map<int, int> sigma_of_u;
  for (std::size_t j = 0; j < cat.sigmas.size(); ++j)
    sigma_of_u[gen_image(cat.sigmas[j])] = static_cast<int>(j);

  for (std::size_t j = 0; j < cat.sigmas.size(); ++j) {
    int u = gen_image(cat.sigmas[j]);
    auto parts =
        acyc_factor_perms(d, ambient->index_of(qreal->elem(u)));
    ComponentEntry e;
    e.sigma = static_cast<int>(j);
    e.factor_dims.assign(d.r + 1, 0);
    e.factor_dims[0] =
        d.q[0] == 0
            ? 0
            : static_cast<int>(perm_orbits(d.q[0], {parts[0]}).size());
    for (int i = 1; i <= d.r; ++i) {
      int mi = d.m[i - 1], li = d.l[i - 1];
      GroupRef cyc = FinGroup::cyclic(mi / li);
      for (const auto& cyc_pts : cycles_of(parts[i])) {
        int c = static_cast<int>(cyc_pts.size());
        if ((c * mi) % d.n != 0) {
          e.base_empty = true;
          continue;
        }
        e.circles.push_back({i, c});
        int t = (c * mi / d.n) % (mi / li);
        Perm action = d.V[i - 1].lact[cyc->power(
            cyc->order() == 1 ? cyc->identity() : cyc->generator_indices()[0],
            t)];
        e.factor_dims[i] += static_cast<int>(
            perm_orbits(d.V[i - 1].n, {action}).size());
      }
    }
    if (e.base_empty) {
      e.circles.clear();
      e.factor_dims.assign(d.r + 1, 0);
      e.fiber_dim = 0;
    } else {
      e.fiber_dim =
          std::accumulate(e.factor_dims.begin(), e.factor_dims.end(), 0);
    }
    cat.entries.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < cat.sigmas.size(); ++j) {
    int u = gen_image(cat.sigmas[j]);
    std::vector<int> row;
    for (int s = 0; s < qreal->order(); ++s)
      row.push_back(sigma_of_u.at(qreal->conj(u, s)));
    cat.sigma_action.push_back(std::move(row));
  }
  return cat;
}

BundleData finite_model_bundle(const AcycData& d, int big_m,
                               std::int64_t order_cap) {
  auto bad = acyc_validate(d);
  if (!bad.empty()) throw ValidationError("invalid tuple: " + bad.front());
  if (big_m % d.n != 0) throw DivisibilityViolation("n must divide M");
  for (int i = 1; i <= d.r; ++i)
    if (big_m % d.m[i - 1] != 0)
      throw DivisibilityViolation("m_i must divide M");
  GroupRef gamma = FinGroup::cyclic(big_m);
  int ggen = big_m == 1 ? gamma->identity() : gamma->generator_indices()[0];

  // R^{q0} block over a point
  BiSet fib0 = trivial_biset(gamma, sym_factor(d.q[0]), d.q[0]);
  if (d.q[0] >= 2) {
    GroupRef s0 = sym_factor(d.q[0]);
    for (int s = 0; s < s0->order(); ++s) {
      Perm inv = perm_inverse(s0->elem(s));
      for (int x = 0; x < d.q[0]; ++x) fib0.ract[s][x] = inv[x];
    }
  }
  BundleData acc = point_base_bundle(gamma, sym_factor(d.q[0]), fib0);

  for (int i = 1; i <= d.r; ++i) {
    int mi = d.m[i - 1];
    int nb = big_m / mi;
    const BiSet& v = d.V[i - 1];
    GroupRef cyc = v.left;  // cyclic of order m_i / l_i
    int cgen = cyc->order() == 1 ? cyc->identity() : cyc->generator_indices()[0];
    // elementary bundle C_M x_{C_m} V -> C_M / C_m
    BiSet base = trivial_biset(gamma, FinGroup::trivial(), nb);
    BiSet total = trivial_biset(gamma, FinGroup::trivial(), nb * v.n);
    std::vector<int> proj(nb * v.n);
    Perm bstep(nb), tstep(nb * v.n);
    for (int j = 0; j < nb; ++j) bstep[j] = (j + 1) % nb;
    for (int j = 0; j < nb; ++j)
      for (int x = 0; x < v.n; ++x) {
        proj[j * v.n + x] = j;
        int nj = (j + 1) % nb;
        int nx = (j + 1 == nb) ? v.lact[cgen][x] : x;
        tstep[j * v.n + x] = nj * v.n + nx;
      }
    Perm bcur = perm_identity(nb), tcur = perm_identity(nb * v.n);
    for (int g = 0; g < big_m; ++g) {
      base.lact[gamma->power(ggen, g)] = bcur;
      total.lact[gamma->power(ggen, g)] = tcur;
      bcur = perm_compose(bstep, bcur);
      tcur = perm_compose(tstep, tcur);
    }
    BundleData elem = make_bundle(gamma, FinGroup::trivial(), base, total,
                                  proj);
    acc = bundle_product(
        acc, sym_power(elem, d.q[i], whole_group(FinGroup::symmetric(d.q[i])),
                       order_cap));
  }
  Subgroup qcopy{acc.q, {}};
  GroupRef ambient = acyc_ambient(d);
  for (int u : d.Q.members)
    qcopy.members.push_back(acc.q->index_of(ambient->elem(u)));
  std::sort(qcopy.members.begin(), qcopy.members.end());
  return bundle_restrict_right(acc, qcopy);
}

bool faithfulness_shadow(const AcycData& d, int k_max, std::int64_t order_cap) {
  auto bad = acyc_validate(d);
  if (!bad.empty()) throw ValidationError("invalid tuple: " + bad.front());
  for (int k = 1; k <= k_max; ++k) {
    std::int64_t big = lcm64(static_cast<std::int64_t>(k) * d.n, 1);
    for (int i = 1; i <= d.r; ++i) big = lcm64(big, d.m[i - 1]);
    // keep enough torsion points per circle to separate the slots
    std::int64_t scale = 1;
    for (int i = 1; i <= d.r; ++i)
      while (big * scale / d.m[i - 1] < d.q[i]) ++scale;
    big *= scale;
    std::int64_t cap =
        order_cap > 0 ? order_cap : default_caps().materialize_order;
    if (big > cap) throw CapExceeded("finite circle model too large");
    int big_m = static_cast<int>(big);
    BundleData fin = finite_model_bundle(d, big_m, order_cap);
    GroupRef gamma = fin.gamma;
    GroupRef qreal = fin.q;
    int ggen = big_m == 1 ? gamma->identity() : gamma->generator_indices()[0];
    int lamgen = gamma->power(ggen, big_m / (k * d.n));
    // H_k: homs C_{kn} -> Q with the i >= 1 kernel conditions
    GroupRef ambient = acyc_ambient(d);
    std::vector<std::vector<int>> fib(fin.base.n);
    for (int e = 0; e < fin.total.n; ++e) fib[fin.proj[e]].push_back(e);
    for (int u = 0; u < qreal->order(); ++u) {
      if (qreal->power(u, static_cast<std::int64_t>(k) * d.n) !=
          qreal->identity())
        continue;
      auto parts = acyc_factor_perms(
          d, ambient->index_of(qreal->elem(u)));
      bool ok = true;
      for (int i = 1; i <= d.r && ok; ++i)
        ok = (static_cast<std::int64_t>(k) * d.n / d.l[i - 1]) %
                 perm_order(parts[i]) ==
             0;
      if (!ok) continue;
      int uinv = qreal->inv(u);
      for (int b = 0; b < fin.base.n; ++b) {
        if (fin.base.lact[lamgen][b] != fin.base.ract[u][b]) continue;
        // twisted orbits of the fiber under e -> lam e sigma(lam)^-1
        std::map<int, int> local;
        for (std::size_t x = 0; x < fib[b].size(); ++x) local[fib[b][x]] = (int)x;
        Perm tw(fib[b].size());
        for (std::size_t x = 0; x < fib[b].size(); ++x)
          tw[x] = local.at(fin.total.lact[lamgen][fin.total.ract[uinv][fib[b][x]]]);
        auto orbits = perm_orbits(static_cast<int>(fib[b].size()), {tw});
        std::set<std::vector<int>> osets;
        for (const auto& o : orbits) {
          std::vector<int> pts;
          for (int x : o) pts.push_back(fib[b][x]);
          std::sort(pts.begin(), pts.end());
          osets.insert(std::move(pts));
        }
        for (int s = 0; s < qreal->order(); ++s) {
          if (s == qreal->identity()) continue;
          if (qreal->conj(u, s) != u) continue;
          if (fin.base.ract[s][b] != b) continue;
          bool moves = false;
          for (const auto& o : osets) {
            std::vector<int> img;
            for (int e : o) img.push_back(fin.total.ract[s][e]);
            std::sort(img.begin(), img.end());
            // s permutes the orbit-sum basis; it moves a vector iff it
            // moves some orbit
            if (img != o) {
              moves = true;
              break;
            }
          }
          if (!moves) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace eqc
