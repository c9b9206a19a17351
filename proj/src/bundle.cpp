#include "eqc/bundle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "eqc/errors.hpp"

namespace eqc {

void BundleData::validate() const {
  base.validate();
  total.validate();
  if (!same_group(base.left, gamma) || !same_group(total.left, gamma) ||
      !same_group(base.right, q) || !same_group(total.right, q))
    throw GroupMismatch("bundle biset groups do not match");
  if (static_cast<int>(proj.size()) != total.n)
    throw ValidationError("projection size mismatch");
  if (static_cast<int>(sqnorm.size()) != total.n)
    throw ValidationError("squared-norm table size mismatch");
  if (!base_label.empty() && static_cast<int>(base_label.size()) != base.n)
    throw ValidationError("base label size mismatch");
  for (int e = 0; e < total.n; ++e)
    if (proj[e] < 0 || proj[e] >= base.n)
      throw ValidationError("projection out of range");
  for (int g = 0; g < gamma->order(); ++g)
    for (int e = 0; e < total.n; ++e)
      if (proj[total.lact[g][e]] != base.lact[g][proj[e]])
        throw ActionMismatch("projection is not left-equivariant");
  for (int s = 0; s < q->order(); ++s)
    for (int e = 0; e < total.n; ++e)
      if (proj[total.ract[s][e]] != base.ract[s][proj[e]])
        throw ActionMismatch("projection is not right-equivariant");
}

std::vector<int> BundleData::fiber_points(int b) const {
  std::vector<int> pts;
  for (int e = 0; e < total.n; ++e)
    if (proj[e] == b) pts.push_back(e);
  return pts;
}

int BundleData::fiber_dim(int b) const {
  int d = 0;
  for (int e = 0; e < total.n; ++e)
    if (proj[e] == b) ++d;
  return d;
}

std::vector<int> BundleData::isotropy(int b) const {
  std::vector<int> iso;
  for (int s = 0; s < q->order(); ++s)
    if (base.ract[s][b] == b) iso.push_back(s);
  return iso;
}

BundleData make_bundle(const GroupRef& gamma, const GroupRef& q, BiSet base,
                       BiSet total, std::vector<int> proj) {
  BundleData eta;
  eta.gamma = gamma;
  eta.q = q;
  eta.base = std::move(base);
  eta.total = std::move(total);
  eta.proj = std::move(proj);
  eta.sqnorm.assign(eta.total.n, 1);
  eta.validate();
  return eta;
}

BundleData point_base_bundle(const GroupRef& gamma, const GroupRef& q,
                             const BiSet& fiber) {
  return make_bundle(gamma, q, trivial_biset(gamma, q, 1), fiber,
                     std::vector<int>(fiber.n, 0));
}

BundleData empty_bundle(const GroupRef& gamma, const GroupRef& q) {
  return make_bundle(gamma, q, trivial_biset(gamma, q, 0),
                     trivial_biset(gamma, q, 0), {});
}

BundleData bundle_disjoint_union(const BundleData& a, const BundleData& b) {
  BundleData out;
  out.gamma = a.gamma;
  out.q = a.q;
  out.base = disjoint_union(a.base, b.base);
  out.total = disjoint_union(a.total, b.total);
  out.proj = a.proj;
  for (int p : b.proj) out.proj.push_back(a.base.n + p);
  out.sqnorm = a.sqnorm;
  out.sqnorm.insert(out.sqnorm.end(), b.sqnorm.begin(), b.sqnorm.end());
  out.validate();
  return out;
}

FaithfulnessReport is_q_faithful(const BundleData& eta) {
  for (int b = 0; b < eta.base.n; ++b) {
    auto fib = eta.fiber_points(b);
    for (int s : eta.isotropy(b)) {
      if (s == eta.q->identity()) continue;
      bool moves = false;
      for (int e : fib)
        if (eta.total.ract[s][e] != e) {
          moves = true;
          break;
        }
      if (!moves) return FaithfulnessReport{false, b, s};
    }
  }
  return FaithfulnessReport{};
}

BundleData bundle_product(const BundleData& a, const BundleData& b) {
  if (!same_group(a.gamma, b.gamma))
    throw GroupMismatch("product factors over different left groups");
  GroupRef gamma = a.gamma;
  GroupRef q = FinGroup::direct_product(a.q, b.q);
  // decode product-group elements into factor indices
  int da = a.q->degree(), db = b.q->degree();
  std::vector<std::pair<int, int>> split(q->order());
  for (int s = 0; s < q->order(); ++s) {
    const Perm& p = q->elem(s);
    Perm pa(p.begin(), p.begin() + da), pb(db);
    for (int i = 0; i < db; ++i) pb[i] = p[da + i] - da;
    split[s] = {a.q->index_of(pa), b.q->index_of(pb)};
  }
  auto base_enc = [&](int x, int y) { return x + a.base.n * y; };
  BiSet base = trivial_biset(gamma, q, a.base.n * b.base.n);
  for (int g = 0; g < gamma->order(); ++g)
    for (int x = 0; x < a.base.n; ++x)
      for (int y = 0; y < b.base.n; ++y)
        base.lact[g][base_enc(x, y)] =
            base_enc(a.base.lact[g][x], b.base.lact[g][y]);
  for (int s = 0; s < q->order(); ++s)
    for (int x = 0; x < a.base.n; ++x)
      for (int y = 0; y < b.base.n; ++y)
        base.ract[s][base_enc(x, y)] =
            base_enc(a.base.ract[split[s].first][x],
                     b.base.ract[split[s].second][y]);
  // total = E_a x B_b  disjoint-union  B_a x E_b
  int na = a.total.n * b.base.n;
  int nt = na + a.base.n * b.total.n;
  auto enc_a = [&](int e, int y) { return e + a.total.n * y; };
  auto enc_b = [&](int x, int f) { return na + x + a.base.n * f; };
  BiSet total = trivial_biset(gamma, q, nt);
  std::vector<int> proj(nt);
  std::vector<std::int64_t> sq(nt);
  for (int e = 0; e < a.total.n; ++e)
    for (int y = 0; y < b.base.n; ++y) {
      proj[enc_a(e, y)] = base_enc(a.proj[e], y);
      sq[enc_a(e, y)] = a.sqnorm[e];
    }
  for (int x = 0; x < a.base.n; ++x)
    for (int f = 0; f < b.total.n; ++f) {
      proj[enc_b(x, f)] = base_enc(x, b.proj[f]);
      sq[enc_b(x, f)] = b.sqnorm[f];
    }
  for (int g = 0; g < gamma->order(); ++g) {
    for (int e = 0; e < a.total.n; ++e)
      for (int y = 0; y < b.base.n; ++y)
        total.lact[g][enc_a(e, y)] =
            enc_a(a.total.lact[g][e], b.base.lact[g][y]);
    for (int x = 0; x < a.base.n; ++x)
      for (int f = 0; f < b.total.n; ++f)
        total.lact[g][enc_b(x, f)] =
            enc_b(a.base.lact[g][x], b.total.lact[g][f]);
  }
  for (int s = 0; s < q->order(); ++s) {
    auto [sa, sb] = split[s];
    for (int e = 0; e < a.total.n; ++e)
      for (int y = 0; y < b.base.n; ++y)
        total.ract[s][enc_a(e, y)] =
            enc_a(a.total.ract[sa][e], b.base.ract[sb][y]);
    for (int x = 0; x < a.base.n; ++x)
      for (int f = 0; f < b.total.n; ++f)
        total.ract[s][enc_b(x, f)] =
            enc_b(a.base.ract[sa][x], b.total.ract[sb][f]);
  }
  BundleData out;
  out.gamma = gamma;
  out.q = q;
  out.base = std::move(base);
  out.total = std::move(total);
  out.proj = std::move(proj);
  out.sqnorm = std::move(sq);
  out.validate();
  return out;
}

BundleData bundle_restrict_right(const BundleData& eta, const Subgroup& qsub) {
  if (!same_group(qsub.parent, eta.q))
    throw GroupMismatch("subgroup of a different right group");
  GroupRef q2 = qsub.realize();
  BundleData out;
  out.gamma = eta.gamma;
  out.q = q2;
  out.base = trivial_biset(eta.gamma, q2, eta.base.n);
  out.total = trivial_biset(eta.gamma, q2, eta.total.n);
  out.base.lact = eta.base.lact;
  out.total.lact = eta.total.lact;
  for (int s = 0; s < q2->order(); ++s) {
    int orig = eta.q->index_of(q2->elem(s));
    out.base.ract[s] = eta.base.ract[orig];
    out.total.ract[s] = eta.total.ract[orig];
  }
  out.proj = eta.proj;
  out.sqnorm = eta.sqnorm;
  out.base_label = eta.base_label;
  out.validate();
  return out;
}

BundleData sym_power(const BundleData& eta, int q, const Subgroup& sym,
                     std::int64_t order_cap) {
  if (q < 1) throw ValidationError("symmetric power requires q >= 1");
  if (!same_group(sym.parent, FinGroup::symmetric(q)))
    throw GroupMismatch("symmetry subgroup must live in Sigma_q");
  std::int64_t cap =
      order_cap > 0 ? order_cap : default_caps().materialize_order;
  double worder = sym.order();
  for (int i = 0; i < q; ++i) worder *= eta.q->order();
  if (worder > static_cast<double>(cap))
    throw OrderCapExceeded("wreath right group exceeds materialization cap");

  // materialize Sigma wr Q on q * d points
  WreathGroup wg{q, eta.q};
  int d = std::max(eta.q->degree(), 1);
  std::vector<Perm> wgens;
  for (const Perm& g : eta.q->generators())
    for (int blk = 0; blk < q; ++blk) {
      Perm p = perm_identity(q * d);
      if (eta.q->degree())
        for (int i = 0; i < d; ++i) p[blk * d + i] = blk * d + g[i];
      wgens.push_back(p);
    }
  GroupRef symreal = sym.realize();
  for (const Perm& s : symreal->generators()) {
    Perm p(q * d);
    for (int blk = 0; blk < q; ++blk)
      for (int i = 0; i < d; ++i) p[blk * d + i] = s[blk] * d + i;
    wgens.push_back(p);
  }
  GroupRef w = FinGroup::from_generators(q * d, wgens, cap);
  std::vector<WreathElem> welem(w->order());
  for (int i = 0; i < w->order(); ++i) welem[i] = wg.from_perm(w->elem(i));

  const GroupRef& gamma = eta.gamma;
  // base tuples, slot 0 least significant
  int nb = 1;
  for (int i = 0; i < q; ++i) {
    if (static_cast<double>(nb) * eta.base.n > 1e7)
      throw OrderCapExceeded("symmetric power base too large");
    nb *= eta.base.n;
  }
  auto digit = [&](int t, int i) {
    for (int k = 0; k < i; ++k) t /= eta.base.n;
    return t % eta.base.n;
  };
  auto tuple_enc = [&](const std::vector<int>& v) {
    int t = 0;
    for (int i = q - 1; i >= 0; --i) t = t * eta.base.n + v[i];
    return t;
  };
  BiSet base = trivial_biset(gamma, w, nb);
  std::vector<int> tup(q), moved(q);
  for (int t = 0; t < nb; ++t) {
    for (int i = 0; i < q; ++i) tup[i] = digit(t, i);
    for (int g = 0; g < gamma->order(); ++g) {
      for (int i = 0; i < q; ++i) moved[i] = eta.base.lact[g][tup[i]];
      base.lact[g][t] = tuple_enc(moved);
    }
    for (int s = 0; s < w->order(); ++s) {
      const WreathElem& we = welem[s];
      for (int i = 0; i < q; ++i)
        moved[i] = eta.base.ract[we.a[we.s[i]]][tup[we.s[i]]];
      base.ract[s][t] = tuple_enc(moved);
    }
  }
  // fibers: direct sum over slots
  std::vector<std::vector<int>> fib(eta.base.n);
  std::vector<int> rank(eta.total.n);
  for (int e = 0; e < eta.total.n; ++e) {
    rank[e] = static_cast<int>(fib[eta.proj[e]].size());
    fib[eta.proj[e]].push_back(e);
  }
  // offsets per (tuple, slot)
  std::vector<std::vector<int>> offset(nb, std::vector<int>(q + 1, 0));
  int ntot = 0;
  std::vector<int> tproj;
  std::vector<std::int64_t> tsq;
  std::vector<std::pair<std::pair<int, int>, int>> tdesc;  // ((t, i), e)
  for (int t = 0; t < nb; ++t)
    for (int i = 0; i < q; ++i) {
      offset[t][i] = ntot;
      int b = digit(t, i);
      for (int e : fib[b]) {
        tdesc.push_back({{t, i}, e});
        tproj.push_back(t);
        tsq.push_back(eta.sqnorm[e]);
        ++ntot;
      }
      offset[t][i + 1] = ntot;
    }
  BiSet total = trivial_biset(gamma, w, ntot);
  for (int p = 0; p < ntot; ++p) {
    auto [ti, e] = tdesc[p];
    auto [t, i] = ti;
    for (int g = 0; g < gamma->order(); ++g) {
      int nt = base.lact[g][t];
      int ne = eta.total.lact[g][e];
      total.lact[g][p] = offset[nt][i] + rank[ne];
    }
    for (int s = 0; s < w->order(); ++s) {
      const WreathElem& we = welem[s];
      int nt = base.ract[s][t];
      // slot i of the old tuple feeds slot j with we.s[j] = i
      int j = perm_inverse(we.s)[i];
      int ne = eta.total.ract[we.a[i]][e];
      total.ract[s][p] = offset[nt][j] + rank[ne];
    }
  }
  BundleData out;
  out.gamma = gamma;
  out.q = w;
  out.base = std::move(base);
  out.total = std::move(total);
  out.proj = std::move(tproj);
  out.sqnorm = std::move(tsq);
  out.validate();
  return out;
}

namespace {

EtaBundle eta_core(const BundleData& eta, const Subgroup& lambda,
                   const Subgroup* k) {
  if (lambda.parent != eta.gamma && !same_group(lambda.parent, eta.gamma))
    throw GroupMismatch("subgroup of a different group");
  lambda.validate();
  if (!is_normal(lambda)) throw NotNormal("eta(Lambda) requires Lambda normal");
  if (k) {
    k->validate();
    if (!is_normal(*k)) throw NotNormal("K must be normal");
    for (int m : k->members)
      if (!lambda.contains(m)) throw NotNested("K must be contained in Lambda");
  }
  const GroupRef& gamma = eta.gamma;
  const GroupRef& q = eta.q;
  GroupRef lam = lambda.realize();
  // lam element index -> parent index
  std::vector<int> to_parent(lam->order());
  std::vector<int> to_lam(gamma->order(), -1);
  for (int i = 0; i < lam->order(); ++i) {
    to_parent[i] = gamma->index_of(lam->elem(i));
    to_lam[to_parent[i]] = i;
  }
  std::vector<GroupHom> sigmas = enumerate_homs(lam, q);
  std::map<std::vector<int>, int> sigma_index;
  for (std::size_t i = 0; i < sigmas.size(); ++i)
    sigma_index[sigmas[i].map] = static_cast<int>(i);

  std::vector<std::vector<int>> fib(eta.base.n);
  for (int e = 0; e < eta.total.n; ++e) fib[eta.proj[e]].push_back(e);

  auto twisted_fixed_base = [&](const GroupHom& sigma, int b) {
    for (int i = 0; i < lam->order(); ++i)
      if (eta.base.lact[to_parent[i]][b] != eta.base.ract[sigma.map[i]][b])
        return false;
    return true;
  };
  auto rel_ok = [&](const GroupHom& sigma, int b) {
    if (!k) return true;
    for (int m : k->members) {
      int sk = sigma.map[to_lam[m]];
      int skinv = q->inv(sk);
      for (int e : fib[b])
        if (eta.total.lact[m][eta.total.ract[skinv][e]] != e) return false;
    }
    return true;
  };

  EtaBundle out;
  out.sigmas = sigmas;
  std::map<std::pair<int, int>, int> base_index;
  for (std::size_t si = 0; si < sigmas.size(); ++si)
    for (int b = 0; b < eta.base.n; ++b)
      if (twisted_fixed_base(sigmas[si], b) && rel_ok(sigmas[si], b)) {
        base_index[{static_cast<int>(si), b}] =
            static_cast<int>(out.base_sigma.size());
        out.base_sigma.push_back(static_cast<int>(si));
        out.base_point.push_back(b);
      }
  int nb = static_cast<int>(out.base_sigma.size());

  // sigma images under the Gamma and Q actions
  auto gamma_on_sigma = [&](int si, int g) {
    std::vector<int> m(lam->order());
    int ginv = gamma->inv(g);
    for (int i = 0; i < lam->order(); ++i) {
      int conj = gamma->mul(gamma->mul(ginv, to_parent[i]), g);
      m[i] = sigmas[si].map[to_lam[conj]];
    }
    auto it = sigma_index.find(m);
    if (it == sigma_index.end())
      throw ValidationError("hom set not closed under conjugation");
    return it->second;
  };
  auto q_on_sigma = [&](int si, int s) {
    std::vector<int> m(lam->order());
    for (int i = 0; i < lam->order(); ++i)
      m[i] = q->conj(sigmas[si].map[i], s);
    auto it = sigma_index.find(m);
    if (it == sigma_index.end())
      throw ValidationError("hom set not closed under conjugation");
    return it->second;
  };

  BiSet base = trivial_biset(gamma, q, nb);
  for (int p = 0; p < nb; ++p) {
    int si = out.base_sigma[p], b = out.base_point[p];
    for (int g = 0; g < gamma->order(); ++g)
      base.lact[g][p] = base_index.at({gamma_on_sigma(si, g),
                                       eta.base.lact[g][b]});
    for (int s = 0; s < q->order(); ++s)
      base.ract[s][p] = base_index.at({q_on_sigma(si, s),
                                       eta.base.ract[s][b]});
  }

  // fibers: twisted Lambda-orbits of each original fiber
  std::vector<int> tstart(nb + 1, 0);
  std::vector<std::vector<int>> orbits_of(nb);
  std::map<std::pair<int, std::vector<int>>, int> orbit_index;
  std::vector<int> tproj;
  std::vector<std::int64_t> tsq;
  for (int p = 0; p < nb; ++p) {
    int si = out.base_sigma[p], b = out.base_point[p];
    // orbits of e -> lam * e * sigma(lam)^-1 on fib[b]
    std::map<int, int> local;
    for (std::size_t r = 0; r < fib[b].size(); ++r)
      local[fib[b][r]] = static_cast<int>(r);
    std::vector<Perm> gens;
    for (int i : lam->generator_indices()) {
      Perm g(fib[b].size());
      int sinv = q->inv(sigmas[si].map[i]);
      for (std::size_t r = 0; r < fib[b].size(); ++r)
        g[r] = local.at(
            eta.total.lact[to_parent[i]][eta.total.ract[sinv][fib[b][r]]]);
      gens.push_back(std::move(g));
    }
    for (auto orbit : perm_orbits(static_cast<int>(fib[b].size()), gens)) {
      std::vector<int> pts;
      std::int64_t sq = 0;
      for (int r : orbit) {
        pts.push_back(fib[b][r]);
        sq += eta.sqnorm[fib[b][r]];
      }
      orbit_index[{p, pts}] = static_cast<int>(tproj.size());
      out.fiber_orbit.push_back(pts);
      tproj.push_back(p);
      tsq.push_back(sq);
    }
    tstart[p + 1] = static_cast<int>(tproj.size());
  }
  int ntot = static_cast<int>(tproj.size());
  BiSet total = trivial_biset(gamma, q, ntot);
  auto find_orbit = [&](int p, int underlying_point) {
    for (int t = tstart[p]; t < tstart[p + 1]; ++t)
      if (std::binary_search(out.fiber_orbit[t].begin(),
                             out.fiber_orbit[t].end(), underlying_point))
        return t;
    throw ValidationError("orbit transport failed");
  };
  // fiber_orbit entries are built sorted (perm_orbits sorts); rely on that
  for (int t = 0; t < ntot; ++t) {
    int p = tproj[t];
    for (int g = 0; g < gamma->order(); ++g)
      total.lact[g][t] =
          find_orbit(base.lact[g][p], eta.total.lact[g][out.fiber_orbit[t][0]]);
    for (int s = 0; s < q->order(); ++s)
      total.ract[s][t] =
          find_orbit(base.ract[s][p], eta.total.ract[s][out.fiber_orbit[t][0]]);
  }
  out.bundle.gamma = gamma;
  out.bundle.q = q;
  out.bundle.base = std::move(base);
  out.bundle.total = std::move(total);
  out.bundle.proj = std::move(tproj);
  out.bundle.sqnorm = std::move(tsq);
  out.bundle.base_label = out.base_sigma;
  out.bundle.validate();
  return out;
}

}  // namespace

EtaBundle eta_lambda(const BundleData& eta, const Subgroup& lambda) {
  return eta_core(eta, lambda, nullptr);
}

EtaBundle eta_lambda_rel(const BundleData& eta, const Subgroup& lambda,
                         const Subgroup& k) {
  return eta_core(eta, lambda, &k);
}

IterPhiWitness iterphi_bundle_iso(const BundleData& eta, const Subgroup& k,
                                  const Subgroup& lambda, const Subgroup& m) {
  for (int x : k.members)
    if (!lambda.contains(x)) throw NotNested("K must be contained in Lambda");
  for (int x : lambda.members)
    if (!m.contains(x)) throw NotNested("Lambda must be contained in M");
  if (!is_q_faithful(eta).faithful)
    throw FaithfulnessHypothesisFails("eta is not Q-faithful");
  EtaBundle mid = eta_lambda_rel(eta, lambda, k);
  if (!is_q_faithful(mid.bundle).faithful)
    throw FaithfulnessHypothesisFails("eta(Lambda|K) is not Q-faithful");
  EtaBundle lhs = eta_lambda_rel(eta, m, k);
  EtaBundle rhs = eta_lambda_rel(mid.bundle, m, lambda);

  const GroupRef& gamma = eta.gamma;
  GroupRef mm = m.realize();
  GroupRef lam = lambda.realize();
  std::vector<int> m_to_parent(mm->order()), lam_to_parent(lam->order());
  for (int i = 0; i < mm->order(); ++i)
    m_to_parent[i] = gamma->index_of(mm->elem(i));
  for (int i = 0; i < lam->order(); ++i)
    lam_to_parent[i] = gamma->index_of(lam->elem(i));
  std::vector<int> parent_to_m(gamma->order(), -1);
  for (int i = 0; i < mm->order(); ++i) parent_to_m[m_to_parent[i]] = i;

  // restriction Hom(M,Q) -> Hom(Lambda,Q) by index
  std::map<std::vector<int>, int> mid_sigma_index;
  for (std::size_t i = 0; i < mid.sigmas.size(); ++i)
    mid_sigma_index[mid.sigmas[i].map] = static_cast<int>(i);
  auto restrict_sigma = [&](int si) {
    std::vector<int> r(lam->order());
    for (int i = 0; i < lam->order(); ++i)
      r[i] = lhs.sigmas[si].map[parent_to_m[lam_to_parent[i]]];
    auto it = mid_sigma_index.find(r);
    return it == mid_sigma_index.end() ? -1 : it->second;
  };
  std::map<std::vector<int>, int> rhs_sigma_index;
  for (std::size_t i = 0; i < rhs.sigmas.size(); ++i)
    rhs_sigma_index[rhs.sigmas[i].map] = static_cast<int>(i);

  std::map<std::pair<int, int>, int> mid_base_index, rhs_base_index;
  for (std::size_t p = 0; p < mid.base_sigma.size(); ++p)
    mid_base_index[{mid.base_sigma[p], mid.base_point[p]}] = static_cast<int>(p);
  for (std::size_t p = 0; p < rhs.base_sigma.size(); ++p)
    rhs_base_index[{rhs.base_sigma[p], rhs.base_point[p]}] = static_cast<int>(p);

  IterPhiWitness wit;
  int nb = static_cast<int>(lhs.base_sigma.size());
  if (static_cast<int>(rhs.base_sigma.size()) != nb) return wit;
  wit.base_map.assign(nb, -1);
  std::vector<char> used(nb, 0);
  for (int p = 0; p < nb; ++p) {
    int si = lhs.base_sigma[p], b = lhs.base_point[p];
    int mid_si = restrict_sigma(si);
    if (mid_si < 0) return wit;
    auto mit = mid_base_index.find({mid_si, b});
    if (mit == mid_base_index.end()) return wit;
    // the rhs sigma is the same hom of M, but valued against rhs.sigmas
    auto sit = rhs_sigma_index.find(lhs.sigmas[si].map);
    if (sit == rhs_sigma_index.end()) return wit;
    auto rit = rhs_base_index.find({sit->second, mit->second});
    if (rit == rhs_base_index.end()) return wit;
    if (used[rit->second]) return wit;
    used[rit->second] = 1;
    wit.base_map[p] = rit->second;
  }
  // equivariance of the base bijection
  for (int p = 0; p < nb; ++p) {
    for (int g = 0; g < gamma->order(); ++g)
      if (wit.base_map[lhs.bundle.base.lact[g][p]] !=
          rhs.bundle.base.lact[g][wit.base_map[p]])
        return wit;
    for (int s = 0; s < eta.q->order(); ++s)
      if (wit.base_map[lhs.bundle.base.ract[s][p]] !=
          rhs.bundle.base.ract[s][wit.base_map[p]])
        return wit;
  }
  // fiber correspondence: an M-twisted orbit of original fiber points maps
  // to the rhs orbit of mid orbit-points covering the same underlying set
  int ntot = lhs.bundle.total.n;
  if (rhs.bundle.total.n != ntot) return wit;
  wit.fiber_map.assign(ntot, -1);
  std::vector<char> fused(ntot, 0);
  for (int t = 0; t < ntot; ++t) {
    int p = lhs.bundle.proj[t];
    int rp = wit.base_map[p];
    std::set<int> under(lhs.fiber_orbit[t].begin(), lhs.fiber_orbit[t].end());
    int match = -1;
    for (int rt = 0; rt < ntot; ++rt) {
      if (rhs.bundle.proj[rt] != rp) continue;
      std::set<int> cover;
      for (int midpt : rhs.fiber_orbit[rt])
        for (int orig : mid.fiber_orbit[midpt]) cover.insert(orig);
      if (cover == under) {
        match = rt;
        break;
      }
    }
    if (match < 0 || fused[match]) return wit;
    fused[match] = 1;
    wit.fiber_map[t] = match;
    if (lhs.bundle.sqnorm[t] != rhs.bundle.sqnorm[match]) return wit;
  }
  wit.isomorphic = true;
  return wit;
}

IfcritReport ifcrit_check(const BundleData& eta, const Subgroup& lambda) {
  lambda.validate();
  const GroupRef& gamma = eta.gamma;
  const GroupRef& q = eta.q;
  GroupRef lamreal = lambda.realize();
  IfcritReport rep;
  std::ostringstream detail;
  std::vector<std::vector<int>> fib(eta.base.n);
  for (int e = 0; e < eta.total.n; ++e) fib[eta.proj[e]].push_back(e);

  for (const auto& hsub : enumerate_subgroups(lamreal)) {
    // lift H to parent indices
    GroupRef hreal = hsub.realize();
    std::vector<int> h_parent;
    for (int i = 0; i < hreal->order(); ++i)
      h_parent.push_back(gamma->index_of(hreal->elem(i)));
    for (const auto& sigma : enumerate_homs(hreal, q)) {
      for (int b = 0; b < eta.base.n; ++b) {
        bool fixed = true;
        for (int i = 0; i < hreal->order() && fixed; ++i)
          fixed = eta.base.lact[h_parent[i]][b] ==
                  eta.base.ract[sigma.map[i]][b];
        if (!fixed) continue;
        // twisted orbits on the fiber
        std::map<int, int> local;
        for (std::size_t r = 0; r < fib[b].size(); ++r)
          local[fib[b][r]] = static_cast<int>(r);
        std::vector<Perm> gens;
        for (int i = 0; i < hreal->order(); ++i) {
          Perm g(fib[b].size());
          int sinv = q->inv(sigma.map[i]);
          for (std::size_t r = 0; r < fib[b].size(); ++r)
            g[r] = local.at(
                eta.total.lact[h_parent[i]][eta.total.ract[sinv][fib[b][r]]]);
          gens.push_back(std::move(g));
        }
        auto orbits = perm_orbits(static_cast<int>(fib[b].size()), gens);
        if (orbits.empty()) {
          if (rep.cond_i) {
            detail << "(i) fails: |H|=" << hreal->order() << " base " << b
                   << " has empty fiber; ";
            rep.cond_i = false;
          }
          continue;
        }
        // orbit contents in original total-point labels, as sorted sets
        std::vector<std::vector<int>> osets;
        for (const auto& o : orbits) {
          std::vector<int> s;
          for (int r : o) s.push_back(fib[b][r]);
          std::sort(s.begin(), s.end());
          osets.push_back(std::move(s));
        }
        auto image_set = [&](const std::vector<int>& pts, int lp, int s) {
          // lambda * v * s (left by lp, right by s)
          std::vector<int> img;
          for (int e : pts) img.push_back(eta.total.ract[s][eta.total.lact[lp][e]]);
          std::sort(img.begin(), img.end());
          return img;
        };
        // condition (ii)
        for (int lp : lambda.members) {
          bool in_h = std::find(h_parent.begin(), h_parent.end(), lp) !=
                      h_parent.end();
          if (in_h) continue;
          for (int s = 0; s < q->order(); ++s) {
            if (eta.base.lact[lp][b] != eta.base.ract[s][b]) continue;
            bool exists = false;
            for (const auto& o : osets)
              if (image_set(o, lp, q->identity()) !=
                  image_set(o, gamma->identity(), s)) {
                exists = true;
                break;
              }
            if (!exists && rep.cond_ii) {
              detail << "(ii) fails: base " << b << " lambda-elt " << lp
                     << " s " << s << "; ";
              rep.cond_ii = false;
            }
          }
        }
        // condition (iii)
        for (int s = 0; s < q->order(); ++s) {
          if (s == q->identity() || eta.base.ract[s][b] != b) continue;
          bool commutes = true;
          for (int i = 0; i < hreal->order() && commutes; ++i)
            commutes = q->mul(s, sigma.map[i]) == q->mul(sigma.map[i], s);
          if (!commutes) continue;
          bool exists = false;
          for (const auto& o : osets)
            if (image_set(o, gamma->identity(), s) != o) {
              exists = true;
              break;
            }
          if (!exists && rep.cond_iii) {
            detail << "(iii) fails: base " << b << " s " << s << "; ";
            rep.cond_iii = false;
          }
        }
      }
    }
  }
  rep.detail = detail.str();
  return rep;
}

bool inheritably_faithful_bruteforce(const BundleData& eta,
                                     const Subgroup& lambda, int q_max,
                                     std::int64_t order_cap) {
  for (int q = 1; q <= q_max; ++q) {
    BundleData sp =
        sym_power(eta, q, whole_group(FinGroup::symmetric(q)), order_cap);
    EtaBundle el = eta_lambda(sp, lambda);
    if (!is_q_faithful(el.bundle).faithful) return false;
  }
  return true;
}

}  // namespace eqc
