#include "eqc/geosym.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "eqc/caps.hpp"
#include "eqc/errors.hpp"

namespace eqc {
namespace {

using HomKey = std::vector<WreathElem>;

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

bool same_target(const WreathGroup& a, const WreathGroup& b) {
  return a.q == b.q && same_group(a.base, b.base);
}

// Conjugate every value of a tabulated hom by g.
HomKey conj_key(const WreathGroup& w, const HomKey& key, const WreathElem& g) {
  HomKey out;
  out.reserve(key.size());
  for (const auto& x : key) out.push_back(w.conj(x, g));
  return out;
}

// Breadth-first closure of a hom under conjugation by the wreath group's
// generators.  Calls visit(map, witness) for every class member, where
// conj(start, witness) == map; stops early when visit returns false.
void conjugacy_class_walk(
    const WreathGroup& w, const HomKey& start, std::int64_t cap,
    const std::function<bool(const HomKey&, const WreathElem&)>& visit) {
  auto gens = wreath_generators(w);
  std::set<HomKey> seen;
  std::deque<std::pair<HomKey, WreathElem>> queue;
  seen.insert(start);
  queue.emplace_back(start, w.identity());
  while (!queue.empty()) {
    auto [cur, wit] = queue.front();
    queue.pop_front();
    if (!visit(cur, wit)) return;
    for (const auto& g : gens) {
      HomKey next = conj_key(w, cur, g);
      if (!seen.insert(next).second) continue;
      if (static_cast<std::int64_t>(seen.size()) > cap)
        throw EnumerationCapExceeded(
            "conjugacy-class search exceeded the candidate cap");
      queue.emplace_back(next, w.mul(wit, g));
    }
  }
}

// Block-diagonal embedding of an element of Sigma_t wr Q at `offset` inside
// Sigma_q wr Q.
WreathElem embed_block(const WreathGroup& big, const WreathElem& x,
                       int offset) {
  WreathElem out = big.identity();
  int t = static_cast<int>(x.s.size());
  for (int r = 0; r < t; ++r) {
    out.s[offset + r] = offset + x.s[r];
    out.a[offset + r] = x.a[r];
  }
  return out;
}

}  // namespace

bool is_irreducible(const WreathHom& sigma) {
  std::vector<Perm> proj;
  proj.reserve(sigma.map.size());
  for (const auto& x : sigma.map) proj.push_back(x.s);
  return perm_orbits(sigma.target.q, proj).size() == 1;
}

std::vector<WreathElem> wreath_generators(const WreathGroup& w) {
  std::vector<WreathElem> gens;
  for (int i = 0; i + 1 < w.q; ++i) {
    WreathElem t = w.identity();
    std::swap(t.s[i], t.s[i + 1]);
    gens.push_back(t);
  }
  for (int g : w.base->generator_indices()) {
    WreathElem c = w.identity();
    c.a[0] = g;
    gens.push_back(c);
  }
  return gens;
}

std::optional<WreathElem> conjugator_between(const WreathHom& sigma,
                                             const WreathHom& target,
                                             std::int64_t orbit_cap) {
  if (!same_group(sigma.lambda, target.lambda))
    throw GroupMismatch("conjugacy test needs a common source group");
  if (!same_target(sigma.target, target.target)) return std::nullopt;
  std::int64_t cap =
      orbit_cap > 0 ? orbit_cap : default_caps().hom_candidates;
  std::optional<WreathElem> found;
  conjugacy_class_walk(sigma.target, sigma.map, cap,
                       [&](const HomKey& key, const WreathElem& wit) {
                         if (key == target.map) {
                           found = wit;
                           return false;
                         }
                         return true;
                       });
  return found;
}

IrreducibleCatalog irreducible_catalog(const GroupRef& lambda,
                                       const GroupRef& q,
                                       std::int64_t orbit_cap) {
  if (lambda->order() > default_caps().group_order ||
      q->order() > default_caps().group_order)
    throw OrderCapExceeded("irreducible catalog input exceeds the group cap");
  std::int64_t cap =
      orbit_cap > 0 ? orbit_cap : default_caps().hom_candidates;
  IrreducibleCatalog cat;
  cat.lambda = lambda;
  cat.q = q;
  auto subs = enumerate_subgroups(lambda);
  for (int card = 1; card <= lambda->order(); ++card) {
    WreathGroup w{card, q};
    // Every irreducible hom is conjugate to one induced from a point
    // stabilizer, so (subgroup of index card, cofactor hom) candidates
    // exhaust the classes.
    std::vector<HomKey> cands;
    std::set<HomKey> cand_set;
    for (const auto& h : subs) {
      if (lambda->order() / h.order() != card) continue;
      GroupRef hreal = h.realize();
      for (const auto& alpha : enumerate_homs(hreal, q)) {
        WreathHom ind = induced_wreath_hom(h, alpha, card);
        if (cand_set.insert(ind.map).second) cands.push_back(ind.map);
      }
    }
    std::set<HomKey> assigned;
    std::vector<HomKey> reps;
    for (const auto& c : cands) {
      if (assigned.count(c)) continue;
      HomKey least = c;
      conjugacy_class_walk(w, c, cap,
                           [&](const HomKey& key, const WreathElem&) {
                             if (key < least) least = key;
                             if (cand_set.count(key)) assigned.insert(key);
                             return true;
                           });
      reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    for (auto& r : reps) {
      cat.taus.push_back(WreathHom{lambda, w, std::move(r)});
      cat.t.push_back(card);
    }
  }
  return cat;
}

std::vector<WreathElem> centralizer(const WreathHom& sigma,
                                    std::int64_t order_cap) {
  std::int64_t cap =
      order_cap > 0 ? order_cap : default_caps().materialize_order;
  if (sigma.target.order_double() > static_cast<double>(cap))
    throw OrderCapExceeded("centralizer sweep exceeds the order cap");
  std::vector<WreathElem> out;
  sigma.target.for_each_element([&](const WreathElem& g) {
    if (sigma.conjugate_by_fixes(g)) out.push_back(g);
    return true;
  });
  return out;
}

WreathHom tau_of(const IrreducibleCatalog& cat, const std::vector<int>& n) {
  if (n.size() != cat.taus.size())
    throw ValidationError("multiplicity vector length mismatch");
  std::optional<WreathHom> acc;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0) throw ValidationError("negative multiplicity");
    for (int c = 0; c < n[i]; ++c)
      acc = acc ? block_sum(*acc, cat.taus[i]) : cat.taus[i];
  }
  if (!acc) throw ValidationError("tau(n) needs a positive multiplicity");
  return *acc;
}

BlockDecomposition classify(const IrreducibleCatalog& cat,
                            const WreathHom& sigma, std::int64_t orbit_cap) {
  if (!same_group(sigma.lambda, cat.lambda) ||
      !same_group(sigma.target.base, cat.q))
    throw GroupMismatch("classify: hom does not match the catalog");
  const WreathGroup& w = sigma.target;
  auto dec = decompose(sigma);
  int lam_order = sigma.lambda->order();

  // Restrict sigma to each projection orbit and match it to a catalog entry.
  struct OrbitMatch {
    int tau = -1;
    WreathElem conj;  // inside Sigma_t wr Q
  };
  std::vector<OrbitMatch> matches(dec.orbits.size());
  for (std::size_t j = 0; j < dec.orbits.size(); ++j) {
    const auto& orbit = dec.orbits[j];
    int t = static_cast<int>(orbit.size());
    std::vector<int> pos(w.q, -1);
    for (int r = 0; r < t; ++r) pos[orbit[r]] = r;
    WreathGroup sub{t, w.base};
    WreathHom restr{sigma.lambda, sub, {}};
    restr.map.reserve(lam_order);
    for (int lamel = 0; lamel < lam_order; ++lamel) {
      WreathElem x = sub.identity();
      for (int r = 0; r < t; ++r) {
        x.s[r] = pos[sigma.map[lamel].s[orbit[r]]];
        x.a[r] = sigma.map[lamel].a[orbit[r]];
      }
      restr.map.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < cat.taus.size(); ++i) {
      if (cat.t[i] != t) continue;
      if (auto g = conjugator_between(restr, cat.taus[i], orbit_cap)) {
        matches[j] = {static_cast<int>(i), *g};
        break;
      }
    }
    if (matches[j].tau < 0)
      throw Error("classify: orbit matches no catalog irreducible");
  }

  BlockDecomposition out;
  out.n.assign(cat.taus.size(), 0);
  for (const auto& m : matches) ++out.n[m.tau];

  // Assemble the conjugator: u relabels points into catalog-ordered blocks,
  // v fixes up each block with the per-orbit conjugator.
  WreathElem u = w.identity();
  WreathElem v = w.identity();
  int offset = 0;
  for (std::size_t i = 0; i < cat.taus.size(); ++i) {
    for (std::size_t j = 0; j < dec.orbits.size(); ++j) {
      if (matches[j].tau != static_cast<int>(i)) continue;
      const auto& orbit = dec.orbits[j];
      for (int r = 0; r < static_cast<int>(orbit.size()); ++r)
        u.s[offset + r] = orbit[r];
      WreathElem emb = embed_block(w, matches[j].conj, offset);
      v = w.mul(v, emb);  // disjoint blocks commute
      offset += static_cast<int>(orbit.size());
    }
  }
  out.conjugator = w.mul(u, v);

  WreathHom tau = tau_of(cat, out.n);
  for (int lamel = 0; lamel < lam_order; ++lamel) {
    if (!(w.conj(sigma.map[lamel], out.conjugator) == tau.map[lamel]))
      throw Error("classify: conjugator verification failed");
  }
  return out;
}

CentralizerProductWitness centralizer_product_check(
    const std::vector<WreathHom>& taus, const std::vector<int>& n,
    std::int64_t order_cap) {
  if (taus.size() != n.size())
    throw ValidationError("multiplicity vector length mismatch");
  std::int64_t cap =
      order_cap > 0 ? order_cap : default_caps().materialize_order;
  for (const auto& t : taus)
    if (!is_irreducible(t))
      throw ValidationError("centralizer product needs irreducible homs");
  for (std::size_t i = 0; i < taus.size(); ++i)
    for (std::size_t j = i + 1; j < taus.size(); ++j)
      if (conjugator_between(taus[i], taus[j]))
        throw NotPairwiseNonConjugate(
            "centralizer product constituents must be non-conjugate");

  // tau(n) and the per-constituent centralizers.
  std::optional<WreathHom> acc;
  std::vector<std::vector<WreathElem>> cents;
  std::int64_t expected = 1;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (n[i] == 0) {
      cents.emplace_back();
      continue;
    }
    for (int c = 0; c < n[i]; ++c)
      acc = acc ? block_sum(*acc, taus[i]) : taus[i];
    cents.push_back(centralizer(taus[i], order_cap));
    expected *= factorial(n[i]) *
                ipow(static_cast<std::int64_t>(cents.back().size()), n[i]);
  }
  if (!acc) throw ValidationError("empty multiplicity vector");
  if (expected > cap)
    throw OrderCapExceeded("centralizer product exceeds the order cap");
  const WreathHom& tau = *acc;
  const WreathGroup& w = tau.target;

  CentralizerProductWitness out;
  out.expected_order = expected;
  out.actual_order = static_cast<std::int64_t>(centralizer(tau, order_cap).size());

  // Enumerate every element of the product group and its image: per
  // constituent a permutation of its copies and one centralizer element per
  // copy.  Images must be distinct and centralize tau(n).
  std::set<WreathElem> images;
  bool all_central = true;
  struct Part {
    int offset, t, copies;
    const std::vector<WreathElem>* cent;
    std::vector<Perm> copy_perms;
  };
  std::vector<Part> parts;
  int offset = 0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (n[i] == 0) continue;
    Part p{offset, taus[i].target.q, n[i], &cents[i],
           FinGroup::symmetric(n[i])->elems()};
    parts.push_back(std::move(p));
    offset += taus[i].target.q * n[i];
  }
  // odometer over (copy perm, centralizer tuple) per part
  std::vector<std::size_t> perm_ix(parts.size(), 0);
  std::vector<std::vector<std::size_t>> cent_ix;
  for (const auto& p : parts)
    cent_ix.emplace_back(static_cast<std::size_t>(p.copies), 0);
  while (true) {
    WreathElem g = w.identity();
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
      const Part& p = parts[pi];
      const Perm& cp = p.copy_perms[perm_ix[pi]];
      for (int j = 0; j < p.copies; ++j) {
        const WreathElem& c = (*p.cent)[cent_ix[pi][j]];
        int src = p.offset + j * p.t;
        int dst = p.offset + cp[j] * p.t;
        for (int r = 0; r < p.t; ++r) {
          g.s[src + r] = dst + c.s[r];
          g.a[dst + r] = c.a[r];
        }
      }
    }
    if (!images.insert(g).second) all_central = false;  // collision
    if (!tau.conjugate_by_fixes(g)) all_central = false;
    // advance the odometer
    std::size_t pi = 0;
    for (; pi < parts.size(); ++pi) {
      bool carried = true;
      for (auto& ci : cent_ix[pi]) {
        if (++ci < parts[pi].cent->size()) {
          carried = false;
          break;
        }
        ci = 0;
      }
      if (!carried) break;
      if (++perm_ix[pi] < parts[pi].copy_perms.size()) break;
      perm_ix[pi] = 0;
    }
    if (pi == parts.size()) break;
  }
  out.isomorphic = all_central &&
                   static_cast<std::int64_t>(images.size()) == expected &&
                   out.actual_order == expected;
  return out;
}

CentralizerProductWitness centralizer_product_check(
    const IrreducibleCatalog& cat, const std::vector<int>& n,
    std::int64_t order_cap) {
  return centralizer_product_check(cat.taus, n, order_cap);
}

SummandCatalog xq_catalog(const BundleData& eta, const Subgroup& lambda,
                          const Subgroup& k, std::int64_t order_cap) {
  auto crit = ifcrit_check(eta, lambda);
  if (!crit.all())
    throw FaithfulnessFails("inheritable-faithfulness criterion fails: " +
                            crit.detail);
  GroupRef lamreal = lambda.realize();
  SummandCatalog out;
  out.irreducibles = irreducible_catalog(lamreal, eta.q);
  const auto& cat = out.irreducibles;

  for (int q = 1; q <= lamreal->order(); ++q) {
    std::vector<int> tau_ids;
    for (std::size_t i = 0; i < cat.taus.size(); ++i)
      if (cat.t[i] == q) tau_ids.push_back(static_cast<int>(i));
    if (tau_ids.empty()) continue;

    BundleData power =
        sym_power(eta, q, whole_group(FinGroup::symmetric(q)), order_cap);
    EtaBundle el = eta_lambda_rel(power, lambda, k);
    WreathGroup w{q, eta.q};

    std::map<int, XqEntry> per_tau;
    for (int id : tau_ids) {
      XqEntry e;
      e.q = q;
      e.tau_index = id;
      e.residual_order =
          static_cast<std::int64_t>(centralizer(cat.taus[id], order_cap).size());
      per_tau[id] = std::move(e);
    }
    // classify each sigma appearing in (Sym^q eta)(Lambda|K)
    std::vector<int> sigma_tau(el.sigmas.size(), -1);
    for (std::size_t s = 0; s < el.sigmas.size(); ++s) {
      WreathHom wh{lamreal, w, {}};
      wh.map.reserve(el.sigmas[s].map.size());
      for (int img : el.sigmas[s].map)
        wh.map.push_back(w.from_perm(el.sigmas[s].dst->elem(img)));
      auto dec = classify(cat, wh);
      int hits = 0, which = -1;
      for (std::size_t i = 0; i < dec.n.size(); ++i) {
        hits += dec.n[i];
        if (dec.n[i] == 1) which = static_cast<int>(i);
      }
      if (hits == 1 && per_tau.count(which)) sigma_tau[s] = which;
    }
    for (std::size_t p = 0; p < el.base_sigma.size(); ++p) {
      int id = sigma_tau[el.base_sigma[p]];
      if (id < 0) continue;
      per_tau[id].base.push_back(el.base_point[p]);
      per_tau[id].fiber_dims.push_back(
          el.bundle.fiber_dim(static_cast<int>(p)));
    }
    for (auto& [id, e] : per_tau) out.entries.push_back(std::move(e));
  }
  return out;
}

SummandCatalog xq_catalog(const BundleData& eta, const Subgroup& lambda,
                          std::int64_t order_cap) {
  return xq_catalog(eta, lambda, trivial_subgroup(eta.gamma), order_cap);
}

HomCountIdentity hom_count_identity(const GroupRef& lambda, const GroupRef& q,
                                    int card, std::int64_t order_cap) {
  if (card < 1) throw ValidationError("cardinality must be positive");
  WreathGroup w{card, q};
  std::int64_t cap =
      order_cap > 0 ? order_cap : default_caps().materialize_order;
  if (w.order_double() > static_cast<double>(cap))
    throw CapExceeded("hom count identity target exceeds the order cap");
  HomCountIdentity out;
  out.lhs = static_cast<std::int64_t>(enumerate_wreath_homs(lambda, w).size());

  auto cat = irreducible_catalog(lambda, q);
  std::int64_t w_order = factorial(card) * ipow(q->order(), card);
  std::vector<int> n(cat.taus.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
    if (rem == 0) {
      std::int64_t cent =
          static_cast<std::int64_t>(centralizer(tau_of(cat, n), order_cap).size());
      out.terms.push_back(w_order / cent);
      out.rhs += out.terms.back();
      return;
    }
    if (i == cat.taus.size()) return;
    for (int m = 0; m * cat.t[i] <= rem; ++m) {
      n[i] = m;
      rec(i + 1, rem - m * cat.t[i]);
    }
    n[i] = 0;
  };
  rec(0, card);
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace eqc
