#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eqc/bundle.hpp"

namespace eqc {

// Data tuple for a cyclotomic cell: factor 0 is the trivial R^{q0} block,
// factors 1..r carry circle orbits T(n)/C_{m_i} with fiber representation
// V_i of the quotient cyclic group of order m_i/l_i.  Q sits inside the
// product of the per-factor symmetric groups.
struct AcycData {
  int n = 1;
  int r = 1;
  std::vector<int> q;  // size r+1, q[0] = q0
  std::vector<int> m;  // size r, entry i-1 is m_i
  std::vector<int> l;  // size r, entry i-1 is l_i
  std::vector<BiSet> V;  // size r; left group cyclic(m_i/l_i), right trivial
  Subgroup Q;
  std::string x_tag;  // opaque subcomplex marker, propagated by operations
};

// Ambient product of symmetric groups (factors of size <= 1 contribute a
// trivial placeholder of degree 1).
GroupRef acyc_ambient(const AcycData& d);
// Per-factor permutations (true sizes q[i], possibly empty) of an ambient
// group element.
std::vector<Perm> acyc_factor_perms(const AcycData& d, int elem);

AcycData acyc_make(int n, std::vector<int> q, std::vector<int> m,
                   std::vector<int> l, std::vector<BiSet> v, Subgroup qsub,
                   std::string x_tag = "");

// Structural checks; returns human-readable violations (empty when valid).
std::vector<std::string> acyc_validate(const AcycData& d);

// Hom(Q): homomorphisms sigma: Lambda(n) -> Q whose composite to the i-th
// symmetric factor (i >= 1) kills the subgroup of order l_i.  Canonical
// order by generator image.
std::vector<GroupHom> hom_set(const AcycData& d);
// Hom_k of stretched data: additionally the factor-0 composite kills the
// subgroup of order k.
std::vector<GroupHom> hom_set_k(const AcycData& kd, int k);

struct Membership {
  bool ok = true;
  std::vector<std::string> reasons;
};
Membership in_D_ACyc(const AcycData& d);
Membership in_D_ACyc_p(const AcycData& d, int p);

struct StretchResult {
  AcycData data;
  // (index into hom_set(d), index into hom_set_k(data, k)); the bijection
  // of Prop. on stretched data
  std::vector<std::pair<int, int>> hom_bijection;
};
StretchResult stretch(const AcycData& d, int k);

AcycData smash(const AcycData& a, const AcycData& b);

struct PhiResult {
  AcycData data;  // n -> k n, everything else unchanged
  // per hom of the new data: index of its restriction in hom_set(d)
  std::vector<int> restriction;
};
PhiResult phi(const AcycData& d, int k);

AcycData sym(const AcycData& d, int k, std::int64_t order_cap = 0);

AcycData free_smash(const AcycData& d);

// Closed-form component data of theta_Q: per sigma, the multiset of circle
// labels (factor, cycle length) of the twisted-fixed base and the fiber
// dimension (sum of per-factor orbit counts).
struct ComponentEntry {
  int sigma = 0;
  bool base_empty = false;
  std::vector<std::pair<int, int>> circles;  // (factor i >= 1, cycle length)
  std::vector<int> factor_dims;              // size r+1; entry 0 = R^{q0}
  int fiber_dim = 0;
};
struct ComponentCatalog {
  std::vector<GroupHom> sigmas;
  std::vector<ComponentEntry> entries;
  // right Q action on sigma indices: sigma_action[j][s] for the j-th sigma
  // and the s-th element of Q (realized order)
  std::vector<std::vector<int>> sigma_action;
};
ComponentCatalog component_catalog(const AcycData& d);

// Finite cyclic model of eta_Q over C_M (n | M and m_i | M): base change of
// the circle to its M-torsion points, right group reduced to Q.
BundleData finite_model_bundle(const AcycData& d, int big_m,
                               std::int64_t order_cap = 0);

// Fiberwise Q-faithfulness of theta<k> for k = 1..k_max, following the
// finite reduction: twisted fixed data of homs C_{kn} -> Q with the
// per-factor kernel conditions, over a finite model of the circle.
bool faithfulness_shadow(const AcycData& d, int k_max = 2,
                         std::int64_t order_cap = 0);

}  // namespace eqc
