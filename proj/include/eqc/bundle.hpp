#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqc/gset.hpp"
#include "eqc/twisted.hpp"

namespace eqc {

// (Gamma, Q) vector bundle with finite base and permutation-basis fibers:
// an equivariant projection of (Gamma, Q)-bisets.  Fiber basis vectors may
// carry squared norms (orbit sums produced by fixed-point constructions).
struct BundleData {
  GroupRef gamma, q;
  BiSet base;
  BiSet total;
  std::vector<int> proj;              // total point -> base point
  std::vector<std::int64_t> sqnorm;   // per total point
  std::vector<int> base_label;        // optional component tag per base point

  void validate() const;
  std::vector<int> fiber_points(int b) const;
  int fiber_dim(int b) const;
  // Isotropy subgroup Q_b = {s : b*s = b}.
  std::vector<int> isotropy(int b) const;
};

BundleData make_bundle(const GroupRef& gamma, const GroupRef& q, BiSet base,
                       BiSet total, std::vector<int> proj);
// Single base point carrying the given (Gamma, Q)-biset as fiber basis.
BundleData point_base_bundle(const GroupRef& gamma, const GroupRef& q,
                             const BiSet& fiber);
BundleData empty_bundle(const GroupRef& gamma, const GroupRef& q);
BundleData bundle_disjoint_union(const BundleData& a, const BundleData& b);

struct FaithfulnessReport {
  bool faithful = true;
  std::optional<int> witness_base_point;
  std::optional<int> witness_q_element;
};
FaithfulnessReport is_q_faithful(const BundleData& eta);

// Product bundle over (Gamma, Q x Q'): base pairs, fibers direct sums.
BundleData bundle_product(const BundleData& a, const BundleData& b);

// Pullback of the right action along a subgroup of Q.
BundleData bundle_restrict_right(const BundleData& eta, const Subgroup& qsub);

// q-fold power with right action by the wreath subgroup Sigma wr Q,
// where sym is a subgroup of symmetric(q).  Base points are mixed-radix
// tuples (slot-0 least significant digit).
BundleData sym_power(const BundleData& eta, int q, const Subgroup& sym,
                     std::int64_t order_cap = 0);

// eta(Lambda): disjoint union over sigma: Lambda -> Q of the sigma-twisted
// Lambda-fixed sub-bundle, a (Gamma, Q) bundle.  Base points are pairs
// (sigma index, original base point); fiber points are twisted orbit sums.
struct EtaBundle {
  BundleData bundle;              // base_label[p] = sigma index
  std::vector<GroupHom> sigmas;   // all of Hom(Lambda, Q), canonical order
  std::vector<int> base_sigma;    // per new base point
  std::vector<int> base_point;    // per new base point: original base point
  // per new total point: underlying twisted orbit (original total points)
  std::vector<std::vector<int>> fiber_orbit;
};
EtaBundle eta_lambda(const BundleData& eta, const Subgroup& lambda);
// eta(Lambda|K): restriction to base points whose fibers have trivial
// sigma|K-twisted K action.
EtaBundle eta_lambda_rel(const BundleData& eta, const Subgroup& lambda,
                         const Subgroup& k);

// Verified isomorphism eta(M|K) ~= (eta(Lambda|K))(M|Lambda).
struct IterPhiWitness {
  bool isomorphic = false;
  // lhs base point -> rhs base point under sigma -> (sigma, sigma|Lambda)
  std::vector<int> base_map;
  // lhs total point -> rhs total point
  std::vector<int> fiber_map;
};
IterPhiWitness iterphi_bundle_iso(const BundleData& eta, const Subgroup& k,
                                  const Subgroup& lambda, const Subgroup& m);

// Conditions (i)-(iii) of the inheritable-faithfulness criterion, checked
// exhaustively over subgroups H of Lambda, homs sigma: H -> Q and twisted
// fixed base points.
struct IfcritReport {
  bool cond_i = true, cond_ii = true, cond_iii = true;
  // failure witnesses: (subgroup order, sigma desc, base point, extra)
  std::string detail;
  bool all() const { return cond_i && cond_ii && cond_iii; }
};
IfcritReport ifcrit_check(const BundleData& eta, const Subgroup& lambda);

// Directly materializes (Sym^q eta)(Lambda) for q <= q_max and checks
// (Sigma_q wr Q)-faithfulness of each.
bool inheritably_faithful_bruteforce(const BundleData& eta,
                                     const Subgroup& lambda, int q_max,
                                     std::int64_t order_cap = 0);

}  // namespace eqc
