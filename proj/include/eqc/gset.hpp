#pragma once

#include <vector>

#include "eqc/group.hpp"

namespace eqc {

// Finite set with commuting left and right group actions, tabulated per
// group element.  A plain G-set is the special case of a trivial right
// group; a permutation representation is read off by treating the points as
// a distinguished basis.
struct BiSet {
  GroupRef left, right;
  int n = 0;
  std::vector<std::vector<int>> lact;  // lact[g][x]
  std::vector<std::vector<int>> ract;  // ract[s][x]

  int lapply(int g, int x) const { return lact[g][x]; }
  int rapply(int x, int s) const { return ract[s][x]; }
  void validate() const;  // action laws + commutation; throws ActionMismatch
};

// Constructors.
BiSet trivial_biset(const GroupRef& left, const GroupRef& right, int n);
BiSet left_regular_biset(const GroupRef& g, const GroupRef& right);
// G acting on itself on both sides.
BiSet biregular(const GroupRef& g);
// Left action on cosets of a subgroup; trivial right action by `right`.
BiSet coset_biset(const Subgroup& h, const GroupRef& right);
// Transitive (A,B)-biset from a subgroup of A x B (realized as a
// direct-product group): cosets of S, with B acting through inverses.
BiSet biset_from_product_subgroup(const GroupRef& a, const GroupRef& b,
                                  const GroupRef& product,
                                  const Subgroup& s);
BiSet disjoint_union(const BiSet& x, const BiSet& y);
// Plain left G-set from generator images (right group trivial).
BiSet gset_from_generator_action(const GroupRef& g, int n,
                                 const std::vector<Perm>& gen_action);

// Orbits of the left action of a subgroup of `left` (sorted, by least point).
std::vector<std::vector<int>> left_orbits(const BiSet& x,
                                          const std::vector<int>& subgroup_members);
std::vector<std::vector<int>> left_orbits(const BiSet& x);

// Dimension of the H-fixed subspace of the linearization = number of
// H-orbits; the orbit sums are the canonical basis.
int fixed_subspace_dim(const BiSet& x, const std::vector<int>& subgroup_members);

// Set-level fixed points.
std::vector<int> fixed_points(const BiSet& x, const std::vector<int>& subgroup_members);

// True when the left H-action has at least one free orbit (the linearization
// then contains a copy of the regular representation of H).
bool is_semiregular(const BiSet& x, const Subgroup& h);
bool is_semiregular(const BiSet& x);  // whole left group

// Pointed left G-set.
struct BasedGSet {
  BiSet set;       // right group trivial
  int basepoint = 0;
  void validate() const;  // basepoint fixed by the action
};

BasedGSet based_with_disjoint_basepoint(const BiSet& x);

// Indexed smash power A^(S): based functions S -> A, where any function
// hitting the basepoint is collapsed to the basepoint.  Point encoding:
// 0 = basepoint, then mixed-radix tuples over the non-base points of A
// indexed by the points of S (S-point-major, digits in A-point order).
BasedGSet indexed_smash(const BasedGSet& a, const BiSet& s);

// Decoded non-base point of the smash power: entry per point of S, values in
// the non-base points of A.
std::vector<int> smash_point_decode(const BasedGSet& a, const BiSet& s, int point);
int smash_point_encode(const BasedGSet& a, const BiSet& s,
                       const std::vector<int>& values);

// One orbit of S with a chosen representative and transporting coset
// representatives: g_of[x] * rep = x for every x in the orbit.
struct OrbitDecomposition {
  int rep = 0;
  Subgroup stabilizer;    // Stab(rep)
  std::vector<int> g_of;  // indexed by point of S; -1 off the orbit
};

// Canonical decomposition (least-point representatives, least transporters).
std::vector<OrbitDecomposition> canonical_orbit_decomposition(const BiSet& s);

// The diagonal identification smash_i A^{H_i} -> (A^(S))^G determined by a
// coset-representative choice: (a_1..a_r) -> (zeta -> g_zeta * a_i).
// Verifies the map is well defined and bijective onto the G-fixed points.
struct DiagonalResult {
  // tuple (one fixed non-base point of A per orbit, or empty for basepoint)
  // -> fixed point index in the smash power
  std::vector<std::pair<std::vector<int>, int>> graph;
  bool bijective = false;
};
DiagonalResult hhr_diagonal(const BasedGSet& a, const BiSet& s,
                            const std::vector<OrbitDecomposition>& dec);

}  // namespace eqc
