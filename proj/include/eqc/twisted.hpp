#pragma once

#include <cstdint>
#include <vector>

#include "eqc/gset.hpp"
#include "eqc/linalg.hpp"
#include "eqc/wreath.hpp"

namespace eqc {

// sigma-twisted fixed points of the q-fold power of the linearized
// (Lambda,Q)-biset X.  Coordinates of the ambient space are (slot, point)
// pairs flattened as slot * X.n + point; the twisted action is
//   (lam . x)_i = lam * x_{s(lam^-1)[i]} * a_{s(lam^-1)[i]}(lam^-1).

// Dimension via the orbit splitting: sum over orbits j of the number of
// twisted H_j-orbits on the points of X.
int twisted_fixed_dim(const BiSet& x, const WreathHom& sigma);

// Number of twisted (H, alpha)-orbits on the points of X, i.e. the dimension
// of the alpha-twisted H-fixed subspace.  h acts by x -> h * x * alpha(h)^-1.
int twisted_component_dim(const BiSet& x, const Subgroup& h, const GroupHom& alpha);
std::vector<std::vector<int>> twisted_orbits(const BiSet& x, const Subgroup& h,
                                             const GroupHom& alpha);

// Independent oracle: exact rational elimination on the stacked linear
// system (M_lam - I) v = 0 over generators of Lambda.
int brute_force_twisted_fixed(const BiSet& x, const WreathHom& sigma);

// Unnormalized orbit-sum basis of the twisted fixed subspace, one vector per
// (orbit j, twisted H_j-orbit of X); integer coordinates in the ambient
// space, plus the squared norm of each vector.  An explicit transporter
// assignment can replace the canonical one (for independence checks).
struct TwistedBasis {
  int ambient_dim = 0;
  std::vector<std::vector<int>> vectors;  // dense integer coordinates
  std::vector<std::int64_t> sqnorm;
};
TwistedBasis twisted_fixed_basis(const BiSet& x, const WreathHom& sigma);
TwistedBasis twisted_fixed_basis(const BiSet& x, const WreathHom& sigma,
                                 const std::vector<int>& transporter);

// Right action of a centralizing subgroup P <= C(sigma) on the canonical
// basis: every element permutes the basis vectors on the nose.  Elements of
// P are given by wreath elements; throws NotCentralizing when some element
// fails to centralize sigma.
struct BasisAction {
  TwistedBasis basis;
  std::vector<WreathElem> elements;  // the provided subgroup elements
  std::vector<Perm> action;          // permutation of basis vectors per element
};
BasisAction permuted_basis(const BiSet& x, const WreathHom& sigma,
                           const std::vector<WreathElem>& p_elements);

}  // namespace eqc
