#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eqc/gset.hpp"

namespace eqc {

// Isomorphism class of left G-sets of size q: a canonical representative
// plus its orbit-type multiset over subgroup conjugacy classes.
struct GSetClass {
  int q = 0;
  BiSet rep;  // left G-set, trivial right group
  // (index into subgroup_conjugacy_classes(G), multiplicity), ascending
  std::vector<std::pair<int, int>> orbit_type;
};

// Complete classification of G-sets of size q, computed from orbit-type
// multisets and cross-checked against Sigma_q-conjugacy classes of homs
// G -> Sigma_q.
std::vector<GSetClass> gset_iso_classes(const GroupRef& g, int q,
                                        std::int64_t order_cap = 0);

// Full equivariant automorphism group of a left G-set, brute-forced, with a
// verified isomorphism to the product-of-wreaths formula
// Aut_G(G/H_1^{q_1} + ... ) = (Sigma_{q_1} wr WH_1) x ...
struct AutGSetReport {
  GroupRef aut;                                  // on the points of Z
  std::int64_t formula_order = 0;                // prod q_i! |WH_i|^{q_i}
  std::vector<std::pair<int, int>> orbit_type;   // as in GSetClass
  bool verified = false;  // explicit bijection formula -> Aut checked
};
AutGSetReport aut_gset(const BiSet& z, std::int64_t order_cap = 0);

// Indexing data of the multiplicative splitting of the G-geometric fixed
// points of a free commutative cell on R^m (+) R<G>: one smash factor per
// subgroup conjugacy class, one wedge summand per q.
struct SplittingSummand {
  int q = 0;
  std::int64_t cell_dim = 0;        // (m + [G:H]) * q
  std::int64_t suspension_dim = 0;  // [G:H] * q
  std::int64_t sym_order = 0;       // |Sigma_q wr WH|
  bool transfer_marker = false;     // the q = 1 summand
};
struct SplittingClassEntry {
  Subgroup h;      // class representative
  GroupRef wh;     // Weyl group N(H)/H
  int index = 0;   // [G:H]
  std::vector<SplittingSummand> summands;  // q = 0..q_max
};
struct SplittingCatalog {
  int m = 0;
  int q_max = 0;
  bool truncated = true;  // the wedge continues beyond q_max
  std::vector<SplittingClassEntry> classes;
};
SplittingCatalog splitting_catalog(const GroupRef& g, int m, int q_max = 0,
                                   std::int64_t order_cap = 0);

// Fixed-point dimensions of the cell data over the G-set Z:
// dim((R^m (+) R<G>) (x) R<Z>)^G and dim(R<G x Z>)^G by orbit counting.
struct FixedDims {
  std::int64_t tensor_dim = 0;
  std::int64_t suspension_dim = 0;
};
FixedDims fixed_point_bookkeeping(const GroupRef& g, int m, const BiSet& z);
// Z read off from a permutation hom sigma: G -> Sigma_q.
FixedDims fixed_point_bookkeeping(const GroupRef& g, int m,
                                  const GroupHom& sigma);
BiSet gset_of_perm_hom(const GroupRef& g, const GroupHom& sigma);

}  // namespace eqc
