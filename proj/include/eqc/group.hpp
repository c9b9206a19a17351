#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqc/caps.hpp"
#include "eqc/perm.hpp"

namespace eqc {

class FinGroup;
using GroupRef = std::shared_ptr<const FinGroup>;

// Finite group given by a faithful permutation action.  Elements are stored
// in lexicographic order of their one-line notation, so element indices are
// canonical; all derived data (subgroup lists, class lists, hom tables) is
// deterministic.
class FinGroup {
 public:
  static GroupRef from_generators(int degree, std::vector<Perm> gens,
                                  std::int64_t order_cap = 0);
  // Left-regular realization of an abstract multiplication table
  // (table[i][j] = index of product, index 0 = identity).
  static GroupRef from_table(const std::vector<std::vector<int>>& table);

  static GroupRef trivial();
  static GroupRef cyclic(int n);
  static GroupRef symmetric(int n);
  static GroupRef dihedral(int n);  // order 2n, n >= 1
  static GroupRef quaternion8();
  static GroupRef direct_product(const GroupRef& a, const GroupRef& b);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const Perm& elem(int i) const { return elems_[i]; }
  const std::vector<Perm>& elems() const { return elems_; }
  int identity() const { return id_; }
  int mul(int i, int j) const { return mult_[i * order() + j]; }
  int inv(int i) const { return inv_[i]; }
  int conj(int i, int g) const {  // g^-1 * i * g
    return mul(mul(inv_[g], i), g);
  }
  int index_of(const Perm& p) const;  // -1 when absent
  int element_order(int i) const;
  int power(int i, std::int64_t e) const;

  // Abstract-structure fingerprint of the stored element list.
  std::string content_hash() const;

  // Deterministic minimal generating sequence (greedy over element order).
  const std::vector<int>& generator_indices() const { return gens_; }
  std::vector<Perm> generators() const;

  bool is_abelian() const;

 private:
  FinGroup() = default;
  void finalize();

  int degree_ = 0;
  std::vector<Perm> elems_;
  std::vector<int> mult_, inv_, gens_;
  int id_ = 0;
};

// Subset of a parent group's element indices, closed under the operations.
struct Subgroup {
  GroupRef parent;
  std::vector<int> members;  // sorted element indices

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int elem_index) const;
  // Faithful FinGroup on the parent's points.
  GroupRef realize() const;
  // Checks closure/identity/inverses; throws NotASubgroup.
  void validate() const;
};

Subgroup whole_group(const GroupRef& g);
Subgroup trivial_subgroup(const GroupRef& g);
Subgroup generated_subgroup(const GroupRef& g, std::vector<int> elem_indices);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& h, int g);
Subgroup normalizer(const Subgroup& h);
Subgroup centralizer_of_subset(const GroupRef& g, const std::vector<int>& xs);

// All subgroups, deterministically ordered (by order, then member list).
std::vector<Subgroup> enumerate_subgroups(const GroupRef& g,
                                          std::int64_t order_cap = 0);

// Conjugacy classes of subgroups; each class lists member subgroups with the
// representative first (lex-least member list).
std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(
    const GroupRef& g, std::int64_t order_cap = 0);

// Conjugacy classes of elements (sorted indices, classes by least element).
std::vector<std::vector<int>> element_conjugacy_classes(const GroupRef& g);

// Group homomorphism recorded as a full element-index map.
struct GroupHom {
  GroupRef src, dst;
  std::vector<int> map;  // map[src elem index] = dst elem index

  int operator()(int i) const { return map[i]; }
  void validate() const;  // throws ValidationError when not a hom
  bool is_injective() const;
  bool is_trivial() const;
  std::vector<int> kernel() const;  // sorted element indices
  std::vector<int> image() const;   // sorted element indices
};

GroupHom identity_hom(const GroupRef& g);
GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f
GroupHom hom_from_generator_images(const GroupRef& src, const GroupRef& dst,
                                   const std::vector<int>& src_gens,
                                   const std::vector<int>& images);
GroupHom restrict_hom(const GroupHom& f, const Subgroup& h);

// All homomorphisms src -> dst, deterministically ordered by the image map.
std::vector<GroupHom> enumerate_homs(const GroupRef& src, const GroupRef& dst,
                                     std::int64_t candidate_cap = 0);

// Partition of homs into dst-conjugacy classes, representative first.
std::vector<std::vector<int>> hom_conjugacy_classes(
    const std::vector<GroupHom>& homs);

// Weyl group W(H) = N_G(H)/H with its faithful action on the cosets of H in
// N_G(H), plus the projection from the normalizer.
struct WeylGroup {
  Subgroup normalizer;
  GroupRef quotient;                    // acts on cosets of H in N
  std::vector<std::vector<int>> cosets; // coset c = sorted parent indices
  GroupHom projection;                  // realize(N) -> quotient
};
WeylGroup weyl_group(const Subgroup& h);

// Quotient of g by a normal subgroup, as a permutation group on cosets.
struct QuotientGroup {
  GroupRef quotient;
  std::vector<std::vector<int>> cosets;
  GroupHom projection;
};
QuotientGroup quotient_group(const GroupRef& g, const Subgroup& n);

// Materialized wreath product Sigma_q wr Q acting on q * deg(Q) points
// (block i = points [i*deg(Q), (i+1)*deg(Q))).
GroupRef materialized_wreath(int q, const GroupRef& base_q,
                             std::int64_t order_cap = 0);

// Structural equality: same degree and same canonical element list.
bool same_group(const GroupRef& a, const GroupRef& b);

// Canonical identification C_m(n) / C_l(n)  ~=  C_{m/l}(n/l): the generator-
// to-generator isomorphism between cyclic groups of order m/l.
GroupHom cyclic_quotient_iso(int m, int l, int n);

// All isomorphism types of groups of order <= max_order (small-order table
// used by the acceptance sweeps; covers orders 1..8 and cyclic beyond).
std::vector<GroupRef> small_groups_up_to(int max_order);

}  // namespace eqc
