#pragma once

#include <functional>
#include <vector>

#include "eqc/group.hpp"

namespace eqc {

// Element (a_1,...,a_q; s) of Sigma_q wr Q.  The a_i are element indices of
// Q and s permutes {0..q-1}.  Product rule:
//   (a; s)(a'; s') = (a_i * a'_{s^-1(i)}; s s').
struct WreathElem {
  std::vector<int> a;
  Perm s;

  bool operator==(const WreathElem& o) const { return a == o.a && s == o.s; }
  bool operator<(const WreathElem& o) const {
    return s != o.s ? s < o.s : a < o.a;
  }
};

// Ambient wreath product Sigma_q wr Q handled by element calculus (no
// materialization), so q can be large.
struct WreathGroup {
  int q = 0;
  GroupRef base;  // Q

  WreathElem identity() const;
  WreathElem mul(const WreathElem& x, const WreathElem& y) const;
  WreathElem inverse(const WreathElem& x) const;
  WreathElem conj(const WreathElem& x, const WreathElem& g) const;  // g^-1 x g
  bool is_identity(const WreathElem& x) const;
  int elem_order(const WreathElem& x) const;
  void validate_elem(const WreathElem& x) const;

  // Faithful permutation action on q * max(deg Q, 1) points, block i
  // holding the points of copy i.
  int perm_degree() const;
  Perm to_perm(const WreathElem& x) const;

  double order_double() const;  // q! * |Q|^q, for cap checks

  // Iterate all elements in canonical order (s lex-major, then cofactors);
  // stops early when the callback returns false.
  void for_each_element(const std::function<bool(const WreathElem&)>& f) const;

  // Materialize as a FinGroup together with the element correspondence.
  GroupRef materialize(std::int64_t order_cap = 0) const;
  WreathElem from_perm(const Perm& p) const;
};

// Homomorphism Lambda -> Sigma_q wr Q, tabulated on all of Lambda.
struct WreathHom {
  GroupRef lambda;
  WreathGroup target;
  std::vector<WreathElem> map;  // per element index of lambda

  const WreathElem& operator()(int i) const { return map[i]; }
  void validate() const;  // throws InvalidWreathHom
  // Projection to Sigma_q as a permutation-valued map.
  Perm s(int i) const { return map[i].s; }
  // Cofactor a_i(lambda).
  int cofactor(int slot, int lam) const { return map[lam].a[slot]; }
  bool conjugate_by_fixes(const WreathElem& g) const;  // g^-1 sigma g == sigma
};

WreathHom wreath_hom_from_generator_images(const GroupRef& lambda,
                                           const WreathGroup& target,
                                           const std::vector<int>& gens,
                                           const std::vector<WreathElem>& images);

// All homomorphisms lambda -> Sigma_q wr Q by backtracking over generator
// images, in deterministic order.
std::vector<WreathHom> enumerate_wreath_homs(const GroupRef& lambda,
                                             const WreathGroup& target,
                                             std::int64_t candidate_cap = 0);

// Block sum: sigma1 (+) sigma2 into Sigma_{q1+q2} wr Q.
WreathHom block_sum(const WreathHom& s1, const WreathHom& s2);

// Induced hom from a subgroup H <= Lambda of index q and alpha: H -> Q,
// built from the canonical transversal (least coset representatives).
// Point 0 is the coset H itself; s(lam) permutes cosets, cofactors come from
// the coset cocycle through alpha.
WreathHom induced_wreath_hom(const Subgroup& h, const GroupHom& alpha, int q_check = -1);

// Orbit decomposition data of sigma per the product splitting of twisted
// fixed points: orbits of the projection action, representative m_j,
// stabilizer subgroups H_j <= Lambda, cofactor restrictions alpha_j, and a
// transporter l_i per point i with s(l_i)[m_j] = i.
struct TwistedDecomposition {
  std::vector<std::vector<int>> orbits;     // on {0..q-1}
  std::vector<int> rep;                     // m_j, least point of orbit j
  std::vector<Subgroup> stabilizer;         // H_j <= Lambda
  std::vector<GroupHom> alpha;              // realize(H_j) -> Q
  std::vector<int> transporter;             // l_i per point (element of Lambda)
  std::vector<int> orbit_of;                // point -> orbit index
};

TwistedDecomposition decompose(const WreathHom& sigma);

}  // namespace eqc
