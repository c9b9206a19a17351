#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqc/bundle.hpp"
#include "eqc/wreath.hpp"

namespace eqc {

// A hom sigma: Lambda -> Sigma_q wr Q is irreducible when the projection
// action on {0..q-1} is transitive.
bool is_irreducible(const WreathHom& sigma);

// Generators of Sigma_q wr Q as wreath elements: adjacent transpositions
// with trivial cofactors plus the generators of Q in slot 0.
std::vector<WreathElem> wreath_generators(const WreathGroup& w);

// Conjugacy of wreath homs by orbit search over generator conjugations.
// Returns g with g^-1 sigma g == target when the two are conjugate.
std::optional<WreathElem> conjugator_between(const WreathHom& sigma,
                                             const WreathHom& target,
                                             std::int64_t orbit_cap = 0);

// Conjugacy-class representatives of the irreducible homs Lambda -> Sigma_q
// wr Q over all q up to |Lambda| (no irreducible exists beyond that bound).
// Representatives are the lex-least members of their classes, ordered by
// (q, lex).
struct IrreducibleCatalog {
  GroupRef lambda;
  GroupRef q;
  std::vector<WreathHom> taus;
  std::vector<int> t;  // cardinalities, t[i] = taus[i].target.q
};
IrreducibleCatalog irreducible_catalog(const GroupRef& lambda,
                                       const GroupRef& q,
                                       std::int64_t orbit_cap = 0);

// Exact centralizer C(sigma) <= Sigma_q wr Q, by exhaustive sweep.
std::vector<WreathElem> centralizer(const WreathHom& sigma,
                                    std::int64_t order_cap = 0);

// tau(n) = tau_1^{(+)n_1} (+) ... block sum in catalog order; at least one
// multiplicity must be positive.
WreathHom tau_of(const IrreducibleCatalog& cat, const std::vector<int>& n);

// Every sigma is conjugate to tau(n) for a unique n; the conjugator is
// returned and verified.
struct BlockDecomposition {
  std::vector<int> n;
  WreathElem conjugator;  // conj(sigma(lam), conjugator) == tau(n)(lam)
};
BlockDecomposition classify(const IrreducibleCatalog& cat,
                            const WreathHom& sigma,
                            std::int64_t orbit_cap = 0);

// Verified isomorphism (Sigma_{n_1} wr C(tau_1)) x ... -> C(tau(n)):
// builds every image element, checks distinctness, membership in the
// centralizer, and order equality.
struct CentralizerProductWitness {
  std::int64_t expected_order = 0;
  std::int64_t actual_order = 0;
  bool isomorphic = false;
};
CentralizerProductWitness centralizer_product_check(
    const std::vector<WreathHom>& taus, const std::vector<int>& n,
    std::int64_t order_cap = 0);
CentralizerProductWitness centralizer_product_check(
    const IrreducibleCatalog& cat, const std::vector<int>& n,
    std::int64_t order_cap = 0);

// The X_q summand catalog: for q = 1..|Lambda|, one entry per irreducible
// tau_i of cardinality q, carrying the eta[e_i] data read off from
// (Sym^q eta)(Lambda|K).
struct XqEntry {
  int q = 0;
  int tau_index = 0;              // into the irreducible catalog
  std::vector<int> base;          // original base points of the summand
  std::vector<int> fiber_dims;    // parallel to base
  std::int64_t residual_order = 0;  // |C(tau_i)|
};
struct SummandCatalog {
  IrreducibleCatalog irreducibles;
  std::vector<XqEntry> entries;  // ordered by (q, tau_index)
};
SummandCatalog xq_catalog(const BundleData& eta, const Subgroup& lambda,
                          std::int64_t order_cap = 0);
SummandCatalog xq_catalog(const BundleData& eta, const Subgroup& lambda,
                          const Subgroup& k, std::int64_t order_cap = 0);

// |Hom(Lambda, Sigma_q wr Q)| = sum over n with n.t = q of the index
// [Sigma_q wr Q : C(tau(n))], both sides enumerated.
struct HomCountIdentity {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::vector<std::int64_t> terms;  // one per multiplicity vector
  bool holds = false;
};
HomCountIdentity hom_count_identity(const GroupRef& lambda, const GroupRef& q,
                                    int card, std::int64_t order_cap = 0);

}  // namespace eqc
