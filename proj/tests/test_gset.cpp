#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqc/errors.hpp"
#include "eqc/gset.hpp"

using namespace eqc;

TEST_CASE("biset constructors validate") {
  auto c2 = FinGroup::cyclic(2);
  auto s3 = FinGroup::symmetric(3);
  CHECK_NOTHROW(trivial_biset(c2, s3, 3).validate());
  CHECK_NOTHROW(left_regular_biset(s3, c2).validate());
  CHECK_NOTHROW(biregular(s3).validate());
  for (const auto& h : enumerate_subgroups(s3))
    CHECK_NOTHROW(coset_biset(h, c2).validate());
}

TEST_CASE("orbit counts and fixed subspaces") {
  auto s3 = FinGroup::symmetric(3);
  BiSet reg = left_regular_biset(s3, FinGroup::trivial());
  // regular representation: fixed subspace of H has dim [G : H]
  for (const auto& h : enumerate_subgroups(s3))
    CHECK(fixed_subspace_dim(reg, h.members) == 6 / h.order());
  // set-level fixed points of a nontrivial subgroup on the regular set: none
  for (const auto& h : enumerate_subgroups(s3))
    if (h.order() > 1) CHECK(fixed_points(reg, h.members).empty());
}

TEST_CASE("semiregular detection") {
  auto c4 = FinGroup::cyclic(4);
  BiSet reg = left_regular_biset(c4, FinGroup::trivial());
  CHECK(is_semiregular(reg));
  BiSet triv = trivial_biset(c4, FinGroup::trivial(), 3);
  CHECK_FALSE(is_semiregular(triv));
  // regular + trivial is still semiregular (contains a free orbit)
  CHECK(is_semiregular(disjoint_union(reg, triv)));
  // C2-action on 2 points by swap is semiregular for C2 but the pulled-back
  // C4 action is not free for C4
  for (const auto& h : enumerate_subgroups(c4)) {
    if (h.order() == 2) CHECK(is_semiregular(reg, h));
  }
}

TEST_CASE("transitive bisets from product subgroups") {
  auto c2 = FinGroup::cyclic(2);
  auto s3 = FinGroup::symmetric(3);
  auto prod = FinGroup::direct_product(c2, s3);
  for (const auto& s : enumerate_subgroups(prod)) {
    BiSet b = biset_from_product_subgroup(c2, s3, prod, s);
    CHECK_NOTHROW(b.validate());
    CHECK(b.n == prod->order() / s.order());
  }
}

TEST_CASE("indexed smash power") {
  auto c2 = FinGroup::cyclic(2);
  BasedGSet a = based_with_disjoint_basepoint(
      left_regular_biset(c2, FinGroup::trivial()));
  BiSet s = left_regular_biset(c2, FinGroup::trivial());
  BasedGSet sm = indexed_smash(a, s);
  CHECK(sm.set.n == 5);  // basepoint + 2^2 functions
  CHECK_NOTHROW(sm.validate());
  // diagonal-style fixed points: f(gz) = g f(z), so f is determined by f(e);
  // two non-base fixed points
  auto fixed = fixed_points(sm.set, whole_group(c2).members);
  int nonbase = 0;
  for (int p : fixed)
    if (p != sm.basepoint) ++nonbase;
  CHECK(nonbase == 2);
}

TEST_CASE("hhr diagonal is a bijection onto fixed points") {
  for (const auto& g : small_groups_up_to(6)) {
    BasedGSet a = based_with_disjoint_basepoint(
        left_regular_biset(g, FinGroup::trivial()));
    for (const auto& h : enumerate_subgroups(g)) {
      BiSet s = coset_biset(h, FinGroup::trivial());
      auto dec = canonical_orbit_decomposition(s);
      auto res = hhr_diagonal(a, s, dec);
      CHECK(res.bijective);
    }
  }
}

TEST_CASE("hhr diagonal rejects bad decompositions") {
  auto c2 = FinGroup::cyclic(2);
  BasedGSet a = based_with_disjoint_basepoint(
      left_regular_biset(c2, FinGroup::trivial()));
  BiSet s = left_regular_biset(c2, FinGroup::trivial());
  auto dec = canonical_orbit_decomposition(s);
  REQUIRE(dec.size() == 1);
  // corrupt the transporters
  std::swap(dec[0].g_of[0], dec[0].g_of[1]);
  CHECK_THROWS_AS(hhr_diagonal(a, s, dec), BadDecomposition);
}
