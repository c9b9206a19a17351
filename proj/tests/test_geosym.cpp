#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "eqc/errors.hpp"
#include "eqc/geosym.hpp"

using namespace eqc;

namespace {

WreathHom trivial_hom(const GroupRef& lambda, const WreathGroup& w) {
  return WreathHom{lambda, w,
                   std::vector<WreathElem>(lambda->order(), w.identity())};
}

// Lambda = C2 mapped onto the swap in Sigma_q wr Q moving points i and j.
WreathHom swap_hom(const GroupRef& c2, const WreathGroup& w, int i, int j) {
  WreathElem x = w.identity();
  std::swap(x.s[i], x.s[j]);
  std::vector<WreathElem> map(2, w.identity());
  map[c2->generator_indices()[0]] = x;
  return WreathHom{c2, w, map};
}

// Point base over Gamma = C2 with fiber R<C2>, Q trivial.
BundleData regular_fiber_example() {
  GroupRef c2 = FinGroup::cyclic(2);
  GroupRef triv = FinGroup::trivial();
  return point_base_bundle(c2, triv, left_regular_biset(c2, triv));
}

}  // namespace

TEST_CASE("irreducibility is transitivity of the projection") {
  GroupRef triv = FinGroup::trivial();
  GroupRef c2 = FinGroup::cyclic(2);
  CHECK(is_irreducible(trivial_hom(triv, WreathGroup{1, triv})));
  CHECK_FALSE(is_irreducible(trivial_hom(triv, WreathGroup{2, triv})));
  CHECK(is_irreducible(swap_hom(c2, WreathGroup{2, triv}, 0, 1)));
  CHECK_FALSE(is_irreducible(swap_hom(c2, WreathGroup{3, triv}, 0, 2)));
}

TEST_CASE("irreducible catalog") {
  GroupRef triv = FinGroup::trivial();
  GroupRef c2 = FinGroup::cyclic(2);
  SUBCASE("C2 over the trivial group: one class per cardinality") {
    auto cat = irreducible_catalog(c2, triv);
    REQUIRE(cat.taus.size() == 2);
    CHECK(cat.t == std::vector<int>{1, 2});
    CHECK(is_irreducible(cat.taus[1]));
  }
  SUBCASE("trivial source: only the q = 1 class") {
    for (const auto& q : {triv, c2, FinGroup::symmetric(3)}) {
      auto cat = irreducible_catalog(triv, q);
      REQUIRE(cat.taus.size() == 1);
      CHECK(cat.t == std::vector<int>{1});
    }
  }
  SUBCASE("C2 over C2") {
    auto cat = irreducible_catalog(c2, c2);
    // two cofactor classes at q = 1, a single transitive class at q = 2
    CHECK(cat.t == std::vector<int>{1, 1, 2});
  }
  SUBCASE("representatives are pairwise non-conjugate") {
    auto cat = irreducible_catalog(FinGroup::cyclic(4), c2);
    for (std::size_t i = 0; i < cat.taus.size(); ++i)
      for (std::size_t j = i + 1; j < cat.taus.size(); ++j)
        CHECK_FALSE(conjugator_between(cat.taus[i], cat.taus[j]).has_value());
  }
}

TEST_CASE("no irreducible has cardinality beyond the group order") {
  GroupRef triv = FinGroup::trivial();
  GroupRef c2 = FinGroup::cyclic(2);
  SUBCASE("raw hom enumeration in the excess range comes back empty") {
    std::vector<GroupRef> lams = {triv, c2, FinGroup::cyclic(3)};
    for (const auto& lam : lams) {
      for (const auto& q : {triv, c2}) {
        for (int card = lam->order() + 1; card <= lam->order() + 2; ++card) {
          WreathGroup w{card, q};
          for (const auto& h : enumerate_wreath_homs(lam, w))
            CHECK_FALSE(is_irreducible(h));
        }
      }
    }
  }
  SUBCASE("transitivity forces the point count to divide the order") {
    // an irreducible hom makes {0..q-1} a transitive Lambda-set, so q is a
    // subgroup index; the largest index is the group order
    for (const auto& lam : small_groups_up_to(8)) {
      int max_index = 0;
      for (const auto& h : enumerate_subgroups(lam))
        max_index = std::max(max_index, lam->order() / h.order());
      CHECK(max_index <= lam->order());
    }
  }
}

TEST_CASE("centralizers") {
  GroupRef triv = FinGroup::trivial();
  GroupRef c2 = FinGroup::cyclic(2);
  SUBCASE("the swap in Sigma_2 is centralized by everything") {
    CHECK(centralizer(swap_hom(c2, WreathGroup{2, triv}, 0, 1)).size() == 2);
  }
  SUBCASE("trivial hom: the whole wreath group") {
    CHECK(centralizer(trivial_hom(c2, WreathGroup{3, triv})).size() == 6);
    CHECK(centralizer(trivial_hom(c2, WreathGroup{2, c2})).size() == 8);
  }
  SUBCASE("(01)(23) in Sigma_4 has centralizer of order 8") {
    auto cat = irreducible_catalog(c2, triv);
    WreathHom twice = block_sum(cat.taus[1], cat.taus[1]);
    CHECK(centralizer(twice).size() == 8);
  }
}

TEST_CASE("block-sum classification") {
  GroupRef triv = FinGroup::trivial();
  GroupRef c2 = FinGroup::cyclic(2);
  auto cat = irreducible_catalog(c2, triv);
  SUBCASE("an irreducible classifies to a unit vector") {
    for (std::size_t i = 0; i < cat.taus.size(); ++i) {
      auto d = classify(cat, cat.taus[i]);
      std::vector<int> unit(cat.taus.size(), 0);
      unit[i] = 1;
      CHECK(d.n == unit);
    }
  }
  SUBCASE("trivial + swap in scrambled coordinates") {
    auto d = classify(cat, swap_hom(c2, WreathGroup{3, triv}, 0, 2));
    CHECK(d.n == std::vector<int>{1, 1});
  }
  SUBCASE("the trivial hom of cardinality q is q copies of the point") {
    auto d = classify(cat, trivial_hom(c2, WreathGroup{4, triv}));
    CHECK(d.n == std::vector<int>{4, 0});
  }
  SUBCASE("round trip: scrambled block sums recover the multiset") {
    std::vector<std::vector<int>> shapes = {{2, 1}, {0, 2}, {3, 0}, {1, 2}};
    for (const auto& n : shapes) {
      WreathHom tau = tau_of(cat, n);
      // conjugate by an arbitrary element before classifying
      const WreathGroup& w = tau.target;
      WreathElem g = w.identity();
      std::rotate(g.s.begin(), g.s.begin() + 1, g.s.end());
      WreathHom scr = tau;
      for (auto& x : scr.map) x = w.conj(x, g);
      auto d = classify(cat, scr);
      CHECK(d.n == n);
      // and the returned conjugator really works
      WreathHom check = tau_of(cat, d.n);
      for (std::size_t i = 0; i < scr.map.size(); ++i)
        CHECK(w.conj(scr.map[i], d.conjugator) == check.map[i]);
    }
  }
}

TEST_CASE("centralizer product isomorphism") {
  GroupRef triv = FinGroup::trivial();
  GroupRef c2 = FinGroup::cyclic(2);
  auto cat = irreducible_catalog(c2, triv);
  SUBCASE("single irreducible with multiplicity one") {
    auto wit = centralizer_product_check(cat, {0, 1});
    CHECK(wit.isomorphic);
    CHECK(wit.expected_order == 2);
  }
  SUBCASE("two copies of the swap give Sigma_2 wr Sigma_2 of order 8") {
    auto wit = centralizer_product_check(cat, {0, 2});
    CHECK(wit.isomorphic);
    CHECK(wit.expected_order == 8);
    CHECK(wit.actual_order == 8);
  }
  SUBCASE("mixed (1,1) inside Sigma_3") {
    auto wit = centralizer_product_check(cat, {1, 1});
    CHECK(wit.isomorphic);
    CHECK(wit.expected_order == 2);
  }
  SUBCASE("all multiplicity vectors with n.t <= 6") {
    for (int n1 = 0; n1 <= 6; ++n1)
      for (int n2 = 0; 1 * n1 + 2 * n2 <= 6; ++n2) {
        if (n1 + n2 == 0) continue;
        CHECK(centralizer_product_check(cat, {n1, n2}).isomorphic);
      }
  }
  SUBCASE("conjugate constituents are rejected") {
    WreathHom a = swap_hom(c2, WreathGroup{2, triv}, 0, 1);
    CHECK_THROWS_AS(centralizer_product_check({a, a}, {1, 1}),
                    NotPairwiseNonConjugate);
  }
  SUBCASE("a richer base group: C2 over C2, n.t <= 4") {
    auto cc = irreducible_catalog(c2, c2);
    REQUIRE(cc.t == std::vector<int>{1, 1, 2});
    std::vector<std::vector<int>> shapes = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
        {2, 0, 1}, {0, 2, 1}, {1, 1, 1}, {0, 0, 2}};
    for (const auto& n : shapes)
      CHECK(centralizer_product_check(cc, n).isomorphic);
  }
}

TEST_CASE("hom count identity") {
  GroupRef triv = FinGroup::trivial();
  GroupRef c2 = FinGroup::cyclic(2);
  SUBCASE("C2 over the trivial group at q = 2") {
    auto id = hom_count_identity(c2, triv, 2);
    CHECK(id.lhs == 2);
    CHECK(id.rhs == 2);
    CHECK(id.terms == std::vector<std::int64_t>{1, 1});
    CHECK(id.holds);
  }
  SUBCASE("q = 1 counts Hom(Lambda, Q)") {
    auto id = hom_count_identity(c2, c2, 1);
    CHECK(id.lhs == 2);
    CHECK(id.holds);
  }
  SUBCASE("trivial source") {
    CHECK(hom_count_identity(triv, c2, 3).holds);
  }
  SUBCASE("desk-scale grid") {
    std::vector<GroupRef> lams = {triv, c2, FinGroup::cyclic(3),
                                  FinGroup::cyclic(4),
                                  FinGroup::direct_product(c2, c2)};
    for (const auto& lam : lams)
      for (const auto& q : {triv, c2})
        for (int card = 1; card <= 4; ++card) {
          auto id = hom_count_identity(lam, q, card);
          CHECK(id.holds);
        }
  }
}

TEST_CASE("X_q summand catalog") {
  GroupRef c2 = FinGroup::cyclic(2);
  GroupRef triv = FinGroup::trivial();
  SUBCASE("trivial Lambda returns the input data at q = 1") {
    BundleData eta = regular_fiber_example();
    auto sc = xq_catalog(eta, trivial_subgroup(eta.gamma));
    REQUIRE(sc.entries.size() == 1);
    CHECK(sc.entries[0].q == 1);
    CHECK(sc.entries[0].base == std::vector<int>{0});
    CHECK(sc.entries[0].fiber_dims == std::vector<int>{2});
  }
  SUBCASE("Lambda = C2 over the regular fiber") {
    BundleData eta = regular_fiber_example();
    auto sc = xq_catalog(eta, whole_group(eta.gamma));
    REQUIRE(sc.entries.size() == 2);
    CHECK(sc.entries[0].q == 1);
    CHECK(sc.entries[0].fiber_dims == std::vector<int>{1});  // dim V^{C2}
    CHECK(sc.entries[1].q == 2);
    CHECK(sc.entries[1].fiber_dims == std::vector<int>{2});
    CHECK(sc.entries[1].residual_order == 2);  // C(swap) = Sigma_2
  }
  SUBCASE("an unfaithful input is rejected") {
    // zero-dimensional fibers cannot be inheritably faithful
    BundleData eta = point_base_bundle(c2, triv, trivial_biset(c2, triv, 0));
    CHECK_THROWS_AS(xq_catalog(eta, whole_group(eta.gamma)),
                    FaithfulnessFails);
  }
  SUBCASE("a finite parameter set scales base descriptors") {
    BundleData eta = regular_fiber_example();
    // D = 2 trivially-acted points with zero-dimensional fibers
    BundleData dset = make_bundle(c2, triv, trivial_biset(c2, triv, 2),
                                  trivial_biset(c2, triv, 0), {});
    BundleData prod = bundle_product(eta, dset);
    auto sc = xq_catalog(eta, whole_group(eta.gamma));
    auto scd = xq_catalog(prod, whole_group(prod.gamma));
    REQUIRE(sc.entries.size() == scd.entries.size());
    for (std::size_t i = 0; i < sc.entries.size(); ++i) {
      CHECK(scd.entries[i].q == sc.entries[i].q);
      // each irreducible tau is transitive, so the twisted-fixed tuples of
      // D^q form a diagonal copy of D: base counts scale by |D| = 2
      CHECK(scd.entries[i].base.size() == 2 * sc.entries[i].base.size());
      for (int d : scd.entries[i].fiber_dims)
        CHECK(d == sc.entries[i].fiber_dims[0]);
    }
  }
}
