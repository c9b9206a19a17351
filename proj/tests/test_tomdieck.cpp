#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "eqc/errors.hpp"
#include "eqc/tomdieck.hpp"
#include "eqc/twisted.hpp"

using namespace eqc;

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Wreath hom over the trivial base group with the projection action of Z.
WreathHom perm_wreath_hom(const BiSet& z) {
  WreathGroup w{z.n, FinGroup::trivial()};
  WreathHom sigma{z.left, w, {}};
  for (int gi = 0; gi < z.left->order(); ++gi) {
    WreathElem x = w.identity();
    for (int p = 0; p < z.n; ++p) x.s[p] = z.lact[gi][p];
    sigma.map.push_back(std::move(x));
  }
  return sigma;
}

// small grid of groups with two-generator presentations
std::vector<GroupRef> grid_groups() {
  return {FinGroup::trivial(),     FinGroup::cyclic(2),
          FinGroup::cyclic(3),     FinGroup::cyclic(4),
          FinGroup::symmetric(3),  FinGroup::dihedral(4),
          FinGroup::cyclic(12)};
}

}  // namespace

TEST_CASE("G-set isomorphism classes") {
  GroupRef c2 = FinGroup::cyclic(2);
  SUBCASE("C2 at size 2: two fixed points or one free orbit") {
    auto classes = gset_iso_classes(c2, 2);
    REQUIRE(classes.size() == 2);
    for (const auto& cls : classes) {
      CHECK(cls.rep.n == 2);
      int total = 0;
      for (auto [c, mult] : cls.orbit_type) {
        (void)c;
        total += mult;
      }
      CHECK((total == 2 || total == 1));
    }
  }
  SUBCASE("size 0 is the empty set alone") {
    auto classes = gset_iso_classes(c2, 0);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].rep.n == 0);
    CHECK(classes[0].orbit_type.empty());
  }
  SUBCASE("trivial group: one class per size") {
    for (int q = 0; q <= 5; ++q)
      CHECK(gset_iso_classes(FinGroup::trivial(), q).size() == 1);
  }
  SUBCASE("two-way classification agrees on the grid") {
    // the hom-conjugacy cross-check runs inside the operation and throws
    // on any disagreement
    for (const auto& g : grid_groups())
      for (int q = 0; q <= 5; ++q) {
        auto classes = gset_iso_classes(g, q);
        CHECK(!classes.empty());
        auto subs = subgroup_conjugacy_classes(g);
        for (const auto& cls : classes) {
          int total = 0;
          for (auto [c, mult] : cls.orbit_type)
            total += mult * (g->order() / subs[c][0].order());
          CHECK(total == q);
          CHECK(cls.rep.n == q);
        }
      }
  }
}

TEST_CASE("automorphism groups of G-sets") {
  GroupRef c2 = FinGroup::cyclic(2);
  GroupRef triv = FinGroup::trivial();
  SUBCASE("two fixed points give Sigma_2") {
    BiSet z = trivial_biset(c2, triv, 2);
    auto rep = aut_gset(z);
    CHECK(rep.aut->order() == 2);
    CHECK(rep.formula_order == 2);
    CHECK(rep.verified);
  }
  SUBCASE("a free C2 orbit has automorphism group C2 = W{e}") {
    BiSet z = left_regular_biset(c2, triv);
    auto rep = aut_gset(z);
    CHECK(rep.aut->order() == 2);
    CHECK(rep.verified);
  }
  SUBCASE("Sigma_3 / A_3 has automorphism group of order 2") {
    GroupRef s3 = FinGroup::symmetric(3);
    std::vector<int> a3;
    for (int i = 0; i < 6; ++i)
      if (s3->element_order(i) != 2) a3.push_back(i);
    BiSet z = coset_biset(Subgroup{s3, a3}, triv);
    auto rep = aut_gset(z);
    CHECK(rep.aut->order() == 2);
    CHECK(rep.verified);
  }
  SUBCASE("empty set") {
    auto rep = aut_gset(trivial_biset(c2, triv, 0));
    CHECK(rep.aut->order() == 1);
    CHECK(rep.verified);
  }
  SUBCASE("formula verified across all classes of the grid") {
    for (const auto& g : grid_groups()) {
      if (g->order() > 6) continue;  // keep |Z|! sweeps small
      for (int q = 1; q <= 4; ++q)
        for (const auto& cls : gset_iso_classes(g, q)) {
          auto rep = aut_gset(cls.rep);
          CHECK(rep.verified);
          CHECK(rep.aut->order() == rep.formula_order);
          CHECK(rep.orbit_type == cls.orbit_type);
        }
    }
  }
}

TEST_CASE("splitting catalog") {
  SUBCASE("C2 with m = 1") {
    auto cat = splitting_catalog(FinGroup::cyclic(2), 1, 3);
    REQUIRE(cat.classes.size() == 2);
    CHECK(cat.truncated);
    // classes ordered by subgroup order: {e} then C2
    const auto& whole = cat.classes[1];
    CHECK(whole.index == 1);
    CHECK(whole.summands[1].cell_dim == 2);
    CHECK(whole.summands[1].suspension_dim == 1);
    CHECK(whole.summands[1].transfer_marker);
    CHECK_FALSE(whole.summands[2].transfer_marker);
    const auto& free = cat.classes[0];
    CHECK(free.index == 2);
    CHECK(free.wh->order() == 2);
    CHECK(free.summands[2].cell_dim == (1 + 2) * 2);
  }
  SUBCASE("trivial group reduces to the non-equivariant cell data") {
    auto cat = splitting_catalog(FinGroup::trivial(), 2, 4);
    REQUIRE(cat.classes.size() == 1);
    CHECK(cat.classes[0].wh->order() == 1);
    for (int q = 0; q <= 4; ++q) {
      CHECK(cat.classes[0].summands[q].cell_dim == 3 * q);
      CHECK(cat.classes[0].summands[q].sym_order == factorial(q));
    }
  }
  SUBCASE("Sigma_3: four smash factors with Weyl orders 6, 1, 2, 1") {
    auto cat = splitting_catalog(FinGroup::symmetric(3), 0);
    REQUIRE(cat.classes.size() == 4);
    CHECK(cat.q_max == 6);  // default depth
    std::vector<std::int64_t> wh;
    for (const auto& e : cat.classes) wh.push_back(e.wh->order());
    CHECK(wh == std::vector<std::int64_t>{6, 1, 2, 1});
  }
}

TEST_CASE("fixed point bookkeeping") {
  GroupRef c2 = FinGroup::cyclic(2);
  GroupRef triv = FinGroup::trivial();
  SUBCASE("free orbit, m = 0") {
    auto d = fixed_point_bookkeeping(c2, 0, left_regular_biset(c2, triv));
    CHECK(d.tensor_dim == 2);
    CHECK(d.suspension_dim == 2);
  }
  SUBCASE("empty Z") {
    auto d = fixed_point_bookkeeping(c2, 3, trivial_biset(c2, triv, 0));
    CHECK(d.tensor_dim == 0);
    CHECK(d.suspension_dim == 0);
  }
  SUBCASE("a single fixed point sees m + 1") {
    for (int m = 0; m <= 3; ++m) {
      auto d = fixed_point_bookkeeping(c2, m, trivial_biset(c2, triv, 1));
      CHECK(d.tensor_dim == m + 1);
      CHECK(d.suspension_dim == 1);
    }
  }
  SUBCASE("additive over disjoint unions") {
    for (const auto& g : grid_groups()) {
      auto classes = gset_iso_classes(g, 3);
      for (const auto& a : classes)
        for (const auto& b : classes) {
          auto da = fixed_point_bookkeeping(g, 2, a.rep);
          auto db = fixed_point_bookkeeping(g, 2, b.rep);
          auto dab =
              fixed_point_bookkeeping(g, 2, disjoint_union(a.rep, b.rep));
          CHECK(dab.tensor_dim == da.tensor_dim + db.tensor_dim);
          CHECK(dab.suspension_dim == da.suspension_dim + db.suspension_dim);
        }
    }
  }
  SUBCASE("suspension dims match the twisted fixed-point machinery") {
    for (const auto& g : grid_groups())
      for (int q = 1; q <= 3; ++q)
        for (const auto& cls : gset_iso_classes(g, q)) {
          auto d = fixed_point_bookkeeping(g, 0, cls.rep);
          int oracle = twisted_fixed_dim(left_regular_biset(g, triv),
                                         perm_wreath_hom(cls.rep));
          CHECK(d.suspension_dim == oracle);
          CHECK(d.tensor_dim == oracle);
        }
  }
  SUBCASE("permutation hom entry point") {
    GroupRef s2 = FinGroup::symmetric(2);
    GroupHom sigma = identity_hom(s2);  // C2 acting freely on two points
    auto d = fixed_point_bookkeeping(s2, 1, sigma);
    CHECK(d.suspension_dim == 2);
    CHECK(d.tensor_dim == 1 * 1 + 2);  // one Z-orbit, two diagonal orbits
  }
}

TEST_CASE("exponential identity") {
  // sum over iso classes [Z] of size q of q!/|Aut_G(Z)| = |Hom(G, Sigma_q)|
  for (const auto& g : grid_groups()) {
    if (g->order() > 6) continue;
    for (int q = 1; q <= 4; ++q) {
      std::int64_t lhs = 0;
      for (const auto& cls : gset_iso_classes(g, q)) {
        auto rep = aut_gset(cls.rep);
        REQUIRE(factorial(q) % rep.aut->order() == 0);
        lhs += factorial(q) / rep.aut->order();
      }
      std::int64_t rhs = static_cast<std::int64_t>(
          enumerate_homs(g, FinGroup::symmetric(q)).size());
      CHECK(lhs == rhs);
    }
  }
}
