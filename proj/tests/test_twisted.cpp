#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqc/errors.hpp"
#include "eqc/twisted.hpp"

using namespace eqc;

namespace {

// sigma for a cyclic source generated by its first canonical generator
WreathHom cyclic_wreath_hom(const GroupRef& lambda, const WreathGroup& target,
                            const WreathElem& gen_image) {
  auto gens = lambda->generator_indices();
  REQUIRE(gens.size() == 1);
  return wreath_hom_from_generator_images(lambda, target, gens, {gen_image});
}

}  // namespace

TEST_CASE("swap twist on the regular representation of C2") {
  auto c2 = FinGroup::cyclic(2);
  BiSet x = left_regular_biset(c2, FinGroup::trivial());
  WreathGroup target{2, FinGroup::trivial()};
  // sigma(c) = (e,e; swap): solving lam*x*sigma(lam^-1) = x forces
  // x_2 = c * x_1 with x_1 free, so the fixed space is 2-dimensional
  WreathHom sigma = cyclic_wreath_hom(c2, target, WreathElem{{0, 0}, {1, 0}});
  CHECK(twisted_fixed_dim(x, sigma) == 2);
  CHECK(brute_force_twisted_fixed(x, sigma) == 2);
}

TEST_CASE("trivial twist is the untwisted diagonal") {
  auto c2 = FinGroup::cyclic(2);
  BiSet x = left_regular_biset(c2, FinGroup::trivial());
  WreathGroup target{3, FinGroup::trivial()};
  WreathHom sigma = cyclic_wreath_hom(c2, target, target.identity());
  // three independent copies of the 1-dimensional fixed space of X
  CHECK(twisted_fixed_dim(x, sigma) == 3);
  CHECK(brute_force_twisted_fixed(x, sigma) == 3);
}

TEST_CASE("order-4 source with swap projection") {
  auto c4 = FinGroup::cyclic(4);
  BiSet x = left_regular_biset(c4, FinGroup::trivial());
  WreathGroup target{2, FinGroup::trivial()};
  WreathHom sigma = cyclic_wreath_hom(c4, target, WreathElem{{0, 0}, {1, 0}});
  // single orbit with stabilizer <c^2>: dim X^{<c^2>} = 2
  CHECK(twisted_fixed_dim(x, sigma) == 2);
  CHECK(brute_force_twisted_fixed(x, sigma) == 2);
}

TEST_CASE("lemma dimension equals elimination oracle on a grid") {
  std::vector<GroupRef> lambdas = {FinGroup::cyclic(2), FinGroup::cyclic(4),
                                   FinGroup::symmetric(3),
                                   FinGroup::dihedral(2)};
  std::vector<GroupRef> qs = {FinGroup::trivial(), FinGroup::cyclic(2)};
  for (const auto& lambda : lambdas) {
    for (const auto& qg : qs) {
      auto prod = FinGroup::direct_product(lambda, qg);
      std::vector<BiSet> xs;
      for (const auto& s : enumerate_subgroups(prod)) {
        BiSet b = biset_from_product_subgroup(lambda, qg, prod, s);
        if (b.n <= 4) xs.push_back(std::move(b));
      }
      for (int q = 1; q <= 3; ++q) {
        WreathGroup target{q, qg};
        for (const auto& sigma : enumerate_wreath_homs(lambda, target)) {
          for (const auto& x : xs)
            CHECK(twisted_fixed_dim(x, sigma) ==
                  brute_force_twisted_fixed(x, sigma));
        }
      }
    }
  }
}

TEST_CASE("block sums add dimensions") {
  auto c4 = FinGroup::cyclic(4);
  BiSet x = left_regular_biset(c4, FinGroup::trivial());
  WreathGroup t1{1, FinGroup::trivial()}, t2{2, FinGroup::trivial()};
  auto homs1 = enumerate_wreath_homs(c4, t1);
  auto homs2 = enumerate_wreath_homs(c4, t2);
  for (const auto& a : homs1)
    for (const auto& b : homs2) {
      WreathHom sum = block_sum(a, b);
      CHECK(twisted_fixed_dim(x, sum) ==
            twisted_fixed_dim(x, a) + twisted_fixed_dim(x, b));
      CHECK(brute_force_twisted_fixed(x, sum) ==
            twisted_fixed_dim(x, sum));
    }
}

TEST_CASE("basis spans the fixed space and matches the dimension") {
  auto s3 = FinGroup::symmetric(3);
  BiSet x = biregular(s3);
  for (int q = 1; q <= 2; ++q) {
    WreathGroup target{q, s3};
    for (const auto& sigma : enumerate_wreath_homs(s3, target, 5'000'000)) {
      TwistedBasis basis = twisted_fixed_basis(x, sigma);
      int dim = twisted_fixed_dim(x, sigma);
      REQUIRE(static_cast<int>(basis.vectors.size()) == dim);
      // basis vectors are linearly independent and genuinely fixed
      RatMat rows;
      for (const auto& v : basis.vectors)
        rows.push_back(RatVec(v.begin(), v.end()));
      CHECK(rat_rank(rows) == dim);
      CHECK(brute_force_twisted_fixed(x, sigma) == dim);
      for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        std::int64_t n2 = 0;
        for (int c : basis.vectors[i])
          n2 += static_cast<std::int64_t>(c) * c;
        CHECK(n2 == basis.sqnorm[i]);
      }
    }
  }
}

TEST_CASE("transporter choice does not change the spanned subspace") {
  auto c4 = FinGroup::cyclic(4);
  BiSet x = left_regular_biset(c4, FinGroup::trivial());
  WreathGroup target{4, FinGroup::trivial()};
  for (const auto& sigma : enumerate_wreath_homs(c4, target)) {
    TwistedDecomposition d = decompose(sigma);
    TwistedBasis canonical = twisted_fixed_basis(x, sigma);
    RatMat canon_rows;
    for (const auto& v : canonical.vectors)
      canon_rows.push_back(RatVec(v.begin(), v.end()));
    // alternates: pick successively later transporters where possible
    for (int variant = 1; variant <= 3; ++variant) {
      std::vector<int> alt(target.q, -1);
      for (int i = 0; i < target.q; ++i) {
        int m = d.rep[d.orbit_of[i]];
        int found = 0;
        for (int l = 0; l < c4->order(); ++l) {
          if (sigma.map[l].s[m] == i) {
            alt[i] = l;
            if (++found > variant) break;
          }
        }
      }
      TwistedBasis other = twisted_fixed_basis(x, sigma, alt);
      REQUIRE(other.vectors.size() == canonical.vectors.size());
      for (const auto& v : other.vectors)
        CHECK(in_span(canon_rows, RatVec(v.begin(), v.end())));
    }
  }
}

TEST_CASE("centralizer elements permute the canonical basis") {
  auto c2 = FinGroup::cyclic(2);
  BiSet x = left_regular_biset(c2, FinGroup::trivial());
  WreathGroup target{2, FinGroup::trivial()};
  WreathHom sigma = cyclic_wreath_hom(c2, target, WreathElem{{0, 0}, {1, 0}});
  // the full target centralizes an abelian-image hom here
  std::vector<WreathElem> elems;
  target.for_each_element([&](const WreathElem& e) {
    if (sigma.conjugate_by_fixes(e)) elems.push_back(e);
    return true;
  });
  REQUIRE(elems.size() == 2);  // <swap> in Sigma_2
  BasisAction act = permuted_basis(x, sigma, elems);
  CHECK(act.action.size() == elems.size());
  // the action respects products of the provided elements
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      WreathElem prod = target.mul(elems[i], elems[j]);
      for (std::size_t k = 0; k < elems.size(); ++k)
        if (prod == elems[k])
          // right actions compose contravariantly through perms:
          // basis * (g h) = (basis * g) * h
          CHECK(act.action[k] ==
                perm_compose(act.action[j], act.action[i]));
    }
}

TEST_CASE("non-centralizing elements are rejected") {
  auto c2 = FinGroup::cyclic(2);
  BiSet x = left_regular_biset(c2, FinGroup::cyclic(2));
  // need a wreath base with room for a non-centralizing element
  WreathGroup target{2, FinGroup::cyclic(2)};
  // sigma(c) = ((c, e); id): cofactors differ per slot
  WreathHom sigma = cyclic_wreath_hom(c2, target, WreathElem{{1, 0}, {0, 1}});
  // swapping the slots conjugates sigma to ((e, c); id) != sigma
  WreathElem swap{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(permuted_basis(x, sigma, {swap}),
                  NotCentralizing);
}
