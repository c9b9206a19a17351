#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <set>

#include "eqc/acyc.hpp"
#include "eqc/errors.hpp"

using namespace eqc;

namespace {

// regular permutation representation of the cyclic group of order c
BiSet regular_rep(int c) {
  return left_regular_biset(FinGroup::cyclic(c), FinGroup::trivial());
}

BiSet trivial_rep(int c, int pts) {
  return trivial_biset(FinGroup::cyclic(c), FinGroup::trivial(), pts);
}

// (n=2, r=1, q0=0, q1=2, m=2, l=1, V=R<C2>, Q=Sigma_2)
AcycData running_example() {
  AcycData d;
  d.n = 2;
  d.r = 1;
  d.q = {0, 2};
  d.m = {2};
  d.l = {1};
  d.V = {regular_rep(2)};
  d.Q = whole_group(acyc_ambient(d));
  return d;
}

// (n=1, r=1, q0=0, q1=1, m=l=1, V=R, Q trivial)
AcycData unit_tuple() {
  AcycData d;
  d.n = 1;
  d.r = 1;
  d.q = {0, 1};
  d.m = {1};
  d.l = {1};
  d.V = {regular_rep(1)};
  d.Q = whole_group(acyc_ambient(d));
  return d;
}

int gen_image(const GroupHom& h) {
  return h.src->order() == 1 ? h.dst->identity()
                             : h.map[h.src->generator_indices()[0]];
}

// independent check of the closed-form catalog against the finite circle
// model: component base sizes and fiber dimensions via eta_lambda
void check_catalog_against_model(const AcycData& d, int big_m) {
  auto cat = component_catalog(d);
  BundleData fin = finite_model_bundle(d, big_m, 500000);
  GroupRef gamma = fin.gamma;
  int ggen = big_m == 1 ? gamma->identity() : gamma->generator_indices()[0];
  Subgroup lam = generated_subgroup(gamma, {gamma->power(ggen, big_m / d.n)});
  auto el = eta_lambda(fin, lam);
  GroupRef lamreal = lam.realize();
  GroupRef qreal = d.Q.realize();
  for (std::size_t j = 0; j < cat.sigmas.size(); ++j) {
    int u_fin = fin.q->index_of(qreal->elem(gen_image(cat.sigmas[j])));
    int match = -1;
    for (std::size_t s = 0; s < el.sigmas.size(); ++s) {
      int img = d.n == 1 ? el.sigmas[s].dst->identity()
                         : el.sigmas[s].map[lamreal->generator_indices()[0]];
      if (img == u_fin) {
        match = static_cast<int>(s);
        break;
      }
    }
    REQUIRE(match >= 0);
    std::int64_t expected_base = cat.entries[j].base_empty ? 0 : 1;
    for (auto [i, c] : cat.entries[j].circles) {
      (void)c;
      expected_base *= big_m / d.m[i - 1];
    }
    std::vector<int> pts;
    for (std::size_t p = 0; p < el.base_sigma.size(); ++p)
      if (el.base_sigma[p] == match) pts.push_back(static_cast<int>(p));
    CHECK(static_cast<std::int64_t>(pts.size()) == expected_base);
    for (int p : pts)
      CHECK(el.bundle.fiber_dim(p) == cat.entries[j].fiber_dim);
  }
}

}  // namespace

TEST_CASE("tuple validation") {
  auto d = running_example();
  CHECK(acyc_validate(d).empty());

  SUBCASE("l must divide n") {
    d.l = {3};
    d.m = {3};
    d.V = {regular_rep(1)};
    auto bad = acyc_validate(d);
    REQUIRE(!bad.empty());
    CHECK(bad.front().find("divide n") != std::string::npos);
  }
  SUBCASE("V must be a representation of the right cyclic group") {
    d.V = {regular_rep(3)};
    auto bad = acyc_validate(d);
    REQUIRE(!bad.empty());
    CHECK(bad.front().find("cyclic group") != std::string::npos);
  }
  SUBCASE("violations are collected, not thrown") {
    d.n = 0;
    d.l = {5};
    CHECK(acyc_validate(d).size() >= 2);
  }
}

TEST_CASE("hom sets") {
  CHECK(hom_set(running_example()).size() == 2);
  CHECK(hom_set(unit_tuple()).size() == 1);
  // l = 2 forces the Sigma_2 image to be trivial
  auto d = running_example();
  d.l = {2};
  d.V = {regular_rep(1)};
  CHECK(hom_set(d).size() == 1);
}

TEST_CASE("membership in D(ACyc) and D(ACyc_p)") {
  auto d = running_example();
  CHECK(in_D_ACyc(d).ok);
  CHECK(in_D_ACyc_p(d, 2).ok);

  SUBCASE("non-semiregular V fails") {
    d.V = {trivial_rep(2, 2)};
    auto ms = in_D_ACyc(d);
    CHECK_FALSE(ms.ok);
    CHECK(!ms.reasons.empty());
  }
  SUBCASE("an element moving only the q0 block fails") {
    AcycData e;
    e.n = 2;
    e.r = 1;
    e.q = {2, 1};
    e.m = {2};
    e.l = {1};
    e.V = {regular_rep(2)};
    e.Q = whole_group(acyc_ambient(e));  // Sigma_2 acting on the R^2 block
    REQUIRE(acyc_validate(e).empty());
    auto ms = in_D_ACyc(e);
    CHECK_FALSE(ms.ok);
  }
  SUBCASE("m not a power of p fails the p-variant") {
    AcycData e;
    e.n = 2;
    e.r = 1;
    e.q = {0, 1};
    e.m = {6};
    e.l = {2};
    e.V = {regular_rep(3)};
    e.Q = whole_group(acyc_ambient(e));
    REQUIRE(acyc_validate(e).empty());
    CHECK(in_D_ACyc(e).ok);
    CHECK_FALSE(in_D_ACyc_p(e, 2).ok);
    CHECK(in_D_ACyc_p(e, 2).reasons.front().find("power of p") !=
          std::string::npos);
  }
}

TEST_CASE("stretching") {
  auto d = running_example();
  SUBCASE("k = 1 is the identity") {
    auto res = stretch(d, 1);
    CHECK(res.data.n == d.n);
    CHECK(res.data.m == d.m);
    CHECK(res.data.l == d.l);
    CHECK(res.hom_bijection.size() == 2);
  }
  SUBCASE("k = 3 scales n, m, l together") {
    auto res = stretch(d, 3);
    CHECK(res.data.n == 6);
    CHECK(res.data.m == std::vector<int>{6});
    CHECK(res.data.l == std::vector<int>{3});
    CHECK(res.hom_bijection.size() == 2);
    CHECK(hom_set_k(res.data, 3).size() == hom_set(d).size());
  }
  SUBCASE("p-power stretching stays in D(ACyc_2)") {
    REQUIRE(in_D_ACyc_p(d, 2).ok);
    CHECK(in_D_ACyc_p(stretch(d, 2).data, 2).ok);
  }
  SUBCASE("hom count is stretch-invariant across the suite") {
    for (int k = 1; k <= 6; ++k)
      CHECK(stretch(d, k).hom_bijection.size() == hom_set(d).size());
  }
}

TEST_CASE("smash products") {
  auto d = running_example();
  auto u = unit_tuple();
  SUBCASE("smashing with the unit adds one trivial factor") {
    auto s = smash(d, u);
    CHECK(s.n == 2);
    CHECK(s.r == 2);
    CHECK(s.q == std::vector<int>{0, 2, 1});
    CHECK(s.m == std::vector<int>{2, 2});  // unit factor stretched by 2
    CHECK(s.l == std::vector<int>{1, 2});
    CHECK(s.Q.order() == d.Q.order());
    CHECK(in_D_ACyc(s).ok);
  }
  SUBCASE("n is the lcm and the smaller factor gets doubled") {
    auto s = smash(u, d);
    CHECK(s.n == 2);
    CHECK(s.m == std::vector<int>{2, 2});
  }
  SUBCASE("hom count equals the compatible-pair count") {
    std::vector<std::pair<AcycData, AcycData>> pairs = {
        {d, d}, {d, u}, {u, u}};
    for (const auto& [a, b] : pairs) {
      auto s = smash(a, b);
      int n = s.n;
      // direct enumeration: pairs (ua, ub) satisfying the stretched
      // kernel bounds of both halves
      auto ea = stretch(a, n / a.n).data;
      auto eb = stretch(b, n / b.n).data;
      std::size_t count = 0;
      count = hom_set(ea).size() * hom_set(eb).size();
      CHECK(hom_set(s).size() == count);
    }
  }
  SUBCASE("associativity up to reindexing") {
    auto lhs = smash(smash(d, u), d);
    auto rhs = smash(d, smash(u, d));
    CHECK(lhs.n == rhs.n);
    CHECK(lhs.q[0] == rhs.q[0]);
    CHECK(std::accumulate(lhs.q.begin(), lhs.q.end(), 0) ==
          std::accumulate(rhs.q.begin(), rhs.q.end(), 0));
    CHECK(lhs.Q.order() == rhs.Q.order());
    CHECK(hom_set(lhs).size() == hom_set(rhs).size());
  }
}

TEST_CASE("geometric fixed point shadow phi") {
  auto d = running_example();
  SUBCASE("k = 1 is the identity") {
    auto res = phi(d, 1);
    CHECK(res.data.n == d.n);
    CHECK(res.restriction.size() == hom_set(d).size());
  }
  SUBCASE("n doubles and both homs of C4 restrict legally") {
    auto res = phi(d, 2);
    CHECK(res.data.n == 4);
    CHECK(res.data.m == d.m);
    auto homs = hom_set(res.data);
    CHECK(homs.size() == 2);
    CHECK(res.restriction.size() == 2);
  }
  SUBCASE("p-closure") {
    REQUIRE(in_D_ACyc_p(d, 2).ok);
    CHECK(in_D_ACyc_p(phi(d, 2).data, 2).ok);
  }
  SUBCASE("iterated phi matches a single jump") {
    auto twice = phi(phi(d, 2).data, 2);
    auto once = phi(d, 4);
    CHECK(twice.data.n == once.data.n);
    CHECK(hom_set(twice.data).size() == hom_set(once.data).size());
    auto ca = component_catalog(twice.data);
    auto cb = component_catalog(once.data);
    REQUIRE(ca.entries.size() == cb.entries.size());
    for (std::size_t j = 0; j < ca.entries.size(); ++j) {
      CHECK(ca.entries[j].fiber_dim == cb.entries[j].fiber_dim);
      CHECK(ca.entries[j].base_empty == cb.entries[j].base_empty);
    }
  }
  SUBCASE("a failing shadow is rejected") {
    AcycData bad = d;
    bad.V = {trivial_rep(2, 2)};
    CHECK_THROWS_AS(phi(bad, 2), FaithfulnessShadowFails);
  }
}

TEST_CASE("symmetric powers of tuples") {
  auto d = running_example();
  SUBCASE("k = 1 is the identity") {
    auto s = sym(d, 1);
    CHECK(s.q == d.q);
    CHECK(s.Q.order() == d.Q.order());
  }
  SUBCASE("k = 2 gives the wreath product of order 8") {
    auto s = sym(d, 2);
    CHECK(s.q == std::vector<int>{0, 4});
    CHECK(s.Q.order() == 8);
    CHECK(in_D_ACyc(s).ok);
  }
  SUBCASE("order cap is enforced") {
    CHECK_THROWS_AS(sym(d, 4, 100), OrderCapExceeded);
  }
}

TEST_CASE("free cell smash") {
  auto d = running_example();
  auto once = free_smash(d);
  CHECK(once.q == std::vector<int>{1, 2});
  CHECK(once.Q.order() == d.Q.order());
  CHECK(in_D_ACyc(once).ok);
  CHECK(hom_set(once).size() == hom_set(d).size());
  AcycData it = d;
  for (int i = 0; i < 3; ++i) it = free_smash(it);
  CHECK(it.q[0] == 3);
  CHECK(hom_set(it).size() == hom_set(d).size());
}

TEST_CASE("component catalog closed form") {
  SUBCASE("unit tuple has one 1-dimensional component") {
    auto cat = component_catalog(unit_tuple());
    REQUIRE(cat.entries.size() == 1);
    CHECK_FALSE(cat.entries[0].base_empty);
    CHECK(cat.entries[0].fiber_dim == 1);
  }
  SUBCASE("running example: both components have fiber dim 2") {
    auto cat = component_catalog(running_example());
    REQUIRE(cat.entries.size() == 2);
    for (const auto& e : cat.entries) {
      CHECK_FALSE(e.base_empty);
      CHECK(e.fiber_dim == 2);
    }
    // trivial sigma contributes two circles, the swap a single longer one
    std::multiset<std::size_t> sizes = {cat.entries[0].circles.size(),
                                        cat.entries[1].circles.size()};
    CHECK(sizes == std::multiset<std::size_t>{1, 2});
  }
  SUBCASE("empty components appear when the cycle test fails") {
    AcycData d;
    d.n = 4;
    d.r = 1;
    d.q = {0, 2};
    d.m = {2};
    d.l = {1};
    d.V = {regular_rep(2)};
    d.Q = whole_group(acyc_ambient(d));
    auto cat = component_catalog(d);
    REQUIRE(cat.entries.size() == 2);
    int empty = 0;
    for (const auto& e : cat.entries) empty += e.base_empty ? 1 : 0;
    CHECK(empty == 1);  // trivial sigma needs 4 | 2; the 2-cycle gives 4 | 4
  }
  SUBCASE("fiber dims are stretch-invariant") {
    auto d = running_example();
    auto base = component_catalog(d);
    for (int k = 2; k <= 4; ++k) {
      auto cat = component_catalog(stretch(d, k).data);
      REQUIRE(cat.entries.size() == base.entries.size());
      for (std::size_t j = 0; j < cat.entries.size(); ++j)
        CHECK(cat.entries[j].fiber_dim == base.entries[j].fiber_dim);
    }
  }
  SUBCASE("sigma action permutes components with equal dimensions") {
    auto cat = component_catalog(running_example());
    for (const auto& row : cat.sigma_action)
      for (std::size_t j = 0; j < row.size(); ++j)
        CHECK(cat.entries[j].fiber_dim == cat.entries[row[j]].fiber_dim);
  }
}

TEST_CASE("catalog agrees with the finite circle model") {
  check_catalog_against_model(running_example(), 8);
  check_catalog_against_model(unit_tuple(), 2);
  {
    AcycData d;  // q0 block plus one stretched factor
    d.n = 2;
    d.r = 1;
    d.q = {2, 2};
    d.m = {2};
    d.l = {1};
    d.V = {regular_rep(2)};
    d.Q = whole_group(acyc_ambient(d));
    check_catalog_against_model(d, 8);
  }
  {
    AcycData d;  // empty component case
    d.n = 4;
    d.r = 1;
    d.q = {0, 2};
    d.m = {1};
    d.l = {1};
    d.V = {regular_rep(1)};
    d.Q = whole_group(acyc_ambient(d));
    check_catalog_against_model(d, 8);
  }
  {
    AcycData d;  // nontrivial l: the Sigma_2 image must die
    d.n = 2;
    d.r = 1;
    d.q = {0, 2};
    d.m = {2};
    d.l = {2};
    d.V = {regular_rep(1)};
    d.Q = whole_group(acyc_ambient(d));
    check_catalog_against_model(d, 4);
  }
}

TEST_CASE("smash catalog dimensions add across matched pairs") {
  auto d = running_example();
  auto u = unit_tuple();
  auto s = smash(d, u);
  auto cs = component_catalog(s);
  auto cd = component_catalog(stretch(d, s.n / d.n).data);
  auto cu = component_catalog(stretch(u, s.n / u.n).data);
  // Q = Q_d x Q_u with |Q_u| = 1: components match positionally
  REQUIRE(cs.entries.size() == cd.entries.size() * cu.entries.size());
  for (std::size_t j = 0; j < cs.entries.size(); ++j) {
    CHECK(cs.entries[j].fiber_dim ==
          cd.entries[j].fiber_dim + cu.entries[0].fiber_dim);
  }
}

TEST_CASE("faithfulness shadow") {
  SUBCASE("members of D(ACyc) pass") {
    CHECK(faithfulness_shadow(running_example()));
    CHECK(faithfulness_shadow(unit_tuple()));
    CHECK(faithfulness_shadow(sym(running_example(), 2)));
    CHECK(faithfulness_shadow(free_smash(running_example())));
    CHECK(faithfulness_shadow(smash(running_example(), unit_tuple())));
  }
  SUBCASE("trivial V with nontrivial Q fails") {
    auto d = running_example();
    d.V = {trivial_rep(2, 2)};
    REQUIRE(acyc_validate(d).empty());
    CHECK_FALSE(faithfulness_shadow(d));
  }
  SUBCASE("Q trivial is vacuously faithful") {
    auto d = running_example();
    d.V = {trivial_rep(2, 2)};
    d.Q = trivial_subgroup(acyc_ambient(d));
    CHECK(faithfulness_shadow(d));
  }
}

TEST_CASE("membership is closed under the calculus") {
  std::vector<AcycData> suite = {running_example(), unit_tuple(),
                                 free_smash(running_example()),
                                 sym(running_example(), 2)};
  for (const auto& d : suite) {
    REQUIRE(in_D_ACyc(d).ok);
    CHECK(in_D_ACyc(stretch(d, 2).data).ok);
    CHECK(in_D_ACyc(free_smash(d)).ok);
    CHECK(in_D_ACyc(phi(d, 2).data).ok);
    for (const auto& e : suite) CHECK(in_D_ACyc(smash(d, e)).ok);
  }
}
