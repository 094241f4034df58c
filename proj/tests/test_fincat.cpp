#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ringops/fincat.hpp"

using namespace ringops;

TEST_CASE("composition is pointwise and unital") {
  FMorphism phi(2, {2, 0, 1});   // 3 -> 2
  FMorphism psi(1, {1, 1});      // 2 -> 1
  CHECK(psi.compose(phi) == FMorphism(1, {1, 0, 1}));

  FMorphism id3 = FMorphism::identity(3);
  FMorphism f(3, {3, 1});
  CHECK(id3.compose(f) == f);
  CHECK(f.compose(FMorphism::identity(2)) == f);

  FMorphism phi2 = FMorphism::phi_n(2);              // 2 -> 1
  FMorphism delta1(1, {1, 0});                       // 2 -> 1 projection
  CHECK_THROWS_AS(phi2.compose(delta1), std::invalid_argument);
}

TEST_CASE("composition associativity, exhaustive small and fuzzed") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
          for (auto& f : enumerate_hom(m, n, Subcat::F))
            for (auto& g : enumerate_hom(n, p, Subcat::F))
              for (auto& h : enumerate_hom(p, q, Subcat::F))
                CHECK(h.compose(g).compose(f) == h.compose(g.compose(f)));
  for (int it = 0; it < 2000; ++it) {
    int m = oracles::rand_int(0, 5), n = oracles::rand_int(0, 5);
    int p = oracles::rand_int(0, 5), q = oracles::rand_int(0, 5);
    auto f = oracles::random_fmorphism(m, n);
    auto g = oracles::random_fmorphism(n, p);
    auto h = oracles::random_fmorphism(p, q);
    CHECK(h.compose(g).compose(f) == h.compose(g.compose(f)));
  }
}

TEST_CASE("classification flags") {
  auto c = classify(FMorphism::identity(3));
  CHECK(c.injection);
  CHECK(c.projection);
  CHECK(c.permutation);
  CHECK(c.effective);
  CHECK(c.ordered_effective);

  // 0 -> n is effective (among the injections); m -> 0 for m > 0 is a
  // projection but not effective
  auto z = classify(FMorphism::zero(0, 2));
  CHECK(z.effective);
  CHECK(z.injection);
  CHECK_FALSE(z.projection);
  auto to0 = classify(FMorphism::zero(3, 0));
  CHECK(to0.projection);
  CHECK_FALSE(to0.effective);
  CHECK(classify(FMorphism::zero(0, 0)).permutation);

  auto t = classify(FMorphism(2, {2, 1}));
  CHECK(t.permutation);
  CHECK(t.effective);
  CHECK_FALSE(t.ordered_effective);

  // effectiveness is preserved under postcomposition with permutations
  for (int it = 0; it < 500; ++it) {
    int m = oracles::rand_int(0, 4), n = oracles::rand_int(1, 4);
    auto phi = oracles::random_fmorphism(m, n);
    auto sigma = FMorphism::from_permutation(oracles::random_permutation(n));
    CHECK(classify(sigma.compose(phi)).effective == classify(phi).effective);
  }
}

TEST_CASE("factor_projection_effective") {
  SUBCASE("already ordered effective") {
    FMorphism phi(3, {1, 2, 2});
    auto [psi, pi] = factor_projection_effective(phi);
    CHECK(psi == phi);
    CHECK(pi == FMorphism::identity(3));
  }
  SUBCASE("kills a point") {
    FMorphism phi(1, {0, 1});
    auto [psi, pi] = factor_projection_effective(phi);
    CHECK(psi == FMorphism::identity(1));
    CHECK(pi == FMorphism(1, {0, 1}));
    CHECK(psi.compose(pi) == phi);
  }
  SUBCASE("unordered with zero") {
    FMorphism phi(2, {2, 0, 1});
    auto [psi, pi] = factor_projection_effective(phi);
    CHECK(psi.is_ordered_effective());
    CHECK(pi.is_projection());
    CHECK(psi.compose(pi) == phi);
    CHECK(psi == FMorphism(2, {1, 2}));
  }
  SUBCASE("round trips on random morphisms") {
    for (int it = 0; it < 10000; ++it) {
      int m = oracles::rand_int(0, 6), n = oracles::rand_int(0, 4);
      auto phi = oracles::random_fmorphism(m, n);
      auto [psi, pi] = factor_projection_effective(phi);
      CHECK(psi.is_ordered_effective());
      CHECK(pi.is_projection());
      CHECK(psi.compose(pi) == phi);
    }
  }
}

TEST_CASE("order_effective splits off the ordering permutation") {
  for (int it = 0; it < 2000; ++it) {
    int m = oracles::rand_int(0, 6), n = oracles::rand_int(1, 4);
    std::vector<int> img(m);
    for (auto& v : img) v = oracles::rand_int(1, n);
    FMorphism psi(n, img);
    auto [ordered, tau] = order_effective(psi);
    CHECK(ordered.is_ordered_effective());
    CHECK(ordered.compose(FMorphism::from_permutation(tau)) == psi);
  }
}

TEST_CASE("sigma_phi_subgroup") {
  CHECK(sigma_phi_subgroup(FMorphism::identity(3)).size() == 6);
  CHECK(sigma_phi_subgroup(FMorphism::zero(0, 2)).size() == 2);
  FMorphism phi(3, {2});  // 1 -> 3, 1 |-> 2
  auto sub = sigma_phi_subgroup(phi);
  CHECK(sub.size() == 2);
  for (auto& s : sub) CHECK(s(2) == 2);
  CHECK_THROWS_AS(sigma_phi_subgroup(FMorphism::zero(1, 1)), std::invalid_argument);
}

TEST_CASE("wedge and smash") {
  CHECK(smash(FMorphism::identity(2), FMorphism::identity(3)) ==
        FMorphism::identity(6));
  // smash(phi_2, id_2): lex pairs (i,j) |-> j
  CHECK(smash(FMorphism::phi_n(2), FMorphism::identity(2)) ==
        FMorphism(2, {1, 2, 1, 2}));
  CHECK(wedge(FMorphism::phi_n(2), FMorphism::phi_n(3)) ==
        FMorphism(2, {1, 1, 2, 2, 2}));

  // wedge strictly associative; smash associative under lex flattening
  for (int it = 0; it < 500; ++it) {
    auto a = oracles::random_fmorphism(oracles::rand_int(0, 3), oracles::rand_int(0, 3));
    auto b = oracles::random_fmorphism(oracles::rand_int(0, 3), oracles::rand_int(0, 3));
    auto c = oracles::random_fmorphism(oracles::rand_int(0, 3), oracles::rand_int(0, 3));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(smash(smash(a, b), c) == smash(a, smash(b, c)));
  }
}

TEST_CASE("phi_n and smash compatibility") {
  CHECK(FMorphism::phi_n(0) == FMorphism::zero(0, 1));
  CHECK(FMorphism::phi_n(3) == FMorphism(1, {1, 1, 1}));
  // smash(phi_j1,...,phi_jk) = phi_{j1...jk}
  CHECK(smash(FMorphism::phi_n(2), FMorphism::phi_n(3)) == FMorphism::phi_n(6));
  std::vector<FMorphism> fs = {FMorphism::phi_n(2), FMorphism::phi_n(1),
                               FMorphism::phi_n(3)};
  CHECK(smash_all(fs) == FMorphism::phi_n(6));
}

TEST_CASE("hom set enumeration and counts") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto all = enumerate_hom(m, n, Subcat::F);
      long long expect = 1;
      for (int i = 0; i < m; ++i) expect *= (n + 1);
      CHECK(static_cast<long long>(all.size()) == expect);
      std::set<std::string> seen;
      for (auto& f : all) seen.insert(f.to_string());
      CHECK(seen.size() == all.size());
    }

  CHECK(enumerate_hom(2, 1, Subcat::Upsilon).size() == 2);
  CHECK(enumerate_hom(2, 1, Subcat::E).size() == 1);
  CHECK(enumerate_hom(2, 1, Subcat::E)[0] == FMorphism::phi_n(2));

  // 0 is terminal in Upsilon but not initial
  CHECK(enumerate_hom(3, 0, Subcat::Upsilon).size() == 1);
  CHECK(enumerate_hom(0, 3, Subcat::Upsilon).empty());
  CHECK(enumerate_hom(0, 3, Subcat::Pi).size() == 1);
  // no effective morphisms m -> 0 for m > 0
  CHECK(enumerate_hom(2, 0, Subcat::E).empty());
  CHECK(enumerate_hom(0, 0, Subcat::E).size() == 1);
}

TEST_CASE("sigma_psi_group is the block group") {
  FMorphism psi(2, {1, 1, 2});  // fibers {1,2},{3}
  auto grp = sigma_psi_group(psi);
  CHECK(grp.size() == 2);
  for (auto& tau : grp) CHECK(psi.compose(FMorphism::from_permutation(tau)) == psi);
  CHECK(sigma_psi_group(FMorphism::zero(0, 2)).size() == 1);
}
