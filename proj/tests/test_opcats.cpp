#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ringops/opcats.hpp"

using namespace ringops;

namespace {
OpCatMorphism random_hom(const OpCat& cat, int m, int n) {
  const auto& homs = cat.hom(m, n);
  REQUIRE_FALSE(homs.empty());
  return homs[oracles::rand_int(0, static_cast<int>(homs.size()) - 1)];
}
}  // namespace

TEST_CASE("hom set sizes") {
  OpCat mhat{Operad::builtin("M")};
  OpCat nhat{Operad::builtin("N")};
  OpCat phat{Operad::builtin("P")};
  OpCat qhat{Operad::builtin("Q")};

  // a single morphism to 0
  for (int m = 0; m <= 3; ++m) {
    CHECK(mhat.hom(m, 0).size() == 1);
    CHECK(nhat.hom(m, 0).size() == 1);
  }
  CHECK(mhat.hom(1, 1).size() == 2);

  // N^ = F, P^ = Pi, Q^ = Upsilon as hom sets
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      CHECK(nhat.hom(m, n).size() == enumerate_hom(m, n, Subcat::F).size());
      CHECK(phat.hom(m, n).size() == enumerate_hom(m, n, Subcat::Pi).size());
      CHECK(qhat.hom(m, n).size() == enumerate_hom(m, n, Subcat::Upsilon).size());
    }
}

TEST_CASE("composition in N^ reduces to composition in F") {
  OpCat nhat{Operad::builtin("N")};
  for (int it = 0; it < 500; ++it) {
    int m = oracles::rand_int(0, 3), n = oracles::rand_int(0, 3),
        p = oracles::rand_int(0, 3);
    auto f = oracles::random_fmorphism(m, n);
    auto g = oracles::random_fmorphism(n, p);
    OpCatMorphism fn{f, std::vector<OpElem>(n, OpElem{0, "*"})};
    for (int j = 1; j <= n; ++j) fn.labels[j - 1] = {f.fiber_size(j), "*"};
    OpCatMorphism gn{g, std::vector<OpElem>(p, OpElem{0, "*"})};
    for (int k = 1; k <= p; ++k) gn.labels[k - 1] = {g.fiber_size(k), "*"};
    CHECK(nhat.compose(gn, fn).base == g.compose(f));
  }
}

TEST_CASE("composition is associative and unital") {
  OpCat mhat{Operad::builtin("M")};
  SUBCASE("identity laws") {
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (const auto& f : mhat.hom(m, n)) {
          CHECK(mhat.compose(mhat.identity(n), f) == f);
          CHECK(mhat.compose(f, mhat.identity(m)) == f);
        }
  }
  SUBCASE("exhaustive small objects") {
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int p = 0; p <= 2; ++p)
          for (int q = 0; q <= 2; ++q)
            for (const auto& f : mhat.hom(m, n))
              for (const auto& g : mhat.hom(n, p))
                for (const auto& h : mhat.hom(p, q))
                  CHECK(mhat.compose(mhat.compose(h, g), f) ==
                        mhat.compose(h, mhat.compose(g, f)));
  }
  SUBCASE("fuzzed larger objects") {
    for (int it = 0; it < 300; ++it) {
      int m = oracles::rand_int(0, 3), n = oracles::rand_int(0, 3),
          p = oracles::rand_int(0, 3), q = oracles::rand_int(0, 3);
      auto f = random_hom(mhat, m, n);
      auto g = random_hom(mhat, n, p);
      auto h = random_hom(mhat, p, q);
      CHECK(mhat.compose(mhat.compose(h, g), f) ==
            mhat.compose(h, mhat.compose(g, f)));
    }
  }
}

TEST_CASE("base projection is functorial onto F") {
  OpCat mhat{Operad::builtin("M")};
  for (int it = 0; it < 300; ++it) {
    int m = oracles::rand_int(0, 3), n = oracles::rand_int(0, 3),
        p = oracles::rand_int(0, 3);
    auto f = random_hom(mhat, m, n);
    auto g = random_hom(mhat, n, p);
    CHECK(mhat.compose(g, f).base == g.base.compose(f.base));
  }
  // surjective on homs for operads with nonempty levels
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      std::set<FMorphism> bases;
      for (const auto& f : mhat.hom(m, n)) bases.insert(f.base);
      CHECK(bases.size() == enumerate_hom(m, n, Subcat::F).size());
    }
}

TEST_CASE("iota embedding") {
  OpCat mhat{Operad::builtin("M")};
  const Operad& M = Operad::builtin("M");

  CHECK(mhat.iota(M.unit()) == mhat.identity(1));
  CHECK(mhat.iota(M.zero()) ==
        OpCatMorphism{FMorphism::zero(0, 1), {M.zero()}});

  SUBCASE("iota is injective") {
    std::set<OpCatMorphism> seen;
    for (int n = 0; n <= 3; ++n)
      for (const auto& c : M.level_elems(n)) seen.insert(mhat.iota(c));
    size_t expect = 0;
    for (int n = 0; n <= 3; ++n) expect += M.level(n).size();
    CHECK(seen.size() == expect);
  }

  SUBCASE("gamma is recovered from iota and composition") {
    for (int it = 0; it < 300; ++it) {
      int k = oracles::rand_int(0, 3);
      auto c = OpElem{k, perm_label(oracles::random_permutation(k))};
      std::vector<OpElem> cs;
      std::vector<OpCatMorphism> iotas;
      for (int r = 0; r < k; ++r) {
        int j = oracles::rand_int(0, 3);
        cs.push_back({j, perm_label(oracles::random_permutation(j))});
        iotas.push_back(mhat.iota(cs.back()));
      }
      OpCatMorphism assembled = mhat.wedge_assemble(iotas);
      OpCatMorphism composite = mhat.compose(mhat.iota(c), assembled);
      CHECK(composite.labels[0] == M.gamma(c, cs));
    }
  }
}

TEST_CASE("lambda on Pi morphisms is coordinate selection") {
  OpCatAction action{OperadPair::builtin("NM")};
  const OpCat& K = action.khat();
  const OpCat& D = action.dhat();

  // f = delta_2: 2 -> 1 in Pi picks the second coordinate
  FMorphism delta2(1, {0, 1});
  OpCatMorphism f = K.from_pi(delta2);
  auto d1 = D.hom(1, 2)[3];
  auto d2 = D.hom(2, 1)[1];
  auto out = action.lambda_mor(f, {d1, d2});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == d2);

  // empty fiber gives the identity of 1
  OpCatMorphism zero = K.from_pi(FMorphism::zero(0, 1));
  auto out0 = action.lambda_mor(zero, {});
  REQUIRE(out0.size() == 1);
  CHECK(out0[0] == D.identity(1));

  // identities map to identities
  for (int it = 0; it < 100; ++it) {
    int m = oracles::rand_int(0, 2), n = oracles::rand_int(0, 2);
    auto fk = K.hom(m, n);
    if (fk.empty()) continue;
    auto fm = fk[oracles::rand_int(0, static_cast<int>(fk.size()) - 1)];
    std::vector<int> r(m);
    for (auto& v : r) v = oracles::rand_int(0, 3);
    std::vector<OpCatMorphism> ids;
    for (int i = 0; i < m; ++i) ids.push_back(D.identity(r[i]));
    auto s = action.lambda_obj(fm, r);
    auto lid = action.lambda_mor(fm, ids);
    for (int j = 0; j < n; ++j) CHECK(lid[j] == D.identity(s[j]));
  }
}

TEST_CASE("lambda is compatible with the operadic action through iota") {
  OpCatAction action{OperadPair::builtin("NM")};
  const OpCat& K = action.khat();
  const OpCat& D = action.dhat();
  const OperadPair& pair = action.pair();

  for (int it = 0; it < 200; ++it) {
    int k = oracles::rand_int(1, 3);
    OpElem g{k, perm_label(oracles::random_permutation(k))};
    std::vector<OpCatMorphism> iotas;
    std::vector<OpElem> cs;
    for (int r = 0; r < k; ++r) {
      int j = oracles::rand_int(1, 3);
      cs.push_back({j, "*"});
      iotas.push_back(D.iota(cs.back()));
    }
    auto out = action.lambda_mor(K.iota(g), iotas);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == D.iota(pair.lambda(g, cs)));
  }
}

TEST_CASE("sigma components") {
  OpCatAction action{OperadPair::builtin("NM")};
  const OpCat& K = action.khat();

  // ordered data in Upsilon gives identities
  OpCatMorphism f = K.from_pi(FMorphism(2, {1, 2}));
  OpCatMorphism g = K.from_pi(FMorphism(1, {1, 0}));
  auto sig = action.sigma_gf(g, f, {2, 3});
  for (const auto& s : sig) CHECK(s.base.is_permutation());
  CHECK(sig[0].base == FMorphism::identity(2));

  // the swap example of the perms module, componentwise
  OpCatMorphism swp = K.from_permutation(Permutation({2, 1}));
  OpCatMorphism ph2{FMorphism::phi_n(2), {OpElem{2, "[1,2]"}}};
  auto sig2 = action.sigma_gf(ph2, swp, {2, 3});
  REQUIRE(sig2.size() == 1);
  CHECK(sig2[0].base.to_permutation() == Permutation({1, 3, 5, 2, 4, 6}));
}

TEST_CASE("pseudofunctor checks") {
  SUBCASE("(N,N)") {
    OpCatAction a{OperadPair::builtin("NN")};
    CHECK(check_pseudofunctor(a, 2).passed());
  }
  SUBCASE("(Q,M)") {
    OpCatAction a{OperadPair::builtin("QM")};
    CHECK(check_pseudofunctor(a, 2).passed());
  }
  SUBCASE("(N,M)") {
    OpCatAction a{OperadPair::builtin("NM")};
    CHECK(check_pseudofunctor(a, 2).passed());
  }
  SUBCASE("corrupted sigma table fails with a witness") {
    OpCatAction a{OperadPair::builtin("NM")};
    a.set_sigma_override([](const FMorphism& psi, const FMorphism& phi,
                            const std::vector<int>& r, int k) {
      Permutation good = sigma_k_comp(psi, phi, r, k);
      if (good.degree() >= 2) {
        auto img = good.image();
        std::swap(img[0], img[1]);
        return Permutation(img);
      }
      return good;
    });
    auto report = check_pseudofunctor(a, 2);
    CHECK_FALSE(report.passed());
    CHECK_FALSE(report.failures.front().witness.empty());
  }
}
