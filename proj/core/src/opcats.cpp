#include "ringops/opcats.hpp"

#include <sstream>

namespace ringops {

bool OpCatMorphism::operator<(const OpCatMorphism& o) const {
  if (base != o.base) return base < o.base;
  return labels < o.labels;
}

std::string OpCatMorphism::to_string() const {
  std::string out = "(" + base.to_string() + ";";
  for (size_t j = 0; j < labels.size(); ++j) {
    if (j) out += ',';
    out += labels[j].label;
  }
  return out + ")";
}

OpCat::OpCat(Operad c) : c_(std::move(c)) {}

void OpCat::validate(const OpCatMorphism& f) const {
  if (static_cast<int>(f.labels.size()) != f.base.target())
    throw std::invalid_argument("OpCat: label count mismatch");
  for (int j = 1; j <= f.base.target(); ++j)
    if (f.labels[j - 1].arity != f.base.fiber_size(j))
      throw std::invalid_argument("OpCat: label arity mismatch at " +
                                  std::to_string(j));
}

OpCatMorphism OpCat::identity(int n) const {
  return {FMorphism::identity(n), std::vector<OpElem>(n, c_.unit())};
}

OpCatMorphism OpCat::from_pi(const FMorphism& phi) const {
  std::vector<OpElem> labels;
  labels.reserve(phi.target());
  for (int j = 1; j <= phi.target(); ++j) {
    int f = phi.fiber_size(j);
    if (f == 0) {
      labels.push_back(c_.zero());
    } else if (f == 1) {
      labels.push_back(c_.unit());
    } else {
      throw std::invalid_argument("OpCat::from_pi: morphism not in Pi");
    }
  }
  return {phi, std::move(labels)};
}

OpCatMorphism OpCat::from_permutation(const Permutation& p) const {
  return from_pi(FMorphism::from_permutation(p));
}

OpCatMorphism OpCat::iota(const OpElem& c) const {
  return {FMorphism::phi_n(c.arity), {c}};
}

OpCatMorphism OpCat::compose(const OpCatMorphism& psi_d,
                             const OpCatMorphism& phi_c) const {
  if (phi_c.target() != psi_d.source())
    throw std::invalid_argument("OpCat::compose: object mismatch");
  const FMorphism& psi = psi_d.base;
  const FMorphism& phi = phi_c.base;
  FMorphism comp = psi.compose(phi);
  std::vector<OpElem> labels;
  labels.reserve(psi.target());
  for (int k = 1; k <= psi.target(); ++k) {
    std::vector<OpElem> args;
    for (int j : psi.fiber(k)) args.push_back(phi_c.labels[j - 1]);
    OpElem g = c_.gamma(psi_d.labels[k - 1], args);
    labels.push_back(c_.act(g, fiber_reorder(psi, phi, k)));
  }
  return {comp, std::move(labels)};
}

OpCatMorphism OpCat::wedge_assemble(std::span<const OpCatMorphism> to_one) const {
  std::vector<FMorphism> bases;
  std::vector<OpElem> labels;
  for (const auto& f : to_one) {
    if (f.target() != 1)
      throw std::invalid_argument("OpCat::wedge_assemble: target must be 1");
    bases.push_back(f.base);
    labels.push_back(f.labels[0]);
  }
  return {wedge_all(bases), std::move(labels)};
}

const std::vector<OpCatMorphism>& OpCat::hom(int m, int n) const {
  std::scoped_lock lock(*mutex_);
  auto key = std::make_pair(m, n);
  auto it = hom_cache_->find(key);
  if (it != hom_cache_->end()) return it->second;

  std::vector<OpCatMorphism> out;
  for (const auto& phi : enumerate_hom(m, n, Subcat::F)) {
    std::vector<std::vector<OpElem>> pools;
    bool empty = false;
    for (int j = 1; j <= n; ++j) {
      pools.push_back(c_.level_elems(phi.fiber_size(j)));
      if (pools.back().empty()) empty = true;
    }
    if (empty) continue;
    std::vector<size_t> pick(pools.size(), 0);
    while (true) {
      std::vector<OpElem> labels;
      for (size_t j = 0; j < pools.size(); ++j) labels.push_back(pools[j][pick[j]]);
      out.push_back({phi, std::move(labels)});
      size_t j = 0;
      while (j < pools.size() && ++pick[j] == pools[j].size()) pick[j++] = 0;
      if (j == pools.size()) break;
    }
  }
  return hom_cache_->emplace(key, std::move(out)).first->second;
}

OpCatAction::OpCatAction(OperadPair pair)
    : pair_(std::move(pair)), khat_(pair_.mul()), dhat_(pair_.add()) {}

std::vector<int> OpCatAction::lambda_obj(const OpCatMorphism& f,
                                         const std::vector<int>& r) const {
  if (static_cast<int>(r.size()) != f.source())
    throw std::invalid_argument("lambda_obj: arity mismatch");
  std::vector<int> s(f.target(), 1);
  for (int j = 1; j <= f.target(); ++j)
    for (int i : f.base.fiber(j)) s[j - 1] *= r[i - 1];
  return s;
}

std::vector<OpCatMorphism> OpCatAction::lambda_mor(
    const OpCatMorphism& f, const std::vector<OpCatMorphism>& ds) const {
  if (static_cast<int>(ds.size()) != f.source())
    throw std::invalid_argument("lambda_mor: arity mismatch");
  const FMorphism& phi = f.base;
  std::vector<OpCatMorphism> out;
  out.reserve(f.target());
  for (int j = 1; j <= f.target(); ++j) {
    auto fiber = phi.fiber(j);
    if (fiber.empty()) {
      out.push_back(dhat_.identity(1));
      continue;
    }
    std::vector<FMorphism> bases;
    for (int i : fiber) bases.push_back(ds[i - 1].base);
    FMorphism omega = smash_all(bases);
    const OpElem& gj = f.labels[j - 1];
    std::vector<int> tsz;
    for (int i : fiber) tsz.push_back(ds[i - 1].target());
    std::vector<OpElem> labels;
    labels.reserve(omega.target());
    for (int t = 1; t <= omega.target(); ++t) {
      auto tup = lex_unrank(t, tsz);
      std::vector<OpElem> cs;
      for (size_t a = 0; a < fiber.size(); ++a)
        cs.push_back(ds[fiber[a] - 1].labels[tup[a] - 1]);
      labels.push_back(pair_.lambda(gj, cs));
    }
    out.push_back({omega, std::move(labels)});
  }
  return out;
}

std::vector<OpCatMorphism> OpCatAction::sigma_gf(const OpCatMorphism& g,
                                                 const OpCatMorphism& f,
                                                 const std::vector<int>& r) const {
  std::vector<OpCatMorphism> out;
  for (int k = 1; k <= g.target(); ++k) {
    Permutation p = sigma_override_
                        ? sigma_override_(g.base, f.base, r, k)
                        : sigma_k_comp(g.base, f.base, r, k);
    out.push_back(dhat_.from_permutation(p));
  }
  return out;
}

CheckReport check_pseudofunctor(const OpCatAction& action, int bound) {
  CheckReport report;
  report.suite = "pseudofunctor(" + action.pair().name() +
                 ",bound=" + std::to_string(bound) + ")";
  auto record = [&](const std::string& law, const std::string& witness) {
    if (report.failures.size() < 20) report.fail(law, witness);
  };
  const OpCat& K = action.khat();
  const OpCat& D = action.dhat();

  auto obj_tuples = [&](int len) {
    std::vector<std::vector<int>> out;
    if (len == 0) {
      out.emplace_back();
      return out;
    }
    std::vector<int> cur(len, 0);
    while (true) {
      out.push_back(cur);
      int i = 0;
      while (i < len && ++cur[i] > bound) cur[i++] = 0;
      if (i == len) break;
    }
    return out;
  };

  // functoriality of each lambda(f)
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (const auto& f : K.hom(m, n)) {
        for (const auto& r : obj_tuples(m)) {
          std::vector<OpCatMorphism> ids;
          for (int i = 0; i < m; ++i) ids.push_back(D.identity(r[i]));
          auto lid = action.lambda_mor(f, ids);
          auto s = action.lambda_obj(f, r);
          bool ok = true;
          for (int j = 0; j < n; ++j)
            if (!(lid[j] == D.identity(s[j]))) ok = false;
          ++report.cases_checked;
          if (!ok) record("lambda-identity", f.to_string());

          for (const auto& q : obj_tuples(m)) {
            std::vector<std::vector<OpCatMorphism>> dpool, epool;
            bool feasible = true;
            for (int i = 0; i < m && feasible; ++i) {
              dpool.push_back(D.hom(q[i], r[i]));
              epool.push_back(D.hom(r[i], r[i]));
              if (dpool.back().empty() || epool.back().empty()) feasible = false;
            }
            if (!feasible) continue;
            // sample a few tuple choices rather than the full product
            for (int pick = 0; pick < 3; ++pick) {
              std::vector<OpCatMorphism> ds, es, comp;
              for (int i = 0; i < m; ++i) {
                const auto& dp = dpool[i];
                const auto& ep = epool[i];
                ds.push_back(dp[(pick * 7 + i) % dp.size()]);
                es.push_back(ep[(pick * 5 + i) % ep.size()]);
                comp.push_back(D.compose(es.back(), ds.back()));
              }
              auto lhs = action.lambda_mor(f, comp);
              auto le = action.lambda_mor(f, es);
              auto ld = action.lambda_mor(f, ds);
              ++report.cases_checked;
              for (int j = 0; j < n; ++j)
                if (!(lhs[j] == D.compose(le[j], ld[j]))) {
                  record("lambda-functoriality", f.to_string());
                  break;
                }
            }
          }
        }
      }
    }
  }

  // naturality of sigma(g,f)
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (int p = 0; p <= 2; ++p) {
        for (const auto& f : K.hom(m, n)) {
          for (const auto& g : K.hom(n, p)) {
            OpCatMorphism gf = K.compose(g, f);
            for (const auto& r : obj_tuples(m)) {
              std::vector<int> starget(m);
              for (int i = 0; i < m; ++i)
                starget[i] = (r[i] + 1 <= bound) ? r[i] + 1 : r[i];
              std::vector<OpCatMorphism> ds;
              bool feasible = true;
              for (int i = 0; i < m; ++i) {
                const auto& homs = D.hom(r[i], starget[i]);
                if (homs.empty()) {
                  feasible = false;
                  break;
                }
                ds.push_back(homs[homs.size() / 2]);
              }
              if (!feasible) continue;
              auto sig_r = action.sigma_gf(g, f, r);
              auto sig_s = action.sigma_gf(g, f, starget);
              auto via_gf = action.lambda_mor(gf, ds);
              auto lf = action.lambda_mor(f, ds);
              auto via_g = action.lambda_mor(g, lf);
              ++report.cases_checked;
              for (int k = 0; k < p; ++k) {
                OpCatMorphism lhs = D.compose(via_g[k], sig_r[k]);
                OpCatMorphism rhs = D.compose(sig_s[k], via_gf[k]);
                if (!(lhs == rhs)) {
                  record("sigma-naturality", g.to_string() + "." + f.to_string());
                  break;
                }
              }
            }
          }
        }
      }
    }
  }

  // triple coherence
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (int p = 0; p <= 2; ++p) {
        for (int pl = 0; pl <= 1; ++pl) {
          for (const auto& f : K.hom(m, n)) {
            for (const auto& g : K.hom(n, p)) {
              for (const auto& h : K.hom(p, pl)) {
                OpCatMorphism gf = K.compose(g, f);
                OpCatMorphism hg = K.compose(h, g);
                for (const auto& r : obj_tuples(m)) {
                  auto a1 = action.sigma_gf(hg, f, r);
                  auto fr = action.lambda_obj(f, r);
                  auto a2 = action.sigma_gf(h, g, fr);
                  auto b1 = action.sigma_gf(h, gf, r);
                  auto sgf = action.sigma_gf(g, f, r);
                  auto b2 = action.lambda_mor(h, sgf);
                  ++report.cases_checked;
                  for (int k = 0; k < pl; ++k) {
                    OpCatMorphism lhs = D.compose(a2[k], a1[k]);
                    OpCatMorphism rhs = D.compose(b2[k], b1[k]);
                    if (!(lhs == rhs)) {
                      record("sigma-coherence", h.to_string() + "." +
                                                    g.to_string() + "." +
                                                    f.to_string());
                      break;
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace ringops
