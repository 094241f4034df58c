#include "ringops/operads.hpp"

#include <numeric>
#include <sstream>

namespace ringops {

namespace {

constexpr size_t kMaxStoredFailures = 20;

// All length-len tuples of nonnegative ints with entries <= cap and
// sum <= sum_cap.
template <typename F>
void for_each_shape(int len, int cap, int sum_cap, F&& f) {
  std::vector<int> cur(len, 0);
  while (true) {
    int sum = std::accumulate(cur.begin(), cur.end(), 0);
    if (sum <= sum_cap) f(cur);
    int i = 0;
    while (i < len && ++cur[i] > cap) cur[i++] = 0;
    if (i == len) break;
  }
}

// All element tuples with the given arities; does nothing if a level is
// empty.
template <typename F>
void for_each_elems(const Operad& op, const std::vector<int>& arities, F&& f) {
  std::vector<std::vector<OpElem>> pools;
  pools.reserve(arities.size());
  for (int a : arities) {
    pools.push_back(op.level_elems(a));
    if (pools.back().empty()) return;
  }
  std::vector<size_t> pick(arities.size(), 0);
  std::vector<OpElem> tuple(arities.size());
  while (true) {
    for (size_t t = 0; t < pools.size(); ++t) tuple[t] = pools[t][pick[t]];
    f(tuple);
    size_t i = 0;
    while (i < pools.size() && ++pick[i] == pools[i].size()) pick[i++] = 0;
    if (i == pools.size()) break;
  }
}

std::string shape_str(const std::vector<int>& v) { return encode_ints(v); }

}  // namespace

std::string perm_label(const Permutation& p) { return p.to_string(); }

Permutation label_perm(int arity, const std::string& label) {
  auto img = decode_ints(label);
  if (static_cast<int>(img.size()) != arity)
    throw std::invalid_argument("label_perm: arity mismatch for " + label);
  return Permutation(std::move(img));
}

Operad::Operad(std::string name, LevelFn levels, std::string unit_label,
               GammaFn gamma, ActFn act, std::optional<int> max_level)
    : name_(std::move(name)),
      levels_(std::move(levels)),
      unit_label_(std::move(unit_label)),
      gamma_(std::move(gamma)),
      act_(std::move(act)),
      max_level_(max_level) {}

const std::vector<std::string>& Operad::level(int j) const {
  if (j < 0) throw std::invalid_argument("Operad::level: negative level");
  if (max_level_ && j > *max_level_)
    throw std::out_of_range("Operad::level: " + name_ + " has no level " +
                            std::to_string(j) + " (max " +
                            std::to_string(*max_level_) + ")");
  std::scoped_lock lock(cache_->mutex);
  auto it = cache_->levels.find(j);
  if (it == cache_->levels.end())
    it = cache_->levels.emplace(j, levels_(j)).first;
  return it->second;
}

std::vector<OpElem> Operad::level_elems(int j) const {
  std::vector<OpElem> out;
  for (const auto& l : level(j)) out.push_back({j, l});
  return out;
}

OpElem Operad::zero() const {
  const auto& l0 = level(0);
  if (l0.empty())
    throw std::domain_error("Operad::zero: " + name_ + " has empty 0th level");
  return {0, l0.front()};
}

OpElem Operad::gamma(const OpElem& c, const std::vector<OpElem>& args) const {
  if (static_cast<int>(args.size()) != c.arity)
    throw std::invalid_argument("Operad::gamma: arity mismatch");
  int out = 0;
  for (const auto& a : args) out += a.arity;
  return {out, gamma_(c, args)};
}

OpElem Operad::act(const OpElem& c, const Permutation& sigma) const {
  if (sigma.degree() != c.arity)
    throw std::invalid_argument("Operad::act: degree mismatch");
  return {c.arity, act_(c, sigma)};
}

bool Operad::is_sigma_free(int bound) const {
  for (int j = 0; j <= bound; ++j) {
    for (const auto& c : level_elems(j)) {
      for (const auto& sigma : Permutation::all(j)) {
        if (sigma.is_identity()) continue;
        if (act(c, sigma) == c) return false;
      }
    }
  }
  return true;
}

Operad Operad::N() {
  return Operad(
      "N", [](int) { return std::vector<std::string>{"*"}; }, "*",
      [](const OpElem&, const std::vector<OpElem>&) { return std::string("*"); },
      [](const OpElem& c, const Permutation&) { return c.label; });
}

Operad Operad::P() {
  return Operad(
      "P",
      [](int j) {
        return j <= 1 ? std::vector<std::string>{"*"}
                      : std::vector<std::string>{};
      },
      "*",
      [](const OpElem& c, const std::vector<OpElem>& args) {
        return c.arity == 0 ? c.label : args[0].label;
      },
      [](const OpElem& c, const Permutation&) { return c.label; });
}

Operad Operad::Q() {
  return Operad(
      "Q",
      [](int j) {
        return j == 1 ? std::vector<std::string>{"*"}
                      : std::vector<std::string>{};
      },
      "*",
      [](const OpElem&, const std::vector<OpElem>& args) {
        return args[0].label;
      },
      [](const OpElem& c, const Permutation&) { return c.label; });
}

Operad Operad::M() {
  return Operad(
      "M",
      [](int j) {
        std::vector<std::string> out;
        for (const auto& p : Permutation::all(j)) out.push_back(perm_label(p));
        return out;
      },
      "[1]",
      [](const OpElem& c, const std::vector<OpElem>& args) {
        std::vector<int> j;
        std::vector<Permutation> taus;
        for (const auto& a : args) {
          j.push_back(a.arity);
          taus.push_back(label_perm(a.arity, a.label));
        }
        Permutation blocks = block_sum_perm(label_perm(c.arity, c.label), j);
        return perm_label(blocks.compose(direct_sum(taus)));
      },
      [](const OpElem& c, const Permutation& sigma) {
        return perm_label(label_perm(c.arity, c.label).compose(sigma));
      });
}

const Operad& Operad::builtin(const std::string& name) {
  static const Operad n = Operad::N();
  static const Operad m = Operad::M();
  static const Operad p = Operad::P();
  static const Operad q = Operad::Q();
  if (name == "N") return n;
  if (name == "M") return m;
  if (name == "P") return p;
  if (name == "Q") return q;
  throw std::invalid_argument("Operad::builtin: unknown operad " + name);
}

OperadPair::OperadPair(std::string name, Operad add, Operad mul,
                       LambdaFn lambda, bool with_conventions)
    : name_(std::move(name)),
      add_(std::make_shared<Operad>(std::move(add))),
      mul_(std::make_shared<Operad>(std::move(mul))),
      lambda_(std::move(lambda)),
      with_conventions_(with_conventions) {}

OpElem OperadPair::lambda(const OpElem& g, const std::vector<OpElem>& cs) const {
  if (static_cast<int>(cs.size()) != g.arity)
    throw std::invalid_argument("OperadPair::lambda: arity mismatch");
  if (with_conventions_) {
    if (g.arity == 0) return add_->unit();
    for (const auto& c : cs)
      if (c.arity == 0) return add_->zero();
  }
  return lambda_(g, cs);
}

OperadPair OperadPair::NN() {
  return OperadPair("NN", Operad::N(), Operad::N(),
                    [](const OpElem& g, const std::vector<OpElem>& cs) {
                      int out = 1;
                      for (const auto& c : cs) out *= c.arity;
                      (void)g;
                      return OpElem{out, "*"};
                    });
}

OperadPair OperadPair::NM() {
  return OperadPair("NM", Operad::N(), Operad::M(),
                    [](const OpElem&, const std::vector<OpElem>& cs) {
                      int out = 1;
                      for (const auto& c : cs) out *= c.arity;
                      return OpElem{out, "*"};
                    });
}

OperadPair OperadPair::QM() { return QG(Operad::M()); }

OperadPair OperadPair::QG(const Operad& g) {
  Operad q = Operad::Q();
  return OperadPair("Q" + g.name(), q, g,
                    [unit = q.unit()](const OpElem&,
                                      const std::vector<OpElem>&) {
                      return unit;
                    });
}

OperadPair OperadPair::MM_candidate() {
  return OperadPair("MM", Operad::M(), Operad::M(),
                    [](const OpElem& g, const std::vector<OpElem>& cs) {
                      std::vector<int> j;
                      std::vector<Permutation> taus;
                      for (const auto& c : cs) {
                        j.push_back(c.arity);
                        taus.push_back(label_perm(c.arity, c.label));
                      }
                      Permutation lhs =
                          sigma_block(label_perm(g.arity, g.label), j);
                      Permutation out = lhs.compose(tensor_perms(taus));
                      return OpElem{out.degree(), perm_label(out)};
                    });
}

const OperadPair& OperadPair::builtin(const std::string& name) {
  static const OperadPair nn = OperadPair::NN();
  static const OperadPair nm = OperadPair::NM();
  static const OperadPair qm = OperadPair::QM();
  static const OperadPair qq = OperadPair::QG(Operad::Q());
  static const OperadPair qn = OperadPair::QG(Operad::N());
  static const OperadPair mm = OperadPair::MM_candidate();
  if (name == "NN") return nn;
  if (name == "NM") return nm;
  if (name == "QM") return qm;
  if (name == "QQ") return qq;
  if (name == "QN") return qn;
  if (name == "MM") return mm;
  throw std::invalid_argument("OperadPair::builtin: unknown pair " + name);
}

CheckReport check_operad_axioms(const Operad& op, int bound) {
  CheckReport report;
  report.suite = "operad-axioms(" + op.name() + ",bound=" + std::to_string(bound) + ")";
  auto record = [&](const std::string& law, const std::string& witness) {
    if (report.failures.size() < kMaxStoredFailures) report.fail(law, witness);
  };

  // unit laws
  for (int j = 0; j <= bound; ++j) {
    for (const auto& c : op.level_elems(j)) {
      ++report.cases_checked;
      if (!(op.gamma(op.unit(), {c}) == c))
        record("unit-left", c.to_string());
      std::vector<OpElem> ids(j, op.unit());
      ++report.cases_checked;
      if (!(op.gamma(c, ids) == c)) record("unit-right", c.to_string());
    }
  }

  // associativity: gamma(gamma(c;d);e) = gamma(c; gamma(d_r;e_block))
  for (int k = 0; k <= bound; ++k) {
    for_each_shape(k, bound, bound, [&](const std::vector<int>& j) {
      int sum_j = std::accumulate(j.begin(), j.end(), 0);
      for_each_shape(sum_j, bound, bound, [&](const std::vector<int>& h) {
        for_each_elems(op, {k}, [&](const std::vector<OpElem>& cs) {
          for_each_elems(op, j, [&](const std::vector<OpElem>& ds) {
            for_each_elems(op, h, [&](const std::vector<OpElem>& es) {
              ++report.cases_checked;
              OpElem lhs = op.gamma(op.gamma(cs[0], ds), es);
              std::vector<OpElem> inner;
              size_t off = 0;
              for (int r = 0; r < k; ++r) {
                std::vector<OpElem> block(es.begin() + off,
                                          es.begin() + off + j[r]);
                off += j[r];
                inner.push_back(op.gamma(ds[r], block));
              }
              OpElem rhs = op.gamma(cs[0], inner);
              if (!(lhs == rhs))
                record("associativity",
                       cs[0].to_string() + ";" + shape_str(j) + ";" +
                           shape_str(h));
            });
          });
        });
      });
    });
  }

  // equivariance
  for (int k = 0; k <= bound; ++k) {
    for_each_shape(k, bound, bound, [&](const std::vector<int>& j) {
      for_each_elems(op, {k}, [&](const std::vector<OpElem>& cs) {
        for_each_elems(op, j, [&](const std::vector<OpElem>& ds) {
          for (const auto& sigma : Permutation::all(k)) {
            ++report.cases_checked;
            OpElem lhs = op.gamma(op.act(cs[0], sigma), ds);
            std::vector<OpElem> reord(k, op.unit());
            Permutation inv = sigma.inverse();
            for (int t = 1; t <= k; ++t) reord[t - 1] = ds[inv(t) - 1];
            std::vector<int> jr(k);
            for (int t = 1; t <= k; ++t) jr[t - 1] = j[t - 1];
            OpElem rhs = op.act(op.gamma(cs[0], reord),
                                block_sum_perm(sigma, jr));
            if (!(lhs == rhs))
              record("equivariance-sigma",
                     cs[0].to_string() + ";" + sigma.to_string());
          }
          // tau side
          std::vector<std::vector<Permutation>> tau_pools;
          for (int r = 0; r < k; ++r) tau_pools.push_back(Permutation::all(j[r]));
          std::vector<size_t> pick(static_cast<size_t>(k), 0);
          if (k == 0) return;
          while (true) {
            std::vector<Permutation> taus;
            for (int r = 0; r < k; ++r) taus.push_back(tau_pools[r][pick[r]]);
            ++report.cases_checked;
            std::vector<OpElem> acted;
            for (int r = 0; r < k; ++r) acted.push_back(op.act(ds[r], taus[r]));
            OpElem lhs = op.gamma(cs[0], acted);
            OpElem rhs = op.act(op.gamma(cs[0], ds), direct_sum(taus));
            if (!(lhs == rhs))
              record("equivariance-tau", cs[0].to_string() + ";" + shape_str(j));
            size_t i = 0;
            while (i < pick.size() && ++pick[i] == tau_pools[i].size())
              pick[i++] = 0;
            if (i == pick.size()) break;
          }
        });
      });
    });
  }
  return report;
}

CheckReport check_pair_axioms(const OperadPair& pair, int bound) {
  const Operad& C = pair.add();
  const Operad& G = pair.mul();
  CheckReport report;
  report.suite = "pair-axioms(" + pair.name() + ",bound=" + std::to_string(bound) + ")";
  auto record = [&](const std::string& law, const std::string& witness) {
    if (report.failures.size() < kMaxStoredFailures) report.fail(law, witness);
  };

  // (iii) lambda(id; c) = c
  for (int j = 0; j <= bound; ++j)
    for (const auto& c : C.level_elems(j)) {
      ++report.cases_checked;
      if (!(pair.lambda(G.unit(), {c}) == c)) record("(iii)", c.to_string());
    }

  // (iv) lambda(g; id^k) = id
  for (int k = 0; k <= bound; ++k)
    for (const auto& g : G.level_elems(k)) {
      ++report.cases_checked;
      std::vector<OpElem> ids(k, C.unit());
      if (!(pair.lambda(g, ids) == C.unit())) record("(iv)", g.to_string());
    }

  // (vii) lambda(1) = id when k = 0
  if (!G.level_empty(0)) {
    ++report.cases_checked;
    if (!(pair.lambda(G.level_elems(0)[0], {}) == C.unit()))
      record("(vii)", "k=0");
  }

  // (viii) lambda(g; ...) = 0 when some j_r = 0
  if (!C.level_empty(0)) {
    for (int k = 1; k <= bound; ++k) {
      for_each_shape(k, bound, bound, [&](const std::vector<int>& j) {
        bool has_zero = false;
        for (int v : j) has_zero |= (v == 0);
        if (!has_zero) return;
        for_each_elems(G, {k}, [&](const std::vector<OpElem>& gs) {
          for_each_elems(C, j, [&](const std::vector<OpElem>& cs) {
            ++report.cases_checked;
            if (!(pair.lambda(gs[0], cs) == C.zero()))
              record("(viii)", gs[0].to_string() + ";" + shape_str(j));
          });
        });
      });
    }
  }

  // (i) lambda(gamma(g;g_r); c_J) = lambda(g; lambda(g_r; c_Jr))
  for (int k = 1; k <= bound; ++k) {
    for_each_shape(k, bound, bound, [&](const std::vector<int>& j) {
      int sum_j = std::accumulate(j.begin(), j.end(), 0);
      for_each_shape(sum_j, bound, bound, [&](const std::vector<int>& i_flat) {
        for_each_elems(G, {k}, [&](const std::vector<OpElem>& gouter) {
          for_each_elems(G, j, [&](const std::vector<OpElem>& gs) {
            for_each_elems(C, i_flat, [&](const std::vector<OpElem>& cflat) {
              ++report.cases_checked;
              OpElem lhs = pair.lambda(G.gamma(gouter[0], gs), cflat);
              std::vector<OpElem> inner;
              size_t off = 0;
              for (int r = 0; r < k; ++r) {
                std::vector<OpElem> block(cflat.begin() + off,
                                          cflat.begin() + off + j[r]);
                off += j[r];
                inner.push_back(pair.lambda(gs[r], block));
              }
              OpElem rhs = pair.lambda(gouter[0], inner);
              if (!(lhs == rhs))
                record("(i)", gouter[0].to_string() + ";" + shape_str(j) +
                                  ";" + shape_str(i_flat));
            });
          });
        });
      });
    });
  }

  // (ii) gamma(lambda(g;c); x_Q lambda(g;c_Q)) . nu = lambda(g; gamma(c_r;c_Jr))
  for (int k = 1; k <= bound; ++k) {
    for_each_shape(k, bound, bound, [&](const std::vector<int>& j) {
      int sum_j = std::accumulate(j.begin(), j.end(), 0);
      for_each_shape(sum_j, bound, bound, [&](const std::vector<int>& i_flat) {
        BlockData data;
        data.k = k;
        data.j = j;
        data.i.resize(k);
        size_t off = 0;
        for (int r = 0; r < k; ++r) {
          data.i[r].assign(i_flat.begin() + off, i_flat.begin() + off + j[r]);
          off += j[r];
        }
        for_each_elems(G, {k}, [&](const std::vector<OpElem>& gs) {
          for_each_elems(C, j, [&](const std::vector<OpElem>& cs) {
            for_each_elems(C, i_flat, [&](const std::vector<OpElem>& cflat) {
              ++report.cases_checked;
              const OpElem& g = gs[0];
              // cflat in (r,q) flat order
              auto c_at = [&](int r, int q) -> const OpElem& {
                size_t pos = 0;
                for (int rr = 0; rr < r; ++rr) pos += j[rr];
                return cflat[pos + q];
              };
              OpElem base = pair.lambda(g, cs);
              std::vector<OpElem> q_args;
              bool any_zero = false;
              for (int v : j) any_zero |= (v == 0);
              if (!any_zero && k > 0) {
                std::vector<int> q(k, 1);
                while (true) {
                  std::vector<OpElem> cQ;
                  for (int r = 0; r < k; ++r) cQ.push_back(c_at(r, q[r] - 1));
                  q_args.push_back(pair.lambda(g, cQ));
                  int r = k - 1;
                  while (r >= 0 && ++q[r] > j[r]) q[r--] = 1;
                  if (r < 0) break;
                }
              }
              OpElem gm = C.gamma(base, q_args);
              Permutation nu = nu_distributivity(data);
              OpElem lhs = nu.degree() == gm.arity ? C.act(gm, nu) : gm;
              std::vector<OpElem> blocks;
              for (int r = 0; r < k; ++r) {
                std::vector<OpElem> block;
                for (int q2 = 0; q2 < j[r]; ++q2) block.push_back(c_at(r, q2));
                blocks.push_back(C.gamma(cs[r], block));
              }
              OpElem rhs = pair.lambda(g, blocks);
              if (!(lhs == rhs))
                record("(ii)", g.to_string() + ";" + shape_str(j) + ";" +
                                   shape_str(i_flat));
            });
          });
        });
      });
    });
  }

  // (v) lambda(g.sigma; c) = lambda(g; c_{sigma^{-1}}) . sigma<j>
  for (int k = 1; k <= bound; ++k) {
    for_each_shape(k, bound, bound, [&](const std::vector<int>& j) {
      for_each_elems(G, {k}, [&](const std::vector<OpElem>& gs) {
        for_each_elems(C, j, [&](const std::vector<OpElem>& cs) {
          for (const auto& sigma : Permutation::all(k)) {
            ++report.cases_checked;
            OpElem lhs = pair.lambda(G.act(gs[0], sigma), cs);
            Permutation inv = sigma.inverse();
            std::vector<OpElem> reord;
            for (int t = 1; t <= k; ++t) reord.push_back(cs[inv(t) - 1]);
            OpElem body = pair.lambda(gs[0], reord);
            Permutation sb = sigma_block(sigma, j);
            OpElem rhs = sb.degree() == body.arity ? C.act(body, sb) : body;
            if (!(lhs == rhs))
              record("(v)", gs[0].to_string() + ";" + shape_str(j) + ";" +
                                sigma.to_string());
          }
        });
      });
    });
  }

  // (vi) lambda(g; c_r . tau_r) = lambda(g; c) . (tau_1 x ... x tau_k)
  for (int k = 1; k <= bound; ++k) {
    for_each_shape(k, bound, bound, [&](const std::vector<int>& j) {
      for_each_elems(G, {k}, [&](const std::vector<OpElem>& gs) {
        for_each_elems(C, j, [&](const std::vector<OpElem>& cs) {
          std::vector<std::vector<Permutation>> pools;
          for (int r = 0; r < k; ++r) pools.push_back(Permutation::all(j[r]));
          std::vector<size_t> pick(static_cast<size_t>(k), 0);
          while (true) {
            std::vector<Permutation> taus;
            for (int r = 0; r < k; ++r) taus.push_back(pools[r][pick[r]]);
            ++report.cases_checked;
            std::vector<OpElem> acted;
            for (int r = 0; r < k; ++r) acted.push_back(C.act(cs[r], taus[r]));
            OpElem lhs = pair.lambda(gs[0], acted);
            OpElem body = pair.lambda(gs[0], cs);
            Permutation tp = tensor_perms(taus);
            OpElem rhs = tp.degree() == body.arity ? C.act(body, tp) : body;
            if (!(lhs == rhs))
              record("(vi)", gs[0].to_string() + ";" + shape_str(j));
            size_t i = 0;
            while (i < pick.size() && ++pick[i] == pools[i].size())
              pick[i++] = 0;
            if (i == pick.size()) break;
          }
        });
      });
    });
  }

  return report;
}

}  // namespace ringops
