#include "ringops/wreath.hpp"

namespace ringops {

std::string WreathObject::to_string() const {
  return "(" + std::to_string(n) + ";" + encode_ints(s) + ")";
}

bool WreathMorphism::operator<(const WreathMorphism& o) const {
  if (src != o.src) return src < o.src;
  if (dst != o.dst) return dst < o.dst;
  if (f != o.f) return f < o.f;
  return d < o.d;
}

std::string WreathMorphism::to_string() const {
  std::string out = "(" + f.to_string() + ";[";
  for (size_t j = 0; j < d.size(); ++j) {
    if (j) out += ',';
    out += d[j].to_string();
  }
  return out + "]):" + src.to_string() + "->" + dst.to_string();
}

RingCat::RingCat(OperadPair pair) : action_(std::move(pair)) {}

std::vector<int> RingCat::smash_sizes(const FMorphism& phi,
                                      const std::vector<int>& r) const {
  std::vector<int> out(phi.target(), 1);
  for (int j = 1; j <= phi.target(); ++j)
    for (int i : phi.fiber(j)) out[j - 1] *= r[i - 1];
  return out;
}

void RingCat::validate(const WreathMorphism& w) const {
  if (w.f.source() != w.src.n || w.f.target() != w.dst.n)
    throw std::invalid_argument("RingCat: base arity mismatch");
  khat().validate(w.f);
  auto rp = smash_sizes(w.f.base, w.src.s);
  if (static_cast<int>(w.d.size()) != w.dst.n)
    throw std::invalid_argument("RingCat: coordinate count mismatch");
  for (int j = 0; j < w.dst.n; ++j) {
    dhat().validate(w.d[j]);
    if (w.d[j].source() != rp[j] || w.d[j].target() != w.dst.s[j])
      throw std::invalid_argument("RingCat: coordinate object mismatch at " +
                                  std::to_string(j + 1));
  }
}

WreathMorphism RingCat::identity(const WreathObject& obj) const {
  WreathMorphism w;
  w.src = w.dst = obj;
  w.f = khat().identity(obj.n);
  for (int s : obj.s) w.d.push_back(dhat().identity(s));
  return w;
}

WreathMorphism RingCat::to_terminal(const WreathObject& src) const {
  WreathMorphism w;
  w.src = src;
  w.dst = WreathObject::terminal();
  w.f = khat().hom(src.n, 0).front();
  return w;
}

WreathMorphism RingCat::compose(const WreathMorphism& ge,
                                const WreathMorphism& fd) const {
  if (!(fd.dst == ge.src))
    throw std::invalid_argument("RingCat::compose: object mismatch");
  WreathMorphism out;
  out.src = fd.src;
  out.dst = ge.dst;
  out.f = khat().compose(ge.f, fd.f);
  auto sigma = action_.sigma_gf(ge.f, fd.f, fd.src.s);
  auto lam = action_.lambda_mor(ge.f, fd.d);
  out.d.reserve(ge.dst.n);
  for (int k = 0; k < ge.dst.n; ++k)
    out.d.push_back(
        dhat().compose(ge.d[k], dhat().compose(lam[k], sigma[k])));
  return out;
}

WreathMorphism RingCat::from_pipi(const WreathObject& src,
                                  const WreathObject& dst,
                                  const FMorphism& phi,
                                  const std::vector<FMorphism>& chi) const {
  WreathMorphism w;
  w.src = src;
  w.dst = dst;
  w.f = khat().from_pi(phi);
  for (const auto& c : chi) w.d.push_back(dhat().from_pi(c));
  validate(w);
  return w;
}

std::pair<WreathMorphism, WreathMorphism> RingCat::factor(
    const WreathMorphism& fd) const {
  WreathObject mid{fd.dst.n, smash_sizes(fd.f.base, fd.src.s)};
  WreathMorphism right;  // (f; id^n): (m;R) -> (n;R')
  right.src = fd.src;
  right.dst = mid;
  right.f = fd.f;
  for (int s : mid.s) right.d.push_back(dhat().identity(s));
  WreathMorphism left;  // (id; d): (n;R') -> (n;S)
  left.src = mid;
  left.dst = fd.dst;
  left.f = khat().identity(fd.dst.n);
  left.d = fd.d;
  return {left, right};
}

WreathMorphism RingCat::commute_relation(const WreathMorphism& g_chi,
                                         const WreathMorphism& phi_d) const {
  // first leg: (g.phi; sigma(g,phi)): (m;R) -> (p;R'')
  WreathMorphism leg1;
  leg1.src = phi_d.src;
  leg1.f = khat().compose(g_chi.f, phi_d.f);
  auto sigma = action_.sigma_gf(g_chi.f, phi_d.f, phi_d.src.s);
  std::vector<int> rpp;
  for (const auto& s : sigma) {
    leg1.d.push_back(s);
    rpp.push_back(s.target());
  }
  leg1.dst = WreathObject{g_chi.dst.n, rpp};

  // second leg: (1; chi . lambda(g)(d)): (p;R'') -> (p;T)
  WreathMorphism leg2;
  leg2.src = leg1.dst;
  leg2.dst = g_chi.dst;
  leg2.f = khat().identity(g_chi.dst.n);
  auto lam = action_.lambda_mor(g_chi.f, phi_d.d);
  for (int k = 0; k < g_chi.dst.n; ++k)
    leg2.d.push_back(dhat().compose(g_chi.d[k], lam[k]));

  WreathMorphism rhs = compose(leg2, leg1);
  WreathMorphism lhs = compose(g_chi, phi_d);
  if (!(rhs == lhs))
    throw std::logic_error("commute_relation: legs disagree with compose");
  return rhs;
}

std::vector<WreathMorphism> RingCat::hom(const WreathObject& src,
                                         const WreathObject& dst) const {
  std::vector<WreathMorphism> out;
  for (const auto& f : khat().hom(src.n, dst.n)) {
    auto rp = smash_sizes(f.base, src.s);
    std::vector<const std::vector<OpCatMorphism>*> pools;
    bool empty = false;
    for (int j = 0; j < dst.n; ++j) {
      pools.push_back(&dhat().hom(rp[j], dst.s[j]));
      if (pools.back()->empty()) empty = true;
    }
    if (empty) continue;
    std::vector<size_t> pick(pools.size(), 0);
    while (true) {
      WreathMorphism w;
      w.src = src;
      w.dst = dst;
      w.f = f;
      for (size_t j = 0; j < pools.size(); ++j)
        w.d.push_back((*pools[j])[pick[j]]);
      out.push_back(std::move(w));
      size_t j = 0;
      while (j < pools.size() && ++pick[j] == pools[j]->size()) pick[j++] = 0;
      if (j == pools.size()) break;
    }
  }
  return out;
}

std::vector<WreathMorphism> RingCat::sigma_mR(const WreathObject& obj) const {
  std::vector<WreathMorphism> out;
  for (const auto& sigma : Permutation::all(obj.n)) {
    bool sizes_ok = true;
    Permutation inv = sigma.inverse();
    for (int j = 1; j <= obj.n; ++j)
      if (obj.s[inv(j) - 1] != obj.s[j - 1]) sizes_ok = false;
    if (!sizes_ok) continue;
    // all tuples of block permutations tau_j in Sigma_{s_j}
    std::vector<std::vector<Permutation>> pools;
    for (int j = 0; j < obj.n; ++j) pools.push_back(Permutation::all(obj.s[j]));
    std::vector<size_t> pick(pools.size(), 0);
    while (true) {
      std::vector<FMorphism> chi;
      for (size_t j = 0; j < pools.size(); ++j)
        chi.push_back(FMorphism::from_permutation(pools[j][pick[j]]));
      out.push_back(
          from_pipi(obj, obj, FMorphism::from_permutation(sigma), chi));
      size_t j = 0;
      while (j < pools.size() && ++pick[j] == pools[j].size()) pick[j++] = 0;
      if (j == pools.size()) break;
      if (pools.empty()) break;
    }
    if (obj.n == 0) break;  // only the identity of (0;*)
  }
  return out;
}

}  // namespace ringops
