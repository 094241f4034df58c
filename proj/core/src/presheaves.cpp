#include "ringops/presheaves.hpp"

#include <numeric>
#include <random>
#include <set>

namespace ringops {

VPresheaf::VPresheaf(std::string name, EvalFn eval, ActFn act,
                     std::optional<int> support_max)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      act_(std::move(act)),
      support_max_(support_max) {}

const std::vector<std::string>& VPresheaf::eval(int n) const {
  std::scoped_lock lock(*mutex_);
  auto it = cache_->find(n);
  if (it == cache_->end()) {
    std::vector<std::string> value;
    if (!support_max_ || n <= *support_max_) value = eval_(n);
    it = cache_->emplace(n, std::move(value)).first;
  }
  return it->second;
}

std::string VPresheaf::act(const FMorphism& phi, const std::string& x) const {
  if (!phi.is_projection())
    throw std::invalid_argument("VPresheaf::act: morphism not in Upsilon");
  return act_(phi, x);
}

VPresheaf VPresheaf::r_prime(std::vector<std::string> x) {
  auto xs = std::make_shared<std::vector<std::string>>(std::move(x));
  return VPresheaf(
      "R'",
      [xs](int n) {
        std::vector<std::string> out;
        std::vector<int> sizes(n, static_cast<int>(xs->size()));
        long long total = lex_total(sizes);
        for (long long r = 1; r <= total; ++r) {
          auto tup = lex_unrank(static_cast<int>(r), sizes);
          std::vector<std::string> parts;
          for (int t : tup) parts.push_back((*xs)[t - 1]);
          out.push_back(encode_tuple(parts));
        }
        return out;
      },
      [](const FMorphism& phi, const std::string& x) {
        auto parts = decode_tuple(x);
        std::vector<std::string> out;
        for (int j = 1; j <= phi.target(); ++j)
          out.push_back(parts[phi.fiber(j).front() - 1]);
        return encode_tuple(out);
      },
      std::nullopt);
}

VPresheaf VPresheaf::truncate(int cutoff, const std::string& suffix) const {
  VPresheaf self = *this;
  (void)suffix;
  return VPresheaf(
      name_ + "|<=" + std::to_string(cutoff),
      [self, cutoff](int n) {
        return n <= cutoff ? self.eval(n) : std::vector<std::string>{};
      },
      [self](const FMorphism& phi, const std::string& x) {
        return self.act(phi, x);
      },
      support_max_ ? std::min(*support_max_, cutoff) : cutoff);
}

VPresheaf VPresheaf::from_table(
    std::string name, std::map<int, std::vector<std::string>> sets,
    std::map<std::pair<std::string, std::string>, std::string> action) {
  int maxn = 0;
  for (const auto& [n, v] : sets)
    if (!v.empty()) maxn = std::max(maxn, n);
  auto s = std::make_shared<decltype(sets)>(std::move(sets));
  auto a = std::make_shared<decltype(action)>(std::move(action));
  return VPresheaf(
      std::move(name),
      [s](int n) {
        auto it = s->find(n);
        return it == s->end() ? std::vector<std::string>{} : it->second;
      },
      [a](const FMorphism& phi, const std::string& x) {
        if (phi.is_permutation() && phi.is_ordered_effective()) return x;
        auto it = a->find({phi.to_string(), x});
        if (it == a->end())
          throw std::out_of_range("VPresheaf table: no action for " +
                                  phi.to_string() + " on " + x);
        return it->second;
      },
      maxn);
}

WPresheaf::WPresheaf(std::string name, EvalFn eval, ActFn act,
                     std::function<bool(const WreathObject&)> maybe_nonempty)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      act_(std::move(act)),
      maybe_nonempty_(std::move(maybe_nonempty)) {}

const std::vector<std::string>& WPresheaf::eval(const WreathObject& obj) const {
  std::scoped_lock lock(*mutex_);
  auto it = cache_->find(obj);
  if (it == cache_->end()) {
    std::vector<std::string> value;
    if (maybe_nonempty(obj)) value = eval_(obj);
    it = cache_->emplace(obj, std::move(value)).first;
  }
  return it->second;
}

std::string WPresheaf::act(const WreathMorphism& w, const std::string& x) const {
  return act_(w, x);
}

WPresheaf WPresheaf::from_table(
    std::string name, std::map<WreathObject, std::vector<std::string>> sets,
    std::map<std::pair<std::string, std::string>, std::string> action) {
  auto s = std::make_shared<decltype(sets)>(std::move(sets));
  auto a = std::make_shared<decltype(action)>(std::move(action));
  return WPresheaf(
      std::move(name),
      [s](const WreathObject& obj) {
        auto it = s->find(obj);
        return it == s->end() ? std::vector<std::string>{} : it->second;
      },
      [s, a](const WreathMorphism& w, const std::string& x) {
        auto it = a->find({w.to_string(), x});
        if (it == a->end()) {
          // identities act as identities even without table entries
          if (w.src == w.dst) {
            bool ident = w.f.base == FMorphism::identity(w.src.n);
            for (const auto& dj : w.d)
              ident = ident && dj.base == FMorphism::identity(dj.source());
            if (ident) return x;
          }
          throw std::out_of_range("WPresheaf table: no action for " +
                                  w.to_string() + " on " + x);
        }
        return it->second;
      },
      [s](const WreathObject& obj) { return s->count(obj) > 0; });
}

std::vector<std::string> l_prime(const VPresheaf& y) { return y.eval(1); }

WPresheaf r_dblprime(const VPresheaf& y) {
  return WPresheaf(
      "R''" + y.name(),
      [y](const WreathObject& obj) {
        std::vector<std::vector<std::string>> pools;
        for (int j = 0; j < obj.n; ++j) pools.push_back(y.eval(obj.s[j]));
        std::vector<std::string> out;
        std::vector<size_t> pick(pools.size(), 0);
        for (const auto& p : pools)
          if (p.empty()) return out;
        while (true) {
          std::vector<std::string> parts;
          for (size_t j = 0; j < pools.size(); ++j) parts.push_back(pools[j][pick[j]]);
          out.push_back(encode_tuple(parts));
          size_t j = 0;
          while (j < pools.size() && ++pick[j] == pools[j].size()) pick[j++] = 0;
          if (j == pools.size()) break;
        }
        return out;
      },
      [y](const WreathMorphism& w, const std::string& x) {
        auto parts = decode_tuple(x);
        const FMorphism& phi = w.f.base;
        std::vector<std::string> out;
        for (int j = 1; j <= w.dst.n; ++j) {
          auto fiber = phi.fiber(j);
          if (fiber.size() != 1)
            throw std::invalid_argument(
                "R''Y only carries the Upsilon int Upsilon action");
          // the smash over the fiber is a single Y-coordinate and chi_j
          // acts on it
          std::string arg = parts[fiber.front() - 1];
          out.push_back(y.act(w.d[j - 1].base, arg));
        }
        return encode_tuple(out);
      },
      [y](const WreathObject& obj) {
        for (int j = 0; j < obj.n; ++j)
          if (!y.maybe_nonempty(obj.s[j])) return false;
        return true;
      });
}

VPresheaf l_dblprime(const WPresheaf& z) {
  auto uu = std::make_shared<RingCat>(OperadPair::builtin("QQ"));
  return VPresheaf(
      "L''" + z.name(),
      [z](int s) { return z.eval(WreathObject{1, {s}}); },
      [z, uu](const FMorphism& phi, const std::string& x) {
        // act by the morphism (id_1; phi) of Upsilon int Upsilon
        WreathObject src{1, {phi.source()}}, dst{1, {phi.target()}};
        return z.act(uu->from_pipi(src, dst, FMorphism::identity(1), {phi}), x);
      },
      std::nullopt);
}

WPresheaf r_full(const std::vector<std::string>& x) {
  return r_dblprime(VPresheaf::r_prime(x));
}

std::string delta_prime_unit(const VPresheaf& y, int n, const std::string& elem) {
  std::vector<std::string> parts;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> img(n, 0);
    img[i - 1] = 1;
    parts.push_back(y.act(FMorphism(1, img), elem));
  }
  return encode_tuple(parts);
}

std::vector<std::string> delta_dblprime_unit(const RingCat& upsilon2,
                                             const WPresheaf& z,
                                             const WreathObject& obj,
                                             const std::string& elem) {
  std::vector<std::string> out;
  for (int j = 1; j <= obj.n; ++j) {
    std::vector<int> img(obj.n, 0);
    img[j - 1] = 1;
    FMorphism delta_j(1, img);
    WreathObject dst{1, {obj.s[j - 1]}};
    auto w = upsilon2.from_pipi(obj, dst, delta_j,
                                {FMorphism::identity(obj.s[j - 1])});
    out.push_back(z.act(w, elem));
  }
  return out;
}

int Rig::index(const std::string& label) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == label) return static_cast<int>(i);
  throw std::out_of_range("Rig: unknown element " + label);
}

CheckReport Rig::check_laws() const {
  CheckReport report;
  report.suite = "rig-laws";
  int n = static_cast<int>(elems.size());
  auto rec = [&](const std::string& law, int a, int b, int c) {
    report.fail(law, elems[a] + "," + elems[b] + "," + (c >= 0 ? elems[c] : ""));
  };
  for (int a = 0; a < n; ++a) {
    ++report.cases_checked;
    if (add[zero][a] != a) rec("add-unit", a, a, -1);
    if (mul[one][a] != a) rec("mul-unit", a, a, -1);
    if (mul[zero][a] != zero) rec("mul-zero", a, a, -1);
    for (int b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) rec("add-comm", a, b, -1);
      if (mul[a][b] != mul[b][a]) rec("mul-comm", a, b, -1);
      for (int c = 0; c < n; ++c) {
        ++report.cases_checked;
        if (add[add[a][b]][c] != add[a][add[b][c]]) rec("add-assoc", a, b, c);
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) rec("mul-assoc", a, b, c);
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
          rec("distributivity", a, b, c);
      }
    }
  }
  return report;
}

Rig Rig::boolean() {
  Rig r;
  r.elems = {"0", "1"};
  r.add = {{0, 1}, {1, 1}};
  r.mul = {{0, 0}, {0, 1}};
  r.zero = 0;
  r.one = 1;
  return r;
}

Rig Rig::zmod(int n) {
  Rig r;
  for (int i = 0; i < n; ++i) r.elems.push_back(std::to_string(i));
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[a][b] = (a + b) % n;
      r.mul[a][b] = (a * b) % n;
    }
  r.zero = 0;
  r.one = 1 % n;
  return r;
}

Rig Rig::truncation(int cap) {
  Rig r;
  for (int i = 0; i <= cap; ++i) r.elems.push_back(std::to_string(i));
  int n = cap + 1;
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[a][b] = std::min(a + b, cap);
      r.mul[a][b] = std::min(a * b, cap);
    }
  r.zero = 0;
  r.one = std::min(1, cap);
  return r;
}

namespace {

// Shared evaluation core for actions on RX: coordinates y_{j,v} are
// produced by theta over the chi_j fiber of v, with the inner products
// given by xi over the phi fiber of j.
std::string act_on_rx(const std::vector<std::string>& xset,
                      const AlgebraAction& theta, const AlgebraAction& xi,
                      const WreathMorphism& w, const std::string& x) {
  auto flat = decode_tuple(x);  // one tuple per i, each a tuple of size r_i
  const FMorphism& phi = w.f.base;
  std::vector<std::vector<std::string>> coords;
  for (const auto& part : flat) coords.push_back(decode_tuple(part));
  std::vector<std::string> out_parts;
  for (int j = 1; j <= w.dst.n; ++j) {
    auto fiber = phi.fiber(j);
    const OpCatMorphism& dj = w.d[j - 1];
    const FMorphism& chi = dj.base;
    std::vector<int> rsz;
    for (int i : fiber) rsz.push_back(static_cast<int>(coords[i - 1].size()));
    // products over the nonzero points of the smash
    std::vector<std::string> prods(chi.source());
    for (int u = 1; u <= chi.source(); ++u) {
      auto tup = lex_unrank(u, rsz);
      std::vector<std::string> args;
      for (size_t a = 0; a < fiber.size(); ++a)
        args.push_back(coords[fiber[a] - 1][tup[a] - 1]);
      prods[u - 1] = xi(w.f.labels[j - 1], args);
    }
    std::vector<std::string> sums;
    for (int v = 1; v <= chi.target(); ++v) {
      std::vector<std::string> args;
      for (int u : chi.fiber(v)) args.push_back(prods[u - 1]);
      sums.push_back(theta(dj.labels[v - 1], args));
    }
    out_parts.push_back(encode_tuple(sums));
  }
  (void)xset;
  return encode_tuple(out_parts);
}

}  // namespace

RingFunctor embed_rig(const Rig& x) {
  RingFunctor f{RingCat{OperadPair::builtin("NN")}, r_full(x.elems), nullptr};
  Rig rig = x;
  // base-morphism formula: sums of products, never consulting labels
  f.act = [rig](const WreathMorphism& w, const std::string& elem) {
    AlgebraAction theta = [rig](const OpElem&,
                                const std::vector<std::string>& args) {
      int acc = rig.zero;
      for (const auto& a : args) acc = rig.add[acc][rig.index(a)];
      return rig.elems[acc];
    };
    AlgebraAction xi = [rig](const OpElem&,
                             const std::vector<std::string>& args) {
      int acc = rig.one;
      for (const auto& a : args) acc = rig.mul[acc][rig.index(a)];
      return rig.elems[acc];
    };
    return act_on_rx(rig.elems, theta, xi, w, elem);
  };
  return f;
}

RingFunctor embed_cg_algebra(const OperadPair& pair,
                             std::vector<std::string> x, AlgebraAction theta,
                             AlgebraAction xi) {
  RingFunctor f{RingCat{pair}, r_full(x), nullptr};
  f.act = [x, theta, xi](const WreathMorphism& w, const std::string& elem) {
    return act_on_rx(x, theta, xi, w, elem);
  };
  return f;
}

CheckReport check_ring_functor(const RingFunctor& f,
                               const std::vector<WreathObject>& objects,
                               int samples, unsigned seed) {
  CheckReport report;
  report.suite = "ring-functor(" + f.base.name() + ")";
  report.exhaustive = false;
  std::mt19937_64 gen(seed);
  auto pick = [&](size_t n) { return static_cast<size_t>(gen() % n); };
  for (int it = 0; it < samples; ++it) {
    const auto& a = objects[pick(objects.size())];
    const auto& b = objects[pick(objects.size())];
    const auto& c = objects[pick(objects.size())];
    auto h1 = f.cat.hom(a, b);
    auto h2 = f.cat.hom(b, c);
    auto xs = f.base.eval(a);
    if (h1.empty() || h2.empty() || xs.empty()) continue;
    const auto& u = h1[pick(h1.size())];
    const auto& v = h2[pick(h2.size())];
    const auto& x = xs[pick(xs.size())];
    ++report.cases_checked;
    std::string lhs = f.act(f.cat.compose(v, u), x);
    std::string rhs = f.act(v, f.act(u, x));
    if (lhs != rhs)
      report.fail("functoriality", u.to_string() + ";" + v.to_string() + ";" + x);
    std::string idx = f.act(f.cat.identity(a), x);
    if (idx != x) report.fail("identity", x);
  }
  return report;
}

SpecialReport discrete_special_check(const WPresheaf& z,
                                     const std::vector<WreathObject>& objects) {
  SpecialReport out;
  out.details.suite = "specialness(" + z.name() + ")";
  RingCat uu{OperadPair::builtin("QQ")};

  if (z.eval(WreathObject::terminal()).size() != 1) {
    out.semi_special = false;
    out.details.fail("(i)", "Z(0;*) size " +
                                std::to_string(z.eval(WreathObject::terminal()).size()));
  }
  if (z.eval(WreathObject{1, {0}}).size() != 1) {
    out.special = false;
    out.details.fail("(iii)", "Z(1;0) size " +
                                  std::to_string(z.eval(WreathObject{1, {0}}).size()));
  }

  for (const auto& obj : objects) {
    ++out.details.cases_checked;
    // (ii): delta'' bijective
    const auto& src = z.eval(obj);
    std::set<std::string> images;
    long long target = 1;
    for (int j = 0; j < obj.n; ++j)
      target *= static_cast<long long>(z.eval(WreathObject{1, {obj.s[j]}}).size());
    for (const auto& e : src) {
      auto parts = delta_dblprime_unit(uu, z, obj, e);
      images.insert(encode_tuple(parts));
    }
    if (static_cast<long long>(images.size()) != static_cast<long long>(src.size()) ||
        static_cast<long long>(src.size()) != target) {
      out.semi_special = false;
      out.details.fail("(ii)", obj.to_string());
    }
    // (iv): delta' bijective at (1;s)
    for (int j = 0; j < obj.n; ++j) {
      int s = obj.s[j];
      WreathObject one_s{1, {s}};
      const auto& src1 = z.eval(one_s);
      long long t1 = 1;
      for (int q = 0; q < s; ++q)
        t1 *= static_cast<long long>(z.eval(WreathObject{1, {1}}).size());
      std::set<std::string> im;
      for (const auto& e : src1) {
        std::vector<std::string> parts;
        for (int q = 1; q <= s; ++q) {
          std::vector<int> img(s, 0);
          img[q - 1] = 1;
          auto w = uu.from_pipi(one_s, WreathObject{1, {1}},
                                FMorphism::identity(1), {FMorphism(1, img)});
          parts.push_back(z.act(w, e));
        }
        im.insert(encode_tuple(parts));
      }
      if (static_cast<long long>(im.size()) != static_cast<long long>(src1.size()) ||
          static_cast<long long>(src1.size()) != t1) {
        out.special = false;
        out.details.fail("(iv)", one_s.to_string());
      }
    }
  }
  out.special = out.special && out.semi_special;
  return out;
}

}  // namespace ringops
