#pragma once

#include "ringops/wreath.hpp"

namespace ringops {

// A finite-set-valued functor on Upsilon, evaluated on demand.  Values
// are canonical string labels; evaluations are memoized.  support_max
// bounds the objects with nonempty value when known; morphisms in
// Upsilon only shrink objects, so truncations stay functorial.
class VPresheaf {
 public:
  using EvalFn = std::function<std::vector<std::string>(int)>;
  using ActFn =
      std::function<std::string(const FMorphism&, const std::string&)>;

  VPresheaf() = default;
  VPresheaf(std::string name, EvalFn eval, ActFn act,
            std::optional<int> support_max);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& eval(int n) const;
  // phi: m -> n in Upsilon, x in Y_m
  std::string act(const FMorphism& phi, const std::string& x) const;
  std::optional<int> support_max() const { return support_max_; }
  bool maybe_nonempty(int n) const {
    return !support_max_ || n <= *support_max_;
  }

  // The Upsilon-space R'X = {X^n}; infinite support.
  static VPresheaf r_prime(std::vector<std::string> x);
  // Truncation at n <= cutoff (a finite-support presheaf).
  VPresheaf truncate(int cutoff, const std::string& suffix = "|") const;
  // From explicit tables; the action table maps (phi, x) pairs.
  static VPresheaf from_table(
      std::string name, std::map<int, std::vector<std::string>> sets,
      std::map<std::pair<std::string, std::string>, std::string> action);

 private:
  std::string name_;
  EvalFn eval_;
  ActFn act_;
  std::optional<int> support_max_;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
  std::shared_ptr<std::map<int, std::vector<std::string>>> cache_ =
      std::make_shared<std::map<int, std::vector<std::string>>>();
};

// A finite-set-valued functor on Upsilon int Upsilon.
class WPresheaf {
 public:
  using EvalFn = std::function<std::vector<std::string>(const WreathObject&)>;
  using ActFn =
      std::function<std::string(const WreathMorphism&, const std::string&)>;

  WPresheaf() = default;
  WPresheaf(std::string name, EvalFn eval, ActFn act,
            std::function<bool(const WreathObject&)> maybe_nonempty);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& eval(const WreathObject& obj) const;
  // w: a morphism of Upsilon int Upsilon (projection bases), x in Z(src)
  std::string act(const WreathMorphism& w, const std::string& x) const;
  bool maybe_nonempty(const WreathObject& obj) const {
    return maybe_nonempty_ ? maybe_nonempty_(obj) : true;
  }

  static WPresheaf from_table(
      std::string name,
      std::map<WreathObject, std::vector<std::string>> sets,
      std::map<std::pair<std::string, std::string>, std::string> action);

 private:
  std::string name_;
  EvalFn eval_;
  ActFn act_;
  std::function<bool(const WreathObject&)> maybe_nonempty_;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
  std::shared_ptr<std::map<WreathObject, std::vector<std::string>>> cache_ =
      std::make_shared<std::map<WreathObject, std::vector<std::string>>>();
};

// L'Y = Y_1.
std::vector<std::string> l_prime(const VPresheaf& y);
// R''Y: (n;S) |-> Y_{s_1} x ... x Y_{s_n}, (0;*) |-> point.
WPresheaf r_dblprime(const VPresheaf& y);
// L''Z: s |-> Z(1;s).
VPresheaf l_dblprime(const WPresheaf& z);
// RX = R''R'X.
WPresheaf r_full(const std::vector<std::string>& x);

// The unit delta: Y_n -> (R'L'Y)_n = Y_1^n, via the n projections.
std::string delta_prime_unit(const VPresheaf& y, int n, const std::string& elem);
// The unit delta'': Z(n;S) -> prod_j Z(1;s_j), via the (delta_j; id).
std::vector<std::string> delta_dblprime_unit(const RingCat& upsilon2,
                                             const WPresheaf& z,
                                             const WreathObject& obj,
                                             const std::string& elem);

// A finite commutative rig with explicit tables.
struct Rig {
  std::vector<std::string> elems;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 0;

  int index(const std::string& label) const;
  CheckReport check_laws() const;

  static Rig boolean();
  static Rig zmod(int n);
  static Rig truncation(int cap);  // min(a+b,cap), min(ab,cap)
};

// A functor on the full category of ring operators: the underlying
// Upsilon int Upsilon presheaf together with an action of arbitrary
// wreath morphisms.
struct RingFunctor {
  RingCat cat;
  WPresheaf base;
  std::function<std::string(const WreathMorphism&, const std::string&)> act;
};

// The unique extension of a commutative rig to an F int F action on RX;
// acts through the base morphisms only.
RingFunctor embed_rig(const Rig& x);

// The unique extension of a (C,G)-algebra structure (theta, xi) on X to
// an action of G^ int C^ on RX.
using AlgebraAction =
    std::function<std::string(const OpElem&, const std::vector<std::string>&)>;
RingFunctor embed_cg_algebra(const OperadPair& pair,
                             std::vector<std::string> x, AlgebraAction theta,
                             AlgebraAction xi);

// Functor laws on sampled composable pairs.
CheckReport check_ring_functor(const RingFunctor& f,
                               const std::vector<WreathObject>& objects,
                               int samples, unsigned seed);

struct SpecialReport {
  bool semi_special = true;
  bool special = true;
  CheckReport details;
};

// The discrete analogue of (semi-)specialness: unique point at (0;*),
// delta'' bijections, unique point at (1;0), delta' bijections.
SpecialReport discrete_special_check(const WPresheaf& z,
                                     const std::vector<WreathObject>& objects);

}  // namespace ringops
