#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ringops/perms.hpp"

namespace ringops {

// An element of some level of a discrete operad.  Equality is label
// equality; labels are canonical strings.
struct OpElem {
  int arity = 0;
  std::string label;

  bool operator==(const OpElem&) const = default;
  bool operator<(const OpElem& o) const {
    if (arity != o.arity) return arity < o.arity;
    return label < o.label;
  }
  std::string to_string() const {
    return std::to_string(arity) + ":" + label;
  }
};

// A discrete operad given by rules: level sets are evaluated lazily and
// memoized, gamma and the right symmetric action are closures.  Table
// operads carry a max level; evaluating beyond it is an error.
class Operad {
 public:
  using LevelFn = std::function<std::vector<std::string>(int)>;
  using GammaFn =
      std::function<std::string(const OpElem&, const std::vector<OpElem>&)>;
  using ActFn = std::function<std::string(const OpElem&, const Permutation&)>;

  Operad(std::string name, LevelFn levels, std::string unit_label,
         GammaFn gamma, ActFn act, std::optional<int> max_level = std::nullopt);

  const std::string& name() const { return name_; }
  std::optional<int> max_level() const { return max_level_; }

  const std::vector<std::string>& level(int j) const;
  std::vector<OpElem> level_elems(int j) const;
  bool level_empty(int j) const { return level(j).empty(); }

  OpElem unit() const { return {1, unit_label_}; }
  // The point of level 0 (throws for operads with empty 0th level).
  OpElem zero() const;

  OpElem gamma(const OpElem& c, const std::vector<OpElem>& args) const;
  OpElem act(const OpElem& c, const Permutation& sigma) const;

  bool is_sigma_free(int bound) const;

  static Operad N();
  static Operad M();
  static Operad P();
  static Operad Q();
  static const Operad& builtin(const std::string& name);

 private:
  struct LevelCache {
    std::mutex mutex;
    std::map<int, std::vector<std::string>> levels;
  };

  std::string name_;
  LevelFn levels_;
  std::string unit_label_;
  GammaFn gamma_;
  ActFn act_;
  std::optional<int> max_level_;
  std::shared_ptr<LevelCache> cache_ = std::make_shared<LevelCache>();
};

// Permutation labels for the operad M: "[2,1,3]".
std::string perm_label(const Permutation& p);
Permutation label_perm(int arity, const std::string& label);

// An operad pair (C, G) with the action lambda of G on C.  The lambda
// callable only sees k >= 1 with all j_r >= 1; the unity and nullity
// conventions are applied by the wrapper for builtins constructed with
// with_conventions = true, and left to the raw rule otherwise.
class OperadPair {
 public:
  using LambdaFn =
      std::function<OpElem(const OpElem&, const std::vector<OpElem>&)>;

  OperadPair(std::string name, Operad add, Operad mul, LambdaFn lambda,
             bool with_conventions = true);

  const std::string& name() const { return name_; }
  const Operad& add() const { return *add_; }
  const Operad& mul() const { return *mul_; }

  // lambda(g; c_1..c_k): returns id in C(1) when k = 0 and 0 in C(0)
  // when some arity j_r = 0 (for pairs built with conventions).
  OpElem lambda(const OpElem& g, const std::vector<OpElem>& cs) const;

  static OperadPair NN();
  static OperadPair NM();
  static OperadPair QM();
  static OperadPair QG(const Operad& g);
  // The historically tempting smash-product action of M on M; fails the
  // pair axioms and serves as the negative control.
  static OperadPair MM_candidate();
  static const OperadPair& builtin(const std::string& name);

 private:
  std::string name_;
  std::shared_ptr<const Operad> add_;
  std::shared_ptr<const Operad> mul_;
  LambdaFn lambda_;
  bool with_conventions_;
};

// Exhaustive operad-axiom check: unit laws, associativity and
// equivariance of gamma for all index data with k <= bound and block
// sums <= bound.
CheckReport check_operad_axioms(const Operad& op, int bound);

// Exhaustive check of Definition 4.2 style axioms (i)-(viii) for all
// index data with k <= bound, sum j_r <= bound and sum i_{r,q} <= bound.
CheckReport check_pair_axioms(const OperadPair& pair, int bound);

}  // namespace ringops
