#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "ringops/operads.hpp"

namespace ringops {

// A morphism (phi; c_1,...,c_n) in the category of operators C^ built
// from a discrete operad.  Labels are stored for every j, with the
// canonical 0 in C(0) occupying empty-fiber slots.
struct OpCatMorphism {
  FMorphism base;
  std::vector<OpElem> labels;

  int source() const { return base.source(); }
  int target() const { return base.target(); }
  bool operator==(const OpCatMorphism&) const = default;
  bool operator<(const OpCatMorphism& o) const;
  std::string to_string() const;
};

// The category of operators associated to a discrete operad.
class OpCat {
 public:
  explicit OpCat(Operad c);

  const Operad& operad() const { return c_; }

  OpCatMorphism identity(int n) const;
  // Inclusion of Pi (and of Upsilon): unit labels on singleton fibers,
  // 0 in C(0) on empty ones.
  OpCatMorphism from_pi(const FMorphism& phi) const;
  OpCatMorphism from_permutation(const Permutation& p) const;
  // iota: c in C(n) |-> (phi_n; c): n -> 1
  OpCatMorphism iota(const OpElem& c) const;

  // (psi;d) . (phi;c) with the gamma/sigma_k composition formula.
  OpCatMorphism compose(const OpCatMorphism& psi_d,
                        const OpCatMorphism& phi_c) const;

  // The assembly C^(j_1,1) x ... x C^(j_k,1) -> C^(j_1+...+j_k, k).
  OpCatMorphism wedge_assemble(std::span<const OpCatMorphism> to_one) const;

  // Complete enumeration of C^(m,n); memoized.
  const std::vector<OpCatMorphism>& hom(int m, int n) const;

  void validate(const OpCatMorphism& f) const;

 private:
  Operad c_;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
  std::shared_ptr<std::map<std::pair<int, int>, std::vector<OpCatMorphism>>>
      hom_cache_ =
          std::make_shared<std::map<std::pair<int, int>, std::vector<OpCatMorphism>>>();
};

// The action of G^ on C^ determined by an operad pair, Definition-4.4
// style: functors lambda(f): C^m -> C^n plus the coherence isomorphisms
// sigma(g,f).
class OpCatAction {
 public:
  explicit OpCatAction(OperadPair pair);

  const OperadPair& pair() const { return pair_; }
  const OpCat& khat() const { return khat_; }
  const OpCat& dhat() const { return dhat_; }

  // lambda(f) on objects: s_j = smash of r_i over the fiber.
  std::vector<int> lambda_obj(const OpCatMorphism& f,
                              const std::vector<int>& r) const;
  // lambda(f) on morphism tuples (d_1,...,d_m), d_i: r_i -> s_i.
  std::vector<OpCatMorphism> lambda_mor(
      const OpCatMorphism& f, const std::vector<OpCatMorphism>& ds) const;

  // sigma(g,f) at the object tuple R: permutation morphisms in D^.
  std::vector<OpCatMorphism> sigma_gf(const OpCatMorphism& g,
                                      const OpCatMorphism& f,
                                      const std::vector<int>& r) const;

  // Test hook: override the sigma components (negative controls).
  using SigmaOverride = std::function<Permutation(
      const FMorphism&, const FMorphism&, const std::vector<int>&, int)>;
  void set_sigma_override(SigmaOverride f) { sigma_override_ = std::move(f); }

 private:
  OperadPair pair_;
  OpCat khat_;
  OpCat dhat_;
  SigmaOverride sigma_override_;
};

// Functoriality of each lambda(f), naturality of sigma(g,f), and the
// triple-composite coherence on enumerated data with objects <= bound.
CheckReport check_pseudofunctor(const OpCatAction& action, int bound);

}  // namespace ringops
