#pragma once

#include "ringops/opcats.hpp"

namespace ringops {

// An object (n; s_1,...,s_n) of a wreath product category; (0;*) is the
// terminal object.
struct WreathObject {
  int n = 0;
  std::vector<int> s;

  static WreathObject terminal() { return {0, {}}; }
  bool operator==(const WreathObject&) const = default;
  bool operator<(const WreathObject& o) const {
    if (n != o.n) return n < o.n;
    return s < o.s;
  }
  std::string to_string() const;
};

// A morphism (f; d_1,...,d_n): (m;R) -> (n;S) with f in G^(m,n) and
// d_j in C^(smash of R over the fiber, s_j).
struct WreathMorphism {
  WreathObject src, dst;
  OpCatMorphism f;
  std::vector<OpCatMorphism> d;

  bool operator==(const WreathMorphism&) const = default;
  bool operator<(const WreathMorphism& o) const;
  std::string to_string() const;
};

// The category of ring operators G^ integral C^ attached to an operad
// pair.  Taking Q for one of the operads yields Upsilon integral C^ and
// G^ integral Upsilon; the pair (N,N) yields F integral F.
class RingCat {
 public:
  explicit RingCat(OperadPair pair);

  const OperadPair& pair() const { return action_.pair(); }
  const OpCatAction& action() const { return action_; }
  const OpCat& khat() const { return action_.khat(); }
  const OpCat& dhat() const { return action_.dhat(); }

  // sizes of the smash products over the fibers of phi
  std::vector<int> smash_sizes(const FMorphism& phi,
                               const std::vector<int>& r) const;

  WreathMorphism identity(const WreathObject& obj) const;
  WreathMorphism compose(const WreathMorphism& ge, const WreathMorphism& fd) const;
  void validate(const WreathMorphism& w) const;

  // The unique morphism to the terminal object (0;*).
  WreathMorphism to_terminal(const WreathObject& src) const;

  // Inclusion of Pi int Pi (in particular Upsilon int Upsilon): base
  // morphisms with canonical labels.
  WreathMorphism from_pipi(const WreathObject& src, const WreathObject& dst,
                           const FMorphism& phi,
                           const std::vector<FMorphism>& chi) const;

  // (f;d) = (id;d) . (f;id^n) through the intermediate object (n;R').
  std::pair<WreathMorphism, WreathMorphism> factor(const WreathMorphism& fd) const;

  // The commutation rule of the generation lemma:
  // (g;chi).(phi;d) = (1; chi.lambda(g)(d)) . (g.phi; sigma(g,phi)).
  // Computes the right-hand side and checks it against compose.
  WreathMorphism commute_relation(const WreathMorphism& g_chi,
                                  const WreathMorphism& phi_d) const;

  // Complete enumeration (finite for discrete operads).
  std::vector<WreathMorphism> hom(const WreathObject& src,
                                  const WreathObject& dst) const;

  // The automorphism group Sigma(m;R) of (m;R) in Upsilon int Upsilon,
  // realized as morphisms of this category.
  std::vector<WreathMorphism> sigma_mR(const WreathObject& obj) const;

 private:
  OpCatAction action_;
};

}  // namespace ringops
