#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringops/common.hpp"

namespace ringops {

// A permutation of {1,...,n}, stored as the image array.
// Composition applies the right factor first: (p*q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& image() const { return image_; }

  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return image_ < o.image_; }
  std::string to_string() const;

  static std::vector<Permutation> all(int n);

 private:
  std::vector<int> image_;
};

// A based map m -> n in F, with {0,...,m} -> {0,...,n} and 0 fixed.
// Only the images of 1..m are stored.
class FMorphism {
 public:
  FMorphism() : target_(0) {}
  FMorphism(int target, std::vector<int> image);

  static FMorphism identity(int n);
  static FMorphism zero(int m, int n);  // everything to basepoint
  static FMorphism phi_n(int n);        // the canonical map n -> 1
  static FMorphism from_permutation(const Permutation& p);

  int source() const { return static_cast<int>(image_.size()); }
  int target() const { return target_; }
  int operator()(int i) const {
    return i == 0 ? 0 : image_[static_cast<size_t>(i) - 1];
  }
  const std::vector<int>& image() const { return image_; }

  // this . inner, pointwise
  FMorphism compose(const FMorphism& inner) const;

  // phi^{-1}(j) \ {0}, ascending (j = 0 gives the killed points)
  std::vector<int> fiber(int j) const;
  int fiber_size(int j) const;

  bool is_effective() const;         // phi^{-1}(0) = {0}
  bool is_injection() const { return is_effective(); }
  bool is_projection() const;        // |phi^{-1}(j)| = 1 for 1 <= j <= n
  bool is_permutation() const;
  bool is_ordered_effective() const;

  Permutation to_permutation() const;

  bool operator==(const FMorphism&) const = default;
  bool operator<(const FMorphism& o) const;
  std::string to_string() const;

 private:
  int target_;
  std::vector<int> image_;
};

struct Classification {
  bool injection = false;
  bool projection = false;
  bool permutation = false;
  bool effective = false;
  bool ordered_effective = false;
};

Classification classify(const FMorphism& phi);

// Block identification m v n = m+n.
FMorphism wedge(const FMorphism& a, const FMorphism& b);
// Lexicographic identification m ^ n = mn.
FMorphism smash(const FMorphism& a, const FMorphism& b);
FMorphism wedge_all(std::span<const FMorphism> fs);
FMorphism smash_all(std::span<const FMorphism> fs);

// phi = psi . pi with psi ordered effective and pi a projection
// (composed with a permutation); the permutation freedom is folded into
// pi so psi is the unique ordered factor.
std::pair<FMorphism, FMorphism> factor_projection_effective(const FMorphism& phi);

// For effective psi: the permutation tau with psi = orderd(psi) . tau,
// i.e. ordered(psi)(tau(i)) = psi(i).
std::pair<FMorphism, Permutation> order_effective(const FMorphism& psi);

// Sigma_phi for an injection phi: all sigma in Sigma_n with
// sigma(Im phi) = Im phi.
std::vector<Permutation> sigma_phi_subgroup(const FMorphism& phi);

// Sigma(psi) for ordered effective psi: the block group
// Sigma_{r_1} x ... x Sigma_{r_n} inside Sigma_m.
std::vector<Permutation> sigma_psi_group(const FMorphism& psi);

enum class Subcat { F, Pi, Upsilon, E };

std::vector<FMorphism> enumerate_hom(int m, int n, Subcat which);

}  // namespace ringops
