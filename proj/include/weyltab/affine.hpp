#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weyltab/weights.hpp"

namespace weyltab {

// An element of the affine Weyl group W_p of type A~_n, stored as an affine
// map on rho-shifted coordinates y = lambda + rho:
//
//   y  |->  sigma(y) + p * tau,      (sigma(y))_i = y_{sigma^{-1}(i)}
//
// with sigma a permutation of the n+1 coordinate slots and tau a sum-zero
// integer translation (the root-lattice part).  sigma and tau are held
// 0-based internally; p lives in the enclosing AffineGroup.
class AffineElement {
 public:
  AffineElement(std::vector<int> sigma, std::vector<int> tau);

  static AffineElement identity(int n);
  // Generators: s_i for 1 <= i <= n swaps slots i, i+1; s_0 swaps the first
  // and last slot and translates by -alpha_0.
  static AffineElement generator(int n, int i);
  static AffineElement longest_finite(int n);  // w_0: the order reversal

  int rank() const { return static_cast<int>(sigma_.size()) - 1; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& tau() const { return tau_; }
  bool is_identity() const;

  AffineElement inverse() const;

  // w * s_i and s_i * w; cheaper than the generic compose.
  AffineElement right_mul_gen(int i) const;
  AffineElement left_mul_gen(int i) const;

  // Compact byte key for hashing; stable across equal elements.
  std::string packed_key() const;

  bool operator==(const AffineElement&) const = default;

 private:
  std::vector<int> sigma_;
  std::vector<int> tau_;
};

// (a o b)(y) = a(b(y)).
AffineElement compose(const AffineElement& a, const AffineElement& b);

struct ElemHash {
  size_t operator()(const AffineElement& w) const;
};

// Subset of generator indices {0, 1, ..., n} as a bitmask.
struct RightSet {
  uint32_t bits = 0;

  void add(int i) { bits |= (1u << i); }
  bool contains(int i) const { return (bits >> i) & 1u; }
  bool subset_of(const RightSet& other) const { return (bits & other.bits) == bits; }
  bool empty() const { return bits == 0; }
  int count() const;
  std::vector<int> indices() const;

  bool operator==(const RightSet&) const = default;
};

// The group W_p itself: rank and dilation, plus every operation whose value
// depends on p (length, descent, dot action, the weight correspondence).
class AffineGroup {
 public:
  explicit AffineGroup(RankConfig cfg);

  const RankConfig& config() const { return cfg_; }
  int rank() const { return cfg_.n; }
  int p() const { return cfg_.p; }
  int num_generators() const { return cfg_.n + 1; }  // s_0 .. s_n

  AffineElement identity() const { return AffineElement::identity(cfg_.n); }
  AffineElement generator(int i) const { return AffineElement::generator(cfg_.n, i); }
  AffineElement longest_finite() const { return AffineElement::longest_finite(cfg_.n); }

  // Coxeter length: hyperplane crossings between the base alcove (around
  // -rho in shifted coordinates) and its image.
  int length(const AffineElement& w) const;

  bool right_descends(const AffineElement& w, int i) const;
  bool left_descends(const AffineElement& w, int i) const;
  RightSet right_set(const AffineElement& w) const;
  int smallest_right_descent(const AffineElement& w) const;  // -1 for identity

  // w . lam = w(lam + rho) - rho.
  Weight dot(const AffineElement& w, const Weight& lam) const;

  Weight weight_of(const AffineElement& w) const;  // w . (-2 rho)
  AffineElement element_from_weight(const Weight& mu) const;  // inverse of weight_of

  bool in_Wplus(const AffineElement& w) const;

  // Canonical reduced word: repeatedly strip the smallest right descent,
  // then reverse.
  std::vector<int> reduced_word(const AffineElement& w) const;

  // w = w_0 * y with additive lengths; returns (w_0, y).  Throws
  // NotInWplusError when the lengths fail to add.
  std::pair<AffineElement, AffineElement> coset_factorize(const AffineElement& w) const;

  // The maximal element of the restricted region: the w with
  // w . (-2 rho) = (p-2) rho.  Only defined at p = h.
  AffineElement wmax() const;

 private:
  void check_rank(const AffineElement& w) const;
  RankConfig cfg_;
};

}  // namespace weyltab
