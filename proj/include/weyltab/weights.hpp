#pragma once

#include <span>
#include <vector>

#include "weyltab/errors.hpp"

namespace weyltab {

// Rank n of A_n plus the affine dilation parameter p.  Only p >= n+1 (the
// Coxeter number h) is supported; table generation further requires p == h.
struct RankConfig {
  int n;
  int p;

  explicit RankConfig(int rank);  // p defaults to h = n+1
  RankConfig(int rank, int dilation);

  int h() const { return n + 1; }
  int dim() const { return n + 1; }  // ambient epsilon-coordinates
};

// Positive root eps_i - eps_j, 1 <= i < j <= n+1.  Simple roots are (i, i+1),
// the highest short root is (1, n+1).
struct Root {
  int i;
  int j;

  static Root simple(int i) { return Root{i, i + 1}; }
  static Root highest(int n) { return Root{1, n + 1}; }

  bool operator==(const Root&) const = default;
};

std::vector<Root> positive_roots(int n);

// omega[i] = eps[i] - eps[i+1].
std::vector<int> omega_from_epsilon(std::span<const int> eps);

// The unique sum-zero vector with successive differences omega.  Throws
// WeightError when that representative is not integral (the weight lies
// outside the root lattice).
std::vector<int> epsilon_from_omega(std::span<const int> omega);

// An integral weight of type A_n, held canonically in omega-coordinates.
class Weight {
 public:
  explicit Weight(std::vector<int> omega);

  static Weight from_epsilon(std::span<const int> eps);

  int rank() const { return static_cast<int>(omega_.size()); }
  const std::vector<int>& omega() const { return omega_; }

  // Sum-zero representative; integral exactly for root-lattice weights.
  std::vector<int> epsilon() const { return epsilon_from_omega(omega_); }

  // Integer representative with last entry 0.  Always integral; constant
  // shifts are quotiented out by every consumer.
  std::vector<int> epsilon_lift() const;

  bool dominant() const;
  bool restricted(int p) const;  // 0 <= omega_i <= p-1 for all i

  bool operator==(const Weight&) const = default;

 private:
  std::vector<int> omega_;
};

Weight zero_weight(int n);
Weight minus_two_rho(int n);     // all omega coefficients -2
Weight simple_root_weight(int n, int i);
Weight weight_times(const Weight& v, int scalar);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);

// v[i] - v[j] on any epsilon-style vector (constant shifts cancel).
int pairing(std::span<const int> eps, Root r);
int pairing(const Weight& v, Root r);

// (rho, alpha^vee) for alpha = eps_i - eps_j is j - i.
int rho_pairing(Root r);

// Doubled rho: entry k is n - 2(k-1), so rho itself is rho2/2 exactly.
std::vector<int> rho_doubled(int n);

// 2*(rho, rho^vee) = n(n+1)(n+2)/6; the length of the maximal element.
int two_rho_rho(int n);

// (v, rho^vee): the sum of v's coefficients in the simple-root basis.
// Requires a root-lattice weight.
int height(const Weight& v);

// hi - lo is a nonnegative integer combination of simple roots.  Both weights
// must lie in the root lattice.
bool root_order_leq(const Weight& lo, const Weight& hi);

// All dominant weights mu with lam - mu a nonnegative integer combination of
// simple roots.  Requires lam dominant and in the root lattice.  This is the
// exact candidate superset for the Bruhat ideal below the element of lam.
std::vector<Weight> dominant_weights_below(const Weight& lam);

}  // namespace weyltab
