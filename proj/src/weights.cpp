#include "weyltab/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace weyltab {

namespace {

void check_rank(int n) {
  if (n < 1) throw RankError("rank must be at least 1, got " + std::to_string(n));
}

}  // namespace

RankConfig::RankConfig(int rank) : RankConfig(rank, rank + 1) {}

RankConfig::RankConfig(int rank, int dilation) : n(rank), p(dilation) {
  check_rank(rank);
  if (p < n + 1)
    throw RankError("p must be at least the Coxeter number h = " +
                    std::to_string(n + 1) + ", got " + std::to_string(p));
}

std::vector<Root> positive_roots(int n) {
  check_rank(n);
  std::vector<Root> roots;
  roots.reserve(n * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) roots.push_back(Root{i, j});
  return roots;
}

std::vector<int> omega_from_epsilon(std::span<const int> eps) {
  if (eps.size() < 2)
    throw WeightError("epsilon vector must have length at least 2, got " +
                      std::to_string(eps.size()));
  std::vector<int> omega(eps.size() - 1);
  for (size_t i = 0; i + 1 < eps.size(); ++i) omega[i] = eps[i] - eps[i + 1];
  return omega;
}

std::vector<int> epsilon_from_omega(std::span<const int> omega) {
  if (omega.empty()) throw WeightError("omega vector must be nonempty");
  const int d = static_cast<int>(omega.size()) + 1;
  // Lift with last entry 0, then shift to the sum-zero representative.
  std::vector<int> eps(d, 0);
  for (int k = d - 2; k >= 0; --k) eps[k] = eps[k + 1] + omega[k];
  long long total = std::accumulate(eps.begin(), eps.end(), 0LL);
  if (total % d != 0)
    throw WeightError("weight is outside the root lattice: sum-zero epsilon "
                      "representative is not integral");
  const int shift = static_cast<int>(total / d);
  for (int& e : eps) e -= shift;
  return eps;
}

Weight::Weight(std::vector<int> omega) : omega_(std::move(omega)) {
  if (omega_.empty()) throw WeightError("omega vector must be nonempty");
}

Weight Weight::from_epsilon(std::span<const int> eps) {
  return Weight(omega_from_epsilon(eps));
}

std::vector<int> Weight::epsilon_lift() const {
  const int d = rank() + 1;
  std::vector<int> eps(d, 0);
  for (int k = d - 2; k >= 0; --k) eps[k] = eps[k + 1] + omega_[k];
  return eps;
}

bool Weight::dominant() const {
  return std::all_of(omega_.begin(), omega_.end(), [](int c) { return c >= 0; });
}

bool Weight::restricted(int p) const {
  return std::all_of(omega_.begin(), omega_.end(),
                     [p](int c) { return 0 <= c && c <= p - 1; });
}

Weight zero_weight(int n) {
  check_rank(n);
  return Weight(std::vector<int>(n, 0));
}

Weight minus_two_rho(int n) {
  check_rank(n);
  return Weight(std::vector<int>(n, -2));
}

Weight simple_root_weight(int n, int i) {
  check_rank(n);
  if (i < 1 || i > n)
    throw WeightError("simple root index out of range: " + std::to_string(i));
  std::vector<int> omega(n, 0);
  omega[i - 1] = 2;
  if (i - 2 >= 0) omega[i - 2] = -1;
  if (i < n) omega[i] = -1;
  return Weight(std::move(omega));
}

Weight weight_times(const Weight& v, int scalar) {
  std::vector<int> omega = v.omega();
  for (int& c : omega) c *= scalar;
  return Weight(std::move(omega));
}

Weight weight_add(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw RankError("weight rank mismatch");
  std::vector<int> omega = a.omega();
  for (int i = 0; i < b.rank(); ++i) omega[i] += b.omega()[i];
  return Weight(std::move(omega));
}

Weight weight_sub(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw RankError("weight rank mismatch");
  std::vector<int> omega = a.omega();
  for (int i = 0; i < b.rank(); ++i) omega[i] -= b.omega()[i];
  return Weight(std::move(omega));
}

int pairing(std::span<const int> eps, Root r) {
  const int d = static_cast<int>(eps.size());
  if (r.i < 1 || r.j > d || r.i >= r.j)
    throw WeightError("root indices out of range for dimension " + std::to_string(d));
  return eps[r.i - 1] - eps[r.j - 1];
}

int pairing(const Weight& v, Root r) {
  const std::vector<int> eps = v.epsilon_lift();
  return pairing(std::span<const int>(eps), r);
}

int rho_pairing(Root r) { return r.j - r.i; }

std::vector<int> rho_doubled(int n) {
  check_rank(n);
  std::vector<int> twice(n + 1);
  for (int k = 1; k <= n + 1; ++k) twice[k - 1] = n - 2 * (k - 1);
  return twice;
}

int two_rho_rho(int n) {
  const std::vector<int> r2 = rho_doubled(n);
  long long s = 0;
  for (int e : r2) s += static_cast<long long>(e) * e;
  return static_cast<int>(s / 2);
}

int height(const Weight& v) {
  // (v, rho) over any integer lift; (1,...,1) pairs to zero with rho, so the
  // choice of lift does not matter.
  const std::vector<int> eps = v.epsilon_lift();
  const std::vector<int> r2 = rho_doubled(v.rank());
  long long s = 0;
  for (size_t k = 0; k < eps.size(); ++k)
    s += static_cast<long long>(eps[k]) * r2[k];
  if (s % 2 != 0)
    throw WeightError("height is only defined on root-lattice weights");
  return static_cast<int>(s / 2);
}

bool root_order_leq(const Weight& lo, const Weight& hi) {
  if (lo.rank() != hi.rank()) throw RankError("weight rank mismatch");
  const std::vector<int> a = lo.epsilon();
  const std::vector<int> b = hi.epsilon();
  // The coefficient of alpha_k in hi - lo is the k-th prefix sum of the
  // epsilon difference; all must be nonnegative.  The full sum is zero, so
  // the last prefix needs no check.
  long long prefix = 0;
  for (size_t k = 0; k + 1 < a.size(); ++k) {
    prefix += b[k] - a[k];
    if (prefix < 0) return false;
  }
  return true;
}

std::vector<Weight> dominant_weights_below(const Weight& lam) {
  if (!lam.dominant()) throw WeightError("dominant_weights_below requires a dominant weight");
  const std::vector<int> top = lam.epsilon();  // throws outside root lattice
  const int d = static_cast<int>(top.size());

  // Prefix sums of the top weight bound the prefix sums of every weight below
  // it in root order.  A decreasing integer vector with sum zero and
  // prefix sums dominated by those of lam is exactly a dominant weight mu
  // with lam - mu a nonnegative combination of simple roots.
  std::vector<long long> bound(d, 0);
  long long acc = 0;
  for (int k = 0; k < d; ++k) {
    acc += top[k];
    bound[k] = acc;
  }

  std::vector<Weight> out;
  std::vector<int> mu(d, 0);
  std::function<void(int, long long)> descend = [&](int k, long long prefix) {
    if (k == d - 1) {
      const long long last = -prefix;
      if (last <= mu[k - 1]) {
        mu[k] = static_cast<int>(last);
        out.push_back(Weight::from_epsilon(mu));
      }
      return;
    }
    const int slots_after = d - 1 - k;  // entries still to choose after mu[k]
    long long hi = bound[k] - prefix;
    if (k > 0) hi = std::min<long long>(hi, mu[k - 1]);
    // Remaining entries are all <= mu[k] and must sum to -(prefix + mu[k]).
    for (long long c = hi;; --c) {
      if (static_cast<long long>(slots_after) * c < -(prefix + c)) break;
      mu[k] = static_cast<int>(c);
      descend(k + 1, prefix + c);
    }
  };
  descend(0, 0);
  return out;
}

}  // namespace weyltab
