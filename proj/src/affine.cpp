#include "weyltab/affine.hpp"

#include <algorithm>
#include <numeric>

namespace weyltab {

namespace {

// Floor division for a positive divisor.
inline long long floordiv(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline void check_generator_index(int n, int i) {
  if (i < 0 || i > n)
    throw RankError("generator index out of range: s" + std::to_string(i) +
                    " for rank " + std::to_string(n));
}

}  // namespace

AffineElement::AffineElement(std::vector<int> sigma, std::vector<int> tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (sigma_.size() != tau_.size() || sigma_.size() < 2)
    throw RankError("sigma and tau must have equal length >= 2");
  const int d = static_cast<int>(sigma_.size());
  std::vector<bool> seen(d, false);
  for (int v : sigma_) {
    if (v < 0 || v >= d || seen[v]) throw RankError("sigma is not a permutation");
    seen[v] = true;
  }
  if (std::accumulate(tau_.begin(), tau_.end(), 0LL) != 0)
    throw RankError("tau must sum to zero");
}

AffineElement AffineElement::identity(int n) {
  std::vector<int> sigma(n + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  return AffineElement(std::move(sigma), std::vector<int>(n + 1, 0));
}

AffineElement AffineElement::generator(int n, int i) {
  check_generator_index(n, i);
  AffineElement e = identity(n);
  if (i == 0) {
    std::swap(e.sigma_[0], e.sigma_[n]);
    e.tau_[0] = -1;
    e.tau_[n] = 1;
  } else {
    std::swap(e.sigma_[i - 1], e.sigma_[i]);
  }
  return e;
}

AffineElement AffineElement::longest_finite(int n) {
  std::vector<int> sigma(n + 1);
  for (int k = 0; k <= n; ++k) sigma[k] = n - k;
  return AffineElement(std::move(sigma), std::vector<int>(n + 1, 0));
}

bool AffineElement::is_identity() const {
  for (size_t k = 0; k < sigma_.size(); ++k)
    if (sigma_[k] != static_cast<int>(k) || tau_[k] != 0) return false;
  return true;
}

AffineElement AffineElement::inverse() const {
  const int d = static_cast<int>(sigma_.size());
  std::vector<int> sigma(d), tau(d);
  for (int k = 0; k < d; ++k) sigma[sigma_[k]] = k;
  for (int k = 0; k < d; ++k) tau[k] = -tau_[sigma_[k]];
  return AffineElement(std::move(sigma), std::move(tau));
}

AffineElement AffineElement::right_mul_gen(int i) const {
  const int n = rank();
  check_generator_index(n, i);
  AffineElement r = *this;
  if (i == 0) {
    r.tau_[sigma_[0]] -= 1;
    r.tau_[sigma_[n]] += 1;
    std::swap(r.sigma_[0], r.sigma_[n]);
  } else {
    std::swap(r.sigma_[i - 1], r.sigma_[i]);
  }
  return r;
}

AffineElement AffineElement::left_mul_gen(int i) const {
  const int n = rank();
  check_generator_index(n, i);
  AffineElement r = *this;
  const int a = (i == 0) ? 0 : i - 1;
  const int b = (i == 0) ? n : i;
  for (int& v : r.sigma_) {
    if (v == a) v = b;
    else if (v == b) v = a;
  }
  std::swap(r.tau_[a], r.tau_[b]);
  if (i == 0) {
    r.tau_[0] -= 1;
    r.tau_[n] += 1;
  }
  return r;
}

std::string AffineElement::packed_key() const {
  const int d = static_cast<int>(sigma_.size());
  std::string key(2 * d, '\0');
  for (int k = 0; k < d; ++k) {
    const int t = tau_[k];
    if (t < -127 || t > 127)
      throw RankError("translation part exceeds the packable range");
    key[k] = static_cast<char>(sigma_[k]);
    key[d + k] = static_cast<char>(t + 128);
  }
  return key;
}

AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.rank() != b.rank()) throw RankError("rank mismatch in compose");
  const int d = a.rank() + 1;
  std::vector<int> sigma(d), tau(d);
  for (int x = 0; x < d; ++x) sigma[x] = a.sigma()[b.sigma()[x]];
  for (int x = 0; x < d; ++x) tau[a.sigma()[x]] = b.tau()[x] + a.tau()[a.sigma()[x]];
  return AffineElement(std::move(sigma), std::move(tau));
}

size_t ElemHash::operator()(const AffineElement& w) const {
  // FNV-1a over the packed bytes.
  uint64_t h = 1469598103934665603ull;
  for (char c : w.packed_key()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

int RightSet::count() const { return __builtin_popcount(bits); }

std::vector<int> RightSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

AffineGroup::AffineGroup(RankConfig cfg) : cfg_(cfg) {}

void AffineGroup::check_rank(const AffineElement& w) const {
  if (w.rank() != cfg_.n)
    throw RankError("element rank " + std::to_string(w.rank()) +
                    " does not match group rank " + std::to_string(cfg_.n));
}

int AffineGroup::length(const AffineElement& w) const {
  check_rank(w);
  const int d = cfg_.dim();
  const long long p = cfg_.p;
  // Inverse permutation: slot i of the image point came from slot inv[i].
  std::vector<int> inv(d);
  for (int k = 0; k < d; ++k) inv[w.sigma()[k]] = k;
  long long total = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      // (y_w, alpha^vee) for alpha = eps_{i+1} - eps_{j+1}, where y_w is the
      // image of the base point -rho.
      const long long t = (inv[i] - inv[j]) + p * (w.tau()[i] - w.tau()[j]);
      if (t % p == 0)
        throw RankError("image of the base point lies on a wall; corrupted element");
      total += std::abs(floordiv(t, p) + 1);
    }
  }
  return static_cast<int>(total);
}

bool AffineGroup::right_descends(const AffineElement& w, int i) const {
  return length(w.right_mul_gen(i)) < length(w);
}

bool AffineGroup::left_descends(const AffineElement& w, int i) const {
  return length(w.left_mul_gen(i)) < length(w);
}

RightSet AffineGroup::right_set(const AffineElement& w) const {
  check_rank(w);
  RightSet rs;
  const int len = length(w);
  for (int i = 0; i <= cfg_.n; ++i)
    if (length(w.right_mul_gen(i)) < len) rs.add(i);
  return rs;
}

int AffineGroup::smallest_right_descent(const AffineElement& w) const {
  check_rank(w);
  const int len = length(w);
  for (int i = 0; i <= cfg_.n; ++i)
    if (length(w.right_mul_gen(i)) < len) return i;
  return -1;
}

Weight AffineGroup::dot(const AffineElement& w, const Weight& lam) const {
  check_rank(w);
  if (lam.rank() != cfg_.n) throw RankError("weight rank mismatch in dot action");
  const int d = cfg_.dim();
  const std::vector<int> eps = lam.epsilon_lift();
  std::vector<int> inv(d);
  for (int k = 0; k < d; ++k) inv[w.sigma()[k]] = k;
  // mu_i = eps_{sigma^{-1}(i)} + (i - sigma^{-1}(i)) + p tau_i; the middle
  // term is the integer part of the rho-shift conjugation.
  std::vector<int> mu(d);
  for (int i = 0; i < d; ++i) mu[i] = eps[inv[i]] + (i - inv[i]) + cfg_.p * w.tau()[i];
  return Weight::from_epsilon(mu);
}

Weight AffineGroup::weight_of(const AffineElement& w) const {
  return dot(w, minus_two_rho(cfg_.n));
}

AffineElement AffineGroup::element_from_weight(const Weight& mu) const {
  if (mu.rank() != cfg_.n) throw RankError("weight rank mismatch");
  const int d = cfg_.dim();
  const int p = cfg_.p;
  std::vector<int> eps;
  try {
    eps = mu.epsilon();
  } catch (const WeightError&) {
    throw OrbitError("weight is outside the root lattice, hence outside the orbit");
  }

  // Slot values 1..d each occupy a distinct residue class mod p (d <= p).
  std::vector<int> by_residue(p, -1);
  for (int c = 1; c <= d; ++c) by_residue[c % p] = c;

  std::vector<int> inv(d), tau(d);
  std::vector<bool> used(d, false);
  for (int i = 1; i <= d; ++i) {
    const long long r = ((static_cast<long long>(eps[i - 1]) + d + 1 - i) % p + p) % p;
    const int c = by_residue[r];
    if (c < 0 || used[c - 1])
      throw OrbitError("weight is not in the dot orbit of -2 rho");
    used[c - 1] = true;
    inv[i - 1] = c - 1;
    tau[i - 1] = static_cast<int>((eps[i - 1] + d + 1 - i - c) / p);
  }
  std::vector<int> sigma(d);
  for (int k = 0; k < d; ++k) sigma[inv[k]] = k;
  AffineElement w(std::move(sigma), std::move(tau));
  if (!(weight_of(w) == mu))
    throw OrbitError("orbit recovery round trip failed");
  return w;
}

bool AffineGroup::in_Wplus(const AffineElement& w) const {
  return weight_of(w).dominant();
}

std::vector<int> AffineGroup::reduced_word(const AffineElement& w) const {
  check_rank(w);
  std::vector<int> stripped;
  AffineElement cur = w;
  int len = length(cur);
  while (len > 0) {
    for (int i = 0; i <= cfg_.n; ++i) {
      AffineElement next = cur.right_mul_gen(i);
      const int nlen = length(next);
      if (nlen < len) {
        stripped.push_back(i);
        cur = std::move(next);
        len = nlen;
        break;
      }
    }
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

std::pair<AffineElement, AffineElement> AffineGroup::coset_factorize(
    const AffineElement& w) const {
  check_rank(w);
  const AffineElement w0 = longest_finite();
  const AffineElement y = compose(w0, w);  // w_0 is an involution
  if (length(w) != length(w0) + length(y))
    throw NotInWplusError("element is not maximal in its right W_f-coset");
  return {w0, y};
}

AffineElement AffineGroup::wmax() const {
  if (cfg_.p != cfg_.h())
    throw RankError("the maximal element is only pinned down at p = h; got p = " +
                    std::to_string(cfg_.p));
  const Weight lam_max(std::vector<int>(cfg_.n, cfg_.p - 2));
  AffineElement w = element_from_weight(lam_max);
  if (length(w) != two_rho_rho(cfg_.n))
    throw RankError("maximal element length check failed");
  return w;
}

}  // namespace weyltab
