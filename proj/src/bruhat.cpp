#include "weyltab/bruhat.hpp"

#include <algorithm>
#include <optional>

namespace weyltab {

BruhatCache::BruhatCache(const AffineGroup& G, AffineElement w) : G_(G) {
  int len = G.length(w);
  chain_.reserve(len + 1);
  AffineElement cur = std::move(w);
  while (true) {
    const int s = G.smallest_right_descent(cur);
    chain_.push_back(Node{cur, len, s});
    if (s < 0) break;
    cur = cur.right_mul_gen(s);
    --len;
  }
  memo_.resize(chain_.size());
}

bool BruhatCache::leq(const AffineElement& v) { return leq(v, G_.length(v)); }

bool BruhatCache::leq(const AffineElement& v, int v_length) {
  return leq_at(v, v_length, 0);
}

bool BruhatCache::leq_at(const AffineElement& v, int vlen, size_t depth) {
  const Node& node = chain_[depth];
  if (vlen > node.length) return false;
  if (vlen == node.length) return v == node.elem;

  auto& memo = memo_[depth];
  const std::string key = v.packed_key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Lifting step: with s a right descent of w, v <= w iff vs <= ws when s
  // descends v, and v <= ws otherwise.
  const int s = node.descent;
  const AffineElement vs = v.right_mul_gen(s);
  const int vslen = G_.length(vs);
  const bool result = (vslen < vlen) ? leq_at(vs, vslen, depth + 1)
                                     : leq_at(v, vlen, depth + 1);
  memo.emplace(key, result);
  return result;
}

size_t BruhatCache::memo_entries() const {
  size_t total = 0;
  for (const auto& level : memo_) total += level.size();
  return total;
}

bool bruhat_leq(const AffineElement& v, const AffineElement& w, BruhatCache& cache) {
  if (!(cache.top() == w))
    throw RankError("cache was built against a different right argument");
  return cache.leq(v);
}

bool bruhat_leq(const AffineGroup& G, const AffineElement& v, const AffineElement& w) {
  BruhatCache cache(G, w);
  return cache.leq(v);
}

namespace {

std::vector<int> bounded_word(const AffineGroup& G, const AffineElement& w,
                              int max_length) {
  const int len = G.length(w);
  if (len > max_length)
    throw BoundError("subword oracle limited to length " +
                     std::to_string(max_length) + ", got " + std::to_string(len));
  return G.reduced_word(w);
}

}  // namespace

bool subword_oracle(const AffineGroup& G, const AffineElement& v,
                    const AffineElement& w, int max_length) {
  const std::vector<int> word = bounded_word(G, w, max_length);
  const int m = static_cast<int>(word.size());
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    AffineElement prod = G.identity();
    for (int k = 0; k < m; ++k)
      if ((mask >> k) & 1u) prod = prod.right_mul_gen(word[k]);
    if (prod == v) return true;
  }
  return false;
}

std::unordered_set<std::string> subword_interval_keys(const AffineGroup& G,
                                                      const AffineElement& w,
                                                      int max_length) {
  const std::vector<int> word = bounded_word(G, w, max_length);
  const int m = static_cast<int>(word.size());
  std::unordered_set<std::string> keys;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    AffineElement prod = G.identity();
    for (int k = 0; k < m; ++k)
      if ((mask >> k) & 1u) prod = prod.right_mul_gen(word[k]);
    keys.insert(prod.packed_key());
  }
  return keys;
}

std::vector<AffineElement> interval_below(const AffineGroup& G, const AffineElement& w) {
  // Unrolled recurrence: processing the canonical word letter by letter keeps
  // the running set equal to the interval below the processed prefix.
  std::unordered_map<std::string, AffineElement> interval;
  const AffineElement e = G.identity();
  interval.emplace(e.packed_key(), e);
  for (int s : G.reduced_word(w)) {
    std::vector<AffineElement> grown;
    grown.reserve(interval.size());
    for (const auto& [key, elem] : interval) {
      AffineElement next = elem.right_mul_gen(s);
      if (!interval.count(next.packed_key())) grown.push_back(std::move(next));
    }
    for (AffineElement& elem : grown) {
      std::string key = elem.packed_key();
      interval.emplace(std::move(key), std::move(elem));
    }
  }
  std::vector<AffineElement> out;
  out.reserve(interval.size());
  for (auto& [key, elem] : interval) out.push_back(std::move(elem));
  return out;
}

namespace {

// Layout: 3 bits per sigma slot, then 5 bits per tau slot stored as tau+16.
// 8 bits per slot caps the rank at 7 (8 slots in 64 bits).
constexpr int kTauOffset = 16;

uint64_t pack_code(const int8_t* sig, const int8_t* tau, int d) {
  uint64_t v = 0;
  for (int k = 0; k < d; ++k) v |= static_cast<uint64_t>(sig[k]) << (3 * k);
  for (int k = 0; k < d; ++k) {
    const int t = tau[k] + kTauOffset;
    if (t < 0 || t > 31)
      throw BoundError("translation coordinate outside the packed range [-16, 15]");
    v |= static_cast<uint64_t>(t) << (3 * d + 5 * k);
  }
  return v;
}

void unpack_code(uint64_t v, int8_t* sig, int8_t* tau, int d) {
  for (int k = 0; k < d; ++k) sig[k] = static_cast<int8_t>((v >> (3 * k)) & 7);
  for (int k = 0; k < d; ++k)
    tau[k] = static_cast<int8_t>(((v >> (3 * d + 5 * k)) & 31) - kTauOffset);
}

uint64_t right_mul_code(uint64_t v, int i, int d) {
  int8_t sig[8], tau[8];
  unpack_code(v, sig, tau, d);
  if (i == 0) {
    tau[sig[0]] -= 1;
    tau[sig[d - 1]] += 1;
    std::swap(sig[0], sig[d - 1]);
  } else {
    std::swap(sig[i - 1], sig[i]);
  }
  return pack_code(sig, tau, d);
}

// Dot-action coordinates without materializing the weight: starting from
// -2 rho, whose epsilon lift is (2k - n)_k, the image has mu_i =
// inv[i] + i - n + p tau_i, and W+ membership is mu weakly decreasing.
bool code_in_Wplus(uint64_t v, int d, int p) {
  int8_t sig[8], tau[8];
  unpack_code(v, sig, tau, d);
  int inv[8];
  for (int k = 0; k < d; ++k) inv[sig[k]] = k;
  int prev = 0;
  for (int i = 0; i < d; ++i) {
    const int mu = inv[i] + i - (d - 1) + p * tau[i];
    if (i > 0 && mu > prev) return false;
    prev = mu;
  }
  return true;
}

}  // namespace

long long interval_Wplus_count(const AffineGroup& G, const AffineElement& w) {
  const int d = G.config().dim();
  if (d > 8) throw RankError("packed interval count supports ranks up to 7");

  int8_t sig[8], tau[8];
  for (int k = 0; k < d; ++k) {
    sig[k] = static_cast<int8_t>(k);
    tau[k] = 0;
  }
  std::vector<uint64_t> interval{pack_code(sig, tau, d)};

  for (int s : G.reduced_word(w)) {
    std::vector<uint64_t> grown;
    grown.reserve(interval.size());
    for (uint64_t v : interval) grown.push_back(right_mul_code(v, s, d));
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    std::vector<uint64_t> merged;
    merged.reserve(interval.size() + grown.size());
    std::set_union(interval.begin(), interval.end(), grown.begin(), grown.end(),
                   std::back_inserter(merged));
    interval.swap(merged);
  }

  long long count = 0;
  for (uint64_t v : interval) count += code_in_Wplus(v, d, G.p()) ? 1 : 0;
  return count;
}

std::vector<AffineElement> length_ball(const AffineGroup& G, int max_length) {
  std::vector<AffineElement> out;
  std::unordered_set<std::string> seen;
  out.push_back(G.identity());
  seen.insert(out.front().packed_key());
  size_t level_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const size_t level_end = out.size();
    for (size_t k = level_begin; k < level_end; ++k) {
      for (int i = 0; i <= G.rank(); ++i) {
        AffineElement next = out[k].right_mul_gen(i);
        std::string key = next.packed_key();
        if (seen.count(key)) continue;
        seen.insert(std::move(key));
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

IdealEnumeration enumerate_Wplus_ideal(const AffineGroup& G, const AffineElement& root) {
  const Weight lam = G.weight_of(root);
  if (!lam.dominant())
    throw NotInWplusError("ideal root must be maximal in its right coset");
  const int root_length = G.length(root);
  BruhatCache cache(G, root);

  std::vector<IdealEntry> entries;
  for (const Weight& mu : dominant_weights_below(lam)) {
    std::optional<AffineElement> w;
    try {
      w = G.element_from_weight(mu);
    } catch (const OrbitError&) {
      continue;  // singular weight: no orbit element
    }
    const int len = G.length(*w);
    if (len > root_length || !cache.leq(*w, len)) continue;
    const AffineElement y = G.coset_factorize(*w).second;
    RightSet rs = G.right_set(*w);
    entries.push_back(IdealEntry{std::move(*w), mu, len, G.reduced_word(y), rs});
  }

  std::sort(entries.begin(), entries.end(),
            [](const IdealEntry& a, const IdealEntry& b) {
              if (a.length != b.length) return a.length > b.length;
              return a.y_word < b.y_word;
            });
  return IdealEnumeration{root, std::move(entries)};
}

}  // namespace weyltab
