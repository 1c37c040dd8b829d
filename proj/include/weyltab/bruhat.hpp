#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weyltab/affine.hpp"

namespace weyltab {

// Comparison context against one fixed right argument.  The descent chain
// w = w^0 > w^1 > ... > e strips the smallest-index right descent at every
// step, so the answer is a pure function of (candidate, chain depth) and the
// memo is keyed that way.
class BruhatCache {
 public:
  BruhatCache(const AffineGroup& G, AffineElement w);

  const AffineElement& top() const { return chain_.front().elem; }
  int top_length() const { return chain_.front().length; }

  // v <= top in Bruhat order.
  bool leq(const AffineElement& v);
  bool leq(const AffineElement& v, int v_length);

  size_t memo_entries() const;

 private:
  struct Node {
    AffineElement elem;
    int length;
    int descent;  // generator stripped to reach the next node; -1 at identity
  };

  bool leq_at(const AffineElement& v, int vlen, size_t depth);

  const AffineGroup& G_;
  std::vector<Node> chain_;
  std::vector<std::unordered_map<std::string, bool>> memo_;  // per depth
};

// Lifting-recursion comparison; the cache must have been built against w.
bool bruhat_leq(const AffineElement& v, const AffineElement& w, BruhatCache& cache);

// One-shot comparison with a throwaway cache.
bool bruhat_leq(const AffineGroup& G, const AffineElement& v, const AffineElement& w);

// Brute-force oracle: does some subsequence of the canonical reduced word of
// w multiply out to v?  Enumerates all 2^length(w) subsequences, so both
// calls reject words longer than max_length.  Test use only.
bool subword_oracle(const AffineGroup& G, const AffineElement& v,
                    const AffineElement& w, int max_length = 10);

// Packed keys of every subsequence product at once, i.e. the whole lower
// interval of w, for batch comparisons against the oracle.
std::unordered_set<std::string> subword_interval_keys(const AffineGroup& G,
                                                      const AffineElement& w,
                                                      int max_length = 10);

// The lower interval {v : v <= w} grown along the canonical word of w by the
// recurrence I(ws) U I(ws)s = I(w) for a right descent s.  No length bound;
// intended for moderate lengths where the interval fits in memory.
std::vector<AffineElement> interval_below(const AffineGroup& G, const AffineElement& w);

// |{v in W+ : v <= w}| by the same recurrence, with the running interval held
// as bit-packed codes (one word per element) in a sorted vector.  Orders of
// magnitude leaner than interval_below, so it reaches intervals in the tens
// of millions; ranks up to 7 and translations within +-15 only.  Shares no
// machinery with BruhatCache or enumerate_Wplus_ideal, which makes it a full
// independent cross-check of either.
long long interval_Wplus_count(const AffineGroup& G, const AffineElement& w);

// Every element of length <= max_length, in breadth-first (length) order.
std::vector<AffineElement> length_ball(const AffineGroup& G, int max_length);

// One member of {v in W+ : v <= root} with everything the counting passes
// need precomputed.
struct IdealEntry {
  AffineElement element;
  Weight weight;            // element . (-2 rho)
  int length;
  std::vector<int> y_word;  // canonical word of y, where element = w_0 y
  RightSet right_set;
};

struct IdealEnumeration {
  AffineElement root;
  std::vector<IdealEntry> entries;  // length descending, then y-word ascending
};

// Exactly {v in W+ : v <= root}.  Candidates are the dominant weights below
// the root's weight in root order (a necessary condition for Bruhat order on
// W+); each candidate that lies on the regular orbit is then Bruhat-tested
// against the root, which makes the result exact.
IdealEnumeration enumerate_Wplus_ideal(const AffineGroup& G, const AffineElement& root);

}  // namespace weyltab
