#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weyltab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure description, or a short summary on pass
  double seconds = 0.0;
};

// Each check is self-contained and never throws: exceptions become failures.

// build_rows at rank n (3 or 4) reproduces the published table exactly.
CheckResult check_reference_table(int n, int threads = 1);

// The published reduced words multiply out to elements with the published
// weights and lengths.
CheckResult check_reference_words();

// l(w_0) = 6, 10, 15, 21 and l(w_max) = 10, 20, 35, 56 across ranks 3..6.
CheckResult check_structural_lengths();

// Lifting recursion agrees with the subword oracle on every pair (v, w)
// with both lengths <= max_length.
CheckResult check_oracle_agreement(int rank, int max_length);

// Associativity, identity, inverses, involutions, braid and commuting
// relations; length changes by exactly one under generator multiplication.
CheckResult check_group_axioms(int samples, uint64_t seed);

// The closed-form length equals the reduced-word length, and words multiply
// back, for every element of length <= max_length at ranks 1..max_rank.
CheckResult check_word_lengths(int max_rank, int max_length);

// Epsilon/omega conversions, the weight-element bijection on the orbit, and
// height arithmetic.
CheckResult check_weight_roundtrips(uint64_t seed);

// Dominant weight <=> all finite generators left-descend <=> maximal in the
// right coset, across a ball of elements and the rank-4 ideal.
CheckResult check_wplus_three_way();

// 1 <= c5 <= c6 <= c7, additive lengths, top-row consistency, row ordering.
CheckResult check_count_structure();

// interval_below and the subword expansion produce the same interval at the
// rank-3 maximal element, and its W+ part equals the enumerated ideal.
CheckResult check_interval_crosscheck();

// Identical rows from 1 and 4 worker threads.
CheckResult check_thread_determinism();

// Save/load round trip plus the version, mismatch, corrupt, and partial
// cache paths, using scratch files under dir.
CheckResult check_cache_roundtrip(const std::string& dir);

// |{v in W+ : v <= w_max}| at rank n.
CheckResult check_ideal_cardinality(int n, long long expected);

struct VerifyOptions {
  int oracle_rank = 3;  // oracle agreement runs at ranks 2..oracle_rank
  int oracle_maxlen = 8;
  int samples = 10000;
  uint64_t seed = 20260822;
  int threads = 1;
  std::string scratch_dir;  // empty: the system temp directory
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace weyltab
