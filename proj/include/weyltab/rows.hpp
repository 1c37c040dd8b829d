#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "weyltab/bruhat.hpp"

namespace weyltab {

// One output row for w = w_0 y: the coset word, the weight of w in both
// notations, the length, the three counts, and the right set of w.
struct TableRow {
  std::vector<int> y_word;
  std::vector<int> epsilon;
  std::vector<int> omega;
  int length = 0;
  long long c5 = 0;  // v <= w with R(w) = R(v)
  long long c6 = 0;  // v <= w with R(w) contained in R(v)
  long long c7 = 0;  // v <= w
  std::vector<int> right_set;

  bool operator==(const TableRow&) const = default;
};

struct Counts {
  long long c5 = 0;
  long long c6 = 0;
  long long c7 = 0;
};

// The three counts for entries[index], taken over the whole ideal.  The
// weight prefilter skips candidates whose weight is not below w's in root
// order; that is a necessary condition for the Bruhat test it guards, so the
// counts are unchanged.
Counts count_below(const AffineGroup& G, const IdealEnumeration& ideal,
                   size_t index, bool weight_prefilter = true);

// The complete row for one ideal entry.
TableRow make_row(const AffineGroup& G, const IdealEnumeration& ideal,
                  size_t index, bool weight_prefilter = true);

// Aligns previously computed rows with the ideal, matching by omega.  Rows
// that match no entry, or that disagree with the enumeration on length,
// word, or epsilon, signal a stale cache (CacheError).
std::vector<std::optional<TableRow>> match_rows(const IdealEnumeration& ideal,
                                                const std::vector<TableRow>& prior);

struct BuildOptions {
  int threads = 1;  // 0 = hardware concurrency
  bool weight_prefilter = true;
  // Called once per freshly computed row (never for precomputed ones), under
  // a lock, in completion order; `done` counts finished rows out of `total`.
  std::function<void(const TableRow&, size_t done, size_t total)> on_row;
  // Rows from an earlier interrupted run; matched by omega and reused.
  const std::vector<TableRow>* resume = nullptr;
};

// Counts for every ideal entry, in the ideal's canonical order.  The row
// sequence is identical for every thread count.
std::vector<TableRow> build_rows_for(const AffineGroup& G,
                                     const IdealEnumeration& ideal,
                                     const BuildOptions& opts = {});

// The full pipeline for cfg: maximal element, its W+ ideal, one row each.
// Requires p = h.
std::vector<TableRow> build_rows(const RankConfig& cfg, const BuildOptions& opts = {});

}  // namespace weyltab
