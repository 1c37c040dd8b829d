#pragma once

#include <string>
#include <vector>

#include "weyltab/rows.hpp"

namespace weyltab {

// A row of a published table, kept exactly as printed.  The word is one
// valid reduced word for y, not necessarily the canonical one this library
// produces; comparisons key rows by omega and check word length only.
struct ReferenceRow {
  const char* y_word;
  std::vector<int> epsilon;
  std::vector<int> omega;
  int length;
  long long c5;
  long long c6;
  long long c7;
};

struct ReferenceTable {
  int n;
  const char* w0_word;
  std::vector<ReferenceRow> rows;
};

// The published tables for ranks 3 and 4 (p = h).  Throws RankError for
// other ranks.
const ReferenceTable& reference_table(int n);

// Empty string when rows reproduce the reference exactly (keyed by omega:
// same row set, and equal epsilon, length, counts, and word length per row);
// otherwise a description of every discrepancy.
std::string compare_to_reference(const std::vector<TableRow>& rows, int n);

}  // namespace weyltab
