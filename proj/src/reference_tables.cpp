#include "weyltab/reference_tables.hpp"

#include <map>

#include "weyltab/table_io.hpp"

namespace weyltab {

namespace {

const ReferenceTable a3_table{
    3,
    "s1s2s3s1s2s1",
    {
        {"s0s3s1s2", {3, 1, -1, -3}, {2, 2, 2}, 10, 1, 5, 8},
        {"s0s1s2", {3, -1, -1, -1}, {4, 0, 0}, 9, 1, 1, 4},
        {"s0s3s1", {2, 1, -1, -2}, {1, 2, 1}, 9, 1, 2, 5},
        {"s0s3s2", {1, 1, 1, -3}, {0, 0, 4}, 9, 1, 1, 4},
        {"s0s1", {2, 0, -1, -1}, {2, 1, 0}, 8, 1, 1, 3},
        {"s0s3", {1, 1, 0, -2}, {0, 1, 2}, 8, 1, 1, 3},
        {"s0", {1, 0, 0, -1}, {1, 0, 1}, 7, 1, 1, 2},
        {"1", {0, 0, 0, 0}, {0, 0, 0}, 6, 1, 1, 1},
    }};

const ReferenceTable a4_table{
    4,
    "s1s2s3s4s1s2s3s1s2s1",
    {
        {"s0s4s1s2s3s0s4s2s1s0", {6, 3, 0, -3, -6}, {3, 3, 3, 3}, 20, 1, 31, 52},
        {"s0s1s2s3s4s3s2s1s0", {6, 0, 0, 0, -6}, {6, 0, 0, 6}, 19, 5, 7, 34},
        {"s0s4s1s2s3s0s4s1s0", {6, 3, -3, -3, -3}, {3, 6, 0, 0}, 19, 3, 4, 26},
        {"s0s4s1s2s3s0s4s2s0", {6, 1, 0, -3, -4}, {5, 1, 3, 1}, 19, 5, 6, 32},
        {"s0s4s1s2s3s0s4s2s1", {5, 3, 0, -3, -5}, {2, 3, 3, 2}, 19, 2, 15, 38},
        {"s0s4s1s2s3s2s0s1s0", {4, 3, 0, -1, -6}, {1, 3, 1, 5}, 19, 5, 6, 32},
        {"s0s4s3s1s0s4s2s1s0", {3, 3, 3, -3, -6}, {0, 0, 6, 3}, 19, 3, 4, 26},
        {"s0s1s2s3s4s3s2s0", {6, 0, 0, -2, -4}, {6, 0, 2, 2}, 18, 3, 5, 26},
        {"s0s1s2s3s4s3s2s1", {5, 0, 0, 0, -5}, {5, 0, 0, 5}, 18, 2, 2, 21},
        {"s0s4s1s2s3s0s4s0", {6, 1, -1, -3, -3}, {5, 2, 2, 0}, 18, 2, 3, 22},
        {"s0s4s1s2s3s0s4s1", {5, 3, -2, -3, -3}, {2, 5, 1, 0}, 18, 3, 5, 22},
        {"s0s4s1s2s3s0s4s2", {5, 2, 0, -3, -4}, {3, 2, 3, 1}, 18, 2, 10, 27},
        {"s0s4s1s2s3s2s0s1", {4, 3, 0, -2, -5}, {1, 3, 2, 3}, 18, 2, 10, 27},
        {"s0s4s1s2s3s2s1s0", {4, 2, 0, 0, -6}, {2, 2, 0, 6}, 18, 3, 5, 26},
        {"s0s4s3s1s0s4s2s1", {3, 3, 2, -3, -5}, {0, 1, 5, 2}, 18, 3, 5, 22},
        {"s0s4s3s1s2s0s1s0", {3, 3, 1, -1, -6}, {0, 2, 2, 5}, 18, 2, 3, 22},
        {"s0s1s2s3s4s3s0", {6, 0, -1, -2, -3}, {6, 1, 1, 1}, 17, 2, 7, 19},
        {"s0s1s2s3s4s3s2", {5, 0, 0, -1, -4}, {5, 0, 1, 3}, 17, 1, 3, 17},
        {"s0s4s1s2s3s0s1", {4, 3, -2, -2, -3}, {1, 5, 0, 1}, 17, 3, 4, 17},
        {"s0s4s1s2s3s0s4", {5, 2, -1, -3, -3}, {3, 3, 2, 0}, 17, 1, 6, 19},
        {"s0s4s1s2s3s2s0", {4, 2, 0, -2, -4}, {2, 2, 2, 2}, 17, 2, 4, 20},
        {"s0s4s1s2s3s2s1", {4, 1, 0, 0, -5}, {3, 1, 0, 5}, 17, 1, 3, 17},
        {"s0s4s3s1s0s4s2", {3, 2, 2, -3, -4}, {1, 0, 5, 1}, 17, 3, 4, 17},
        {"s0s4s3s1s2s0s1", {3, 3, 1, -2, -5}, {0, 2, 3, 3}, 17, 1, 6, 19},
        {"s0s4s3s1s2s1s0", {3, 2, 1, 0, -6}, {1, 1, 1, 6}, 17, 2, 7, 19},
        {"s0s1s2s3s4s0", {6, -1, -1, -2, -2}, {7, 0, 1, 0}, 16, 3, 3, 12},
        {"s0s1s2s3s4s3", {5, 0, -1, -1, -3}, {5, 1, 0, 2}, 16, 2, 3, 13},
        {"s0s4s1s2s0s1", {3, 3, -2, -2, -2}, {0, 5, 0, 0}, 16, 1, 1, 10},
        {"s0s4s1s2s3s0", {4, 2, -1, -2, -3}, {2, 3, 1, 1}, 16, 1, 6, 15},
        {"s0s4s1s2s3s2", {4, 1, 0, -1, -4}, {3, 1, 1, 3}, 16, 1, 5, 14},
        {"s0s4s3s1s0s4", {2, 2, 2, -3, -3}, {0, 0, 5, 0}, 16, 1, 1, 10},
        {"s0s4s3s1s2s0", {3, 2, 1, -2, -4}, {1, 1, 3, 2}, 16, 1, 6, 15},
        {"s0s4s3s1s2s1", {3, 1, 1, 0, -5}, {2, 0, 1, 5}, 16, 2, 3, 13},
        {"s0s4s3s2s1s0", {2, 2, 1, 1, -6}, {0, 1, 0, 7}, 16, 3, 3, 12},
        {"s0s1s2s3s4", {5, -1, -1, -1, -2}, {6, 0, 0, 1}, 15, 2, 3, 9},
        {"s0s4s1s2s0", {3, 2, -1, -2, -2}, {1, 3, 1, 0}, 15, 2, 2, 9},
        {"s0s4s1s2s3", {4, 1, -1, -1, -3}, {3, 2, 0, 2}, 15, 1, 5, 11},
        {"s0s4s3s1s0", {2, 2, 1, -2, -3}, {0, 1, 3, 1}, 15, 2, 2, 9},
        {"s0s4s3s1s2", {3, 1, 1, -1, -4}, {2, 0, 2, 3}, 15, 1, 5, 11},
        {"s0s4s3s2s1", {2, 1, 1, 1, -5}, {1, 0, 0, 6}, 15, 2, 3, 9},
        {"s0s1s2s3", {4, -1, -1, -1, -1}, {5, 0, 0, 0}, 14, 1, 1, 5},
        {"s0s4s1s0", {2, 2, 0, -2, -2}, {0, 2, 2, 0}, 14, 1, 1, 6},
        {"s0s4s1s2", {3, 1, -1, -1, -2}, {2, 2, 0, 1}, 14, 1, 2, 7},
        {"s0s4s3s1", {2, 1, 1, -1, -3}, {1, 0, 2, 2}, 14, 1, 2, 7},
        {"s0s4s3s2", {1, 1, 1, 1, -4}, {0, 0, 0, 5}, 14, 1, 1, 5},
        {"s0s1s2", {3, 0, -1, -1, -1}, {3, 1, 0, 0}, 13, 1, 1, 4},
        {"s0s4s1", {2, 1, 0, -1, -2}, {1, 1, 1, 1}, 13, 1, 2, 5},
        {"s0s4s3", {1, 1, 1, 0, -3}, {0, 0, 1, 3}, 13, 1, 1, 4},
        {"s0s1", {2, 0, 0, -1, -1}, {2, 0, 1, 0}, 12, 1, 1, 3},
        {"s0s4", {1, 1, 0, 0, -2}, {0, 1, 0, 2}, 12, 1, 1, 3},
        {"s0", {1, 0, 0, 0, -1}, {1, 0, 0, 1}, 11, 1, 1, 2},
        {"1", {0, 0, 0, 0, 0}, {0, 0, 0, 0}, 10, 1, 1, 1},
    }};

}  // namespace

const ReferenceTable& reference_table(int n) {
  if (n == 3) return a3_table;
  if (n == 4) return a4_table;
  throw RankError("no reference table for rank " + std::to_string(n));
}

std::string compare_to_reference(const std::vector<TableRow>& rows, int n) {
  const ReferenceTable& ref = reference_table(n);
  std::string report;
  auto complain = [&report](const std::string& msg) { report += msg + "\n"; };

  if (rows.size() != ref.rows.size())
    complain("row count " + std::to_string(rows.size()) + ", expected " +
             std::to_string(ref.rows.size()));

  std::map<std::vector<int>, const ReferenceRow*> by_omega;
  for (const ReferenceRow& r : ref.rows) by_omega[r.omega] = &r;
  if (by_omega.size() != ref.rows.size())
    complain("reference table has duplicate omega keys");

  std::map<std::vector<int>, int> seen;
  for (const TableRow& row : rows) {
    const std::string tag = "row " + format_vector(row.omega);
    if (++seen[row.omega] > 1) {
      complain(tag + ": duplicate omega");
      continue;
    }
    const auto it = by_omega.find(row.omega);
    if (it == by_omega.end()) {
      complain(tag + ": not in the reference table");
      continue;
    }
    const ReferenceRow& ref_row = *it->second;
    if (row.epsilon != ref_row.epsilon)
      complain(tag + ": epsilon " + format_vector(row.epsilon) + ", expected " +
               format_vector(ref_row.epsilon));
    if (row.length != ref_row.length)
      complain(tag + ": length " + std::to_string(row.length) + ", expected " +
               std::to_string(ref_row.length));
    if (row.c5 != ref_row.c5 || row.c6 != ref_row.c6 || row.c7 != ref_row.c7)
      complain(tag + ": counts (" + std::to_string(row.c5) + ", " +
               std::to_string(row.c6) + ", " + std::to_string(row.c7) +
               "), expected (" + std::to_string(ref_row.c5) + ", " +
               std::to_string(ref_row.c6) + ", " + std::to_string(ref_row.c7) + ")");
    if (row.y_word.size() != parse_word(ref_row.y_word).size())
      complain(tag + ": word length " + std::to_string(row.y_word.size()) +
               ", expected " + std::to_string(parse_word(ref_row.y_word).size()));
  }
  for (const auto& [omega, ref_row] : by_omega)
    if (!seen.count(omega))
      complain("row " + format_vector(omega) + ": missing from the output");
  return report;
}

}  // namespace weyltab
