#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "weyltab/rows.hpp"

namespace weyltab {

enum class TableFormat { latex, csv, json };

TableFormat parse_format(const std::string& name);  // throws FormatError

struct EmitOptions {
  TableFormat format = TableFormat::csv;
  bool restricted_only = false;
  // LaTeX only: print the right set in place of the epsilon-vector column.
  bool right_set_column = false;
};

std::string emit(const std::vector<TableRow>& rows, const RankConfig& cfg,
                 const EmitOptions& opts);

// Rows whose omega coefficients all lie in [0, p-1].
std::vector<TableRow> restricted_rows(const std::vector<TableRow>& rows, int p);

std::string format_word(const std::vector<int>& word);  // "s0s3s1s2"; "1" if empty
std::vector<int> parse_word(const std::string& text);   // inverse of format_word
std::string format_vector(const std::vector<int>& v);   // "(3, 1, -1, -3)"
std::string format_set(const std::vector<int>& v);      // "{1, 2, 3}"

// Cache files are line-delimited JSON: a header object recording the format
// version, n, p, and the expected row count; one object per row; and a
// checksum footer whose presence marks the file complete.  A file without
// the footer is a partial result from an interrupted run.
void save_cache(const std::vector<TableRow>& rows, const RankConfig& cfg,
                const std::string& path);

// Loads a complete cache; throws CacheError otherwise (kind: io, version,
// mismatch, or corrupt).
std::vector<TableRow> load_cache(const std::string& path, const RankConfig& cfg);

struct PartialCache {
  std::vector<TableRow> rows;
  size_t expected_rows = 0;
  bool complete = false;
};

// Reads whatever rows a cache file holds.  A missing footer, or a truncated
// final line, marks the file partial rather than corrupt.
PartialCache load_cache_partial(const std::string& path, const RankConfig& cfg);

// Incremental cache writer: header on construction, one line per appended
// row, checksum footer on finalize.  Abandoning the writer without finalize
// leaves a well-formed partial file.
class CacheWriter {
 public:
  CacheWriter(const std::string& path, const RankConfig& cfg, size_t expected_rows);

  void append(const TableRow& row);
  void finalize();

 private:
  void write_line(const std::string& line);

  std::string path_;
  std::ofstream out_;
  uint64_t hash_;
  bool finalized_ = false;
};

}  // namespace weyltab
