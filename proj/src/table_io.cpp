#include "weyltab/table_io.hpp"

#include <cctype>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace weyltab {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr uint64_t kFnvOffset = 14695981039346656037ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;
constexpr const char* kCacheFormat = "weyltab-table";
constexpr int kCacheVersion = 1;

uint64_t fnv1a(uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::string hex64(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(v[k]);
  }
  return out;
}

ordered_json row_to_json(const TableRow& row) {
  return ordered_json{{"y_word", row.y_word},   {"epsilon", row.epsilon},
                      {"omega", row.omega},     {"length", row.length},
                      {"c5", row.c5},           {"c6", row.c6},
                      {"c7", row.c7},           {"right_set", row.right_set}};
}

TableRow row_from_json(const ordered_json& obj) {
  try {
    TableRow row;
    row.y_word = obj.at("y_word").get<std::vector<int>>();
    row.epsilon = obj.at("epsilon").get<std::vector<int>>();
    row.omega = obj.at("omega").get<std::vector<int>>();
    row.length = obj.at("length").get<int>();
    row.c5 = obj.at("c5").get<long long>();
    row.c6 = obj.at("c6").get<long long>();
    row.c7 = obj.at("c7").get<long long>();
    row.right_set = obj.at("right_set").get<std::vector<int>>();
    return row;
  } catch (const ordered_json::exception& e) {
    throw CacheError(CacheError::Kind::corrupt,
                     std::string("malformed cache row: ") + e.what());
  }
}

std::string latex_word(const std::vector<int>& word) {
  if (word.empty()) return "$1$";
  std::string out = "$";
  for (int g : word) out += "s_{" + std::to_string(g) + "}";
  return out + "$";
}

std::string latex_tuple(const std::vector<int>& v, char open, char close) {
  std::string out = "$\\left";
  out += open == '{' ? "\\{" : std::string(1, open);
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",\\,";
    out += std::to_string(v[k]);
  }
  out += "\\right";
  out += close == '}' ? "\\}" : std::string(1, close);
  return out + "$";
}

std::string emit_csv(const std::vector<TableRow>& rows) {
  std::string out = "y_word,epsilon,omega,length,c5,c6,c7,right_set\n";
  for (const TableRow& r : rows) {
    out += format_word(r.y_word);
    out += ",\"" + format_vector(r.epsilon) + "\"";
    out += ",\"" + format_vector(r.omega) + "\"";
    out += "," + std::to_string(r.length);
    out += "," + std::to_string(r.c5);
    out += "," + std::to_string(r.c6);
    out += "," + std::to_string(r.c7);
    out += ",\"" + format_set(r.right_set) + "\"\n";
  }
  return out;
}

std::string emit_json(const std::vector<TableRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const TableRow& r : rows) arr.push_back(row_to_json(r));
  return arr.dump(2) + "\n";
}

std::string emit_latex(const std::vector<TableRow>& rows, bool right_set_column) {
  std::string out = "\\begin{longtable}{|l|l|l|l|l|l|l|} \\hline\n";
  out += "$y \\in W$ & ";
  out += right_set_column ? "$\\mathcal{R}(w)$" : "$w \\cdot (-2\\rho)$";
  out += " & $\\omega$-coefficients & $l(w)$ & (5) & (6) & (7)\\\\ \\hline \\hline\n";
  for (const TableRow& r : rows) {
    out += latex_word(r.y_word) + " & ";
    out += right_set_column ? latex_tuple(r.right_set, '{', '}')
                            : latex_tuple(r.epsilon, '(', ')');
    out += " & " + latex_tuple(r.omega, '(', ')');
    out += " & $" + std::to_string(r.length) + "$";
    out += " & $" + std::to_string(r.c5) + "$";
    out += " & $" + std::to_string(r.c6) + "$";
    out += " & $" + std::to_string(r.c7) + "$ \\\\ \\hline\n";
  }
  out += "\\end{longtable}\n";
  return out;
}

}  // namespace

TableFormat parse_format(const std::string& name) {
  if (name == "latex") return TableFormat::latex;
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw FormatError("unknown table format: " + name);
}

std::vector<TableRow> restricted_rows(const std::vector<TableRow>& rows, int p) {
  std::vector<TableRow> out;
  for (const TableRow& r : rows) {
    bool keep = true;
    for (int c : r.omega)
      if (c < 0 || c > p - 1) keep = false;
    if (keep) out.push_back(r);
  }
  return out;
}

std::string emit(const std::vector<TableRow>& rows, const RankConfig& cfg,
                 const EmitOptions& opts) {
  const std::vector<TableRow>* src = &rows;
  std::vector<TableRow> filtered;
  if (opts.restricted_only) {
    filtered = restricted_rows(rows, cfg.p);
    src = &filtered;
  }
  switch (opts.format) {
    case TableFormat::csv:
      return emit_csv(*src);
    case TableFormat::json:
      return emit_json(*src);
    case TableFormat::latex:
      return emit_latex(*src, opts.right_set_column);
  }
  throw FormatError("unknown table format");
}

std::string format_word(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (int g : word) out += "s" + std::to_string(g);
  return out;
}

std::vector<int> parse_word(const std::string& text) {
  if (text == "1") return {};
  std::vector<int> word;
  size_t k = 0;
  while (k < text.size()) {
    if (text[k] != 's') throw FormatError("cannot parse word: " + text);
    const size_t start = ++k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (start == k) throw FormatError("cannot parse word: " + text);
    word.push_back(std::stoi(text.substr(start, k - start)));
  }
  if (word.empty()) throw FormatError("cannot parse word: " + text);
  return word;
}

std::string format_vector(const std::vector<int>& v) {
  return "(" + join_ints(v) + ")";
}

std::string format_set(const std::vector<int>& v) {
  return "{" + join_ints(v) + "}";
}

CacheWriter::CacheWriter(const std::string& path, const RankConfig& cfg,
                         size_t expected_rows)
    : path_(path),
      out_(path, std::ios::binary | std::ios::trunc),
      hash_(kFnvOffset) {
  if (!out_)
    throw CacheError(CacheError::Kind::io, "cannot open cache file for writing: " + path);
  const ordered_json header{{"format", kCacheFormat},
                            {"version", kCacheVersion},
                            {"n", cfg.n},
                            {"p", cfg.p},
                            {"rows", expected_rows}};
  write_line(header.dump());
}

void CacheWriter::write_line(const std::string& line) {
  hash_ = fnv1a(hash_, line);
  hash_ = fnv1a(hash_, "\n");
  out_ << line << '\n';
  out_.flush();
  if (!out_) throw CacheError(CacheError::Kind::io, "write failed: " + path_);
}

void CacheWriter::append(const TableRow& row) {
  if (finalized_)
    throw CacheError(CacheError::Kind::io, "cache writer already finalized: " + path_);
  write_line(row_to_json(row).dump());
}

void CacheWriter::finalize() {
  if (finalized_) return;
  const ordered_json footer{{"checksum", hex64(hash_)}};
  out_ << footer.dump() << '\n';
  out_.flush();
  if (!out_) throw CacheError(CacheError::Kind::io, "write failed: " + path_);
  finalized_ = true;
}

void save_cache(const std::vector<TableRow>& rows, const RankConfig& cfg,
                const std::string& path) {
  CacheWriter writer(path, cfg, rows.size());
  for (const TableRow& r : rows) writer.append(r);
  writer.finalize();
}

PartialCache load_cache_partial(const std::string& path, const RankConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError(CacheError::Kind::io, "cannot open cache file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < content.size()) {
    const size_t nl = content.find('\n', pos);
    if (nl == std::string::npos) break;  // unterminated tail: interrupted write
    lines.push_back(content.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty())
    throw CacheError(CacheError::Kind::corrupt, "cache file has no header: " + path);

  ordered_json header;
  try {
    header = ordered_json::parse(lines[0]);
  } catch (const ordered_json::exception&) {
    throw CacheError(CacheError::Kind::corrupt, "unreadable cache header: " + path);
  }
  if (!header.is_object() || header.value("format", "") != kCacheFormat)
    throw CacheError(CacheError::Kind::corrupt, "not a table cache file: " + path);
  if (header.value("version", -1) != kCacheVersion)
    throw CacheError(CacheError::Kind::version,
                     "unsupported cache version in " + path);
  if (header.value("n", -1) != cfg.n || header.value("p", -1) != cfg.p)
    throw CacheError(CacheError::Kind::mismatch,
                     "cache file " + path + " was built for different parameters");

  PartialCache result;
  result.expected_rows = header.value("rows", size_t{0});

  uint64_t hash = fnv1a(fnv1a(kFnvOffset, lines[0]), "\n");
  bool footer_seen = false;
  for (size_t k = 1; k < lines.size(); ++k) {
    if (footer_seen)
      throw CacheError(CacheError::Kind::corrupt,
                       "content after the checksum footer: " + path);
    ordered_json obj;
    try {
      obj = ordered_json::parse(lines[k]);
    } catch (const ordered_json::exception&) {
      throw CacheError(CacheError::Kind::corrupt,
                       "unreadable cache line in " + path);
    }
    if (obj.is_object() && obj.contains("checksum")) {
      if (obj.value("checksum", "") != hex64(hash))
        throw CacheError(CacheError::Kind::corrupt, "cache checksum mismatch: " + path);
      footer_seen = true;
      continue;
    }
    result.rows.push_back(row_from_json(obj));
    hash = fnv1a(fnv1a(hash, lines[k]), "\n");
  }
  if (footer_seen && result.rows.size() != result.expected_rows)
    throw CacheError(CacheError::Kind::corrupt,
                     "cache marked complete with the wrong row count: " + path);
  result.complete = footer_seen;
  return result;
}

std::vector<TableRow> load_cache(const std::string& path, const RankConfig& cfg) {
  PartialCache partial = load_cache_partial(path, cfg);
  if (!partial.complete)
    throw CacheError(CacheError::Kind::corrupt, "cache file is incomplete: " + path);
  return std::move(partial.rows);
}

}  // namespace weyltab
