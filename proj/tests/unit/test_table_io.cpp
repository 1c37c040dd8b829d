#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "weyltab/rows.hpp"
#include "weyltab/table_io.hpp"

using namespace weyltab;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

const std::vector<TableRow>& a3_rows() {
  static const std::vector<TableRow> rows = build_rows(RankConfig(3));
  return rows;
}

std::filesystem::path scratch_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("words and vectors have a fixed text form") {
  CHECK(format_word({0, 3, 1, 2}) == "s0s3s1s2");
  CHECK(format_word({}) == "1");
  CHECK(parse_word("s0s3s1s2") == std::vector<int>({0, 3, 1, 2}));
  CHECK(parse_word("1").empty());
  CHECK(parse_word("s10s2") == std::vector<int>({10, 2}));
  CHECK_THROWS_AS(parse_word(""), FormatError);
  CHECK_THROWS_AS(parse_word("x1"), FormatError);
  CHECK_THROWS_AS(parse_word("s"), FormatError);
  CHECK(format_vector({3, 1, -1, -3}) == "(3, 1, -1, -3)");
  CHECK(format_set({1, 2, 3}) == "{1, 2, 3}");
  CHECK(format_set({}) == "{}");
}

TEST_CASE("format names parse or fail loudly") {
  CHECK(parse_format("csv") == TableFormat::csv);
  CHECK(parse_format("json") == TableFormat::json);
  CHECK(parse_format("latex") == TableFormat::latex);
  CHECK_THROWS_AS(parse_format("tsv"), FormatError);
}

TEST_CASE("csv output pins the header and quoting") {
  const std::string text = emit(a3_rows(), RankConfig(3), {});
  const std::vector<std::string> lines = split_lines(text);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "y_word,epsilon,omega,length,c5,c6,c7,right_set");
  CHECK(lines[1].find("\"(2, 2, 2)\",10,1,5,8") != std::string::npos);
  CHECK(lines[1].find("\"(3, 1, -1, -3)\"") != std::string::npos);
  CHECK(lines[8].find("1,\"(0, 0, 0, 0)\",\"(0, 0, 0)\",6,1,1,1") == 0);
}

TEST_CASE("json output carries the same rows") {
  EmitOptions opts;
  opts.format = TableFormat::json;
  const std::string text = emit(a3_rows(), RankConfig(3), opts);
  const nlohmann::json parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 8);
  CHECK(parsed[0]["omega"] == nlohmann::json({2, 2, 2}));
  CHECK(parsed[0]["length"] == 10);
  CHECK(parsed[0]["c7"] == 8);
  CHECK(parsed[7]["y_word"] == nlohmann::json::array());
}

TEST_CASE("latex output is a longtable with one line per row") {
  EmitOptions opts;
  opts.format = TableFormat::latex;
  const std::string text = emit(a3_rows(), RankConfig(3), opts);
  CHECK(text.find("\\begin{longtable}") == 0);
  CHECK(text.find("\\end{longtable}") != std::string::npos);
  CHECK(text.find("$w \\cdot (-2\\rho)$") != std::string::npos);
  CHECK(text.find("$s_{0}$") != std::string::npos);  // the length-7 row
  CHECK(text.find("$1$") != std::string::npos);      // the empty word

  opts.right_set_column = true;
  const std::string with_sets = emit(a3_rows(), RankConfig(3), opts);
  CHECK(with_sets.find("$\\mathcal{R}(w)$") != std::string::npos);
  CHECK(with_sets.find("$w \\cdot (-2\\rho)$") == std::string::npos);
}

TEST_CASE("the restricted filter keeps omega inside [0, p-1]") {
  const std::vector<TableRow> all = build_rows(RankConfig(4));
  const std::vector<TableRow> restricted = restricted_rows(all, 5);
  CHECK(restricted.size() < all.size());
  bool has_top = false, has_interior = false;
  for (const TableRow& r : restricted) {
    for (int c : r.omega) {
      CHECK(c >= 0);
      CHECK(c <= 4);
    }
    if (r.omega == std::vector<int>({3, 3, 3, 3})) has_top = true;
    if (r.omega == std::vector<int>({2, 3, 3, 2})) has_interior = true;
  }
  CHECK(has_top);
  CHECK(has_interior);
  for (const TableRow& r : restricted) CHECK(r.omega != std::vector<int>({5, 1, 3, 1}));

  EmitOptions opts;
  opts.restricted_only = true;
  const std::string text = emit(all, RankConfig(4), opts);
  CHECK(text.find("(5, 1, 3, 1)") == std::string::npos);
  CHECK(text.find("(3, 3, 3, 3)") != std::string::npos);
}

TEST_CASE("cache files round trip") {
  const auto path = scratch_file("weyltab-test-roundtrip.jsonl");
  save_cache(a3_rows(), RankConfig(3), path.string());
  CHECK(load_cache(path.string(), RankConfig(3)) == a3_rows());
  const PartialCache partial = load_cache_partial(path.string(), RankConfig(3));
  CHECK(partial.complete);
  CHECK(partial.expected_rows == 8);
  std::filesystem::remove(path);
}

TEST_CASE("an unfinalized writer leaves a loadable partial file") {
  const auto path = scratch_file("weyltab-test-partial.jsonl");
  {
    CacheWriter writer(path.string(), RankConfig(3), a3_rows().size());
    writer.append(a3_rows()[0]);
    writer.append(a3_rows()[1]);
  }
  const PartialCache partial = load_cache_partial(path.string(), RankConfig(3));
  CHECK_FALSE(partial.complete);
  REQUIRE(partial.rows.size() == 2);
  CHECK(partial.rows[0] == a3_rows()[0]);
  CHECK(partial.rows[1] == a3_rows()[1]);
  CHECK_THROWS_AS(load_cache(path.string(), RankConfig(3)), CacheError);
  std::filesystem::remove(path);
}

TEST_CASE("cache loading rejects foreign and damaged files") {
  const auto path = scratch_file("weyltab-test-damage.jsonl");

  SUBCASE("missing file") {
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_cache(path.string(), RankConfig(3)), CacheError);
  }
  SUBCASE("parameter mismatch") {
    save_cache(a3_rows(), RankConfig(3), path.string());
    try {
      load_cache(path.string(), RankConfig(3, 7));
      FAIL("expected a mismatch error");
    } catch (const CacheError& e) {
      CHECK(e.kind == CacheError::Kind::mismatch);
    }
  }
  SUBCASE("not a cache file at all") {
    std::ofstream out(path, std::ios::trunc);
    out << "y_word,epsilon,omega\n";
    out.close();
    try {
      load_cache(path.string(), RankConfig(3));
      FAIL("expected a corrupt error");
    } catch (const CacheError& e) {
      CHECK(e.kind == CacheError::Kind::corrupt);
    }
  }
  SUBCASE("edited row breaks the checksum") {
    save_cache(a3_rows(), RankConfig(3), path.string());
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();
    in.close();
    const size_t where = content.find("\"c7\":8");
    REQUIRE(where != std::string::npos);
    content.replace(where, 6, "\"c7\":9");
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    out << content;
    out.close();
    try {
      load_cache(path.string(), RankConfig(3));
      FAIL("expected a corrupt error");
    } catch (const CacheError& e) {
      CHECK(e.kind == CacheError::Kind::corrupt);
    }
  }
  std::filesystem::remove(path);
}
