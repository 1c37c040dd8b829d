#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "weyltab/reference_tables.hpp"
#include "weyltab/rows.hpp"
#include "weyltab/table_io.hpp"

using namespace weyltab;

namespace {

std::map<std::vector<int>, TableRow> by_omega(const std::vector<TableRow>& rows) {
  std::map<std::vector<int>, TableRow> out;
  for (const TableRow& r : rows) out[r.omega] = r;
  return out;
}

}  // namespace

TEST_CASE("rank 3 counts match the published table") {
  const std::vector<TableRow> rows = build_rows(RankConfig(3));
  REQUIRE(rows.size() == 8);
  CHECK(compare_to_reference(rows, 3).empty());

  const auto lookup = by_omega(rows);
  const TableRow& top = lookup.at({2, 2, 2});
  CHECK(top.length == 10);
  CHECK(top.c5 == 1);
  CHECK(top.c6 == 5);
  CHECK(top.c7 == 8);
  const TableRow& middle = lookup.at({1, 2, 1});
  CHECK(middle.length == 9);
  CHECK(middle.c5 == 1);
  CHECK(middle.c6 == 2);
  CHECK(middle.c7 == 5);
  const TableRow& bottom = lookup.at({0, 0, 0});
  CHECK(bottom.length == 6);
  CHECK(bottom.y_word.empty());
  CHECK(bottom.c5 == 1);
  CHECK(bottom.c6 == 1);
  CHECK(bottom.c7 == 1);
}

TEST_CASE("spot rows of the rank 4 table") {
  const std::vector<TableRow> rows = build_rows(RankConfig(4));
  REQUIRE(rows.size() == 52);
  const auto lookup = by_omega(rows);

  const TableRow& interior = lookup.at({2, 2, 2, 2});
  CHECK(interior.length == 17);
  CHECK(interior.c5 == 2);
  CHECK(interior.c6 == 4);
  CHECK(interior.c7 == 20);

  const TableRow& low = lookup.at({1, 0, 0, 1});
  CHECK(low.length == 11);
  CHECK(low.c5 == 1);
  CHECK(low.c6 == 1);
  CHECK(low.c7 == 2);

  const TableRow& top = lookup.at({3, 3, 3, 3});
  CHECK(top.length == 20);
  CHECK(top.c5 == 1);
  CHECK(top.c6 == 31);
  CHECK(top.c7 == 52);
}

TEST_CASE("the weight prefilter never changes a count") {
  const AffineGroup G{RankConfig(3)};
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
  for (size_t k = 0; k < ideal.entries.size(); ++k) {
    const Counts with = count_below(G, ideal, k, true);
    const Counts without = count_below(G, ideal, k, false);
    CHECK(with.c5 == without.c5);
    CHECK(with.c6 == without.c6);
    CHECK(with.c7 == without.c7);
  }
}

TEST_CASE("identical rows from any thread count") {
  BuildOptions serial;
  serial.threads = 1;
  BuildOptions parallel;
  parallel.threads = 4;
  CHECK(build_rows(RankConfig(3), serial) == build_rows(RankConfig(3), parallel));
}

TEST_CASE("resume reuses matched rows and recomputes the rest") {
  const AffineGroup G{RankConfig(3)};
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
  const std::vector<TableRow> full = build_rows_for(G, ideal);

  std::vector<TableRow> partial(full.begin() + 2, full.begin() + 6);
  size_t fresh = 0;
  BuildOptions opts;
  opts.resume = &partial;
  opts.on_row = [&](const TableRow&, size_t, size_t) { ++fresh; };
  const std::vector<TableRow> resumed = build_rows_for(G, ideal, opts);
  CHECK(resumed == full);
  CHECK(fresh == full.size() - partial.size());

  // resuming from the complete table computes nothing
  fresh = 0;
  opts.resume = &full;
  CHECK(build_rows_for(G, ideal, opts) == full);
  CHECK(fresh == 0);
}

TEST_CASE("stale resume rows are rejected, not silently recomputed") {
  const AffineGroup G{RankConfig(3)};
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
  const std::vector<TableRow> full = build_rows_for(G, ideal);

  SUBCASE("a row from some other table") {
    std::vector<TableRow> prior = {full[0]};
    prior[0].omega = {4, 4, 4};
    prior[0].epsilon = epsilon_from_omega(prior[0].omega);
    CHECK_THROWS_AS(match_rows(ideal, prior), CacheError);
  }
  SUBCASE("a row disagreeing with the enumeration") {
    std::vector<TableRow> prior = {full[0]};
    prior[0].length += 1;
    CHECK_THROWS_AS(match_rows(ideal, prior), CacheError);
  }
  SUBCASE("matched rows come back in enumeration order") {
    std::vector<TableRow> shuffled = {full[5], full[1], full[7]};
    const auto matched = match_rows(ideal, shuffled);
    REQUIRE(matched.size() == full.size());
    CHECK(matched[1].has_value());
    CHECK(*matched[1] == full[1]);
    CHECK_FALSE(matched[0].has_value());
    CHECK(*matched[5] == full[5]);
    CHECK(*matched[7] == full[7]);
  }
}

TEST_CASE("progress callback reports completion counts") {
  const AffineGroup G{RankConfig(3)};
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
  std::vector<size_t> seen;
  BuildOptions opts;
  opts.threads = 2;
  opts.on_row = [&](const TableRow&, size_t done, size_t total) {
    CHECK(total == ideal.entries.size());
    seen.push_back(done);
  };
  build_rows_for(G, ideal, opts);
  REQUIRE(seen.size() == ideal.entries.size());
  // done counts each row exactly once, 1..total in completion order
  std::vector<size_t> sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k < sorted.size(); ++k) CHECK(sorted[k] == k + 1);
}
