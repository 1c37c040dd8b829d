#include "weyltab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "weyltab/table_io.hpp"
#include "weyltab/verify.hpp"

namespace weyltab {

namespace {

struct TableArgs {
  int rank = 0;
  int p = 0;  // 0: default to rank + 1
  int threads = 0;
  std::string format = "csv";
  std::string out_path;
  std::string cache_dir;
  bool restricted_only = false;
  bool right_set_column = false;
  bool progress = false;
};

struct WmaxArgs {
  int rank = 0;
  int p = 0;
};

RankConfig make_config(int rank, int p) {
  return p == 0 ? RankConfig(rank) : RankConfig(rank, p);
}

std::string cache_path_for(const std::string& dir, const RankConfig& cfg) {
  return (std::filesystem::path(dir) /
          ("table-n" + std::to_string(cfg.n) + "-p" + std::to_string(cfg.p) +
           ".jsonl"))
      .string();
}

// Assembles the rows, going through the cache directory when one is set:
// a complete cache is reused outright, a partial one seeds the build, and
// freshly computed rows stream into the rewritten file as they finish.
std::vector<TableRow> assemble_rows(const RankConfig& cfg, const TableArgs& args,
                                    std::ostream& err) {
  const AffineGroup G{cfg};
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
  const size_t total = ideal.entries.size();

  BuildOptions opts;
  opts.threads = args.threads;

  std::vector<TableRow> prior;
  if (!args.cache_dir.empty()) {
    std::filesystem::create_directories(args.cache_dir);
    const std::string path = cache_path_for(args.cache_dir, cfg);
    if (std::filesystem::exists(path)) {
      const PartialCache partial = load_cache_partial(path, cfg);
      const std::vector<std::optional<TableRow>> matched =
          match_rows(ideal, partial.rows);
      if (partial.complete &&
          std::all_of(matched.begin(), matched.end(),
                      [](const auto& m) { return m.has_value(); })) {
        std::vector<TableRow> rows;
        rows.reserve(total);
        for (const auto& m : matched) rows.push_back(*m);
        if (args.progress)
          err << "cache hit: " << rows.size() << " rows from " << path << "\n";
        return rows;
      }
      prior = partial.rows;
      if (args.progress)
        err << "resuming from " << prior.size() << " cached rows\n";
    }
  }

  std::unique_ptr<CacheWriter> writer;
  if (!args.cache_dir.empty()) {
    const std::string path = cache_path_for(args.cache_dir, cfg);
    writer = std::make_unique<CacheWriter>(path, cfg, total);
    if (!prior.empty()) {
      // Rewrite the reusable rows up front so the file stays a superset of
      // the old one even if this run is interrupted too.
      const std::vector<std::optional<TableRow>> matched = match_rows(ideal, prior);
      prior.clear();
      for (const auto& m : matched)
        if (m) {
          writer->append(*m);
          prior.push_back(*m);
        }
    }
    opts.resume = &prior;
  } else if (!prior.empty()) {
    opts.resume = &prior;
  }

  const bool progress = args.progress;
  opts.on_row = [&](const TableRow& row, size_t done, size_t t) {
    if (writer) writer->append(row);
    if (progress) {
      err << "row " << done << "/" << t << ": w = w_0 " << format_word(row.y_word)
          << " (length " << row.length << ")\n";
    }
  };

  std::vector<TableRow> rows = build_rows_for(G, ideal, opts);
  if (writer) writer->finalize();
  return rows;
}

int run_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  const RankConfig cfg = make_config(args.rank, args.p);
  EmitOptions eopts;
  eopts.format = parse_format(args.format);
  eopts.restricted_only = args.restricted_only;
  eopts.right_set_column = args.right_set_column;

  const std::vector<TableRow> rows = assemble_rows(cfg, args, err);
  const std::string text = emit(rows, cfg, eopts);

  if (args.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(args.out_path, std::ios::binary | std::ios::trunc);
  file << text;
  file.flush();
  if (!file) {
    err << "error: cannot write " << args.out_path << "\n";
    return 3;
  }
  return 0;
}

int run_wmax(const WmaxArgs& args, std::ostream& out) {
  const RankConfig cfg = make_config(args.rank, args.p);
  const AffineGroup G{cfg};
  const AffineElement wmax = G.wmax();
  const auto [w0, y] = G.coset_factorize(wmax);
  const Weight mu = G.weight_of(wmax);

  out << "rank " << cfg.n << ", p = " << cfg.p << "\n";
  out << "l(w_max) = " << G.length(wmax) << ", l(w_0) = " << G.length(w0) << "\n";
  out << "word: " << format_word(G.reduced_word(wmax)) << "\n";
  out << "y-word (w_max = w_0 y): " << format_word(G.reduced_word(y)) << "\n";
  out << "weight omega: " << format_vector(mu.omega()) << "\n";
  out << "weight epsilon: " << format_vector(mu.epsilon()) << "\n";
  return 0;
}

int run_verify(const VerifyOptions& opts, std::ostream& out) {
  const std::vector<CheckResult> results = run_verification(opts);
  int failed = 0;
  for (const CheckResult& r : results) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << timing << ")";
    if (!r.detail.empty()) out << " " << r.detail;
    out << "\n";
    if (!r.pass) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Distinguished-set size tables for affine Weyl groups of type A"};
  app.require_subcommand(1);

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table", "Compute the counts table below the maximal element");
  table->add_option("--rank", table_args.rank, "rank n of the group (type A_n)")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--p", table_args.p,
                    "translation dilation (default: rank + 1, the only value "
                    "with a maximal element)");
  table->add_flag("--restricted-only", table_args.restricted_only,
                  "keep only rows with restricted dominant weights");
  table->add_option("--format", table_args.format, "output format: csv, json, latex")
      ->capture_default_str();
  table->add_option("--out", table_args.out_path, "write the table to this file");
  table->add_option("--cache", table_args.cache_dir,
                    "cache directory for resumable row storage")
      ->envname("WEYLTAB_CACHE_DIR");
  table->add_option("--threads", table_args.threads,
                    "worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  table->add_flag("--right-set-column", table_args.right_set_column,
                  "latex format: print the right descent set instead of epsilon");
  table->add_flag("--progress", table_args.progress, "report per-row progress");

  WmaxArgs wmax_args;
  CLI::App* wmax = app.add_subcommand(
      "wmax", "Print the maximal element and its weight");
  wmax->add_option("--rank", wmax_args.rank, "rank n of the group (type A_n)")
      ->required()
      ->check(CLI::PositiveNumber);
  wmax->add_option("--p", wmax_args.p,
                   "translation dilation (default: rank + 1)");

  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the self-verification suite");
  verify->add_option("--rank", verify_opts.oracle_rank,
                     "largest rank for the subword-oracle comparison")
      ->capture_default_str()
      ->check(CLI::Range(2, 4));
  verify->add_option("--oracle-maxlen", verify_opts.oracle_maxlen,
                     "length bound for the subword-oracle comparison")
      ->capture_default_str()
      ->check(CLI::Range(1, 10));
  verify->add_option("--samples", verify_opts.samples,
                     "random samples for the group-axiom checks")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_opts.seed, "random seed")
      ->capture_default_str();
  verify->add_option("--threads", verify_opts.threads,
                     "worker threads for the table rebuilds")
      ->capture_default_str();
  verify->add_option("--scratch-dir", verify_opts.scratch_dir,
                     "directory for cache-check scratch files (default: temp)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (table->parsed()) return run_table(table_args, out, err);
    if (wmax->parsed()) return run_wmax(wmax_args, out);
    return run_verify(verify_opts, out);
  } catch (const CacheError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace weyltab
