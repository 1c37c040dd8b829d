#include "weyltab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <unordered_set>

#include "weyltab/bruhat.hpp"
#include "weyltab/reference_tables.hpp"
#include "weyltab/rows.hpp"
#include "weyltab/table_io.hpp"

namespace weyltab {

namespace {

// Collects failures; the empty string means the check passed.
struct Checker {
  std::string failures;
  long long checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 4000) failures += what + "; ";
  }

  template <typename F>
  void expect_throws(F&& f, const std::string& what) {
    ++checked;
    try {
      f();
      if (failures.size() < 4000) failures += what + " did not throw; ";
    } catch (const Error&) {
    }
  }
};

CheckResult timed(const std::string& name,
                  const std::function<std::string(std::string&)>& body) {
  CheckResult result;
  result.name = name;
  const auto start = std::chrono::steady_clock::now();
  std::string summary;
  try {
    result.detail = body(summary);
    result.pass = result.detail.empty();
    if (result.pass) result.detail = summary;
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

AffineElement product_of(const AffineGroup& G, const std::vector<int>& word) {
  AffineElement w = G.identity();
  for (int g : word) w = w.right_mul_gen(g);
  return w;
}

AffineElement random_element(const AffineGroup& G, std::mt19937_64& rng,
                             int max_word) {
  std::uniform_int_distribution<int> len_dist(0, max_word);
  std::uniform_int_distribution<int> gen_dist(0, G.rank());
  AffineElement w = G.identity();
  const int len = len_dist(rng);
  for (int k = 0; k < len; ++k) w = w.right_mul_gen(gen_dist(rng));
  return w;
}

}  // namespace

CheckResult check_reference_table(int n, int threads) {
  return timed("reference-table-a" + std::to_string(n),
               [n, threads](std::string& summary) {
                 BuildOptions opts;
                 opts.threads = threads;
                 const std::vector<TableRow> rows = build_rows(RankConfig(n), opts);
                 summary = std::to_string(rows.size()) + " rows matched";
                 return compare_to_reference(rows, n);
               });
}

CheckResult check_reference_words() {
  return timed("reference-words-multiply", [](std::string& summary) {
    Checker c;
    for (int n : {3, 4}) {
      const AffineGroup G{RankConfig(n)};
      const ReferenceTable& ref = reference_table(n);
      const AffineElement w0 = product_of(G, parse_word(ref.w0_word));
      c.expect(w0 == G.longest_finite(), "rank " + std::to_string(n) +
                                             ": published w_0 word is not w_0");
      for (const ReferenceRow& row : ref.rows) {
        const std::vector<int> word = parse_word(row.y_word);
        const AffineElement y = product_of(G, word);
        const AffineElement w = compose(w0, y);
        const std::string tag =
            "rank " + std::to_string(n) + " row " + row.y_word;
        c.expect(G.length(y) == static_cast<int>(word.size()),
                 tag + ": published word is not reduced");
        c.expect(G.length(w) == row.length, tag + ": length mismatch");
        c.expect(G.weight_of(w).epsilon() == row.epsilon, tag + ": weight mismatch");
        c.expect(G.in_Wplus(w), tag + ": not in W+");
      }
    }
    summary = std::to_string(c.checked) + " word checks";
    return c.failures;
  });
}

CheckResult check_structural_lengths() {
  return timed("structural-lengths", [](std::string& summary) {
    Checker c;
    const int w0_expected[] = {6, 10, 15, 21};
    const int wmax_expected[] = {10, 20, 35, 56};
    for (int n = 3; n <= 6; ++n) {
      const AffineGroup G{RankConfig(n)};
      const std::string tag = "rank " + std::to_string(n);
      c.expect(G.length(G.longest_finite()) == w0_expected[n - 3],
               tag + ": l(w_0)");
      const AffineElement wmax = G.wmax();
      c.expect(G.length(wmax) == wmax_expected[n - 3], tag + ": l(w_max)");
      c.expect(two_rho_rho(n) == wmax_expected[n - 3], tag + ": 2(rho,rho)");
      const std::vector<int> omega = G.weight_of(wmax).omega();
      bool all_p_minus_2 = true;
      for (int v : omega)
        if (v != G.p() - 2) all_p_minus_2 = false;
      c.expect(all_p_minus_2, tag + ": w_max weight is not (p-2)rho");
    }
    summary = "ranks 3..6";
    return c.failures;
  });
}

CheckResult check_oracle_agreement(int rank, int max_length) {
  return timed("oracle-agreement-rank" + std::to_string(rank),
               [rank, max_length](std::string& summary) {
                 Checker c;
                 const AffineGroup G{RankConfig(rank)};
                 const std::vector<AffineElement> ball = length_ball(G, max_length);
                 std::vector<int> lengths(ball.size());
                 std::vector<std::string> keys(ball.size());
                 for (size_t k = 0; k < ball.size(); ++k) {
                   lengths[k] = G.length(ball[k]);
                   keys[k] = ball[k].packed_key();
                 }
                 long long pairs = 0;
                 for (size_t wi = 0; wi < ball.size(); ++wi) {
                   const std::unordered_set<std::string> oracle =
                       subword_interval_keys(G, ball[wi], max_length);
                   BruhatCache cache(G, ball[wi]);
                   for (size_t vi = 0; vi < ball.size(); ++vi) {
                     ++pairs;
                     const bool lifted = cache.leq(ball[vi], lengths[vi]);
                     const bool brute = oracle.count(keys[vi]) > 0;
                     if (lifted != brute)
                       c.expect(false, "disagreement at pair (" + std::to_string(vi) +
                                           ", " + std::to_string(wi) + ")");
                   }
                 }
                 summary = std::to_string(pairs) + " pairs over " +
                           std::to_string(ball.size()) + " elements";
                 return c.failures;
               });
}

CheckResult check_group_axioms(int samples, uint64_t seed) {
  return timed("group-axioms", [samples, seed](std::string& summary) {
    Checker c;
    std::mt19937_64 rng(seed);

    for (int n = 2; n <= 4; ++n) {
      const AffineGroup G{RankConfig(n)};
      const AffineElement e = G.identity();
      for (int i = 0; i <= n; ++i) {
        c.expect(compose(G.generator(i), G.generator(i)) == e,
                 "s" + std::to_string(i) + " squared");
        for (int j = i + 1; j <= n; ++j) {
          const bool adjacent = (j - i == 1) || (i == 0 && j == n);
          const AffineElement st = compose(G.generator(i), G.generator(j));
          AffineElement power = st;
          const int order = adjacent ? 3 : 2;
          for (int k = 1; k < order; ++k) power = compose(power, st);
          c.expect(power == e, "braid relation s" + std::to_string(i) + " s" +
                                   std::to_string(j) + " at rank " +
                                   std::to_string(n));
        }
      }
    }
    {
      // Rank 1 has an infinite bond: s0 s1 never closes up.
      const AffineGroup G{RankConfig(1)};
      const AffineElement st = compose(G.generator(0), G.generator(1));
      AffineElement power = st;
      for (int k = 0; k < 6; ++k) {
        c.expect(!power.is_identity(), "rank-1 bond closed at power " +
                                           std::to_string(k + 1));
        power = compose(power, st);
      }
    }

    const AffineGroup G{RankConfig(3)};
    const AffineElement e = G.identity();
    std::uniform_int_distribution<int> gen_dist(0, G.rank());
    for (int k = 0; k < samples; ++k) {
      const AffineElement a = random_element(G, rng, 25);
      const AffineElement b = random_element(G, rng, 25);
      const AffineElement s = random_element(G, rng, 25);
      c.expect(compose(compose(a, b), s) == compose(a, compose(b, s)),
               "associativity");
      c.expect(compose(a, a.inverse()) == e && compose(a.inverse(), a) == e,
               "inverse");
      c.expect(G.length(a.inverse()) == G.length(a), "inverse length");
      c.expect(compose(a, e) == a && compose(e, a) == a, "identity");
      const int i = gen_dist(rng);
      c.expect(a.right_mul_gen(i) == compose(a, G.generator(i)),
               "right generator shortcut");
      c.expect(a.left_mul_gen(i) == compose(G.generator(i), a),
               "left generator shortcut");
      const int diff = G.length(a.right_mul_gen(i)) - G.length(a);
      c.expect(diff == 1 || diff == -1, "length step");
    }
    summary = std::to_string(c.checked) + " checks";
    return c.failures;
  });
}

CheckResult check_word_lengths(int max_rank, int max_length) {
  return timed("word-length-agreement", [max_rank, max_length](std::string& summary) {
    Checker c;
    long long elements = 0;
    for (int n = 1; n <= max_rank; ++n) {
      const AffineGroup G{RankConfig(n)};
      const std::vector<AffineElement> ball = length_ball(G, max_length);
      elements += static_cast<long long>(ball.size());
      for (const AffineElement& w : ball) {
        const std::vector<int> word = G.reduced_word(w);
        const int len = G.length(w);
        c.expect(static_cast<int>(word.size()) == len, "word length != length");
        c.expect(product_of(G, word) == w, "word does not multiply back");
      }
      if (n == 1)
        c.expect(static_cast<int>(ball.size()) == 2 * max_length + 1,
                 "rank-1 ball size");
    }
    summary = std::to_string(elements) + " elements, ranks 1.." +
              std::to_string(max_rank);
    return c.failures;
  });
}

CheckResult check_weight_roundtrips(uint64_t seed) {
  return timed("weight-roundtrips", [seed](std::string& summary) {
    Checker c;
    std::mt19937_64 rng(seed);

    c.expect(omega_from_epsilon(std::vector<int>{3, 1, -1, -3}) ==
                 std::vector<int>({2, 2, 2}),
             "fixture (3,1,-1,-3)");
    c.expect(omega_from_epsilon(std::vector<int>{3, -1, -1, -1}) ==
                 std::vector<int>({4, 0, 0}),
             "fixture (3,-1,-1,-1)");
    c.expect(epsilon_from_omega(std::vector<int>{1, 2, 1}) ==
                 std::vector<int>({2, 1, -1, -2}),
             "fixture (1,2,1)");
    c.expect_throws([] { epsilon_from_omega(std::vector<int>{1, 0, 0}); },
                    "fundamental weight outside the root lattice");

    std::uniform_int_distribution<int> entry(-9, 9);
    for (int n = 2; n <= 5; ++n) {
      for (int k = 0; k < 200; ++k) {
        std::vector<int> eps(n + 1);
        int sum = 0;
        for (int j = 0; j < n; ++j) {
          eps[j] = entry(rng);
          sum += eps[j];
        }
        eps[n] = -sum;
        const std::vector<int> omega = omega_from_epsilon(eps);
        c.expect(epsilon_from_omega(omega) == eps, "epsilon round trip");
        c.expect(omega_from_epsilon(epsilon_from_omega(omega)) == omega,
                 "omega round trip");
      }
    }

    // Height is additive.
    for (int k = 0; k < 200; ++k) {
      std::uniform_int_distribution<int> entry4(-6, 6);
      std::vector<int> a(5), b(5);
      int sa = 0, sb = 0;
      for (int j = 0; j < 4; ++j) {
        a[j] = entry4(rng);
        b[j] = entry4(rng);
        sa += a[j];
        sb += b[j];
      }
      a[4] = -sa;
      b[4] = -sb;
      const Weight wa = Weight::from_epsilon(a);
      const Weight wb = Weight::from_epsilon(b);
      c.expect(height(weight_add(wa, wb)) == height(wa) + height(wb),
               "height additivity");
    }

    // Height: fixtures and additivity.
    c.expect(height(Weight::from_epsilon(std::vector<int>{3, 1, -1, -3})) == 10,
             "height fixture");
    for (int n = 2; n <= 5; ++n) {
      for (int i = 1; i <= n; ++i)
        c.expect(height(simple_root_weight(n, i)) == 1, "simple root height");
      Weight alpha0 = zero_weight(n);
      for (int i = 1; i <= n; ++i)
        alpha0 = weight_add(alpha0, simple_root_weight(n, i));
      c.expect(height(alpha0) == n, "highest root height");
      c.expect(pairing(alpha0, Root::highest(n)) == 2, "alpha0 pairing");
    }
    c.expect_throws([] { height(Weight(std::vector<int>{1, 0, 0})); },
                    "height outside the root lattice");

    // rho pairing census: value k occurs n+1-k times; the total is the
    // maximal length, not l(w_0).
    for (int n = 3; n <= 6; ++n) {
      std::vector<int> census(n + 1, 0);
      int total = 0;
      for (const Root& r : positive_roots(n)) {
        ++census[rho_pairing(r)];
        total += rho_pairing(r);
      }
      for (int k = 1; k <= n; ++k)
        c.expect(census[k] == n + 1 - k, "rho census at k=" + std::to_string(k));
      c.expect(total == two_rho_rho(n), "sum of rho pairings");
    }

    // The weight-element correspondence is a bijection onto the orbit.
    for (int n : {2, 3}) {
      const AffineGroup G{RankConfig(n)};
      for (const AffineElement& w : length_ball(G, 6)) {
        const Weight mu = G.weight_of(w);
        c.expect(G.element_from_weight(mu) == w, "orbit bijection");
      }
    }
    {
      const AffineGroup G{RankConfig(3)};
      c.expect_throws([&] { G.element_from_weight(Weight({2, 0, 2})); },
                      "singular weight recovery");
      c.expect(G.element_from_weight(zero_weight(3)) == G.longest_finite(),
               "zero weight recovers w_0");
      c.expect(G.element_from_weight(minus_two_rho(3)) == G.identity(),
               "-2rho recovers the identity");
    }
    summary = std::to_string(c.checked) + " checks";
    return c.failures;
  });
}

CheckResult check_wplus_three_way() {
  return timed("wplus-three-way", [](std::string& summary) {
    Checker c;
    for (int n : {2, 3, 4}) {
      const AffineGroup G{RankConfig(n)};
      const int max_len = n == 4 ? 4 : 6;
      for (const AffineElement& w : length_ball(G, max_len)) {
        const bool dominant = G.weight_of(w).dominant();
        const bool member = G.in_Wplus(w);
        bool all_left = true;
        for (int i = 1; i <= n; ++i)
          if (!G.left_descends(w, i)) all_left = false;
        c.expect(dominant == member, "dominant vs membership at length " +
                                         std::to_string(G.length(w)));
        c.expect(member == all_left, "membership vs left descents at length " +
                                         std::to_string(G.length(w)));
      }
    }
    {
      const AffineGroup G{RankConfig(4)};
      const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
      for (const IdealEntry& e : ideal.entries) {
        c.expect(G.in_Wplus(e.element), "ideal member not in W+");
        c.expect(e.weight.dominant(), "ideal weight not dominant");
        bool all_left = true;
        for (int i = 1; i <= 4; ++i)
          if (!G.left_descends(e.element, i)) all_left = false;
        c.expect(all_left, "ideal member missing a left descent");
      }
    }
    summary = std::to_string(c.checked) + " checks";
    return c.failures;
  });
}

CheckResult check_count_structure() {
  return timed("count-structure", [](std::string& summary) {
    Checker c;
    for (int n : {3, 4}) {
      const AffineGroup G{RankConfig(n)};
      const int w0_len = G.length(G.longest_finite());
      const std::vector<TableRow> rows = build_rows(RankConfig(n));
      const std::string tag = "rank " + std::to_string(n);
      c.expect(!rows.empty(), tag + ": no rows");
      c.expect(rows.front().c7 == static_cast<long long>(rows.size()),
               tag + ": top row c7 != row count");
      c.expect(rows.back().y_word.empty() && rows.back().length == w0_len,
               tag + ": bottom row is not w_0");
      c.expect(rows.back().c5 == 1 && rows.back().c6 == 1 && rows.back().c7 == 1,
               tag + ": w_0 counts");
      std::unordered_set<std::string> omegas;
      for (size_t k = 0; k < rows.size(); ++k) {
        const TableRow& r = rows[k];
        c.expect(1 <= r.c5 && r.c5 <= r.c6 && r.c6 <= r.c7,
                 tag + ": count monotonicity");
        c.expect(r.length == w0_len + static_cast<int>(r.y_word.size()),
                 tag + ": additive length");
        c.expect(r.omega == omega_from_epsilon(r.epsilon), tag + ": omega/epsilon");
        omegas.insert(format_vector(r.omega));
        if (k > 0) {
          const TableRow& prev = rows[k - 1];
          c.expect(prev.length > r.length ||
                       (prev.length == r.length && prev.y_word < r.y_word),
                   tag + ": row ordering");
        }
      }
      c.expect(omegas.size() == rows.size(), tag + ": omega keys not unique");
    }
    summary = "ranks 3 and 4";
    return c.failures;
  });
}

CheckResult check_interval_crosscheck() {
  return timed("interval-crosscheck-a3", [](std::string& summary) {
    Checker c;
    const AffineGroup G{RankConfig(3)};
    const AffineElement wmax = G.wmax();

    const std::vector<AffineElement> interval = interval_below(G, wmax);
    const std::unordered_set<std::string> brute = subword_interval_keys(G, wmax, 10);
    c.expect(interval.size() == brute.size(), "interval sizes differ");
    for (const AffineElement& v : interval)
      c.expect(brute.count(v.packed_key()) > 0, "interval element missed by oracle");

    std::unordered_set<std::string> members;
    for (const AffineElement& v : interval)
      if (G.in_Wplus(v)) members.insert(v.packed_key());

    const IdealEnumeration ideal = enumerate_Wplus_ideal(G, wmax);
    c.expect(members.size() == ideal.entries.size(),
             "W+ part of the interval has size " + std::to_string(members.size()) +
                 ", ideal has " + std::to_string(ideal.entries.size()));
    for (const IdealEntry& e : ideal.entries)
      c.expect(members.count(e.element.packed_key()) > 0,
               "ideal member outside the interval");

    c.expect(interval_Wplus_count(G, wmax) ==
                 static_cast<long long>(ideal.entries.size()),
             "packed interval count disagrees at rank 3");
    const AffineGroup G4{RankConfig(4)};
    const long long packed4 = interval_Wplus_count(G4, G4.wmax());
    const long long ideal4 = static_cast<long long>(
        enumerate_Wplus_ideal(G4, G4.wmax()).entries.size());
    c.expect(packed4 == ideal4, "packed interval count disagrees at rank 4: " +
                                    std::to_string(packed4) + " vs " +
                                    std::to_string(ideal4));

    summary = std::to_string(interval.size()) + " interval elements, " +
              std::to_string(ideal.entries.size()) + " in W+; packed rank-4 count " +
              std::to_string(packed4);
    return c.failures;
  });
}

CheckResult check_thread_determinism() {
  return timed("thread-determinism", [](std::string& summary) {
    BuildOptions serial;
    serial.threads = 1;
    BuildOptions parallel;
    parallel.threads = 4;
    const std::vector<TableRow> a = build_rows(RankConfig(4), serial);
    const std::vector<TableRow> b = build_rows(RankConfig(4), parallel);
    summary = "52 rows, 1 vs 4 threads";
    return a == b ? std::string() : std::string("row sequences differ");
  });
}

CheckResult check_cache_roundtrip(const std::string& dir) {
  return timed("cache-roundtrip", [dir](std::string& summary) {
    namespace fs = std::filesystem;
    Checker c;
    const RankConfig cfg(3);
    const std::vector<TableRow> rows = build_rows(cfg);
    const fs::path base = dir.empty() ? fs::temp_directory_path() : fs::path(dir);
    const fs::path path = base / "weyltab-verify-cache.jsonl";

    save_cache(rows, cfg, path.string());
    c.expect(load_cache(path.string(), cfg) == rows, "round trip");

    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    in.close();

    auto write_variant = [&](const std::string& text) {
      const fs::path variant = base / "weyltab-verify-cache-variant.jsonl";
      std::ofstream out(variant, std::ios::trunc | std::ios::binary);
      out << text;
      out.close();
      return variant.string();
    };

    {
      std::string text = content;
      text.replace(text.find("\"version\":1"), 11, "\"version\":9");
      try {
        load_cache(write_variant(text), cfg);
        c.expect(false, "version error not raised");
      } catch (const CacheError& e) {
        c.expect(e.kind == CacheError::Kind::version, "wrong error for version");
      }
    }
    {
      try {
        load_cache(path.string(), RankConfig(4));
        c.expect(false, "mismatch error not raised");
      } catch (const CacheError& e) {
        c.expect(e.kind == CacheError::Kind::mismatch, "wrong error for mismatch");
      }
    }
    {
      std::string text = content;
      const size_t where = text.find("\"length\":10");
      text.replace(where, 11, "\"length\":11");
      try {
        load_cache(write_variant(text), cfg);
        c.expect(false, "corrupt error not raised");
      } catch (const CacheError& e) {
        c.expect(e.kind == CacheError::Kind::corrupt, "wrong error for corrupt");
      }
    }
    {
      // Drop the footer and truncate the last row mid-line: a partial file.
      std::string text = content;
      text = text.substr(0, text.rfind("{\"checksum\""));
      text = text.substr(0, text.size() - 10);
      const PartialCache partial = load_cache_partial(write_variant(text), cfg);
      c.expect(!partial.complete, "truncated file reported complete");
      c.expect(partial.rows.size() == rows.size() - 1, "partial row recovery");
      c.expect(std::equal(partial.rows.begin(), partial.rows.end(), rows.begin()),
               "partial rows differ");
      try {
        load_cache(write_variant(text), cfg);
        c.expect(false, "incomplete cache loaded");
      } catch (const CacheError&) {
        ++c.checked;
      }
    }
    fs::remove(base / "weyltab-verify-cache.jsonl");
    fs::remove(base / "weyltab-verify-cache-variant.jsonl");
    summary = std::to_string(c.checked) + " checks";
    return c.failures;
  });
}

CheckResult check_ideal_cardinality(int n, long long expected) {
  return timed("ideal-cardinality-a" + std::to_string(n),
               [n, expected](std::string& summary) {
                 const AffineGroup G{RankConfig(n)};
                 const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
                 const long long got = static_cast<long long>(ideal.entries.size());
                 summary = std::to_string(got) + " elements";
                 if (got == expected) return std::string();
                 return "ideal has " + std::to_string(got) + " elements, expected " +
                        std::to_string(expected);
               });
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  results.push_back(check_reference_table(3, opts.threads));
  results.push_back(check_reference_table(4, opts.threads));
  results.push_back(check_reference_words());
  results.push_back(check_structural_lengths());
  for (int rank = 2; rank <= opts.oracle_rank; ++rank)
    results.push_back(check_oracle_agreement(rank, opts.oracle_maxlen));
  results.push_back(check_group_axioms(opts.samples, opts.seed));
  results.push_back(check_word_lengths(3, 10));
  results.push_back(check_weight_roundtrips(opts.seed));
  results.push_back(check_wplus_three_way());
  results.push_back(check_count_structure());
  results.push_back(check_interval_crosscheck());
  results.push_back(check_thread_determinism());
  results.push_back(check_cache_roundtrip(opts.scratch_dir));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace weyltab
