#include "weyltab/rows.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace weyltab {

Counts count_below(const AffineGroup& G, const IdealEnumeration& ideal,
                   size_t index, bool weight_prefilter) {
  const IdealEntry& w = ideal.entries.at(index);
  BruhatCache cache(G, w.element);
  Counts c;
  for (const IdealEntry& v : ideal.entries) {
    if (v.length > w.length) continue;
    if (weight_prefilter && !root_order_leq(v.weight, w.weight)) continue;
    if (!cache.leq(v.element, v.length)) continue;
    ++c.c7;
    if (w.right_set.subset_of(v.right_set)) {
      ++c.c6;
      if (w.right_set == v.right_set) ++c.c5;
    }
  }
  return c;
}

TableRow make_row(const AffineGroup& G, const IdealEnumeration& ideal,
                  size_t index, bool weight_prefilter) {
  const IdealEntry& e = ideal.entries.at(index);
  const Counts c = count_below(G, ideal, index, weight_prefilter);
  TableRow row;
  row.y_word = e.y_word;
  row.epsilon = e.weight.epsilon();
  row.omega = e.weight.omega();
  row.length = e.length;
  row.c5 = c.c5;
  row.c6 = c.c6;
  row.c7 = c.c7;
  row.right_set = e.right_set.indices();
  return row;
}

std::vector<std::optional<TableRow>> match_rows(const IdealEnumeration& ideal,
                                                const std::vector<TableRow>& prior) {
  std::map<std::vector<int>, size_t> by_omega;
  for (size_t i = 0; i < ideal.entries.size(); ++i)
    by_omega.emplace(ideal.entries[i].weight.omega(), i);

  std::vector<std::optional<TableRow>> matched(ideal.entries.size());
  for (const TableRow& row : prior) {
    const auto it = by_omega.find(row.omega);
    if (it == by_omega.end())
      throw CacheError(CacheError::Kind::mismatch,
                       "cached row does not belong to this table");
    const IdealEntry& e = ideal.entries[it->second];
    if (row.length != e.length || row.y_word != e.y_word ||
        row.epsilon != e.weight.epsilon() || row.right_set != e.right_set.indices())
      throw CacheError(CacheError::Kind::corrupt,
                       "cached row disagrees with the enumeration");
    matched[it->second] = row;
  }
  return matched;
}

std::vector<TableRow> build_rows_for(const AffineGroup& G,
                                     const IdealEnumeration& ideal,
                                     const BuildOptions& opts) {
  const size_t total = ideal.entries.size();
  std::vector<TableRow> rows(total);
  std::vector<char> have(total, 0);

  if (opts.resume) {
    std::vector<std::optional<TableRow>> matched = match_rows(ideal, *opts.resume);
    for (size_t i = 0; i < total; ++i) {
      if (!matched[i]) continue;
      rows[i] = std::move(*matched[i]);
      have[i] = 1;
    }
  }

  std::vector<size_t> work;
  for (size_t i = 0; i < total; ++i)
    if (!have[i]) work.push_back(i);

  std::atomic<size_t> cursor{0};
  std::atomic<size_t> done{total - work.size()};
  std::mutex emit_mutex;
  std::exception_ptr failure;

  auto run = [&] {
    try {
      for (;;) {
        const size_t k = cursor.fetch_add(1);
        if (k >= work.size()) return;
        const size_t i = work[k];
        TableRow row = make_row(G, ideal, i, opts.weight_prefilter);
        std::lock_guard<std::mutex> lock(emit_mutex);
        rows[i] = std::move(row);
        const size_t finished = done.fetch_add(1) + 1;
        if (opts.on_row) opts.on_row(rows[i], finished, total);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(emit_mutex);
      if (!failure) failure = std::current_exception();
      cursor.store(work.size());  // stop the other workers
    }
  };

  int threads = opts.threads > 0
                    ? opts.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = static_cast<int>(std::min<size_t>(threads, std::max<size_t>(work.size(), 1)));

  if (threads == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(run);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<TableRow> build_rows(const RankConfig& cfg, const BuildOptions& opts) {
  const AffineGroup G(cfg);
  const IdealEnumeration ideal = enumerate_Wplus_ideal(G, G.wmax());
  return build_rows_for(G, ideal, opts);
}

}  // namespace weyltab
