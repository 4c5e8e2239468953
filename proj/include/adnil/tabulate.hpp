#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "adnil/errors.hpp"
#include "adnil/ideals.hpp"
#include "adnil/poset.hpp"
#include "adnil/root_system.hpp"

namespace adnil {

/// Counts of ad-nilpotent and abelian ideals of p_I.
struct TableRow {
  ParabolicMask mask;
  std::uint64_t n_count = 0;
  std::uint64_t ab_count = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

namespace detail {

struct Counter {
  std::uint64_t n = 0;
  std::uint64_t ab = 0;
};

/// Classify every filter reachable from the given shards; counters are
/// indexed by compatibility mask.
inline void count_shards(const RootSystem& rs, const Poset& p, std::span<Counter> counters,
                         std::atomic<std::size_t>& next_shard) {
  const std::size_t shards = AntichainGenerator::shard_count(p);
  for (std::size_t s = next_shard++; s < shards; s = next_shard++) {
    AntichainGenerator gen(p, s);
    gen.for_each([&](const AntichainItem& item) {
      Counter& c = counters[compatibility_mask(rs, item.filter).bits()];
      ++c.n;
      if (is_abelian(rs, item.filter)) ++c.ab;
    });
  }
}

}  // namespace detail

/// Largest rank for which a full 2^rank table is produced.
inline constexpr int kMaxTabulateRank = 20;

/// One row per I, ascending mask. Filters are bucketed by their
/// compatibility mask J(phi); a superset-sum transform then gives
/// #{phi : I subset of J(phi)} for every I at once.
inline std::vector<TableRow> tabulate(const RootSystem& rs, const Poset& p, unsigned threads = 1) {
  const int l = rs.rank();
  if (l > kMaxTabulateRank) throw TooLarge("rank " + std::to_string(l) + " is too large to tabulate");
  const std::size_t width = std::size_t{1} << l;
  threads = std::max(1U, threads);

  std::vector<std::vector<detail::Counter>> per_worker(threads, std::vector<detail::Counter>(width));
  std::atomic<std::size_t> next_shard{0};
  if (threads == 1) {
    detail::count_shards(rs, p, per_worker[0], next_shard);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&, w] { detail::count_shards(rs, p, per_worker[w], next_shard); });
  }

  std::vector<detail::Counter> total(width);
  for (const auto& local : per_worker)
    for (std::size_t m = 0; m < width; ++m) {
      total[m].n += local[m].n;
      total[m].ab += local[m].ab;
    }

  for (int i = 0; i < l; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < width; ++m)
      if (!(m & bit)) {
        total[m].n += total[m | bit].n;
        total[m].ab += total[m | bit].ab;
      }
  }

  std::vector<TableRow> rows;
  rows.reserve(width);
  for (std::size_t m = 0; m < width; ++m)
    rows.push_back(TableRow{ParabolicMask(l, static_cast<std::uint32_t>(m)), total[m].n, total[m].ab});
  return rows;
}

inline std::vector<TableRow> tabulate(const RootSystem& rs, unsigned threads = 1) {
  return tabulate(rs, build_poset(rs), threads);
}

/// Ideals of p_I ordered by (size, lexicographic member list).
inline std::vector<IdealRecord> list_ideals(const RootSystem& rs, const Poset& p, ParabolicMask I,
                                            bool abelian_only = false) {
  std::vector<IdealRecord> out;
  AntichainGenerator gen(p);
  gen.for_each([&](const AntichainItem& item) {
    const ParabolicMask compat = compatibility_mask(rs, item.filter);
    if (!I.is_subset_of(compat)) return;
    const bool abelian = is_abelian(rs, item.filter);
    if (abelian_only && !abelian) return;
    out.push_back(IdealRecord{item.filter, item.antichain, compat, abelian, item.filter.count()});
  });
  std::sort(out.begin(), out.end(), [](const IdealRecord& a, const IdealRecord& b) {
    if (a.size != b.size) return a.size < b.size;
    return lex_compare(a.phi, b.phi) < 0;
  });
  return out;
}

struct GoldenRow {
  std::uint32_t mask;
  std::uint64_t n_count;
  std::uint64_t ab_count;
};

struct GoldenTable {
  SimpleType type;
  std::vector<GoldenRow> rows;
};

struct Mismatch {
  ParabolicMask mask;
  std::uint64_t expected_n = 0;
  std::uint64_t expected_ab = 0;
  std::uint64_t got_n = 0;
  std::uint64_t got_ab = 0;
};

struct VerificationReport {
  SimpleType type;
  std::size_t rows_checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compare computed rows against a golden table. Golden rows that are
/// missing from `computed`, or vice versa, are reported as mismatches with
/// zero on the absent side.
inline VerificationReport verify_rows(const GoldenTable& g, std::span<const TableRow> computed) {
  VerificationReport report{g.type, 0, {}};
  const int l = g.type.rank;
  const std::size_t width = std::size_t{1} << l;
  std::vector<const GoldenRow*> expected(width, nullptr);
  std::vector<const TableRow*> got(width, nullptr);
  for (const auto& r : g.rows)
    if (r.mask < width) expected[r.mask] = &r;
  for (const auto& r : computed)
    if (r.mask.bits() < width) got[r.mask.bits()] = &r;
  for (std::size_t m = 0; m < width; ++m) {
    if (!expected[m] && !got[m]) continue;
    ++report.rows_checked;
    Mismatch d{ParabolicMask(l, static_cast<std::uint32_t>(m))};
    if (expected[m]) {
      d.expected_n = expected[m]->n_count;
      d.expected_ab = expected[m]->ab_count;
    }
    if (got[m]) {
      d.got_n = got[m]->n_count;
      d.got_ab = got[m]->ab_count;
    }
    if (!expected[m] || !got[m] || d.expected_n != d.got_n || d.expected_ab != d.got_ab)
      report.mismatches.push_back(d);
  }
  return report;
}

inline VerificationReport verify_against_golden(const RootSystem& rs, const GoldenTable& g, unsigned threads = 1) {
  if (!(rs.type() == g.type))
    throw TypeMismatch("golden table for " + g.type.name() + " checked against " + rs.type().name());
  const auto rows = tabulate(rs, threads);
  return verify_rows(g, rows);
}

}  // namespace adnil
