#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hcnlab/records.hpp"

namespace hcnlab {

// All logarithms here are natural; report headers record that choice.

// The c that makes  n_next = n + n (ln n)^{-c}  exact for this consecutive
// pair: -ln(gap_ratio) / ln ln n. Undefined (not zero, not an error) when
// the gap ratio is exactly 1 or ln ln n <= 0.
std::optional<double> implied_c(const HcnEntry& n, const HcnEntry& next,
                                PrimePool& pool);

// p_k / ln n, the observable pinched by c_1 < p_k/ln n < c_2.
double lemma1_ratio(const HcnEntry& n, PrimePool& pool);

// k * ln ln n / ln n, the bounded statistic behind k = O(log n/log log n).
std::optional<double> eq5_stat(const HcnEntry& n, PrimePool& pool);

// Largest r >= 0 with n * p_{k+r} < n_next * p_k, exact. The number of
// top-prime shifts that actually fit below the next record.
std::uint64_t r_feasible(const HcnEntry& n, const HcnEntry& next,
                         PrimePool& pool);

// Largest r with prime(k+r) < prime(k) * (1 + theta * (ln n)^{-c}).
// theta must lie in (0, 1/2].
std::uint64_t r_threshold(const HcnEntry& n, double c, double theta,
                          PrimePool& pool);

// k / (2 (ln n)^c).
double r_bound(const HcnEntry& n, double c, PrimePool& pool);

struct CountExponentSample {
  Nat x;
  std::size_t hcn_count = 0;
  std::optional<double> exponent;  // ln(count) / ln ln x
};

// How many table entries are <= x, and the exponent that count represents
// on the (log x) scale. x must be within table.limit.
CountExponentSample count_exponent(const Nat& x, const HcnTable& table);

enum class ReportFormat { csv, json };

struct ReportOptions {
  std::vector<double> c_grid;
  double theta = 0.5;
  // Entries at or below this value are excluded from the empirical
  // c_1/c_2 proxies; tiny records distort the ratio.
  Nat lemma1_floor = 1000;
};

struct ReportSummary {
  std::optional<double> lemma1_min, lemma1_max;
  std::optional<double> implied_c_median, implied_c_max;
  std::vector<CountExponentSample> decades;
};

// One row per consecutive pair plus a summary block. Identical inputs
// produce identical bytes.
ReportSummary emit_report(const HcnTable& table, const ReportOptions& opts,
                          ReportFormat format, std::ostream& out,
                          PrimePool& pool);

}  // namespace hcnlab
