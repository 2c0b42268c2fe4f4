#include "hcnlab/erdos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace hcnlab {

namespace {

void require_consecutive(const HcnEntry& n, const HcnEntry& next) {
  if (next.ordinal != n.ordinal + 1 || next.value <= n.value) {
    throw std::invalid_argument("entries are not table-consecutive");
  }
}

double ratio_as_double(const Nat& num, const Nat& den) {
  return mpz_get_d(num.get_mpz_t()) / mpz_get_d(den.get_mpz_t());
}

}  // namespace

std::optional<double> implied_c(const HcnEntry& n, const HcnEntry& next,
                                PrimePool& pool) {
  require_consecutive(n, next);
  double ln_n = ln_value(n.factorization, pool);
  if (ln_n <= 1.0) return std::nullopt;  // ln ln n <= 0
  Nat delta = next.value - n.value;
  if (delta == n.value) return std::nullopt;  // gap ratio exactly 1
  double gap_ratio = ratio_as_double(delta, n.value);
  return -std::log(gap_ratio) / std::log(ln_n);
}

double lemma1_ratio(const HcnEntry& n, PrimePool& pool) {
  if (n.factorization.is_one()) {
    throw std::invalid_argument("1 has no prime factor");
  }
  double p_k =
      static_cast<double>(pool.prime(n.factorization.top_index()));
  return p_k / ln_value(n.factorization, pool);
}

std::optional<double> eq5_stat(const HcnEntry& n, PrimePool& pool) {
  double ln_n = ln_value(n.factorization, pool);
  if (ln_n <= 1.0) return std::nullopt;
  double k = static_cast<double>(n.factorization.distinct_primes());
  return k * std::log(ln_n) / ln_n;
}

std::uint64_t r_feasible(const HcnEntry& n, const HcnEntry& next,
                         PrimePool& pool) {
  require_consecutive(n, next);
  if (n.factorization.is_one()) {
    throw std::invalid_argument("1 has no top prime to shift");
  }
  if (n.factorization.top_exponent() != 1) {
    throw NonUnitTopError(n.value);
  }
  PrimeIndex k = n.factorization.top_index();
  std::uint64_t r = 0;
  while (shift_value_less_than(n.factorization, k + r + 1, k, next.value,
                               pool)) {
    ++r;
  }
  return r;
}

std::uint64_t r_threshold(const HcnEntry& n, double c, double theta,
                          PrimePool& pool) {
  if (!(theta > 0.0) || theta > 0.5) {
    throw std::invalid_argument("theta must lie in (0, 1/2]");
  }
  if (c < 0.0) throw std::invalid_argument("c must be >= 0");
  if (n.factorization.is_one()) {
    throw std::invalid_argument("1 has no top prime");
  }
  PrimeIndex k = n.factorization.top_index();
  double ln_n = ln_value(n.factorization, pool);
  double threshold = static_cast<double>(pool.prime(k)) *
                     (1.0 + theta * std::pow(ln_n, -c));
  std::uint64_t r = 0;
  while (static_cast<double>(pool.prime(k + r + 1)) < threshold) ++r;
  return r;
}

double r_bound(const HcnEntry& n, double c, PrimePool& pool) {
  if (c < 0.0) throw std::invalid_argument("c must be >= 0");
  if (n.value < 2) throw std::invalid_argument("needs a value >= 2");
  double ln_n = ln_value(n.factorization, pool);
  double k = static_cast<double>(n.factorization.distinct_primes());
  return k / (2.0 * std::pow(ln_n, c));
}

CountExponentSample count_exponent(const Nat& x, const HcnTable& table) {
  if (x > table.limit()) {
    throw std::out_of_range("x beyond table limit " +
                            table.limit().get_str());
  }
  CountExponentSample sample;
  sample.x = x;
  const auto& entries = table.entries();
  sample.hcn_count = static_cast<std::size_t>(
      std::upper_bound(entries.begin(), entries.end(), x,
                       [](const Nat& lhs, const HcnEntry& rhs) {
                         return lhs < rhs.value;
                       }) -
      entries.begin());
  double ln_x = std::log(mpz_get_d(x.get_mpz_t()));
  if (ln_x > 1.0 && sample.hcn_count > 0) {
    sample.exponent =
        std::log(static_cast<double>(sample.hcn_count)) / std::log(ln_x);
  }
  return sample;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string();
}

std::string fmt_opt_json(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string("null");
}

struct Row {
  std::uint64_t ordinal = 0;
  Nat n;
  double n_log10 = 0;
  std::uint64_t d = 0;
  std::size_t k = 0;
  std::uint64_t p_k = 0;  // 0 when n == 1
  double gap_ratio = 0;
  std::optional<double> implied;
  std::optional<double> lemma1;
  std::optional<double> eq5;
  std::optional<std::uint64_t> feasible;
  std::vector<std::optional<std::uint64_t>> thresholds;
  std::vector<std::optional<double>> bounds;
};

}  // namespace

ReportSummary emit_report(const HcnTable& table, const ReportOptions& opts,
                          ReportFormat format, std::ostream& out,
                          PrimePool& pool) {
  if (table.entries().empty()) {
    throw std::invalid_argument("report needs a nonempty table");
  }
  const auto& entries = table.entries();

  std::vector<Row> rows;
  std::vector<double> implied_values;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    const HcnEntry& n = entries[i];
    const HcnEntry& next = entries[i + 1];
    Row row;
    row.ordinal = n.ordinal;
    row.n = n.value;
    row.n_log10 = ln_value(n.factorization, pool) / std::log(10.0);
    row.d = n.d;
    row.k = n.factorization.distinct_primes();
    row.p_k = n.factorization.is_one()
                  ? 0
                  : pool.prime(n.factorization.top_index());
    row.gap_ratio = ratio_as_double(next.value - n.value, n.value);
    row.implied = implied_c(n, next, pool);
    if (row.implied) implied_values.push_back(*row.implied);
    if (!n.factorization.is_one()) {
      row.lemma1 = lemma1_ratio(n, pool);
      if (n.factorization.top_exponent() == 1) {
        row.feasible = r_feasible(n, next, pool);
      }
    }
    row.eq5 = eq5_stat(n, pool);
    for (double c : opts.c_grid) {
      if (!n.factorization.is_one()) {
        row.thresholds.push_back(r_threshold(n, c, opts.theta, pool));
        row.bounds.push_back(r_bound(n, c, pool));
      } else {
        row.thresholds.push_back(std::nullopt);
        row.bounds.push_back(std::nullopt);
      }
    }
    rows.push_back(std::move(row));
  }

  ReportSummary summary;
  for (const HcnEntry& e : entries) {
    if (e.value <= opts.lemma1_floor || e.factorization.is_one()) continue;
    double r = lemma1_ratio(e, pool);
    if (!summary.lemma1_min || r < *summary.lemma1_min) summary.lemma1_min = r;
    if (!summary.lemma1_max || r > *summary.lemma1_max) summary.lemma1_max = r;
  }
  if (!implied_values.empty()) {
    std::vector<double> sorted = implied_values;
    std::sort(sorted.begin(), sorted.end());
    std::size_t mid = sorted.size() / 2;
    summary.implied_c_median =
        sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2;
    summary.implied_c_max = sorted.back();
  }
  for (unsigned exp = 1;; ++exp) {
    Nat x = pow10(exp);
    if (x > table.limit()) break;
    summary.decades.push_back(count_exponent(x, table));
  }

  auto c_tag = [](double c) { return fmt(c); };

  if (format == ReportFormat::csv) {
    out << "# log=natural theta=" << fmt(opts.theta) << " lemma1_floor="
        << opts.lemma1_floor.get_str() << '\n';
    out << "ordinal,n_log10,d,k,p_k,gap_ratio,implied_c,lemma1_ratio,"
           "eq5_stat,r_feasible";
    for (double c : opts.c_grid) {
      out << ",r_threshold_c" << c_tag(c) << ",r_bound_c" << c_tag(c);
    }
    out << '\n';
    for (const Row& row : rows) {
      out << row.ordinal << ',' << fmt(row.n_log10) << ',' << row.d << ','
          << row.k << ',';
      if (row.p_k) out << row.p_k;
      out << ',' << fmt(row.gap_ratio) << ',' << fmt_opt(row.implied) << ','
          << fmt_opt(row.lemma1) << ',' << fmt_opt(row.eq5) << ',';
      if (row.feasible) out << *row.feasible;
      for (std::size_t ci = 0; ci < opts.c_grid.size(); ++ci) {
        out << ',';
        if (row.thresholds[ci]) out << *row.thresholds[ci];
        out << ',';
        if (row.bounds[ci]) out << fmt(*row.bounds[ci]);
      }
      out << '\n';
    }
    out << "# summary lemma1_ratio_min=" << fmt_opt(summary.lemma1_min)
        << " lemma1_ratio_max=" << fmt_opt(summary.lemma1_max)
        << " implied_c_median=" << fmt_opt(summary.implied_c_median)
        << " implied_c_max=" << fmt_opt(summary.implied_c_max) << '\n';
    for (const CountExponentSample& s : summary.decades) {
      out << "# count_exponent x=" << s.x.get_str()
          << " count=" << s.hcn_count
          << " exponent=" << fmt_opt(s.exponent) << '\n';
    }
  } else {
    out << "{\n  \"log\": \"natural\",\n  \"theta\": " << fmt(opts.theta)
        << ",\n  \"lemma1_floor\": \"" << opts.lemma1_floor.get_str()
        << "\",\n  \"c_grid\": [";
    for (std::size_t i = 0; i < opts.c_grid.size(); ++i) {
      out << (i ? ", " : "") << fmt(opts.c_grid[i]);
    }
    out << "],\n  \"pairs\": [";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Row& row = rows[r];
      out << (r ? ",\n    " : "\n    ");
      out << "{\"ordinal\": " << row.ordinal << ", \"n\": \""
          << row.n.get_str() << "\", \"n_log10\": " << fmt(row.n_log10)
          << ", \"d\": " << row.d << ", \"k\": " << row.k << ", \"p_k\": ";
      if (row.p_k) {
        out << row.p_k;
      } else {
        out << "null";
      }
      out << ", \"gap_ratio\": " << fmt(row.gap_ratio)
          << ", \"implied_c\": " << fmt_opt_json(row.implied)
          << ", \"lemma1_ratio\": " << fmt_opt_json(row.lemma1)
          << ", \"eq5_stat\": " << fmt_opt_json(row.eq5)
          << ", \"r_feasible\": ";
      if (row.feasible) {
        out << *row.feasible;
      } else {
        out << "null";
      }
      for (std::size_t ci = 0; ci < opts.c_grid.size(); ++ci) {
        out << ", \"r_threshold_c" << c_tag(opts.c_grid[ci]) << "\": ";
        if (row.thresholds[ci]) {
          out << *row.thresholds[ci];
        } else {
          out << "null";
        }
        out << ", \"r_bound_c" << c_tag(opts.c_grid[ci]) << "\": ";
        if (row.bounds[ci]) {
          out << fmt(*row.bounds[ci]);
        } else {
          out << "null";
        }
      }
      out << '}';
    }
    out << "\n  ],\n  \"summary\": {\n    \"lemma1_ratio_min\": "
        << fmt_opt_json(summary.lemma1_min) << ",\n    \"lemma1_ratio_max\": "
        << fmt_opt_json(summary.lemma1_max)
        << ",\n    \"implied_c_median\": "
        << fmt_opt_json(summary.implied_c_median)
        << ",\n    \"implied_c_max\": " << fmt_opt_json(summary.implied_c_max)
        << ",\n    \"count_exponent\": [";
    for (std::size_t i = 0; i < summary.decades.size(); ++i) {
      const CountExponentSample& s = summary.decades[i];
      out << (i ? ",\n      " : "\n      ");
      out << "{\"x\": \"" << s.x.get_str() << "\", \"count\": " << s.hcn_count
          << ", \"exponent\": " << fmt_opt_json(s.exponent) << '}';
    }
    out << "\n    ]\n  }\n}\n";
  }
  return summary;
}

}  // namespace hcnlab
