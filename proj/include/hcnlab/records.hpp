#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcnlab/divisor_sieve.hpp"
#include "hcnlab/factorization.hpp"
#include "hcnlab/nat.hpp"
#include "hcnlab/primes.hpp"

namespace hcnlab {

// A divisor-count record holder: d(m) < d(value) for all m < value.
struct HcnEntry {
  std::uint64_t ordinal = 0;  // 1-based position in its table
  Nat value;
  Factorization factorization;
  std::uint64_t d = 0;
};

// How an LCN was found.
enum class LcnSource { sieve, interval_search, shift, table };

// A non-strict record holder: d(m) <= d(value) for all m < value.
struct LcnEntry {
  Nat value;
  Factorization factorization;
  std::uint64_t d = 0;
  LcnSource source = LcnSource::sieve;
};

// Raised when an operation requires the greatest prime factor to appear to
// the first power and it does not. Only 4 and 36 trip this on record values.
struct NonUnitTopError : std::invalid_argument {
  Nat value;
  explicit NonUnitTopError(Nat v)
      : std::invalid_argument("top prime exponent exceeds 1 for value " +
                              v.get_str()),
        value(std::move(v)) {}
};

// The complete ordered list of divisor-count records up to `limit`. The
// oracle for every membership query in the system.
class HcnTable {
 public:
  HcnTable(Nat limit, std::vector<HcnEntry> entries);

  const Nat& limit() const { return limit_; }
  const std::vector<HcnEntry>& entries() const { return entries_; }

  // Largest entry with value <= v; nullptr when v < 1.
  const HcnEntry* floor_entry(const Nat& v) const;
  // Entry with value == v, if present.
  const HcnEntry* find_value(const Nat& v) const;

 private:
  Nat limit_;
  std::vector<HcnEntry> entries_;
};

struct EnumerateOptions {
  // Hard cap on generated candidates; exceeding it is an error, never a
  // silent truncation.
  std::size_t candidate_budget = std::size_t{1} << 28;
  unsigned threads = 0;  // 0 = hardware concurrency
  // Drop candidates dominated by an already-seen (smaller value, larger d)
  // pair. Off by default: completeness of the record scan must not depend
  // on it.
  bool pareto_prune = false;
};

// All divisor-count records up to limit. Generates every factorization with
// consecutive primes from 2 and nonincreasing exponents (any integer is
// dominated by such a candidate of equal d and no greater value), sorts by
// value and extracts the strict records.
HcnTable enumerate_hcn(const Nat& limit, PrimePool& pool,
                       const EnumerateOptions& opts = {});

struct LcnOptions {
  std::uint64_t sieve_cap = kDefaultSieveCap;
  std::size_t i_max = 10;  // headroom for interval-search prime caps
  std::size_t prime_buffer = 8;
  unsigned threads = 0;
  // Testing hook: use the interval route even inside the sieve range.
  bool force_interval_route = false;
};

// All non-strict records up to limit, ordered by value. Within the sieve
// cap this is a running-maximum scan of divisor_sieve; above it, the union
// of the table entries and interval searches between consecutive entries.
std::vector<LcnEntry> enumerate_lcn(const Nat& limit, const HcnTable& table,
                                    PrimePool& pool,
                                    const LcnOptions& opts = {});

// value_of(f) must be within table.limit; throws std::out_of_range above it.
bool is_hcn(const Factorization& f, const HcnTable& table, PrimePool& pool);
bool is_lcn(const Factorization& f, const HcnTable& table, PrimePool& pool);

// Line-oriented text cache. Header "hcnlab-cache <version> <limit>", then
// one line per entry: "<ordinal> <d> <e1> ... <ek>" with exponents on the
// consecutive primes 2, 3, 5, ... Values are recomputed on load.
void save_table(const HcnTable& table, std::ostream& out);
void save_table(const HcnTable& table, const std::string& path);
HcnTable load_table(std::istream& in);
HcnTable load_table(const std::string& path);

}  // namespace hcnlab
