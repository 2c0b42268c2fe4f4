#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hcnlab/records.hpp"

namespace hcnlab {

enum class GapShape { gap_free, single_top_gap, other };

// Which primes below the greatest prime factor are missing.
struct GapProfile {
  PrimeIndex top_index = 0;
  // Count of consecutive primes from 2 that divide the number.
  std::size_t present_prefix_length = 0;
  // Absent prime indices below top_index, increasing.
  std::vector<PrimeIndex> missed_indices;
  GapShape shape = GapShape::gap_free;
};

// Throws std::invalid_argument for the empty factorization (1 has no
// greatest prime factor).
GapProfile gap_profile(const Factorization& f);

struct ShiftFamily {
  HcnEntry source;
  std::vector<LcnEntry> members;
};

// All values source * p_{k+j} / p_k that stay strictly below `upper`,
// where p_k is the top prime of `source`. The top exponent must be 1
// (NonUnitTopError otherwise); each member keeps the source's divisor
// count. Works for any record value, not only strict records.
std::vector<LcnEntry> shift_members(const Factorization& source,
                                    const Nat& upper, PrimePool& pool);

// shift_members for a consecutive table pair; `next` must be the table
// successor of `source`.
ShiftFamily lemma2_shifts(const HcnEntry& source, const HcnEntry& next,
                          PrimePool& pool);

// Every factorization over the primes with index <= prime_cap whose divisor
// count is exactly d_target and whose value lies strictly in (lower, upper),
// sorted by value. Depth-first from the largest allowed prime downward with
// exact big-integer window pruning.
std::vector<LcnEntry> lcn_in_interval_values(const Nat& lower,
                                             const Nat& upper,
                                             std::uint64_t d_target,
                                             PrimeIndex prime_cap,
                                             PrimePool& pool);

// Interval search between consecutive table entries. prime_cap == 0 picks
// the default top_index(lower) + i_max + prime_buffer; explicit caps below
// top_index(lower) + 1 are rejected.
std::vector<LcnEntry> lcn_in_interval(const HcnEntry& lower,
                                      const HcnEntry& upper,
                                      PrimeIndex prime_cap, PrimePool& pool,
                                      const LcnOptions& opts = {});

// All LCNs <= limit that are not divisible by every prime below their
// greatest prime factor, ordered by value (A273379).
std::vector<LcnEntry> scan_gap_terms(const Nat& limit, const HcnTable& table,
                                     PrimePool& pool,
                                     const LcnOptions& opts = {});

struct MinMissedResult {
  // i -> smallest LCN <= limit missing exactly i consecutive primes
  // directly below its greatest prime factor, with every smaller prime
  // present and a second-greatest prime divisor existing (A273415).
  // Absent i are simply omitted.
  std::map<std::size_t, LcnEntry> minima;
  // Gap LCNs whose missing primes are not a single block below the top
  // prime. None are known; reported rather than silently dropped.
  std::vector<LcnEntry> other_shapes;
};

MinMissedResult min_missed(std::size_t i_max, const Nat& limit,
                           const HcnTable& table, PrimePool& pool,
                           const LcnOptions& opts = {});

struct ChainLink {
  Nat value;
  Factorization factorization;
  bool lcn = false;
  bool hcn = false;
};

// The descent chain of a single-top-gap value with unit top exponent:
// replace the top prime by each missed prime in decreasing order and test
// each result for record membership. Chain values must fit in table.limit.
std::vector<ChainLink> lemma3_chain(const Factorization& n,
                                    const HcnTable& table, PrimePool& pool);

}  // namespace hcnlab
