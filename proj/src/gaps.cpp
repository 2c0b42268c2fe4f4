#include "hcnlab/gaps.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "parallel.hpp"

namespace hcnlab {

GapProfile gap_profile(const Factorization& f) {
  if (f.is_one()) {
    throw std::invalid_argument("1 has no greatest prime factor");
  }
  GapProfile out;
  out.top_index = f.top_index();

  std::size_t prefix = 0;
  for (const FactorEntry& fe : f.entries()) {
    if (fe.prime_index == prefix + 1) {
      ++prefix;
    } else {
      break;
    }
  }
  out.present_prefix_length = prefix;

  auto it = f.entries().begin();
  for (PrimeIndex i = 1; i < out.top_index; ++i) {
    while (it != f.entries().end() && it->prime_index < i) ++it;
    if (it == f.entries().end() || it->prime_index != i) {
      out.missed_indices.push_back(i);
    }
  }

  if (out.missed_indices.empty()) {
    out.shape = GapShape::gap_free;
  } else {
    const auto& missed = out.missed_indices;
    bool contiguous =
        missed.back() - missed.front() + 1 == missed.size();
    bool below_top = missed.back() == out.top_index - 1;
    bool prefix_filled = prefix == missed.front() - 1;
    out.shape = (contiguous && below_top && prefix_filled)
                    ? GapShape::single_top_gap
                    : GapShape::other;
  }
  return out;
}

std::vector<LcnEntry> shift_members(const Factorization& source,
                                    const Nat& upper, PrimePool& pool) {
  if (source.is_one()) {
    throw std::invalid_argument("1 has no top prime to shift");
  }
  if (source.top_exponent() != 1) {
    throw NonUnitTopError(value_of(source, pool));
  }
  PrimeIndex k = source.top_index();
  std::uint64_t d = divisor_count(source);
  std::vector<LcnEntry> members;
  for (PrimeIndex j = k + 1;
       shift_value_less_than(source, j, k, upper, pool); ++j) {
    LcnEntry e;
    e.factorization = with_top_replaced(source, j);
    e.value = value_of(e.factorization, pool);
    e.d = d;
    e.source = LcnSource::shift;
    members.push_back(std::move(e));
  }
  return members;
}

ShiftFamily lemma2_shifts(const HcnEntry& source, const HcnEntry& next,
                          PrimePool& pool) {
  if (next.ordinal != source.ordinal + 1 || next.value <= source.value) {
    throw std::invalid_argument("shift family needs consecutive records");
  }
  ShiftFamily family;
  family.source = source;
  family.members = shift_members(source.factorization, next.value, pool);
  return family;
}

namespace {

// Depth-first interval search. Assigns exponents from the largest allowed
// prime downward; every bound is an exact integer comparison. The memoized
// minimum m_min(j, D) — the smallest value with exactly D divisors over
// the first j primes — supplies the window prune. Values above kPruneCap
// are treated as infinite; the cap sits far above any supported limit.
class IntervalSearcher {
 public:
  explicit IntervalSearcher(PrimePool& pool)
      : pool_(&pool), prune_cap_(pow10(61)) {}

  std::vector<LcnEntry> run(const Nat& lower, const Nat& upper,
                            std::uint64_t d_target, PrimeIndex prime_cap) {
    lower_ = lower;
    upper_ = upper;
    out_.clear();
    stack_.clear();
    pool_->ensure(prime_cap + 1);
    if (upper_ > lower_ + 1 && d_target >= 1) {
      descend(prime_cap, Nat(1), d_target);
    }
    std::sort(out_.begin(), out_.end(),
              [](const LcnEntry& a, const LcnEntry& b) {
                return a.value < b.value;
              });
    return std::move(out_);
  }

 private:
  const Nat& m_min(PrimeIndex j, std::uint64_t divisors) {
    auto key = std::make_pair(j, divisors);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Nat best;
    if (divisors == 1) {
      best = 1;
    } else if (j == 0) {
      best = prune_cap_;
    } else {
      best = prune_cap_;
      std::uint64_t p = pool_->prime_at(j);
      Nat pe = 1;
      for (std::uint64_t e = 0; e + 1 <= divisors; ++e) {
        if (e > 0) {
          pe *= p;
          if (pe >= prune_cap_) break;
        }
        if (divisors % (e + 1) == 0) {
          const Nat& sub = m_min(j - 1, divisors / (e + 1));
          if (sub < prune_cap_) {
            Nat cand = pe * sub;
            if (cand < best) best = std::move(cand);
          }
        }
      }
    }
    return memo_.emplace(key, std::move(best)).first->second;
  }

  void descend(PrimeIndex j, const Nat& partial, std::uint64_t divisors) {
    if (divisors == 1) {
      if (partial > lower_) emit(partial);
      return;
    }
    if (j == 0) return;

    // cheapest completion still overshoots the window
    if (partial * m_min(j, divisors) >= upper_) return;

    // every completion falls short: all of the divisor budget on p_j is
    // the largest multiplier possible
    std::uint64_t p = pool_->prime_at(j);
    double max_bits = static_cast<double>(divisors - 1) *
                      std::log2(static_cast<double>(p));
    if (max_bits < static_cast<double>(
                       mpz_sizeinbase(lower_.get_mpz_t(), 2) + 2)) {
      Nat top_heavy;
      mpz_ui_pow_ui(top_heavy.get_mpz_t(), p,
                    static_cast<unsigned long>(divisors - 1));
      if (partial * top_heavy <= lower_) return;
    }

    Nat scaled = partial;
    for (std::uint64_t e = 0; scaled < upper_; ++e) {
      if (divisors % (e + 1) == 0) {
        if (e > 0) stack_.push_back({j, static_cast<std::uint32_t>(e)});
        descend(j - 1, scaled, divisors / (e + 1));
        if (e > 0) stack_.pop_back();
      }
      scaled *= p;
    }
  }

  void emit(const Nat& value) {
    std::vector<FactorEntry> entries(stack_.rbegin(), stack_.rend());
    LcnEntry e;
    e.factorization = Factorization(std::move(entries));
    e.value = value;
    e.d = divisor_count(e.factorization);
    e.source = LcnSource::interval_search;
    out_.push_back(std::move(e));
  }

  PrimePool* pool_;
  Nat prune_cap_;
  Nat lower_, upper_;
  std::vector<FactorEntry> stack_;  // chosen exponents, top prime first
  std::vector<LcnEntry> out_;
  std::map<std::pair<PrimeIndex, std::uint64_t>, Nat> memo_;
};

}  // namespace

std::vector<LcnEntry> lcn_in_interval_values(const Nat& lower,
                                             const Nat& upper,
                                             std::uint64_t d_target,
                                             PrimeIndex prime_cap,
                                             PrimePool& pool) {
  IntervalSearcher searcher(pool);
  return searcher.run(lower, upper, d_target, prime_cap);
}

std::vector<LcnEntry> lcn_in_interval(const HcnEntry& lower,
                                      const HcnEntry& upper,
                                      PrimeIndex prime_cap, PrimePool& pool,
                                      const LcnOptions& opts) {
  if (upper.ordinal != lower.ordinal + 1 || upper.value <= lower.value) {
    throw std::invalid_argument("interval search needs consecutive records");
  }
  PrimeIndex top =
      lower.factorization.is_one() ? 0 : lower.factorization.top_index();
  if (prime_cap == 0) {
    prime_cap = top + opts.i_max + opts.prime_buffer;
  } else if (prime_cap < top + 1) {
    throw std::invalid_argument(
        "prime cap " + std::to_string(prime_cap) +
        " cannot reach past the top prime index " + std::to_string(top));
  }
  return lcn_in_interval_values(lower.value, upper.value, lower.d, prime_cap,
                                pool);
}

std::vector<LcnEntry> scan_gap_terms(const Nat& limit, const HcnTable& table,
                                     PrimePool& pool, const LcnOptions& opts) {
  std::vector<LcnEntry> all = enumerate_lcn(limit, table, pool, opts);
  std::vector<LcnEntry> out;
  for (LcnEntry& e : all) {
    if (e.factorization.is_one()) continue;
    if (!gap_profile(e.factorization).missed_indices.empty()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

MinMissedResult min_missed(std::size_t i_max, const Nat& limit,
                           const HcnTable& table, PrimePool& pool,
                           const LcnOptions& opts) {
  if (i_max == 0) throw std::invalid_argument("i_max must be >= 1");
  if (table.limit() < limit) {
    throw std::invalid_argument("table covers only " +
                                table.limit().get_str());
  }

  const auto& entries = table.entries();
  std::vector<std::size_t> pair_index;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].value <= limit) pair_index.push_back(i);
  }
  std::vector<std::vector<LcnEntry>> found(pair_index.size());
  parallel_for(pair_index.size(), opts.threads, [&](std::size_t t) {
    std::size_t i = pair_index[t];
    const HcnEntry& lower = entries[i];
    Nat upper = limit + 1;
    if (i + 1 < entries.size() && entries[i + 1].value < upper) {
      upper = entries[i + 1].value;
    }
    PrimeIndex cap = (lower.factorization.is_one()
                          ? 0
                          : lower.factorization.top_index()) +
                     opts.i_max + opts.prime_buffer;
    found[t] = lcn_in_interval_values(lower.value, upper, lower.d, cap, pool);
  });

  MinMissedResult result;
  for (auto& interval : found) {
    for (LcnEntry& e : interval) {
      GapProfile profile = gap_profile(e.factorization);
      if (profile.missed_indices.empty()) continue;
      if (profile.shape == GapShape::single_top_gap &&
          e.factorization.distinct_primes() >= 2) {
        std::size_t i = profile.missed_indices.size();
        if (i > i_max) continue;
        auto it = result.minima.find(i);
        if (it == result.minima.end() || e.value < it->second.value) {
          result.minima.insert_or_assign(i, std::move(e));
        }
      } else if (profile.shape == GapShape::other) {
        result.other_shapes.push_back(std::move(e));
      }
    }
  }
  std::sort(result.other_shapes.begin(), result.other_shapes.end(),
            [](const LcnEntry& a, const LcnEntry& b) {
              return a.value < b.value;
            });
  return result;
}

std::vector<ChainLink> lemma3_chain(const Factorization& n,
                                    const HcnTable& table, PrimePool& pool) {
  GapProfile profile = gap_profile(n);
  if (profile.shape != GapShape::single_top_gap) {
    throw std::invalid_argument(
        "descent chain needs a single block of missed primes below the top "
        "prime");
  }
  if (n.top_exponent() != 1) {
    throw NonUnitTopError(value_of(n, pool));
  }
  std::vector<ChainLink> chain;
  for (auto it = profile.missed_indices.rbegin();
       it != profile.missed_indices.rend(); ++it) {
    ChainLink link;
    link.factorization = with_top_replaced(n, *it);
    link.value = value_of(link.factorization, pool);
    if (link.value > table.limit()) {
      throw std::out_of_range("chain value " + link.value.get_str() +
                              " beyond table limit");
    }
    link.lcn = is_lcn(link.factorization, table, pool);
    link.hcn = is_hcn(link.factorization, table, pool);
    chain.push_back(std::move(link));
  }
  return chain;
}

}  // namespace hcnlab
