#include "hcnlab/records.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "hcnlab/gaps.hpp"
#include "parallel.hpp"
#include "wide_uint.hpp"

namespace hcnlab {

namespace {

struct Candidate {
  WideUint value;
  std::uint64_t d = 0;
};

std::uint64_t checked_mul_d(std::uint64_t d, std::uint64_t factor) {
  std::uint64_t out;
  if (__builtin_mul_overflow(d, factor, &out)) {
    throw std::overflow_error(
        "divisor count exceeds 64 bits; limit too large for this counter");
  }
  return out;
}

// One enumeration partition: a fixed exponent of 2, then a depth-first
// walk over the remaining primes with nonincreasing exponents.
class PartitionWalker {
 public:
  PartitionWalker(const std::vector<std::uint64_t>& primes,
                  const WideUint& limit, std::size_t budget,
                  std::atomic<std::size_t>& produced, bool pareto)
      : primes_(primes),
        limit_(limit),
        budget_(budget),
        produced_(produced),
        pareto_(pareto) {}

  std::vector<Candidate> run(std::uint32_t exp_of_two) {
    out_.clear();
    staircase_.clear();
    WideUint value = WideUint::one();
    for (std::uint32_t i = 0; i < exp_of_two; ++i) {
      if (!value.mul_u64(2) || limit_ < value) return out_;  // above limit
    }
    emit(value, exp_of_two + 1);
    descend(1, exp_of_two, value, exp_of_two + 1);
    return std::move(out_);
  }

 private:
  void emit(const WideUint& value, std::uint64_t d) {
    if (pareto_) {
      // dominated iff some seen candidate has d' >= d and value' <= value
      auto it = staircase_.lower_bound(d);
      if (it != staircase_.end() && it->second <= value) return;
      it = staircase_.emplace_hint(it, d, value);
      while (it != staircase_.begin()) {
        auto prev = std::prev(it);
        if (prev->second < value) break;
        staircase_.erase(prev);
      }
    }
    if (produced_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      throw std::runtime_error(
          "candidate budget of " + std::to_string(budget_) +
          " entries exceeded; raise the budget or lower the limit");
    }
    out_.push_back({value, d});
  }

  void descend(std::size_t prime_pos, std::uint32_t max_exp,
               const WideUint& value, std::uint64_t d) {
    if (prime_pos >= primes_.size()) return;
    std::uint64_t p = primes_[prime_pos];
    WideUint v = value;
    for (std::uint32_t e = 1; e <= max_exp; ++e) {
      if (!v.mul_u64(p) || limit_ < v) return;
      std::uint64_t d2 = checked_mul_d(d, e + 1);
      emit(v, d2);
      descend(prime_pos + 1, e, v, d2);
    }
  }

  const std::vector<std::uint64_t>& primes_;
  WideUint limit_;
  std::size_t budget_;
  std::atomic<std::size_t>& produced_;
  bool pareto_;
  std::vector<Candidate> out_;
  std::map<std::uint64_t, WideUint> staircase_;  // d -> min value seen
};

// Smallest prime count whose primorial exceeds limit; no candidate can use
// more distinct primes than that.
std::size_t max_prime_count(const Nat& limit, PrimePool& pool) {
  std::size_t k = 0;
  Nat primorial = 1;
  while (primorial <= limit) {
    ++k;
    primorial *= pool.prime(k);
  }
  return k;
}

Factorization factor_constructed(const Nat& value, PrimePool& pool) {
  // Record values are built from consecutive primes with nonincreasing
  // exponents; recover the exponents by exact division and verify the
  // structure instead of assuming it.
  std::vector<FactorEntry> entries;
  Nat rest = value;
  std::uint32_t prev_exp = ~std::uint32_t{0};
  for (PrimeIndex i = 1; rest > 1; ++i) {
    std::uint64_t p = pool.prime(i);
    std::uint32_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e == 0 || e > prev_exp) {
      throw std::logic_error(
          "record value is not a consecutive nonincreasing prime power "
          "product: " +
          value.get_str());
    }
    entries.push_back({i, e});
    prev_exp = e;
  }
  return Factorization(std::move(entries));
}

}  // namespace

HcnTable::HcnTable(Nat limit, std::vector<HcnEntry> entries)
    : limit_(std::move(limit)), entries_(std::move(entries)) {}

const HcnEntry* HcnTable::floor_entry(const Nat& v) const {
  auto it = std::upper_bound(
      entries_.begin(), entries_.end(), v,
      [](const Nat& lhs, const HcnEntry& rhs) { return lhs < rhs.value; });
  if (it == entries_.begin()) return nullptr;
  return &*std::prev(it);
}

const HcnEntry* HcnTable::find_value(const Nat& v) const {
  const HcnEntry* e = floor_entry(v);
  return (e && e->value == v) ? e : nullptr;
}

HcnTable enumerate_hcn(const Nat& limit, PrimePool& pool,
                       const EnumerateOptions& opts) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  auto wide_limit = WideUint::from_mpz(limit);
  if (!wide_limit) {
    throw std::invalid_argument("limit exceeds the supported 256-bit range");
  }

  std::size_t k_max = max_prime_count(limit, pool);
  pool.ensure(k_max + 2);
  std::vector<std::uint64_t> primes = pool.primes_up_to_index(k_max + 1);

  // Partition the walk by the exponent of 2; every other exponent is
  // bounded by its predecessor, so partitions are independent.
  std::uint32_t max_exp_of_two =
      static_cast<std::uint32_t>(mpz_sizeinbase(limit.get_mpz_t(), 2)) - 1;

  std::atomic<std::size_t> produced{0};
  std::vector<std::vector<Candidate>> partitions(
      std::max<std::uint32_t>(max_exp_of_two, 1));
  if (max_exp_of_two >= 1) {
    parallel_for(max_exp_of_two, opts.threads, [&](std::size_t task) {
      PartitionWalker walker(primes, *wide_limit, opts.candidate_budget,
                             produced, opts.pareto_prune);
      partitions[task] = walker.run(static_cast<std::uint32_t>(task) + 1);
    });
  }

  std::size_t total = 1;  // the candidate 1
  for (const auto& part : partitions) total += part.size();
  std::vector<Candidate> candidates;
  candidates.reserve(total);
  candidates.push_back({WideUint::one(), 1});
  for (auto& part : partitions) {
    candidates.insert(candidates.end(), part.begin(), part.end());
    part.clear();
    part.shrink_to_fit();
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.value < b.value;
            });

  std::vector<HcnEntry> entries;
  std::uint64_t best = 0;
  for (const Candidate& c : candidates) {
    if (c.d > best) {
      best = c.d;
      HcnEntry e;
      e.ordinal = entries.size() + 1;
      e.value = c.value.to_mpz();
      e.d = c.d;
      entries.push_back(std::move(e));
    }
  }
  candidates.clear();
  candidates.shrink_to_fit();

  for (HcnEntry& e : entries) {
    e.factorization = factor_constructed(e.value, pool);
    if (divisor_count(e.factorization) != e.d) {
      throw std::logic_error("divisor count mismatch for record " +
                             e.value.get_str());
    }
  }
  return HcnTable(limit, std::move(entries));
}

std::vector<LcnEntry> enumerate_lcn(const Nat& limit, const HcnTable& table,
                                    PrimePool& pool, const LcnOptions& opts) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  if (table.limit() < limit) {
    throw std::invalid_argument("table covers only " +
                                table.limit().get_str());
  }

  Nat cap(std::to_string(opts.sieve_cap));
  if (!opts.force_interval_route && limit <= cap) {
    // Running non-strict maxima of the divisor sieve.
    std::uint64_t lim = mpz_get_ui(limit.get_mpz_t());
    std::vector<std::uint32_t> counts = divisor_sieve(lim, opts.sieve_cap);
    std::vector<LcnEntry> out;
    std::uint32_t best = 0;
    for (std::uint64_t m = 1; m <= lim; ++m) {
      if (counts[m] >= best) {
        best = counts[m];
        LcnEntry e;
        e.value = Nat(std::to_string(m));
        e.factorization = factor_word(m, pool);
        e.d = counts[m];
        e.source = LcnSource::sieve;
        out.push_back(std::move(e));
      }
    }
    return out;
  }

  // Interval route: the table entries themselves plus every equal-d value
  // between consecutive entries.
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
    PrimeIndex cap_index = (lower.factorization.is_one()
                                ? 0
                                : lower.factorization.top_index()) +
                           opts.i_max + opts.prime_buffer;
    found[t] =
        lcn_in_interval_values(lower.value, upper, lower.d, cap_index, pool);
  });

  std::vector<LcnEntry> out;
  for (std::size_t t = 0; t < pair_index.size(); ++t) {
    const HcnEntry& h = entries[pair_index[t]];
    LcnEntry e;
    e.value = h.value;
    e.factorization = h.factorization;
    e.d = h.d;
    e.source = LcnSource::table;
    out.push_back(std::move(e));
    for (LcnEntry& m : found[t]) out.push_back(std::move(m));
  }
  return out;
}

bool is_hcn(const Factorization& f, const HcnTable& table, PrimePool& pool) {
  Nat v = value_of(f, pool);
  if (v > table.limit()) {
    throw std::out_of_range("value " + v.get_str() +
                            " beyond table limit; extend the table");
  }
  return table.find_value(v) != nullptr;
}

bool is_lcn(const Factorization& f, const HcnTable& table, PrimePool& pool) {
  Nat v = value_of(f, pool);
  if (v > table.limit()) {
    throw std::out_of_range("value " + v.get_str() +
                            " beyond table limit; extend the table");
  }
  const HcnEntry* below = table.floor_entry(v - 1);
  if (below == nullptr) return true;  // nothing smaller to beat
  return divisor_count(f) >= below->d;
}

void save_table(const HcnTable& table, std::ostream& out) {
  out << "hcnlab-cache 1 " << table.limit().get_str() << '\n';
  for (const HcnEntry& e : table.entries()) {
    out << e.ordinal << ' ' << e.d;
    for (const FactorEntry& fe : e.factorization.entries()) {
      out << ' ' << fe.exponent;
    }
    out << '\n';
  }
}

void save_table(const HcnTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  save_table(table, out);
  if (!out.flush()) throw std::runtime_error("write failed on " + path);
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

std::uint64_t parse_u64_token(const std::string& token, std::size_t line_no) {
  if (token.empty() ||
      token.find_first_not_of("0123456789") != std::string::npos) {
    throw std::runtime_error("cache line " + std::to_string(line_no) +
                             ": malformed token '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw std::runtime_error("cache line " + std::to_string(line_no) +
                             ": token out of range '" + token + "'");
  }
}

}  // namespace

HcnTable load_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("cache: missing header");
  }
  auto header = split_ws(line);
  if (header.size() != 3 || header[0] != "hcnlab-cache") {
    throw std::runtime_error("cache: missing header");
  }
  if (header[1] != "1") {
    throw std::runtime_error("cache: unsupported version " + header[1]);
  }
  Nat limit;
  try {
    limit = parse_nat(header[2]);
  } catch (const std::exception&) {
    throw std::runtime_error("cache: bad limit in header");
  }

  PrimePool pool;
  std::vector<HcnEntry> entries;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 2) {
      throw std::runtime_error("cache line " + std::to_string(line_no) +
                               ": expected '<ordinal> <d> <exponents...>'");
    }
    HcnEntry e;
    e.ordinal = parse_u64_token(tokens[0], line_no);
    if (e.ordinal != entries.size() + 1) {
      throw std::runtime_error("cache line " + std::to_string(line_no) +
                               ": ordinal out of sequence");
    }
    e.d = parse_u64_token(tokens[1], line_no);
    std::vector<FactorEntry> fes;
    std::uint64_t prev_exp = ~std::uint64_t{0};
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      std::uint64_t exp = parse_u64_token(tokens[i], line_no);
      if (exp == 0 || exp > prev_exp) {
        throw std::runtime_error("cache line " + std::to_string(line_no) +
                                 ": exponents must be nonincreasing and "
                                 "positive");
      }
      fes.push_back({i - 1, static_cast<std::uint32_t>(exp)});
      prev_exp = exp;
    }
    e.factorization = Factorization(std::move(fes));
    if (divisor_count(e.factorization) != e.d) {
      throw std::runtime_error("cache line " + std::to_string(line_no) +
                               ": divisor count does not match exponents");
    }
    e.value = value_of(e.factorization, pool);
    if (e.value > limit) {
      throw std::runtime_error("cache line " + std::to_string(line_no) +
                               ": value exceeds cached limit");
    }
    if (!entries.empty() && (e.value <= entries.back().value ||
                             e.d <= entries.back().d)) {
      throw std::runtime_error("cache line " + std::to_string(line_no) +
                               ": records must increase strictly");
    }
    entries.push_back(std::move(e));
  }
  return HcnTable(std::move(limit), std::move(entries));
}

HcnTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return load_table(in);
}

}  // namespace hcnlab
