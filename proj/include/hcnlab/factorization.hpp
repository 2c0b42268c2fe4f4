#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hcnlab/nat.hpp"
#include "hcnlab/primes.hpp"

namespace hcnlab {

struct FactorEntry {
  PrimeIndex prime_index = 0;  // 1-based
  std::uint32_t exponent = 0;  // >= 1 in a valid factorization

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

// Exponent vector over the ordered primes. Absent primes are omitted, so a
// gap below the top prime is a structural property, not a zero entry. The
// empty list represents 1.
class Factorization {
 public:
  Factorization() = default;

  // Validates: strictly increasing prime_index, all exponents >= 1.
  explicit Factorization(std::vector<FactorEntry> entries);

  const std::vector<FactorEntry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::size_t distinct_primes() const { return entries_.size(); }

  // Index / exponent of the greatest prime factor; throw for 1.
  PrimeIndex top_index() const;
  std::uint32_t top_exponent() const;

  bool operator==(const Factorization&) const = default;

 private:
  std::vector<FactorEntry> entries_;
};

Factorization make_factorization(std::initializer_list<FactorEntry> entries);

// Exact product of prime(i)^e over the entries. Empty -> 1.
Nat value_of(const Factorization& f, PrimePool& pool);

// Product of (exponent + 1), checked. Throws std::overflow_error when the
// product leaves 64 bits (the counter is deliberately fixed-width).
std::uint64_t divisor_count(const Factorization& f);

// ln(value) as sum of exponent * ln(prime). Keeps full double accuracy for
// values far beyond the range of a double.
double ln_value(const Factorization& f, PrimePool& pool);

// Exact truth of  value(n) * prime(new_index) < bound * prime(old_index),
// i.e. n * p_new / p_old < bound decided by cross multiplication; the
// quotient is never formed. old_index must appear in n.
bool shift_value_less_than(const Factorization& n, PrimeIndex new_index,
                           PrimeIndex old_index, const Nat& bound,
                           PrimePool& pool);

// Same factorization with the top prime moved to new_index, exponent kept.
// new_index must stay above the second-highest present index.
Factorization with_top_replaced(const Factorization& f, PrimeIndex new_index);

// Exact factorization of a machine-word value by trial division against the
// prime table. Only sieve-range integers ever take this path.
Factorization factor_word(std::uint64_t m, PrimePool& pool);

// "2^3*3^2*5*13"; "1" for the empty factorization.
std::string format_factorization(const Factorization& f, PrimePool& pool);

}  // namespace hcnlab
