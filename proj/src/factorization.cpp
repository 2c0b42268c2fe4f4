#include "hcnlab/factorization.hpp"

#include <cmath>
#include <stdexcept>

namespace hcnlab {

Factorization::Factorization(std::vector<FactorEntry> entries)
    : entries_(std::move(entries)) {
  PrimeIndex prev = 0;
  for (const FactorEntry& fe : entries_) {
    if (fe.prime_index <= prev) {
      throw std::invalid_argument(
          "factorization prime indices must increase strictly");
    }
    if (fe.exponent == 0) {
      throw std::invalid_argument(
          "factorization exponents must be positive; omit absent primes");
    }
    prev = fe.prime_index;
  }
}

PrimeIndex Factorization::top_index() const {
  if (entries_.empty()) {
    throw std::invalid_argument("1 has no greatest prime factor");
  }
  return entries_.back().prime_index;
}

std::uint32_t Factorization::top_exponent() const {
  if (entries_.empty()) {
    throw std::invalid_argument("1 has no greatest prime factor");
  }
  return entries_.back().exponent;
}

Factorization make_factorization(std::initializer_list<FactorEntry> entries) {
  return Factorization(std::vector<FactorEntry>(entries));
}

Nat value_of(const Factorization& f, PrimePool& pool) {
  Nat result = 1;
  Nat pw;
  for (const FactorEntry& fe : f.entries()) {
    mpz_ui_pow_ui(pw.get_mpz_t(), pool.prime(fe.prime_index), fe.exponent);
    result *= pw;
  }
  return result;
}

std::uint64_t divisor_count(const Factorization& f) {
  std::uint64_t d = 1;
  for (const FactorEntry& fe : f.entries()) {
    std::uint64_t factor = std::uint64_t{fe.exponent} + 1;
    if (__builtin_mul_overflow(d, factor, &d)) {
      throw std::overflow_error(
          "divisor count exceeds 64 bits; limit too large for this counter");
    }
  }
  return d;
}

double ln_value(const Factorization& f, PrimePool& pool) {
  double sum = 0.0;
  for (const FactorEntry& fe : f.entries()) {
    sum += fe.exponent *
           std::log(static_cast<double>(pool.prime(fe.prime_index)));
  }
  return sum;
}

bool shift_value_less_than(const Factorization& n, PrimeIndex new_index,
                           PrimeIndex old_index, const Nat& bound,
                           PrimePool& pool) {
  bool present = false;
  for (const FactorEntry& fe : n.entries()) {
    if (fe.prime_index == old_index) {
      present = true;
      break;
    }
  }
  if (!present) {
    throw std::invalid_argument("shift source lacks prime index " +
                                std::to_string(old_index));
  }
  Nat lhs = value_of(n, pool);
  lhs *= pool.prime(new_index);
  Nat rhs = bound;
  rhs *= pool.prime(old_index);
  return lhs < rhs;
}

Factorization with_top_replaced(const Factorization& f, PrimeIndex new_index) {
  std::vector<FactorEntry> entries = f.entries();
  if (entries.empty()) {
    throw std::invalid_argument("1 has no top prime to replace");
  }
  PrimeIndex second = entries.size() >= 2
                          ? entries[entries.size() - 2].prime_index
                          : 0;
  if (new_index <= second) {
    throw std::invalid_argument("replacement prime collides with entry " +
                                std::to_string(second));
  }
  entries.back().prime_index = new_index;
  return Factorization(std::move(entries));
}

Factorization factor_word(std::uint64_t m, PrimePool& pool) {
  if (m == 0) throw std::invalid_argument("cannot factor 0");
  std::vector<FactorEntry> entries;
  for (PrimeIndex i = 1; m > 1; ++i) {
    std::uint64_t p = pool.prime(i);
    if (p * p > m) {
      // remaining cofactor is prime; find its index
      while (pool.prime(i) < m) ++i;
      if (pool.prime(i) != m) {
        throw std::logic_error("prime table misaligned in factor_word");
      }
      entries.push_back({i, 1});
      break;
    }
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) entries.push_back({i, e});
  }
  return Factorization(std::move(entries));
}

std::string format_factorization(const Factorization& f, PrimePool& pool) {
  if (f.is_one()) return "1";
  std::string out;
  for (const FactorEntry& fe : f.entries()) {
    if (!out.empty()) out += '*';
    out += std::to_string(pool.prime(fe.prime_index));
    if (fe.exponent > 1) {
      out += '^';
      out += std::to_string(fe.exponent);
    }
  }
  return out;
}

}  // namespace hcnlab
