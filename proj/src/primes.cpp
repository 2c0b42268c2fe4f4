#include "hcnlab/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace hcnlab {

namespace {

// Simple Eratosthenes up to `bound`, appended to `out`.
void sieve_into(std::uint64_t bound, std::vector<std::uint64_t>& out) {
  out.clear();
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t m = p * p; m <= bound; m += p) composite[m] = true;
  }
}

}  // namespace

PrimePool::PrimePool(std::size_t initial_count) { ensure(initial_count); }

void PrimePool::ensure(std::size_t count) {
  if (primes_.size() >= count && !primes_.empty()) return;
  // p_n < n (ln n + ln ln n) for n >= 6; double until the sieve catches up.
  std::uint64_t bound = 64;
  if (count >= 6) {
    double n = static_cast<double>(count);
    bound = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  }
  while (true) {
    sieve_into(bound, primes_);
    if (primes_.size() >= count) return;
    bound *= 2;
  }
}

std::uint64_t PrimePool::prime(PrimeIndex index) {
  if (index == 0) throw std::invalid_argument("prime index is 1-based");
  if (index > primes_.size()) ensure(index + index / 2 + 16);
  return primes_[index - 1];
}

std::uint64_t PrimePool::prime_at(PrimeIndex index) const {
  if (index == 0 || index > primes_.size()) {
    throw std::out_of_range("prime index " + std::to_string(index) +
                            " outside pool of " +
                            std::to_string(primes_.size()));
  }
  return primes_[index - 1];
}

std::vector<std::uint64_t> PrimePool::primes_up_to_index(
    std::size_t max_index) {
  if (max_index == 0) throw std::invalid_argument("prime index is 1-based");
  ensure(max_index);
  return {primes_.begin(), primes_.begin() + static_cast<long>(max_index)};
}

}  // namespace hcnlab
