#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hcnlab {

// 1-based position in the ordered primes: index 1 <-> 2, index 2 <-> 3, ...
using PrimeIndex = std::size_t;

// Table of the first N primes, produced by a plain sieve whose bound
// doubles until enough primes are found. ensure() is the only mutating
// call; a pre-sized pool can be shared read-only across threads via
// prime_at().
class PrimePool {
 public:
  explicit PrimePool(std::size_t initial_count = 64);

  // Grows the table to hold at least `count` primes.
  void ensure(std::size_t count);
  std::size_t size() const { return primes_.size(); }

  // prime(1) == 2. Grows the table on demand.
  std::uint64_t prime(PrimeIndex index);

  // Const access for shared use; index must be within size().
  std::uint64_t prime_at(PrimeIndex index) const;

  // The first max_index primes in increasing order.
  std::vector<std::uint64_t> primes_up_to_index(std::size_t max_index);

 private:
  std::vector<std::uint64_t> primes_;
};

}  // namespace hcnlab
