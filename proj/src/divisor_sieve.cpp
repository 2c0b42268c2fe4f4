#include "hcnlab/divisor_sieve.hpp"

#include <stdexcept>
#include <string>

namespace hcnlab {

std::vector<std::uint32_t> divisor_sieve(std::uint64_t limit,
                                         std::uint64_t cap) {
  if (limit == 0) throw std::invalid_argument("sieve limit must be >= 1");
  if (limit > cap) {
    throw std::invalid_argument(
        "sieve limit " + std::to_string(limit) + " exceeds cap " +
        std::to_string(cap) + "; raise the cap or use the search route");
  }
  std::vector<std::uint32_t> counts(limit + 1, 0);
  for (std::uint64_t i = 1; i <= limit; ++i) {
    for (std::uint64_t m = i; m <= limit; m += i) ++counts[m];
  }
  return counts;
}

}  // namespace hcnlab
