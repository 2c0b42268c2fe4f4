#pragma once

#include <cstdint>
#include <vector>

namespace hcnlab {

// Default cap on the brute-force sieve; a configuration value, not a
// constant of the algorithm.
inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

// counts[m] == d(m) for every 1 <= m <= limit; counts[0] == 0. Refuses
// limits above `cap`. Entries are 32-bit: d(m) stays far below 2^32 for any
// m a RAM-feasible cap could reach.
std::vector<std::uint32_t> divisor_sieve(std::uint64_t limit,
                                         std::uint64_t cap = kDefaultSieveCap);

}  // namespace hcnlab
