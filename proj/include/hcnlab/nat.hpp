#pragma once

#include <gmpxx.h>

#include <string>

namespace hcnlab {

// Exact nonnegative integer. Every value, bound and cross product in the
// library is computed in this type; nothing here rounds.
using Nat = mpz_class;

// Parses a size argument. Accepts plain decimal ("5040"), powers
// ("10^13"), scaled powers ("2x10^47", "2*10^47") and integer scientific
// notation ("2e47"). Throws std::invalid_argument on anything else.
Nat parse_nat(const std::string& text);

// 10^exp as an exact integer.
Nat pow10(unsigned exp);

}  // namespace hcnlab
