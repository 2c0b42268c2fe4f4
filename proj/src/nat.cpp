#include "hcnlab/nat.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>

namespace hcnlab {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Nat from_digits(const std::string& s, const std::string& original) {
  if (!all_digits(s)) {
    throw std::invalid_argument("not a nonnegative integer: '" + original +
                                "'");
  }
  return Nat(s, 10);
}

}  // namespace

Nat pow10(unsigned exp) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exp);
  return r;
}

Nat parse_nat(const std::string& text) {
  // strip surrounding whitespace
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos) {
    throw std::invalid_argument("empty integer argument");
  }
  std::string s = text.substr(b, e - b + 1);

  // M x B^E | M * B^E | B^E | M e E | digits
  std::string mantissa = "1";
  std::size_t cut = s.find_first_of("x*");
  if (cut != std::string::npos) {
    mantissa = s.substr(0, cut);
    s = s.substr(cut + 1);
  }

  if (std::size_t caret = s.find('^'); caret != std::string::npos) {
    Nat base = from_digits(s.substr(0, caret), text);
    std::string exps = s.substr(caret + 1);
    if (!all_digits(exps)) {
      throw std::invalid_argument("bad exponent in '" + text + "'");
    }
    unsigned long exp = std::stoul(exps);
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return from_digits(mantissa, text) * r;
  }

  if (std::size_t ee = s.find_first_of("eE"); ee != std::string::npos) {
    if (cut != std::string::npos) {
      throw std::invalid_argument("malformed integer '" + text + "'");
    }
    Nat m = from_digits(s.substr(0, ee), text);
    std::string exps = s.substr(ee + 1);
    if (!all_digits(exps)) {
      throw std::invalid_argument("bad exponent in '" + text + "'");
    }
    return m * pow10(static_cast<unsigned>(std::stoul(exps)));
  }

  return from_digits(mantissa, text) * from_digits(s, text);
}

}  // namespace hcnlab
