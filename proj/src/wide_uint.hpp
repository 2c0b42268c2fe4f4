#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace hcnlab {

// 256-bit unsigned integer, little-endian limbs. Covers every value up to
// well past 10^60; keeps enumeration candidates trivially copyable and
// allocation-free.
struct WideUint {
  std::array<std::uint64_t, 4> w{};

  static WideUint one() {
    WideUint v;
    v.w[0] = 1;
    return v;
  }

  // nullopt when n needs more than 256 bits
  static std::optional<WideUint> from_mpz(const mpz_class& n) {
    if (mpz_sgn(n.get_mpz_t()) < 0 ||
        mpz_sizeinbase(n.get_mpz_t(), 2) > 256) {
      return std::nullopt;
    }
    WideUint v;
    std::size_t words = 0;
    mpz_export(v.w.data(), &words, -1, sizeof(std::uint64_t), 0, 0,
               n.get_mpz_t());
    return v;
  }

  mpz_class to_mpz() const {
    mpz_class r;
    mpz_import(r.get_mpz_t(), w.size(), -1, sizeof(std::uint64_t), 0, 0,
               w.data());
    return r;
  }

  // *this *= m; false on overflow out of 256 bits.
  bool mul_u64(std::uint64_t m) {
    unsigned __int128 carry = 0;
    for (auto& limb : w) {
      unsigned __int128 prod = static_cast<unsigned __int128>(limb) * m + carry;
      limb = static_cast<std::uint64_t>(prod);
      carry = prod >> 64;
    }
    return carry == 0;
  }

  friend bool operator==(const WideUint&, const WideUint&) = default;

  friend bool operator<(const WideUint& a, const WideUint& b) {
    for (int i = 3; i >= 0; --i) {
      if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
    }
    return false;
  }
  friend bool operator<=(const WideUint& a, const WideUint& b) {
    return !(b < a);
  }
  friend bool operator>(const WideUint& a, const WideUint& b) { return b < a; }
};

}  // namespace hcnlab
