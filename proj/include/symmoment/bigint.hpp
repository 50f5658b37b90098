#pragma once

#include <gmpxx.h>

#include <string>

namespace symmoment {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

/// C(n, r) with C(n, r) = 0 whenever r < 0 or n < r.
inline BigInt binomial(long n, long r) {
  if (r < 0 || n < r) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

inline BigInt ipow(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

}  // namespace symmoment
