#pragma once

#include <gmpxx.h>

#include <string>

namespace pfsign {

using BigInt = mpz_class;
using BigRational = mpq_class;

// acc += a * b without a temporary.
inline void add_product(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline void sub_product(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/// Natural logarithm of |x|. Stays finite for values far beyond double range.
double log_abs(const BigInt& x);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace pfsign
