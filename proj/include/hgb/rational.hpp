#pragma once

#include <gmpxx.h>

#include <string>

namespace hgb {

// GMP keeps mpq_class canonical: lowest terms, positive denominator, 0 == 0/1.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

} // namespace hgb
