#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace purepoly {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using BigRational = mpq_class;

/// Parses "a" or "a/b" (b > 0) and returns the reduced value.
BigRational parse_rational(std::string_view text);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// Bits needed to store numerator and denominator.
std::size_t bit_size(const BigRational& q);

BigInt pow(const BigInt& base, unsigned long exponent);
BigRational pow(const BigRational& base, unsigned long exponent);

}  // namespace purepoly
