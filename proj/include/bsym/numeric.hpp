#pragma once

// Exact integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bsym {

using BigInt = mpz_class;
using Rational = mpq_class;

/// base^exp for a machine-size base.
BigInt ipow(std::uint64_t base, std::uint64_t exp);

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Parses "p/q" or "p"; throws ParameterError on malformed text.
Rational parse_rational(const std::string& text);

/// Decimal rendering with a fixed number of fractional digits (truncated).
std::string to_decimal(const Rational& x, unsigned digits);

bool is_prime_power(std::uint64_t q);

/// Fits-in-64-bits check for q^n.
bool pow_fits(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

}  // namespace bsym
