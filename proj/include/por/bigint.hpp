#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "por/errors.hpp"

namespace por {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the convention C(n, k) = 0 for n < k.
BigInt binom(const BigInt& n, std::uint64_t k);

BigInt ipow(BigInt base, std::uint64_t exp);

// log2 of a positive integer, usable far beyond double range.
double log2_big(const BigInt& v);

double to_double(const BigRat& r);

// Checked narrowing; throws parameter_error when v does not fit.
std::uint64_t to_u64(const BigInt& v);

// Parses "0.6", "3/5", or "1" into an exact rational.
BigRat parse_rational(const std::string& text);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& r);

}  // namespace por
