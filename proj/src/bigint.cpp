#include "por/bigint.hpp"

#include <cmath>
#include <limits>

namespace por {

BigInt binom(const BigInt& n, std::uint64_t k) {
  if (n < 0) fail(Errc::parameter_error, "binom: negative n");
  if (n < k) return 0;
  // C(n, k) = C(n, n-k); keep the loop short.
  std::uint64_t kk = k;
  if (BigInt(kk) * 2 > n) kk = to_u64(n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    result *= n - (kk - i);
    result /= i;
  }
  return result;
}

BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

double log2_big(const BigInt& v) {
  if (v <= 0) fail(Errc::parameter_error, "log2_big: non-positive argument");
  const std::size_t bits = boost::multiprecision::msb(v);
  if (bits < 900) return std::log2(v.convert_to<double>());
  // Scale down so the mantissa fits a double exactly enough.
  const std::size_t shift = bits - 64;
  const BigInt top = v >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double to_double(const BigRat& r) { return r.convert_to<double>(); }

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    fail(Errc::parameter_error, "value does not fit in 64 bits: " + v.str());
  return v.convert_to<std::uint64_t>();
}

BigRat parse_rational(const std::string& text) {
  if (text.empty()) fail(Errc::parameter_error, "empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) fail(Errc::parameter_error, "zero denominator: " + text);
    return BigRat(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return BigRat(BigInt(text));
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (frac.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::parameter_error, "bad decimal literal: " + text);
  const bool negative = !whole.empty() && whole[0] == '-';
  BigInt scaled = whole.empty() || whole == "-" ? BigInt(0) : BigInt(whole);
  if (negative) scaled = -scaled;
  BigInt den = 1;
  for (char c : frac) {
    scaled = scaled * 10 + (c - '0');
    den *= 10;
  }
  if (negative) scaled = -scaled;
  return BigRat(scaled, den);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace por
