#include "por/field.hpp"

#include <array>
#include <string>

namespace por {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit integers with the first twelve
  // prime bases (valid beyond 3.3 * 10^24).
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q < 2 || q > kMaxModulus)
    fail(Errc::parameter_error, "field modulus out of range: " + std::to_string(q));
  if (!is_prime_u64(q))
    fail(Errc::parameter_error, "field modulus is not prime: " + std::to_string(q));
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const noexcept {
  const std::uint64_t s = a + b;  // q < 2^61, no overflow
  return s >= q_ ? s - q_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const noexcept {
  return a >= b ? a - b : a + q_ - b;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  return mulmod_u64(a, b, q_);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  return powmod_u64(base, exp, q_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
  // Extended Euclid on (a, q); q prime so gcd is 1.
  std::int64_t t = 0, new_t = 1;
  std::uint64_t r = q_, new_r = a;
  while (new_r != 0) {
    const std::uint64_t quot = r / new_r;
    const std::int64_t tmp_t = t - static_cast<std::int64_t>(quot) * new_t;
    t = new_t;
    new_t = tmp_t;
    const std::uint64_t tmp_r = r - quot * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(q_)) : static_cast<std::uint64_t>(t);
}

std::uint64_t PrimeField::div(std::uint64_t a, std::uint64_t b) const {
  return mul(a, inv(b));
}

namespace {

void require_same_field(const PrimeField& a, const PrimeField& b) {
  if (a != b)
    fail(Errc::mismatched_fields, "operands over F_" + std::to_string(a.modulus()) +
                                      " and F_" + std::to_string(b.modulus()));
}

}  // namespace

FieldElement::FieldElement(const PrimeField& field, std::uint64_t value)
    : field_(field), value_(field.reduce(value)) {}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement(a.field_, a.field_.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement(a.field_, a.field_.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement(a.field_, a.field_.mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return FieldElement(a.field_, a.field_.div(a.value_, b.value_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
  }
  fail(Errc::parameter_error, "unknown arithmetic kind");
}

FieldVector::FieldVector(const PrimeField& field, std::vector<std::uint64_t> values)
    : field_(field), values_(std::move(values)) {
  for (auto& v : values_) v = field_.reduce(v);
}

FieldVector FieldVector::zeros(const PrimeField& field, std::size_t n) {
  return FieldVector(field, std::vector<std::uint64_t>(n, 0));
}

void FieldVector::set(std::size_t i, std::uint64_t value) {
  values_.at(i) = field_.reduce(value);
}

FieldVector operator+(const FieldVector& u, const FieldVector& v) {
  require_same_field(u.field_, v.field_);
  if (u.size() != v.size()) fail(Errc::length_mismatch, "vector addition");
  std::vector<std::uint64_t> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u.field_.add(u.values_[i], v.values_[i]);
  return FieldVector(u.field_, std::move(out));
}

FieldVector operator-(const FieldVector& u, const FieldVector& v) {
  require_same_field(u.field_, v.field_);
  if (u.size() != v.size()) fail(Errc::length_mismatch, "vector subtraction");
  std::vector<std::uint64_t> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u.field_.sub(u.values_[i], v.values_[i]);
  return FieldVector(u.field_, std::move(out));
}

FieldVector FieldVector::scaled(std::uint64_t c) const {
  std::vector<std::uint64_t> out(values_.size());
  const std::uint64_t cc = field_.reduce(c);
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = field_.mul(values_[i], cc);
  return FieldVector(field_, std::move(out));
}

bool operator==(const FieldVector& u, const FieldVector& v) {
  return u.field_ == v.field_ && u.values_ == v.values_;
}

FieldElement dot_product(const FieldVector& u, const FieldVector& v) {
  require_same_field(u.field(), v.field());
  if (u.size() != v.size())
    fail(Errc::length_mismatch, "dot product of lengths " + std::to_string(u.size()) + " and " +
                                    std::to_string(v.size()));
  std::uint64_t acc = 0;
  const PrimeField& f = u.field();
  for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], v[i]));
  return FieldElement(f, acc);
}

std::size_t hamming_weight(const FieldVector& v) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) ++w;
  return w;
}

std::size_t hamming_dist(const FieldVector& u, const FieldVector& v) {
  require_same_field(u.field(), v.field());
  if (u.size() != v.size()) fail(Errc::length_mismatch, "hamming distance");
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++d;
  return d;
}

}  // namespace por
