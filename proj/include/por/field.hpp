#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "por/errors.hpp"

namespace por {

bool is_prime_u64(std::uint64_t n);

// Prime field F_q, q <= 2^61 - 1. A PrimeField is a validated value type:
// only the explicit constructor runs the primality test, copies are free.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 61) - 1;

  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const noexcept { return q_; }

  std::uint64_t reduce(std::uint64_t v) const noexcept { return v % q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;  // extended Euclid; throws on 0
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) noexcept {
    return a.q_ != b.q_;
  }

 private:
  std::uint64_t q_;
};

enum class ArithKind { add, sub, mul, div };

// Canonical representative of a field element; 0 <= value < q always.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  PrimeField field_;
  std::uint64_t value_;
};

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithKind kind);

// Fixed-length vector over one prime field; all coordinates canonical.
class FieldVector {
 public:
  FieldVector(const PrimeField& field, std::vector<std::uint64_t> values);
  static FieldVector zeros(const PrimeField& field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint64_t operator[](std::size_t i) const { return values_[i]; }
  FieldElement at(std::size_t i) const { return FieldElement(field_, values_[i]); }
  std::span<const std::uint64_t> values() const noexcept { return values_; }

  void set(std::size_t i, std::uint64_t value);

  friend FieldVector operator+(const FieldVector& u, const FieldVector& v);
  friend FieldVector operator-(const FieldVector& u, const FieldVector& v);
  FieldVector scaled(std::uint64_t c) const;

  friend bool operator==(const FieldVector& u, const FieldVector& v);
  friend bool operator!=(const FieldVector& u, const FieldVector& v) { return !(u == v); }

 private:
  PrimeField field_;
  std::vector<std::uint64_t> values_;
};

FieldElement dot_product(const FieldVector& u, const FieldVector& v);
std::size_t hamming_weight(const FieldVector& v);
std::size_t hamming_dist(const FieldVector& u, const FieldVector& v);

}  // namespace por
