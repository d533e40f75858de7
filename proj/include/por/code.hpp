#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "por/bigint.hpp"
#include "por/field.hpp"

namespace por {

// Default guard for exhaustive enumerations (number of codewords).
inline constexpr std::uint64_t kCodewordCap = std::uint64_t{1} << 24;

// Linear [n, k] code over F_q given by a rank-k generator matrix.
// Rank k makes the encoding map injective, which every extraction
// argument relies on.
class LinearCode {
 public:
  LinearCode(const PrimeField& field, std::size_t n, std::size_t k,
             std::vector<std::uint64_t> generator_row_major,
             std::optional<std::uint64_t> declared_distance = std::nullopt);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return k_; }
  std::optional<std::uint64_t> declared_distance() const noexcept { return declared_distance_; }

  std::uint64_t generator_at(std::size_t row, std::size_t col) const {
    return generator_[row * n_ + col];
  }
  std::span<const std::uint64_t> generator() const noexcept { return generator_; }

  // Number of codewords q^k, exact.
  BigInt codeword_count() const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  PrimeField field_;
  std::size_t n_, k_;
  std::vector<std::uint64_t> generator_;
  std::optional<std::uint64_t> declared_distance_;
  // Precomputed decoding data: k pivot columns of the generator and the
  // inverse of the corresponding k x k submatrix.
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::uint64_t> pivot_inverse_;  // k x k row-major

  friend FieldVector decode_unencode(const LinearCode&, const FieldVector&);
};

// Evaluation Reed-Solomon code with evaluation points 1..n; MDS, so the
// declared distance is n - k + 1.
LinearCode rs_code(const PrimeField& field, std::size_t n, std::size_t k);

struct EncodedMessage {
  FieldVector blocks;
};

EncodedMessage encode(const LinearCode& code, const FieldVector& message);

// Left inverse of encode; throws NotACodeword when the word fails the
// membership check.
FieldVector decode_unencode(const LinearCode& code, const FieldVector& word);
inline FieldVector decode_unencode(const LinearCode& code, const EncodedMessage& M) {
  return decode_unencode(code, M.blocks);
}

bool is_codeword(const LinearCode& code, const FieldVector& word);

// Validating constructor for externally supplied words.
EncodedMessage as_codeword(const LinearCode& code, FieldVector word);

// Messages of the code in lexicographic order (first coordinate most
// significant); used as the canonical codebook order everywhere.
FieldVector message_at(const LinearCode& code, const BigInt& ordinal);
BigInt message_ordinal(const LinearCode& code, const FieldVector& message);

// Minimum weight over nonzero codewords, by exhaustive enumeration.
std::uint64_t code_distance(const LinearCode& code, std::uint64_t cap = kCodewordCap);

struct NearestResult {
  std::size_t index;
  std::uint64_t distance;
  bool tie;
};

// Exhaustive nearest-neighbour search. Coordinates are groups of `arity`
// consecutive values; two coordinates differ if any value in the group
// differs. Ties resolve to the lowest index and are flagged.
NearestResult nearest_codeword(std::span<const std::uint64_t> word,
                               const std::vector<std::vector<std::uint64_t>>& codebook,
                               std::size_t arity = 1);

NearestResult nearest_codeword(const FieldVector& word,
                               const std::vector<FieldVector>& codebook);

}  // namespace por
