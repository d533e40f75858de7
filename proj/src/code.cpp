#include "por/code.hpp"

#include <algorithm>
#include <string>

namespace por {

namespace {

// Gaussian elimination over F_q on a copy of the k x n matrix. Returns the
// pivot columns; fills `inverse` (k x k) with the inverse of the pivot
// submatrix when requested. Throws when the rank is below k.
std::vector<std::size_t> pivot_decomposition(const PrimeField& f, std::size_t k, std::size_t n,
                                             std::span<const std::uint64_t> gen,
                                             std::vector<std::uint64_t>* inverse) {
  std::vector<std::uint64_t> m(gen.begin(), gen.end());
  // Augment with the identity to track row operations.
  std::vector<std::uint64_t> aug(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) aug[i * k + i] = 1;

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < k; ++col) {
    std::size_t sel = row;
    while (sel < k && m[sel * n + col] == 0) ++sel;
    if (sel == k) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[sel * n + j], m[row * n + j]);
      for (std::size_t j = 0; j < k; ++j) std::swap(aug[sel * k + j], aug[row * k + j]);
    }
    const std::uint64_t inv_pivot = f.inv(m[row * n + col]);
    for (std::size_t j = 0; j < n; ++j) m[row * n + j] = f.mul(m[row * n + j], inv_pivot);
    for (std::size_t j = 0; j < k; ++j) aug[row * k + j] = f.mul(aug[row * k + j], inv_pivot);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || m[r * n + col] == 0) continue;
      const std::uint64_t factor = m[r * n + col];
      for (std::size_t j = 0; j < n; ++j)
        m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[row * n + j]));
      for (std::size_t j = 0; j < k; ++j)
        aug[r * k + j] = f.sub(aug[r * k + j], f.mul(factor, aug[row * k + j]));
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivots.size() != k)
    fail(Errc::parameter_error,
         "generator matrix has rank " + std::to_string(pivots.size()) + " < k = " + std::to_string(k));
  if (inverse) {
    // After full reduction the pivot submatrix became the identity, so `aug`
    // holds the inverse of the original pivot submatrix (rows permuted into
    // reduced order, which is exactly the order pivots were found in).
    *inverse = std::move(aug);
  }
  return pivots;
}

}  // namespace

LinearCode::LinearCode(const PrimeField& field, std::size_t n, std::size_t k,
                       std::vector<std::uint64_t> generator_row_major,
                       std::optional<std::uint64_t> declared_distance)
    : field_(field), n_(n), k_(k), generator_(std::move(generator_row_major)),
      declared_distance_(declared_distance) {
  if (k == 0 || n == 0 || k > n)
    fail(Errc::parameter_error,
         "bad code parameters n=" + std::to_string(n) + " k=" + std::to_string(k));
  if (generator_.size() != k * n)
    fail(Errc::parameter_error, "generator matrix size mismatch");
  for (auto& v : generator_) v = field_.reduce(v);
  pivot_cols_ = pivot_decomposition(field_, k_, n_, generator_, &pivot_inverse_);
}

BigInt LinearCode::codeword_count() const { return ipow(BigInt(field_.modulus()), k_); }

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.k_ == b.k_ && a.generator_ == b.generator_;
}

LinearCode rs_code(const PrimeField& field, std::size_t n, std::size_t k) {
  if (n > field.modulus())
    fail(Errc::parameter_error, "Reed-Solomon needs n <= q, got n=" + std::to_string(n) +
                                    " q=" + std::to_string(field.modulus()));
  if (k == 0 || k > n)
    fail(Errc::parameter_error, "Reed-Solomon needs 1 <= k <= n");
  // Codeword coordinate j is p(j+1) for p(x) = sum m_i x^i, deg < k.
  std::vector<std::uint64_t> gen(k * n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t x = field.reduce(j + 1);
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < k; ++i) {
      gen[i * n + j] = power;
      power = field.mul(power, x);
    }
  }
  return LinearCode(field, n, k, std::move(gen), n - k + 1);
}

EncodedMessage encode(const LinearCode& code, const FieldVector& message) {
  if (message.field() != code.field()) fail(Errc::mismatched_fields, "encode");
  if (message.size() != code.dimension())
    fail(Errc::length_mismatch, "message length " + std::to_string(message.size()) +
                                    ", code dimension " + std::to_string(code.dimension()));
  const PrimeField& f = code.field();
  std::vector<std::uint64_t> out(code.length(), 0);
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    const std::uint64_t mi = message[i];
    if (mi == 0) continue;
    for (std::size_t j = 0; j < code.length(); ++j)
      out[j] = f.add(out[j], f.mul(mi, code.generator_at(i, j)));
  }
  return EncodedMessage{FieldVector(f, std::move(out))};
}

FieldVector decode_unencode(const LinearCode& code, const FieldVector& word) {
  if (word.field() != code.field()) fail(Errc::mismatched_fields, "decode");
  if (word.size() != code.length()) fail(Errc::length_mismatch, "decode");
  const PrimeField& f = code.field();
  const std::size_t k = code.dimension();
  // m = word[pivot cols] * inverse(pivot submatrix), as row vectors.
  std::vector<std::uint64_t> m(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < k; ++i)
      acc = f.add(acc, f.mul(word[code.pivot_cols_[i]], code.pivot_inverse_[i * k + j]));
    m[j] = acc;
  }
  FieldVector message(f, std::move(m));
  if (encode(code, message).blocks != word)
    fail(Errc::not_a_codeword, "word is not in the code");
  return message;
}

bool is_codeword(const LinearCode& code, const FieldVector& word) {
  if (word.field() != code.field() || word.size() != code.length()) return false;
  try {
    decode_unencode(code, word);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::not_a_codeword) return false;
    throw;
  }
}

EncodedMessage as_codeword(const LinearCode& code, FieldVector word) {
  decode_unencode(code, word);  // throws NotACodeword on failure
  return EncodedMessage{std::move(word)};
}

FieldVector message_at(const LinearCode& code, const BigInt& ordinal) {
  const std::uint64_t q = code.field().modulus();
  const std::size_t k = code.dimension();
  if (ordinal < 0 || ordinal >= code.codeword_count())
    fail(Errc::ordinal_out_of_range, "message ordinal " + ordinal.str());
  std::vector<std::uint64_t> digits(k, 0);
  BigInt rest = ordinal;
  for (std::size_t i = k; i-- > 0;) {
    digits[i] = to_u64(rest % q);
    rest /= q;
  }
  return FieldVector(code.field(), std::move(digits));
}

BigInt message_ordinal(const LinearCode& code, const FieldVector& message) {
  if (message.size() != code.dimension()) fail(Errc::length_mismatch, "message ordinal");
  const std::uint64_t q = code.field().modulus();
  BigInt ordinal = 0;
  for (std::size_t i = 0; i < message.size(); ++i) ordinal = ordinal * q + message[i];
  return ordinal;
}

std::uint64_t code_distance(const LinearCode& code, std::uint64_t cap) {
  const BigInt total = code.codeword_count();
  if (total > cap)
    fail(Errc::too_large_to_enumerate,
         "code has " + total.str() + " codewords, cap " + std::to_string(cap));
  const PrimeField& f = code.field();
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  // Odometer over messages; codeword updated incrementally per digit bump.
  std::vector<std::uint64_t> msg(k, 0);
  std::vector<std::uint64_t> word(n, 0);
  std::uint64_t best = UINT64_MAX;
  const std::uint64_t count = to_u64(total);
  for (std::uint64_t it = 1; it < count; ++it) {
    // Increment base-q odometer (last digit fastest) and add the matching
    // generator rows into the running codeword.
    std::size_t pos = k;
    while (pos-- > 0) {
      msg[pos] += 1;
      for (std::size_t j = 0; j < n; ++j)
        word[j] = f.add(word[j], code.generator_at(pos, j));
      if (msg[pos] < f.modulus()) break;
      msg[pos] = 0;  // rolled over; the q additions of row `pos` cancel out
    }
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (word[j] != 0) ++w;
    best = std::min(best, w);
    if (best == 1) break;  // cannot improve
  }
  return best;
}

NearestResult nearest_codeword(std::span<const std::uint64_t> word,
                               const std::vector<std::vector<std::uint64_t>>& codebook,
                               std::size_t arity) {
  if (codebook.empty()) fail(Errc::empty_codebook, "nearest_codeword");
  if (arity == 0) fail(Errc::parameter_error, "nearest_codeword: zero arity");
  if (word.size() % arity != 0) fail(Errc::length_mismatch, "word length vs arity");
  const std::size_t coords = word.size() / arity;
  std::size_t best_index = 0;
  std::uint64_t best_distance = coords + 1;  // larger than any true distance
  bool tie = false;
  for (std::size_t idx = 0; idx < codebook.size(); ++idx) {
    const auto& cand = codebook[idx];
    if (cand.size() != word.size()) fail(Errc::length_mismatch, "codebook entry length");
    std::uint64_t dist = 0;
    for (std::size_t c = 0; c < coords && dist <= best_distance; ++c) {
      const std::size_t base = c * arity;
      for (std::size_t a = 0; a < arity; ++a) {
        if (cand[base + a] != word[base + a]) {
          ++dist;
          break;
        }
      }
    }
    if (dist < best_distance) {
      best_distance = dist;
      best_index = idx;
      tie = false;
    } else if (dist == best_distance) {
      tie = true;
    }
  }
  return NearestResult{best_index, best_distance, tie};
}

NearestResult nearest_codeword(const FieldVector& word, const std::vector<FieldVector>& codebook) {
  if (codebook.empty()) fail(Errc::empty_codebook, "nearest_codeword");
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(codebook.size());
  for (const auto& c : codebook) {
    if (c.field() != word.field()) fail(Errc::mismatched_fields, "nearest_codeword");
    rows.emplace_back(c.values().begin(), c.values().end());
  }
  return nearest_codeword(std::span<const std::uint64_t>(word.values()), rows, 1);
}

}  // namespace por
