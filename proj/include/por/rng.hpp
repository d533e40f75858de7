#pragma once

#include <cstdint>
#include <random>

#include "por/bigint.hpp"

namespace por {

// Seeded deterministic generator. std::mt19937_64 output is fully specified
// by the standard, and the rejection sampling below avoids the
// implementation-defined std::uniform_int_distribution, so identical seeds
// give identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased uniform draw from [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) fail(Errc::parameter_error, "Rng::below: zero bound");
    if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
      const std::uint64_t v = engine_();
      if (v < limit) return v % bound;
    }
  }

  BigInt below_big(const BigInt& bound) {
    if (bound <= 0) fail(Errc::parameter_error, "Rng::below_big: non-positive bound");
    if (bound <= UINT64_MAX) return BigInt(below(bound.convert_to<std::uint64_t>()));
    const std::size_t bits = boost::multiprecision::msb(bound) + 1;
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits == 64 ? UINT64_MAX : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) {
      BigInt v = 0;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = engine_();
        if (w == 0) word &= top_mask;
        v = (v << 64) | word;
      }
      if (v < bound) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace por
