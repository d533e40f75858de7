#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "por/bigint.hpp"
#include "por/code.hpp"

namespace por {

inline constexpr std::uint64_t kGammaCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMessageCap = std::uint64_t{1} << 20;

enum class SchemeKind : std::uint8_t {
  basic = 1,
  multiblock = 2,
  lc_v1 = 3,
  lc_v2 = 4,
  shacham_waters = 5,
};

const char* scheme_kind_name(SchemeKind kind) noexcept;
std::optional<SchemeKind> scheme_kind_from_name(const std::string& name) noexcept;

// Which scheme is being run, over which code, with which challenge weight.
// The Shacham-Waters scheme uses the linear-combination challenge space:
// weight-ell vectors when ell is set, all nonzero vectors otherwise.
struct SchemeDescriptor {
  SchemeKind kind;
  LinearCode code;
  std::optional<std::uint32_t> ell;

  SchemeDescriptor(SchemeKind kind, LinearCode code,
                   std::optional<std::uint32_t> ell = std::nullopt);

  const PrimeField& field() const noexcept { return code.field(); }
  std::size_t n() const noexcept { return code.length(); }
  std::size_t k() const noexcept { return code.dimension(); }

  // Values per response-vector coordinate: ell for multiblock, 1 otherwise
  // (Shacham-Waters extraction works on the mu projection alone).
  std::size_t response_arity() const noexcept;

  // Field elements in a wire response: 2 for Shacham-Waters (mu, tau).
  std::size_t wire_response_len() const noexcept;
};

// A challenge, scheme-tagged by context:
//   basic       one 1-based index in `indices`
//   multiblock  ell strictly increasing 1-based indices
//   lc / sw     sparse vector: ascending 1-based indices with nonzero coeffs
struct Challenge {
  std::vector<std::uint32_t> indices;
  std::vector<std::uint64_t> coeffs;

  friend bool operator==(const Challenge&, const Challenge&) = default;
};

struct Response {
  std::vector<std::uint64_t> values;

  friend bool operator==(const Response&, const Response&) = default;
};

// Throws InvalidChallenge unless c satisfies the scheme's membership
// predicate.
void validate_challenge(const SchemeDescriptor& scheme, const Challenge& c);

// |Gamma|, exact.
BigInt challenge_count(const SchemeDescriptor& scheme);

// Canonical enumeration order of Gamma:
//   basic        ascending index
//   multiblock   colexicographic ell-subsets
//   lc_v1/lc_v2  lexicographic by coordinate values (first coordinate most
//                significant), restricted to the scheme's membership set
// challenge_at and ordinal_of are mutually inverse bijections with this
// order; enumerate_challenges yields it densely.
Challenge challenge_at(const SchemeDescriptor& scheme, const BigInt& ordinal);
BigInt ordinal_of(const SchemeDescriptor& scheme, const Challenge& c);
std::vector<Challenge> enumerate_challenges(const SchemeDescriptor& scheme,
                                            std::uint64_t cap = kGammaCap);

// The authentic response rho(M, c). For Shacham-Waters this is the mu
// component; the (mu, tau) pair needs the tag and lives in sw.hpp.
Response respond(const SchemeDescriptor& scheme, const EncodedMessage& M, const Challenge& c);

// Keyless verification: stored and received responses match exactly.
bool verify_response(const SchemeDescriptor& scheme, const Response& stored,
                     const Response& received);

// Flattened response vector r^M = (rho(M,c) : c in Gamma), gamma * arity
// values in enumeration order.
std::vector<std::uint64_t> response_vector(const SchemeDescriptor& scheme,
                                           const EncodedMessage& M,
                                           std::uint64_t cap = kGammaCap);

// The response code R* = { r^M : M in M* }, indexed in message-space
// lexicographic order, with its minimum distance computed by exhaustive
// pairwise search.
struct ResponseCode {
  std::size_t arity = 1;
  std::uint64_t gamma = 0;
  std::vector<std::vector<std::uint64_t>> codebook;
  std::uint64_t dstar = 0;
};

ResponseCode build_response_code(const SchemeDescriptor& scheme,
                                 std::uint64_t gamma_cap = kGammaCap,
                                 std::uint64_t message_cap = kMessageCap);

}  // namespace por
