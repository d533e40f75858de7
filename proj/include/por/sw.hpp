#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "por/scheme.hpp"

namespace por {

// Key of the modified Shacham-Waters scheme: alpha and B, all uniform.
// Held by the verifier only; the prover sees M and S = B + alpha*M.
struct SwKey {
  std::uint64_t alpha;
  FieldVector beta;
};

struct SwTag {
  FieldVector sigma;
};

struct SwResponse {
  std::uint64_t mu;
  std::uint64_t tau;

  friend bool operator==(const SwResponse&, const SwResponse&) = default;
};

SwKey sw_keygen(const PrimeField& field, std::size_t n, std::uint64_t seed);

// S = B + alpha * M, coordinate-wise.
SwTag sw_tag(const SwKey& key, const FieldVector& M);

// Authentic response (mu, tau) = (V.M, V.S) for a sparse challenge V.
SwResponse sw_respond(const FieldVector& M, const FieldVector& S, const Challenge& V);

// Acceptability under a key: tau == alpha*mu + V.B.
bool sw_verify(const SwKey& key, const Challenge& V, const SwResponse& r);

// The q keys consistent with the prover's view (M, S), ordered by alpha.
std::vector<SwKey> sw_possible_keys(const FieldVector& M, const FieldVector& S);

bool sw_is_authentic(const FieldVector& M, const FieldVector& S, const Challenge& V,
                     const SwResponse& r);

// Number of keys in Possible(M, S) accepting r; q when authentic, at most 1
// otherwise.
std::uint64_t sw_acceptable_key_count(const FieldVector& M, const FieldVector& S,
                                      const Challenge& V, const SwResponse& r);

using SwProverFn = std::function<SwResponse(const Challenge&)>;

struct SwProvingAlgorithm {
  std::string kind;
  SwProverFn respond;
};

// Average success probability over Gamma x Possible(M, S), exact.
BigRat sw_succ_avg(const SwProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                   const FieldVector& M, const FieldVector& S,
                   std::uint64_t gamma_cap = kGammaCap);

using SwVerifyOracle = std::function<bool(const Challenge&, const SwResponse&)>;

struct SwAttackResult {
  SwKey key;
  std::size_t queries;
  FieldVector decoy;  // encoded message M' != M the prover answers for
  SwProvingAlgorithm prover;
};

// Key-recovery attack against a verification oracle. Scans the candidate
// keys with one distinguishing response each and infers the last candidate
// by elimination, so at most q-1 queries are spent. With verify_inference
// set, the inferred candidate is checked with one extra query and
// OracleInconsistent is raised when the oracle matches no candidate at all.
SwAttackResult sw_oracle_attack(const SchemeDescriptor& scheme, const FieldVector& M,
                                const FieldVector& S, const SwVerifyOracle& oracle,
                                bool verify_inference = false);

}  // namespace por
