#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>

#include "por/scheme.hpp"
#include "por/sw.hpp"

namespace por {

// Deterministic total mapping Challenge -> Response. The extractor treats it
// as a black box: it only calls respond, never inspects how the responses
// are produced.
struct ProvingAlgorithm {
  std::string kind;
  bool reentrant = true;
  std::function<Response(const Challenge&)> respond;
};

enum class ProverKind {
  honest,
  corrupt_set,     // wrong answer on a given set of challenge ordinals
  corrupt_random,  // wrong answer on `count` seeded random ordinals
  decoy,           // answers for a different codeword on a budget of ordinals
};

struct ProverParams {
  std::set<BigInt> corrupt_ordinals;            // corrupt_set
  std::uint64_t corrupt_count = 0;              // corrupt_random
  std::optional<FieldVector> decoy_codeword;    // decoy
  std::uint64_t decoy_budget = 0;               // decoy
};

// The corrupt wrong-value rule is deterministic: the authentic response with
// its first coordinate bumped by one in F_q.
ProvingAlgorithm make_prover(ProverKind kind, const SchemeDescriptor& scheme,
                             const EncodedMessage& M, const ProverParams& params = {},
                             std::uint64_t seed = 0);

// Exact fraction of challenges answered authentically.
BigRat succ_exact(const ProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                  const EncodedMessage& M, std::uint64_t gamma_cap = kGammaCap);

struct ExtractionResult {
  FieldVector m_hat;
  FieldVector M_hat;
  std::uint64_t distance = 0;
  bool tie = false;
  std::uint64_t queries = 0;
};

// Black-box extractor: queries the prover on every challenge in canonical
// order and nearest-neighbour decodes the transcript in the response code.
ExtractionResult extract(const ProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                         std::uint64_t gamma_cap = kGammaCap,
                         std::uint64_t message_cap = kMessageCap);

// Same, against a prebuilt response code (for repeated extractions).
ExtractionResult extract(const ProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                         const ResponseCode& rc);

// Keyed-scheme extractor: projects each (mu, tau) response to mu and decodes
// in the linear-combination response code; tau is ignored.
ExtractionResult sw_extract(const SwProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                            std::uint64_t gamma_cap = kGammaCap,
                            std::uint64_t message_cap = kMessageCap);
ExtractionResult sw_extract(const SwProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                            const ResponseCode& rc);

}  // namespace por
