#include "por/extractor.hpp"

#include <algorithm>
#include <memory>

#include "por/rng.hpp"

namespace por {

namespace {

Response corrupted(const SchemeDescriptor& scheme, Response authentic) {
  authentic.values[0] = scheme.field().add(authentic.values[0], 1);
  return authentic;
}

}  // namespace

ProvingAlgorithm make_prover(ProverKind kind, const SchemeDescriptor& scheme,
                             const EncodedMessage& M, const ProverParams& params,
                             std::uint64_t seed) {
  switch (kind) {
    case ProverKind::honest: {
      auto scheme_copy = std::make_shared<SchemeDescriptor>(scheme);
      auto m_copy = std::make_shared<EncodedMessage>(M);
      return ProvingAlgorithm{"honest", true, [scheme_copy, m_copy](const Challenge& c) {
                                return respond(*scheme_copy, *m_copy, c);
                              }};
    }
    case ProverKind::corrupt_set:
    case ProverKind::corrupt_random: {
      auto scheme_copy = std::make_shared<SchemeDescriptor>(scheme);
      auto m_copy = std::make_shared<EncodedMessage>(M);
      auto bad = std::make_shared<std::set<BigInt>>(params.corrupt_ordinals);
      const BigInt gamma = challenge_count(scheme);
      if (kind == ProverKind::corrupt_random) {
        if (params.corrupt_count > gamma)
          fail(Errc::invalid_params, "corrupt count exceeds gamma");
        Rng rng(seed);
        while (bad->size() < params.corrupt_count) bad->insert(rng.below_big(gamma));
      } else {
        for (const BigInt& o : *bad)
          if (o < 0 || o >= gamma) fail(Errc::invalid_params, "corrupt ordinal out of range");
      }
      return ProvingAlgorithm{"corrupt-set", true,
                              [scheme_copy, m_copy, bad](const Challenge& c) {
                                Response r = respond(*scheme_copy, *m_copy, c);
                                if (bad->count(ordinal_of(*scheme_copy, c)))
                                  return corrupted(*scheme_copy, std::move(r));
                                return r;
                              }};
    }
    case ProverKind::decoy: {
      if (!params.decoy_codeword) fail(Errc::invalid_params, "decoy prover needs a codeword");
      const EncodedMessage decoy = as_codeword(scheme.code, *params.decoy_codeword);
      if (decoy.blocks == M.blocks) fail(Errc::invalid_params, "decoy must differ from M");
      // Ordinals where the two response vectors differ, in canonical order.
      const auto challenges = enumerate_challenges(scheme);
      auto moved = std::make_shared<std::set<BigInt>>();
      for (std::size_t i = 0; i < challenges.size(); ++i) {
        if (moved->size() == params.decoy_budget) break;
        if (respond(scheme, M, challenges[i]) != respond(scheme, decoy, challenges[i]))
          moved->insert(BigInt(i));
      }
      if (moved->size() < params.decoy_budget)
        fail(Errc::invalid_params, "decoy budget exceeds disagreement count");
      auto scheme_copy = std::make_shared<SchemeDescriptor>(scheme);
      auto m_copy = std::make_shared<EncodedMessage>(M);
      auto decoy_copy = std::make_shared<EncodedMessage>(decoy);
      return ProvingAlgorithm{"decoy", true,
                              [scheme_copy, m_copy, decoy_copy, moved](const Challenge& c) {
                                if (moved->count(ordinal_of(*scheme_copy, c)))
                                  return respond(*scheme_copy, *decoy_copy, c);
                                return respond(*scheme_copy, *m_copy, c);
                              }};
    }
  }
  fail(Errc::invalid_params, "unknown prover kind");
}

BigRat succ_exact(const ProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                  const EncodedMessage& M, std::uint64_t gamma_cap) {
  const auto challenges = enumerate_challenges(scheme, gamma_cap);
  std::uint64_t good = 0;
  for (const auto& c : challenges)
    if (prover.respond(c) == respond(scheme, M, c)) ++good;
  return BigRat(BigInt(good), BigInt(challenges.size()));
}

namespace {

ExtractionResult decode_transcript(const std::vector<std::uint64_t>& transcript,
                                   const SchemeDescriptor& scheme, const ResponseCode& rc) {
  const NearestResult nearest = nearest_codeword(transcript, rc.codebook, rc.arity);
  const FieldVector m_hat = message_at(scheme.code, BigInt(nearest.index));
  return ExtractionResult{m_hat, encode(scheme.code, m_hat).blocks, nearest.distance,
                          nearest.tie, rc.gamma};
}

}  // namespace

ExtractionResult extract(const ProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                         const ResponseCode& rc) {
  const auto challenges = enumerate_challenges(scheme);
  std::vector<std::uint64_t> transcript;
  transcript.reserve(challenges.size() * rc.arity);
  for (const auto& c : challenges) {
    const Response r = prover.respond(c);
    if (r.values.size() != rc.arity) fail(Errc::shape_mismatch, "prover response shape");
    transcript.insert(transcript.end(), r.values.begin(), r.values.end());
  }
  return decode_transcript(transcript, scheme, rc);
}

ExtractionResult extract(const ProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                         std::uint64_t gamma_cap, std::uint64_t message_cap) {
  return extract(prover, scheme, build_response_code(scheme, gamma_cap, message_cap));
}

ExtractionResult sw_extract(const SwProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                            const ResponseCode& rc) {
  const auto challenges = enumerate_challenges(scheme);
  std::vector<std::uint64_t> mu_transcript;
  mu_transcript.reserve(challenges.size());
  for (const auto& c : challenges) mu_transcript.push_back(prover.respond(c).mu);
  return decode_transcript(mu_transcript, scheme, rc);
}

ExtractionResult sw_extract(const SwProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                            std::uint64_t gamma_cap, std::uint64_t message_cap) {
  return sw_extract(prover, scheme, build_response_code(scheme, gamma_cap, message_cap));
}

}  // namespace por
