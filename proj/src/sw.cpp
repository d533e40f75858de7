#include "por/sw.hpp"

#include <string>

#include "por/rng.hpp"

namespace por {

namespace {

// V.X for a sparse challenge and a dense vector.
std::uint64_t sparse_dot(const PrimeField& f, const Challenge& V, const FieldVector& X) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < V.indices.size(); ++i)
    acc = f.add(acc, f.mul(V.coeffs[i], X[V.indices[i] - 1]));
  return acc;
}

void require_same_length(const FieldVector& M, const FieldVector& S) {
  if (M.size() != S.size()) fail(Errc::length_mismatch, "message and tag lengths differ");
  if (M.field() != S.field()) fail(Errc::mismatched_fields, "message and tag fields differ");
}

}  // namespace

SwKey sw_keygen(const PrimeField& field, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t alpha = rng.below(field.modulus());
  std::vector<std::uint64_t> beta(n);
  for (auto& b : beta) b = rng.below(field.modulus());
  return SwKey{alpha, FieldVector(field, std::move(beta))};
}

SwTag sw_tag(const SwKey& key, const FieldVector& M) {
  require_same_length(key.beta, M);
  return SwTag{key.beta + M.scaled(key.alpha)};
}

SwResponse sw_respond(const FieldVector& M, const FieldVector& S, const Challenge& V) {
  require_same_length(M, S);
  const PrimeField& f = M.field();
  return SwResponse{sparse_dot(f, V, M), sparse_dot(f, V, S)};
}

bool sw_verify(const SwKey& key, const Challenge& V, const SwResponse& r) {
  const PrimeField& f = key.beta.field();
  const std::uint64_t expected = f.add(f.mul(key.alpha, r.mu), sparse_dot(f, V, key.beta));
  return r.tau == expected;
}

std::vector<SwKey> sw_possible_keys(const FieldVector& M, const FieldVector& S) {
  require_same_length(M, S);
  std::vector<SwKey> keys;
  const std::uint64_t q = M.field().modulus();
  keys.reserve(q);
  for (std::uint64_t alpha0 = 0; alpha0 < q; ++alpha0)
    keys.push_back(SwKey{alpha0, S - M.scaled(alpha0)});
  return keys;
}

bool sw_is_authentic(const FieldVector& M, const FieldVector& S, const Challenge& V,
                     const SwResponse& r) {
  return r == sw_respond(M, S, V);
}

std::uint64_t sw_acceptable_key_count(const FieldVector& M, const FieldVector& S,
                                      const Challenge& V, const SwResponse& r) {
  std::uint64_t count = 0;
  for (const SwKey& key : sw_possible_keys(M, S))
    if (sw_verify(key, V, r)) ++count;
  return count;
}

BigRat sw_succ_avg(const SwProvingAlgorithm& prover, const SchemeDescriptor& scheme,
                   const FieldVector& M, const FieldVector& S, std::uint64_t gamma_cap) {
  require_same_length(M, S);
  const auto challenges = enumerate_challenges(scheme, gamma_cap);
  const std::uint64_t q = M.field().modulus();
  const auto keys = sw_possible_keys(M, S);
  BigInt accepted = 0;
  for (const Challenge& V : challenges) {
    const SwResponse r = prover.respond(V);
    if (sw_is_authentic(M, S, V, r)) {
      accepted += q;  // authentic responses are acceptable for every key
      continue;
    }
    for (const SwKey& key : keys)
      if (sw_verify(key, V, r)) ++accepted;
  }
  return BigRat(accepted, BigInt(challenges.size()) * q);
}

SwAttackResult sw_oracle_attack(const SchemeDescriptor& scheme, const FieldVector& M,
                                const FieldVector& S, const SwVerifyOracle& oracle,
                                bool verify_inference) {
  require_same_length(M, S);
  const PrimeField& f = M.field();
  const std::uint64_t q = f.modulus();

  // Any fixed challenge works; use the first in canonical order.
  const Challenge probe = challenge_at(scheme, BigInt(0));
  const std::uint64_t mu_auth = sparse_dot(f, probe, M);
  const std::uint64_t tau_auth = sparse_dot(f, probe, S);

  // Distinguishing response for candidate alpha0: mu differs from the
  // authentic value, tau is what the candidate key would accept. By the
  // acceptability lemma a non-authentic response is acceptable for at most
  // one key, so the oracle accepts it iff alpha == alpha0.
  const std::uint64_t mu_forged = f.add(mu_auth, 1);
  auto distinguishing = [&](std::uint64_t alpha0) {
    // tau = alpha0*mu' + V.(S - alpha0*M) = tau_auth + alpha0*(mu' - mu_auth)
    const std::uint64_t tau = f.add(tau_auth, f.mul(alpha0, f.sub(mu_forged, mu_auth)));
    return SwResponse{mu_forged, tau};
  };

  std::size_t queries = 0;
  std::uint64_t recovered = q;  // sentinel
  for (std::uint64_t alpha0 = 0; alpha0 + 1 < q; ++alpha0) {
    ++queries;
    if (oracle(probe, distinguishing(alpha0))) {
      recovered = alpha0;
      break;
    }
  }
  if (recovered == q) {
    // All but the last candidate rejected; the last one is forced.
    recovered = q - 1;
    if (verify_inference) {
      ++queries;
      if (!oracle(probe, distinguishing(recovered)))
        fail(Errc::oracle_inconsistent, "no candidate key accepted by the oracle");
    }
  }

  SwKey key{recovered, S - M.scaled(recovered)};

  // The proving algorithm from the attack: answer for a decoy message
  // M' != M with acceptable but non-authentic responses. M' is the
  // lexicographically next codeword after M.
  const BigInt mi = message_ordinal(scheme.code, decode_unencode(scheme.code, M));
  const BigInt next = (mi + 1) % scheme.code.codeword_count();
  const FieldVector decoy = encode(scheme.code, message_at(scheme.code, next)).blocks;

  const SwKey key_copy = key;
  SwProverFn fn = [f, key_copy, decoy](const Challenge& V) {
    const std::uint64_t mu = sparse_dot(f, V, decoy);
    const std::uint64_t tau =
        f.add(f.mul(key_copy.alpha, mu), sparse_dot(f, V, key_copy.beta));
    return SwResponse{mu, tau};
  };

  return SwAttackResult{std::move(key), queries, decoy,
                        SwProvingAlgorithm{"sw-attack", std::move(fn)}};
}

}  // namespace por
