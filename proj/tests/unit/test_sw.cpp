#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "por/extractor.hpp"
#include "por/rng.hpp"
#include "por/sw.hpp"

using namespace por;

namespace {

// Dense vector -> sparse challenge.
Challenge sparse(const std::vector<std::uint64_t>& dense) {
  Challenge c;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) {
      c.indices.push_back(static_cast<std::uint32_t>(i + 1));
      c.coeffs.push_back(dense[i]);
    }
  }
  return c;
}

SchemeDescriptor sw_scheme(std::uint64_t q, std::size_t n, std::size_t k,
                           std::optional<std::uint32_t> ell) {
  return SchemeDescriptor(SchemeKind::shacham_waters, rs_code(PrimeField(q), n, k), ell);
}

}  // namespace

TEST_CASE("keygen: deterministic, golden anchor, uniform") {
  PrimeField f5(5);
  const SwKey a = sw_keygen(f5, 3, 42);
  const SwKey b = sw_keygen(f5, 3, 42);
  CHECK(a.alpha == b.alpha);
  CHECK(a.beta == b.beta);
  // Regression anchor, frozen from the first run.
  CHECK(a.alpha == 1);
  CHECK(a.beta == FieldVector(f5, {4, 0, 2}));
  CHECK(sw_keygen(f5, 3, 43).alpha != a.alpha);  // different seed, different key (here)

  // Uniformity of alpha over 1e5 seeds: each value within 5 sigma of q^-1.
  std::array<std::uint64_t, 5> freq{};
  const int trials = 100000;
  for (int seed = 0; seed < trials; ++seed) ++freq[sw_keygen(f5, 1, seed).alpha];
  const double expected = trials / 5.0;
  const double sigma = std::sqrt(trials * 0.2 * 0.8);
  for (std::uint64_t f : freq) CHECK(std::abs(f - expected) < 5 * sigma);
}

TEST_CASE("tag equation S = B + alpha M") {
  PrimeField f5(5);
  const FieldVector M(f5, {1, 2, 3});
  const FieldVector B(f5, {1, 1, 1});
  CHECK(sw_tag(SwKey{0, B}, M).sigma == B);                       // alpha = 0
  CHECK(sw_tag(SwKey{2, B}, FieldVector::zeros(f5, 3)).sigma == B);  // M = 0
  CHECK(sw_tag(SwKey{2, B}, M).sigma == FieldVector(f5, {3, 0, 2}));
  CHECK_THROWS_AS(sw_tag(SwKey{2, B}, FieldVector(f5, {1, 2})), Error);
}

TEST_CASE("responses and verification") {
  PrimeField f5(5);
  const FieldVector M(f5, {1, 2, 3});
  const SwKey key{2, FieldVector(f5, {1, 1, 1})};
  const FieldVector S = sw_tag(key, M).sigma;
  REQUIRE(S == FieldVector(f5, {3, 0, 2}));

  CHECK(sw_respond(M, S, sparse({0, 0, 0})) == SwResponse{0, 0});
  const SwResponse r = sw_respond(M, S, sparse({1, 1, 0}));
  CHECK(r == SwResponse{3, 3});

  // Bilinearity: response to V1 + V2 is the component-wise sum.
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> v1(3), v2(3), v12(3);
    for (std::size_t i = 0; i < 3; ++i) {
      v1[i] = rng.below(5);
      v2[i] = rng.below(5);
      v12[i] = (v1[i] + v2[i]) % 5;
    }
    const SwResponse r1 = sw_respond(M, S, sparse(v1));
    const SwResponse r2 = sw_respond(M, S, sparse(v2));
    const SwResponse sum = sw_respond(M, S, sparse(v12));
    CHECK(sum.mu == (r1.mu + r2.mu) % 5);
    CHECK(sum.tau == (r1.tau + r2.tau) % 5);
  }

  // Authentic responses verify under the generating key and under every
  // consistent key; perturbing tau breaks verification.
  const Challenge V = sparse({1, 1, 0});
  CHECK(sw_verify(key, V, r));
  CHECK_FALSE(sw_verify(key, V, SwResponse{r.mu, (r.tau + 1) % 5}));
  for (const SwKey& k : sw_possible_keys(M, S)) CHECK(sw_verify(k, V, r));
}

TEST_CASE("possible keys") {
  PrimeField f5(5);
  const FieldVector M(f5, {1, 2, 3});
  const FieldVector S(f5, {3, 0, 2});
  const auto keys = sw_possible_keys(M, S);
  CHECK(keys.size() == 5);
  CHECK(keys[0].alpha == 0);
  CHECK(keys[0].beta == S);  // S - 0*M
  bool found_generator = false;
  for (const auto& k : keys)
    if (k.alpha == 2 && k.beta == FieldVector(f5, {1, 1, 1})) found_generator = true;
  CHECK(found_generator);
  for (const auto& k : keys) CHECK(sw_tag(k, M).sigma == S);
}

TEST_CASE("acceptability lemma, exhaustive at q in {3,5}, n = 3") {
  for (std::uint64_t q : {3, 5}) {
    PrimeField f(q);
    const FieldVector M(f, {1, q - 1, 2 % q});
    const SwKey key{q - 2, FieldVector(f, {0, 1, q - 1})};
    const FieldVector S = sw_tag(key, M).sigma;
    const std::vector<Challenge> challenges = {sparse({1, 0, 0}), sparse({1, 1, 1}),
                                               sparse({0, q - 1, 1})};
    for (const Challenge& V : challenges) {
      const SwResponse authentic = sw_respond(M, S, V);
      for (std::uint64_t mu = 0; mu < q; ++mu) {
        for (std::uint64_t tau = 0; tau < q; ++tau) {
          const SwResponse r{mu, tau};
          const std::uint64_t count = sw_acceptable_key_count(M, S, V, r);
          if (r == authentic) {
            CHECK(sw_is_authentic(M, S, V, r));
            CHECK(count == q);
          } else {
            CHECK_FALSE(sw_is_authentic(M, S, V, r));
            CHECK(count <= 1);
          }
          if (count >= 2) CHECK(sw_is_authentic(M, S, V, r));
        }
      }
    }
  }
}

TEST_CASE("average success probability") {
  const auto scheme = sw_scheme(5, 3, 2, 2);
  PrimeField f5(5);
  const FieldVector m(f5, {2, 1});
  const FieldVector M = encode(scheme.code, m).blocks;
  const SwKey key = sw_keygen(f5, 3, 9);
  const FieldVector S = sw_tag(key, M).sigma;

  const SwProvingAlgorithm honest{"honest", [&](const Challenge& V) {
                                    return sw_respond(M, S, V);
                                  }};
  CHECK(sw_succ_avg(honest, scheme, M, S) == BigRat(1));

  // Never-acceptable prover: mu authentic, tau wrong, acceptable for no key.
  const SwProvingAlgorithm hopeless{"hopeless", [&](const Challenge& V) {
                                      SwResponse r = sw_respond(M, S, V);
                                      r.tau = (r.tau + 1) % 5;
                                      return r;
                                    }};
  CHECK(sw_succ_avg(hopeless, scheme, M, S) == BigRat(0));

  // Corrupting mu on C challenges while keeping tau authentic leaves exactly
  // one acceptable key per corrupted challenge: the succ.lem bound holds
  // with equality.
  const auto challenges = enumerate_challenges(scheme);
  const std::uint64_t gamma = challenges.size();
  for (std::uint64_t corrupt = 1; corrupt <= 5; ++corrupt) {
    const SwProvingAlgorithm prover{
        "corrupt-mu", [&, corrupt](const Challenge& V) {
          SwResponse r = sw_respond(M, S, V);
          if (to_u64(ordinal_of(scheme, V)) < corrupt) r.mu = (r.mu + 1) % 5;
          return r;
        }};
    const BigRat succ = sw_succ_avg(prover, scheme, M, S);
    CHECK(succ == BigRat(1) - BigRat(BigInt(corrupt) * 4, BigInt(gamma) * 5));
  }
}

TEST_CASE("distance bound from the average success probability") {
  // dist(r^M, R') <= (1 - succ_avg) * gamma * q / (q - 1), mu coordinates
  // only, for seeded random provers.
  const auto scheme = sw_scheme(5, 4, 2, 2);
  PrimeField f5(5);
  const FieldVector m(f5, {1, 3});
  const FieldVector M = encode(scheme.code, m).blocks;
  const SwKey key = sw_keygen(f5, 4, 11);
  const FieldVector S = sw_tag(key, M).sigma;
  const auto challenges = enumerate_challenges(scheme);
  const std::uint64_t gamma = challenges.size();

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    // Deterministic per-ordinal corruption derived from the seed.
    auto corrupted = [seed](std::uint64_t ordinal) {
      Rng r(seed * 7919 + ordinal);
      return r.below(10) < 3;
    };
    const SwProvingAlgorithm prover{
        "random", [&, corrupted](const Challenge& V) {
          SwResponse r = sw_respond(M, S, V);
          const std::uint64_t o = to_u64(ordinal_of(scheme, V));
          if (corrupted(o)) {
            Rng rr(seed * 104729 + o);
            r.mu = (r.mu + 1 + rr.below(4)) % 5;
            r.tau = rr.below(5);
          }
          return r;
        }};
    std::uint64_t dist = 0;
    for (const Challenge& V : challenges)
      if (prover.respond(V).mu != sw_respond(M, S, V).mu) ++dist;
    const BigRat succ = sw_succ_avg(prover, scheme, M, S);
    CHECK(BigRat(BigInt(dist)) <= (BigRat(1) - succ) * BigRat(BigInt(gamma) * 5, BigInt(4)));
  }
}

TEST_CASE("verification-oracle attack recovers every key in at most q-1 queries") {
  const auto scheme = sw_scheme(5, 3, 2, 2);
  PrimeField f5(5);
  const FieldVector m(f5, {4, 2});
  const FieldVector M = encode(scheme.code, m).blocks;
  // Exhaustive over all q consistent keys (beta determined by alpha).
  for (std::uint64_t alpha = 0; alpha < 5; ++alpha) {
    const SwKey true_key{alpha, FieldVector(f5, {2, 0, 3})};
    const FieldVector S = sw_tag(true_key, M).sigma;
    std::size_t oracle_calls = 0;
    const SwVerifyOracle oracle = [&](const Challenge& V, const SwResponse& r) {
      ++oracle_calls;
      return sw_verify(true_key, V, r);
    };
    const SwAttackResult result = sw_oracle_attack(scheme, M, S, oracle);
    CHECK(result.key.alpha == alpha);
    CHECK(result.key.beta == true_key.beta);
    CHECK(result.queries <= 4);
    CHECK(result.queries == oracle_calls);
  }
}

TEST_CASE("attack prover is acceptable everywhere but extraction is defeated") {
  const auto scheme = sw_scheme(5, 3, 2, 2);
  PrimeField f5(5);
  const FieldVector m(f5, {4, 2});
  const FieldVector M = encode(scheme.code, m).blocks;
  const SwKey true_key = sw_keygen(f5, 3, 31);
  const FieldVector S = sw_tag(true_key, M).sigma;
  const SwVerifyOracle oracle = [&](const Challenge& V, const SwResponse& r) {
    return sw_verify(true_key, V, r);
  };
  const SwAttackResult attack = sw_oracle_attack(scheme, M, S, oracle);
  CHECK(attack.decoy != M);

  // Every response of the attack prover is acceptable under the true key,
  // so the average success probability is 1.
  for (const Challenge& V : enumerate_challenges(scheme))
    CHECK(sw_verify(true_key, V, attack.prover.respond(V)));
  CHECK(sw_succ_avg(attack.prover, scheme, M, S) == BigRat(1));

  // Yet extraction returns the decoy, at distance zero.
  const ExtractionResult ex = sw_extract(attack.prover, scheme);
  CHECK(ex.M_hat == attack.decoy);
  CHECK(ex.distance == 0);
  CHECK(ex.M_hat != M);
}

TEST_CASE("oracle that accepts nothing is flagged when verifying the inference") {
  const auto scheme = sw_scheme(5, 3, 2, 2);
  PrimeField f5(5);
  const FieldVector m(f5, {1, 1});
  const FieldVector M = encode(scheme.code, m).blocks;
  const SwKey key = sw_keygen(f5, 3, 5);
  const FieldVector S = sw_tag(key, M).sigma;
  const SwVerifyOracle reject_all = [](const Challenge&, const SwResponse&) { return false; };
  CHECK_THROWS_AS(sw_oracle_attack(scheme, M, S, reject_all, /*verify_inference=*/true), Error);
  // Without the verification query the attack stays within q-1 queries and
  // infers the last candidate.
  const SwAttackResult r = sw_oracle_attack(scheme, M, S, reject_all);
  CHECK(r.key.alpha == 4);
  CHECK(r.queries == 4);
}
