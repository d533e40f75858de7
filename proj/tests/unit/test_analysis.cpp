#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "por/analysis.hpp"

using namespace por;

namespace {

// Brute-force oracle for a_r: count full-weight V in (F_q)^r with
// V . (1,...,1) = 0. The count is the same for any full-weight X because
// coordinate scaling permutes the solutions.
std::uint64_t a_r_brute(std::uint64_t q, std::uint64_t r) {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> v(r, 1);  // full weight: every value in 1..q-1
  for (;;) {
    std::uint64_t sum = 0;
    for (std::uint64_t x : v) sum = (sum + x) % q;
    if (sum == 0) ++count;
    std::size_t pos = r;
    bool exhausted = true;
    while (pos-- > 0) {
      if (++v[pos] < q) {
        exhausted = false;
        break;
      }
      v[pos] = 1;  // carry
    }
    if (exhausted) return count;
  }
}

LinearCode full_space(std::uint64_t q, std::size_t n) {
  std::vector<std::uint64_t> gen(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) gen[i * n + i] = 1;
  return LinearCode(PrimeField(q), n, n, std::move(gen), 1);
}

// Brute-force pairwise distance of the LCv2 response code restricted to two
// codewords at distance delta, built from explicit challenge enumeration.
BigInt lc2_pair_brute(std::uint64_t q, std::size_t n, std::uint32_t ell, const FieldVector& M,
                      const FieldVector& Mp) {
  SchemeDescriptor scheme(SchemeKind::lc_v2, full_space(q, n), ell);
  std::uint64_t dist = 0;
  for (const Challenge& c : enumerate_challenges(scheme)) {
    const PrimeField& f = M.field();
    std::uint64_t a = 0, b = 0;
    for (std::size_t i = 0; i < c.indices.size(); ++i) {
      a = f.add(a, f.mul(c.coeffs[i], M[c.indices[i] - 1]));
      b = f.add(b, f.mul(c.coeffs[i], Mp[c.indices[i] - 1]));
    }
    if (a != b) ++dist;
  }
  return BigInt(dist);
}

}  // namespace

TEST_CASE("a_r: formula equals brute force for q in {2,3,5,7}, r <= 4") {
  for (std::uint64_t q : {2, 3, 5, 7}) {
    CHECK(a_r(q, 1) == 0);
    for (std::uint64_t r = 1; r <= 4; ++r) CHECK(a_r(q, r) == a_r_brute(q, r));
  }
  CHECK(a_r(3, 2) == 2);
  CHECK(a_r(3, 3) == 2);
}

TEST_CASE("multiblock dstar closed form") {
  CHECK(dstar_multiblock(4, 3, 2) == 6);
  CHECK(dstar_multiblock(6, 2, 1) == 2);   // ell = 1 gives d
  CHECK(dstar_multiblock(9, 5, 1) == 5);
  CHECK(dstar_multiblock(6, 2, 2) == 9);   // 15 - 6
}

TEST_CASE("lcv1 dstar: paper value and count differ by one") {
  const LcV1Dstar ds = dstar_lc_v1(3, 3);
  CHECK(ds.dstar_paper == 17);
  CHECK(ds.dstar_count == 18);
  CHECK_FALSE(ds.degenerate);
  CHECK(dstar_lc_v1(2, 1).dstar_paper == 0);
  CHECK(dstar_lc_v1(2, 1).degenerate);
}

TEST_CASE("lcv1 brute force matches the nonzero-challenge count") {
  // k=1 repetition code over F_3, n = 3 and 4; d* is independent of d.
  for (std::size_t n : {3u, 4u}) {
    PrimeField f3(3);
    LinearCode rep(f3, n, 1, std::vector<std::uint64_t>(n, 1), n);
    SchemeDescriptor scheme(SchemeKind::lc_v1, rep);
    const ResponseCode rc = build_response_code(scheme);
    const LcV1Dstar ds = dstar_lc_v1(3, n);
    CHECK(BigInt(rc.dstar) == ds.dstar_count);
    CHECK(BigInt(rc.dstar) - ds.dstar_paper == 1);
  }
}

TEST_CASE("lcv2 pair distance: formula equals brute force") {
  PrimeField f3(3);
  // delta = 1: M = (1,0,0) vs zero.
  CHECK(lc_v2_pair_distance(3, 3, 2, 1) == 8);
  CHECK(lc2_pair_brute(3, 3, 2, FieldVector(f3, {1, 0, 0}), FieldVector::zeros(f3, 3)) == 8);
  // delta = 2.
  CHECK(lc_v2_pair_distance(3, 3, 2, 2) == 10);
  CHECK(lc2_pair_brute(3, 3, 2, FieldVector(f3, {1, 2, 0}), FieldVector::zeros(f3, 3)) == 10);
  // delta = n, ell = n: single support, agreement count a_n.
  for (std::uint64_t q : {3, 5}) {
    for (std::uint64_t n = 1; n <= 3; ++n)
      CHECK(lc_v2_pair_distance(q, n, n, n) == ipow(BigInt(q - 1), n) - a_r(q, n));
  }
}

TEST_CASE("lcv2 exact dstar on the full space") {
  CHECK(dstar_lc_v2_exact(full_space(3, 3), 2) == 6);  // delta = 3 pairs are closest
}

TEST_CASE("lcv2 estimate accuracy") {
  // ell = 1: estimate d(q-1)^2/q vs exact d(q-1); relative error 1/q.
  const double est = dstar_lc_v2_estimate(5, 4, 3, 1);
  CHECK(est == doctest::Approx(3 * 16.0 / 5));
  const BigInt exact = lc_v2_pair_distance(5, 4, 1, 3);
  CHECK(exact == 12);  // d (q-1)
  CHECK(std::abs(est - 12.0) / 12.0 == doctest::Approx(1.0 / 5));
  // Documented small-q inaccuracy: q=3, n=3, d=1, ell=2.
  CHECK(dstar_lc_v2_estimate(3, 3, 1, 2) == doctest::Approx(16.0 / 3));
  // Large q: within 1% of the exact value on an MDS code.
  PrimeField f101(101);
  LinearCode rs = rs_code(f101, 6, 4);  // d = 3
  const BigInt ex = dstar_lc_v2_exact(rs, 2, std::uint64_t{1} << 28);
  const double approx = dstar_lc_v2_estimate(101, 6, 3, 2);
  CHECK(std::abs(approx - ex.convert_to<double>()) / ex.convert_to<double>() < 0.01);
}

TEST_CASE("thresholds per scheme") {
  const ThresholdReport basic = threshold(SchemeKind::basic, 5, 4, 3, std::nullopt);
  CHECK(basic.threshold == BigRat(5, 8));
  CHECK(basic.threshold_value() == doctest::Approx(0.625));

  const ThresholdReport mb = threshold(SchemeKind::multiblock, 5, 4, 3, 2);
  CHECK(mb.threshold == BigRat(1, 2));  // S0 with C(1,2) = 0
  CHECK(mb.gamma == 6);

  const ThresholdReport lc1 = threshold(SchemeKind::lc_v1, 3, 3, 1, std::nullopt);
  CHECK(lc1.threshold == BigRat(1, 2) + BigRat(9, 2 * 26));

  // Thresholds sit in (1/2, 1) whenever dstar < gamma.
  for (std::uint64_t d = 1; d <= 3; ++d) {
    const ThresholdReport r = threshold(SchemeKind::multiblock, 5, 6, d, 2);
    CHECK(r.threshold > BigRat(1, 2));
    CHECK(r.threshold < 1);
  }
}

TEST_CASE("S0, S1, S2 are extremely close at cryptographic q") {
  const std::uint64_t q = std::uint64_t{1} << 32;
  // S-forms only need binomials, not primality of q, so compute directly.
  const BigRat s0 = BigRat(1, 2) + BigRat(binom(BigInt(100) - 10, 5), 2 * binom(BigInt(100), 5));
  const BigRat s1 = BigRat(BigInt(q - 1), BigInt(q)) * s0 + BigRat(BigInt(1), BigInt(q));
  const BigRat s2 = BigRat(BigInt(q - 1) * (q - 1), BigInt(q) * q) * s0 +
                    BigRat(BigInt(2), BigInt(q)) - BigRat(BigInt(1), BigInt(q) * q);
  const BigRat two31 = BigRat(BigInt(1), BigInt(std::uint64_t{1} << 31));
  const BigRat two30 = BigRat(BigInt(1), BigInt(std::uint64_t{1} << 30));
  CHECK(boost::multiprecision::abs(BigRat(s1 - s0)) < two31);
  CHECK(boost::multiprecision::abs(BigRat(s2 - s0)) < two30);
}

TEST_CASE("estimate_sufficient and max_n golden values") {
  CHECK(max_n(100, 100, parse_rational("0.6"), GuaranteeMethod::estimate) == 6213);
  CHECK(max_n(1000, 1000, parse_rational("0.99"), GuaranteeMethod::estimate) == 49498316);
  const std::uint64_t exact = max_n(100, 100, parse_rational("0.6"), GuaranteeMethod::exact);
  CHECK(exact >= 6312);
  CHECK(exact <= 6314);
  CHECK(exact == 6313);
  CHECK_THROWS_AS(max_n(10, 10, parse_rational("0.5"), GuaranteeMethod::exact), Error);
  CHECK_THROWS_AS(estimate_sufficient(10, 10, 100, parse_rational("0.3")), Error);
}

TEST_CASE("estimate criterion is conservative for the exact one") {
  int checked = 0;
  for (std::uint64_t ell : {1, 2, 5, 20, 100}) {
    for (std::uint64_t d : {1, 5, 40}) {
      for (std::uint64_t n : {50, 200, 1000, 5000}) {
        if (d > n || ell > n) continue;
        for (const char* s : {"0.55", "0.6", "0.75", "0.9", "0.99"}) {
          const BigRat succ = parse_rational(s);
          if (estimate_sufficient(ell, d, n, succ)) {
            CHECK(exact_sufficient(ell, d, n, succ));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 20);
  for (std::uint64_t ell : {10, 50}) {
    for (std::uint64_t d : {10, 100}) {
      for (const char* s : {"0.6", "0.8"}) {
        const BigRat succ = parse_rational(s);
        CHECK(max_n(ell, d, succ, GuaranteeMethod::estimate) <=
              max_n(ell, d, succ, GuaranteeMethod::exact));
      }
    }
  }
}

TEST_CASE("storage lower bound") {
  const StorageBound b = verifier_storage_lower_bound(1000, 251, 100, 251);
  CHECK(b.bits == doctest::Approx(900 * std::log2(251.0)).epsilon(1e-9));
  CHECK_FALSE(b.clamped);
  CHECK_FALSE(b.unkeyed_feasible);

  const StorageBound c = verifier_storage_lower_bound(10, 251, 100, 251);
  CHECK(c.bits == 0);
  CHECK(c.clamped);
  CHECK(c.unkeyed_feasible);
  CHECK_THROWS_AS(verifier_storage_lower_bound(0, 251, 100, 251), Error);
}

TEST_CASE("agreement-count identity for the lcv2 formula") {
  // (q-1)^l C(n,l) - pair_distance equals the closed-form agreement count.
  for (std::uint64_t q : {2, 3, 5}) {
    for (std::uint64_t n = 1; n <= 5; ++n) {
      for (std::uint64_t ell = 1; ell <= std::min<std::uint64_t>(n, 3); ++ell) {
        for (std::uint64_t delta = 1; delta <= n; ++delta) {
          const BigInt gamma_w = binom(BigInt(n), ell) * ipow(BigInt(q - 1), ell);
          BigInt agree = binom(BigInt(n) - delta, ell) * ipow(BigInt(q - 1), ell);
          for (std::uint64_t w = 1; w <= std::min(delta, ell); ++w)
            agree += binom(BigInt(delta), w) * binom(BigInt(n) - delta, ell - w) *
                     ipow(BigInt(q - 1), ell - w) * a_r(q, w);
          CHECK(gamma_w - lc_v2_pair_distance(q, n, ell, delta) == agree);
        }
      }
    }
  }
}
