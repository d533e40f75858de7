#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "por/bigint.hpp"
#include "por/scheme.hpp"

namespace por {

// Number of full-weight V in (F_q)^r with V.X = 0 for a fixed full-weight X:
// a_r = ((q-1)/q) * ((q-1)^{r-1} - (-1)^{r-1}), exact.
BigInt a_r(std::uint64_t q, std::uint64_t r);

// Response-code distance of the multiblock scheme: C(n,l) - C(n-d,l).
BigInt dstar_multiblock(std::uint64_t n, std::uint64_t d, std::uint64_t ell);

struct LcV1Dstar {
  BigInt dstar_paper;  // q^n - q^{n-1} - 1, the printed lemma value
  BigInt dstar_count;  // q^n - q^{n-1}, the count over nonzero challenges
  bool degenerate;     // dstar_paper < 1
};

// Both candidate closed forms for version 1 of the linear-combination
// scheme; they differ by one. Thresholds use dstar_paper, the smaller and
// therefore conservative value.
LcV1Dstar dstar_lc_v1(std::uint64_t q, std::uint64_t n);

// Pairwise response-code distance in version 2 for codewords at distance
// delta.
BigInt lc_v2_pair_distance(std::uint64_t q, std::uint64_t n, std::uint64_t ell,
                           std::uint64_t delta);

// Exact d* of version 2 on a concrete code: minimum of the pair formula
// over the code's actual nonzero codeword weights.
BigInt dstar_lc_v2_exact(const LinearCode& code, std::uint64_t ell,
                         std::uint64_t cap = kCodewordCap);

// ((q-1)^{l+1}/q) * (C(n,l) - C(n-d,l)).
double dstar_lc_v2_estimate(std::uint64_t q, std::uint64_t n, std::uint64_t d,
                            std::uint64_t ell);

// Extraction threshold for one scheme configuration: the strict lower bound
// on succ (succ_avg for the keyed scheme) above which extraction is
// guaranteed.
struct ThresholdReport {
  SchemeKind kind;
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::optional<std::uint32_t> ell;
  BigInt gamma;
  std::optional<BigInt> dstar_exact;     // from a concrete code, when given
  BigInt dstar_formula;                  // closed form used by the threshold
  std::optional<double> dstar_estimate;  // smooth estimate, where defined
  BigRat threshold;
  std::string source;  // which theorem the bound comes from
  // Comparison forms: S0 (multiblock), S1 = ((q-1)/q)S0 + 1/q,
  // S2 = ((q-1)/q)^2 S0 + 2/q - 1/q^2.
  std::optional<BigRat> s0, s1, s2;

  double threshold_value() const { return to_double(threshold); }
};

ThresholdReport threshold(SchemeKind kind, std::uint64_t q, std::uint64_t n, std::uint64_t d,
                          std::optional<std::uint32_t> ell,
                          const LinearCode* code = nullptr);

// Convenience: d from the code (declared distance, else brute force).
ThresholdReport threshold(const SchemeDescriptor& scheme);

// l*d/n > ln(1/(1-2*eps)) with eps = 1 - succ; a sufficient condition for
// the multiblock extraction guarantee that avoids binomial coefficients.
bool estimate_sufficient(std::uint64_t ell, std::uint64_t d, std::uint64_t n,
                         const BigRat& succ);

// The exact multiblock condition 2*succ - 1 > C(n-d,l)/C(n,l), decided in
// integer arithmetic.
bool exact_sufficient(std::uint64_t ell, std::uint64_t d, std::uint64_t n, const BigRat& succ);

enum class GuaranteeMethod { exact, estimate };

// Largest n for which the chosen criterion still guarantees extraction
// (monotone: growing n weakens the guarantee).
std::uint64_t max_n(std::uint64_t ell, std::uint64_t d, const BigRat& succ,
                    GuaranteeMethod method);

struct Table1Cell {
  std::uint64_t ell = 0;
  std::uint64_t d = 0;
  BigRat succ;
  std::uint64_t n_exact = 0;
  std::uint64_t n_estimate = 0;
  std::uint64_t paper_exact = 0;     // value printed in the source table
  std::uint64_t paper_estimate = 0;
  bool agrees_exact = false;
  bool agrees_estimate = false;
};

// Recomputes every cell of the published parameter table and compares
// against the printed values; disagreements are flagged, not adopted.
std::vector<Table1Cell> table1(bool include_exact = true);

struct StorageBound {
  double bits = 0;       // max(0, k log2 q - gamma log2 |Delta|)
  bool clamped = false;  // true when the raw bound was negative
  // Unkeyed schemes need gamma log2 |Delta| >= k log2 q.
  bool unkeyed_feasible = false;
};

StorageBound verifier_storage_lower_bound(double k, double q, double gamma,
                                          double delta_size);

}  // namespace por
