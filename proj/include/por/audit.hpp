#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "por/analysis.hpp"
#include "por/bigint.hpp"

namespace por {

enum class Sampling { with_replacement, without_replacement };

const char* sampling_name(Sampling s) noexcept;
std::optional<Sampling> sampling_from_name(const std::string& name) noexcept;

// Outcome counts of one audit: t challenges, g correct responses, against a
// scheme with gamma challenges where extraction is guaranteed once
// succ >= omega/gamma.
struct AuditSample {
  std::uint64_t t = 0;
  std::uint64_t g = 0;
  Sampling sampling = Sampling::with_replacement;
  BigInt gamma;
  BigInt omega;

  void validate() const;
  double p0() const;  // (omega - 1) / gamma
};

enum class AuditDecision { reject_h0, insufficient_evidence };

struct AuditReport {
  AuditSample sample;
  double p_value = 1.0;
  double alpha = 0.05;
  AuditDecision decision = AuditDecision::insufficient_evidence;
  std::optional<double> theta_l;
  double confidence_level = 0.95;
  bool theta_degenerate = false;  // g = 0 gives theta_l = 0
  std::string advice;             // filled when the evidence is insufficient
};

// Upper tail of the hypergeometric distribution: probability of at least g
// correct responses among t draws without replacement when only omega-1 of
// the gamma challenges are answered correctly. Exact big-integer arithmetic
// up to `exact_limit` draws, log-gamma summation beyond.
double pvalue_without_replacement(const BigInt& gamma, const BigInt& omega, std::uint64_t t,
                                  std::uint64_t g, std::uint64_t exact_limit = 1000);

// Binomial upper tail at success probability p0, computed in log space with
// compensated summation.
double pvalue_with_replacement(double p0, std::uint64_t t, std::uint64_t g);

struct ConfidenceBound {
  double theta_l = 0;
  bool degenerate = false;
};

// Largest theta whose binomial tail at (t, g) stays below 1 - confidence;
// (theta_l, 1] is the one-sided confidence interval for succ.
ConfidenceBound lower_conf_bound(std::uint64_t t, std::uint64_t g, double confidence);

AuditReport audit_decision(const AuditSample& sample, double alpha);

// Smallest t with p0^t < alpha: the minimum all-correct sample size that
// rejects H0: succ <= p0.
std::uint64_t min_sample_all_correct(double p0, double alpha);

// Extraction-threshold omega for an audit plan: smallest omega with
// omega/gamma strictly above the threshold.
BigInt omega_from_threshold(const BigRat& threshold, const BigInt& gamma);

struct PlanRow {
  std::uint64_t t = 0;
  std::uint64_t g_crit = 0;  // smallest g rejecting H0 at alpha
  double power = 0;          // rejection probability at the assumed succ
};

// Grid evaluation of sample sizes: for each candidate t, the rejection
// threshold at level alpha and the power against a prover with the given
// true success rate. Stops at the first t reaching `target_power`.
std::vector<PlanRow> plan_sample_sizes(double p0, double true_succ, double alpha,
                                       double target_power, std::uint64_t t_max = 100000);

}  // namespace por
