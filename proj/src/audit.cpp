#include "por/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace por {

const char* sampling_name(Sampling s) noexcept {
  return s == Sampling::with_replacement ? "with_replacement" : "without_replacement";
}

std::optional<Sampling> sampling_from_name(const std::string& name) noexcept {
  if (name == "with_replacement" || name == "with") return Sampling::with_replacement;
  if (name == "without_replacement" || name == "without") return Sampling::without_replacement;
  return std::nullopt;
}

void AuditSample::validate() const {
  if (g > t) fail(Errc::parameter_error, "g must not exceed t");
  if (omega < 1 || omega > gamma) fail(Errc::parameter_error, "need 1 <= omega <= gamma");
  if (sampling == Sampling::without_replacement && BigInt(t) > gamma)
    fail(Errc::parameter_error, "without replacement needs t <= gamma");
}

double AuditSample::p0() const { return to_double(BigRat(omega - 1, gamma)); }

double pvalue_without_replacement(const BigInt& gamma, const BigInt& omega, std::uint64_t t,
                                  std::uint64_t g, std::uint64_t exact_limit) {
  if (omega < 1 || omega > gamma) fail(Errc::parameter_error, "need 1 <= omega <= gamma");
  if (g > t || BigInt(t) > gamma) fail(Errc::parameter_error, "need g <= t <= gamma");
  const BigInt good = omega - 1;       // challenges answered correctly under H0
  const BigInt bad = gamma - omega + 1;
  if (t <= exact_limit) {
    BigInt numerator = 0;
    for (std::uint64_t i = g; i <= t; ++i) {
      if (BigInt(i) > good || BigInt(t - i) > bad) continue;
      numerator += binom(good, i) * binom(bad, t - i);
    }
    return to_double(BigRat(numerator, binom(gamma, t)));
  }
  // Log-gamma path for large draws. log C(a, b) via sums of logs of the
  // falling factorial, which stays accurate for arbitrarily large a.
  auto log_binom = [](const BigInt& a, std::uint64_t b) -> double {
    if (BigInt(b) > a) return -HUGE_VAL;
    double acc = -std::lgamma(static_cast<double>(b) + 1);
    for (std::uint64_t i = 0; i < b; ++i) acc += log2_big(a - i) * std::numbers::ln2;
    return acc;
  };
  const double log_total = log_binom(gamma, t);
  double sum = 0, comp = 0;
  for (std::uint64_t i = g; i <= t; ++i) {
    if (BigInt(i) > good || BigInt(t - i) > bad) continue;
    const double term = std::exp(log_binom(good, i) + log_binom(bad, t - i) - log_total);
    const double y = term - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return std::min(sum, 1.0);
}

double pvalue_with_replacement(double p0, std::uint64_t t, std::uint64_t g) {
  if (p0 < 0 || p0 > 1) fail(Errc::parameter_error, "p0 must lie in [0, 1]");
  if (g > t) fail(Errc::parameter_error, "g must not exceed t");
  if (g == 0) return 1.0;
  if (p0 == 0) return 0.0;
  if (p0 == 1) return 1.0;
  const double log_p = std::log(p0);
  const double log_1mp = std::log1p(-p0);
  double sum = 0, comp = 0;
  for (std::uint64_t i = g; i <= t; ++i) {
    const double log_c = std::lgamma(static_cast<double>(t) + 1) -
                         std::lgamma(static_cast<double>(i) + 1) -
                         std::lgamma(static_cast<double>(t - i) + 1);
    const double term =
        std::exp(log_c + static_cast<double>(i) * log_p + static_cast<double>(t - i) * log_1mp);
    const double y = term - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return std::min(sum, 1.0);
}

ConfidenceBound lower_conf_bound(std::uint64_t t, std::uint64_t g, double confidence) {
  if (confidence <= 0 || confidence >= 1)
    fail(Errc::parameter_error, "confidence must lie in (0, 1)");
  if (g > t || t == 0) fail(Errc::parameter_error, "need 1 <= g <= t");
  if (g == 0) return ConfidenceBound{0.0, true};
  const double target = 1 - confidence;
  // tail(theta) = P[X >= g], strictly increasing in theta for g >= 1;
  // bisect for tail(theta) = target.
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (pvalue_with_replacement(mid, t, g) < target)
      lo = mid;
    else
      hi = mid;
  }
  return ConfidenceBound{0.5 * (lo + hi), false};
}

AuditReport audit_decision(const AuditSample& sample, double alpha) {
  sample.validate();
  if (alpha <= 0 || alpha >= 1) fail(Errc::parameter_error, "alpha must lie in (0, 1)");
  AuditReport report;
  report.sample = sample;
  report.alpha = alpha;
  report.confidence_level = 1 - alpha;
  report.p_value =
      sample.sampling == Sampling::with_replacement
          ? pvalue_with_replacement(sample.p0(), sample.t, sample.g)
          : pvalue_without_replacement(sample.gamma, sample.omega, sample.t, sample.g);
  report.decision = report.p_value < alpha ? AuditDecision::reject_h0
                                           : AuditDecision::insufficient_evidence;

  const ConfidenceBound bound = lower_conf_bound(sample.t, sample.g, report.confidence_level);
  report.theta_l = bound.theta_l;
  report.theta_degenerate = bound.degenerate;

  // The p-value rule and the confidence-bound rule are two formulations of
  // the same binomial test; under with-replacement sampling they must agree
  // (up to the bisection tolerance at the decision boundary).
  if (sample.sampling == Sampling::with_replacement && !bound.degenerate) {
    const bool by_bound = sample.p0() < bound.theta_l;
    const bool by_pvalue = report.decision == AuditDecision::reject_h0;
    const bool near_boundary = std::abs(report.p_value - alpha) < 1e-6 ||
                               std::abs(sample.p0() - bound.theta_l) < 1e-6;
    if (by_bound != by_pvalue && !near_boundary)
      fail(Errc::parameter_error, "decision formulations disagree (internal inconsistency)");
  }

  if (report.decision == AuditDecision::insufficient_evidence)
    report.advice = "insufficient evidence; re-audit with a larger sample";
  return report;
}

std::uint64_t min_sample_all_correct(double p0, double alpha) {
  if (p0 <= 0 || p0 >= 1) fail(Errc::parameter_error, "p0 must lie in (0, 1)");
  if (alpha <= 0 || alpha >= 1) fail(Errc::parameter_error, "alpha must lie in (0, 1)");
  // Smallest t with p0^t < alpha; start from the closed form and adjust for
  // floating-point boundary effects.
  std::uint64_t t = static_cast<std::uint64_t>(
      std::max(0.0, std::floor(std::log(alpha) / std::log(p0)))) + 1;
  while (t > 1 && static_cast<double>(t - 1) * std::log(p0) < std::log(alpha)) --t;
  while (static_cast<double>(t) * std::log(p0) >= std::log(alpha)) ++t;
  return t;
}

BigInt omega_from_threshold(const BigRat& threshold, const BigInt& gamma) {
  // floor(threshold * gamma) + 1, exactly.
  const BigInt num = boost::multiprecision::numerator(threshold) * gamma;
  const BigInt den = boost::multiprecision::denominator(threshold);
  return num / den + 1;
}

std::vector<PlanRow> plan_sample_sizes(double p0, double true_succ, double alpha,
                                       double target_power, std::uint64_t t_max) {
  if (true_succ <= p0)
    fail(Errc::parameter_error, "assumed success rate must exceed the null rate");
  std::vector<PlanRow> rows;
  for (std::uint64_t t = 10; t <= t_max; t = t < 100 ? t + 10 : t + t / 10) {
    // Smallest g with a sub-alpha tail: binary search over g.
    std::uint64_t lo = 0, hi = t + 1;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (pvalue_with_replacement(p0, t, mid) < alpha)
        hi = mid;
      else
        lo = mid;
    }
    if (hi > t) continue;  // even an all-correct run cannot reject at this t
    PlanRow row;
    row.t = t;
    row.g_crit = hi;
    // Power: probability of at least g_crit successes at the true rate.
    row.power = pvalue_with_replacement(true_succ, t, row.g_crit);
    rows.push_back(row);
    if (row.power >= target_power) break;
  }
  return rows;
}

}  // namespace por
