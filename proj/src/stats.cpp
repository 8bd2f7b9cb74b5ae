#include "obai/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace obai::stats {
namespace {

void check_kn(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("binomial: need 0 <= k <= n, got k=" +
                                std::to_string(k) + " n=" + std::to_string(n));
}

double log_choose(std::int64_t n, std::int64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double exact_choose(std::int64_t n, std::int64_t k) {
  // n <= 50 keeps every intermediate below 2^53.
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (std::int64_t i = 1; i <= k; ++i)
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

}  // namespace

std::string to_string(EffectLabel label) {
  switch (label) {
    case EffectLabel::kNegligible:
      return "negligible";
    case EffectLabel::kSmall:
      return "small";
    case EffectLabel::kModerate:
      return "moderate";
    case EffectLabel::kLarge:
      break;
  }
  return "large";
}

double binomial_pmf(std::int64_t n, std::int64_t k, double p) {
  check_kn(n, k);
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("binomial_pmf: p outside [0,1]");
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  if (n <= 50)
    return exact_choose(n, k) * std::pow(p, static_cast<double>(k)) *
           std::pow(1.0 - p, static_cast<double>(n - k));
  double log_pmf = log_choose(n, k) + static_cast<double>(k) * std::log(p) +
                   static_cast<double>(n - k) * std::log1p(-p);
  return std::exp(log_pmf);
}

double binomial_cdf(std::int64_t n, std::int64_t k, double p) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("binomial_cdf: need n >= 0 and k >= 0");
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  // Start at the smaller tail and use the pmf recurrence; summing the
  // upper tail instead keeps cancellation out of values near 1.
  if (static_cast<double>(k + 1) <= p * static_cast<double>(n + 1)) {
    double term = binomial_pmf(n, 0, p);
    double sum = term;
    for (std::int64_t i = 0; i < k; ++i) {
      term *= static_cast<double>(n - i) / static_cast<double>(i + 1) * p /
              (1.0 - p);
      sum += term;
    }
    return sum > 1.0 ? 1.0 : sum;
  }
  double term = binomial_pmf(n, n, p);
  double sum = term;
  for (std::int64_t i = n; i > k + 1; --i) {
    term *= static_cast<double>(i) / static_cast<double>(n - i + 1) *
            (1.0 - p) / p;
    sum += term;
  }
  double out = 1.0 - sum;
  if (out < 0.0) return 0.0;
  return out;
}

double exact_binomial_test(std::int64_t k, std::int64_t n,
                           const TestConfig& cfg) {
  if (n < 1) throw std::invalid_argument("exact_binomial_test: n must be >= 1");
  check_kn(n, k);
  const double p0 = cfg.null_p;
  const double threshold =
      binomial_pmf(n, k, p0) * (1.0 + cfg.relative_tie_epsilon);
  double total = 0.0;
  for (std::int64_t i = 0; i <= n; ++i) {
    double pmf = binomial_pmf(n, i, p0);
    if (pmf <= threshold) total += pmf;
  }
  if (total > 1.0) return 1.0;
  if (total < 0.0) return 0.0;
  return total;
}

Interval clopper_pearson(std::int64_t k, std::int64_t n, double alpha) {
  if (n < 1) throw std::invalid_argument("clopper_pearson: n must be >= 1");
  check_kn(n, k);
  if (alpha <= 0.0 || alpha >= 1.0)
    throw std::invalid_argument("clopper_pearson: alpha outside (0,1)");
  const double half = alpha / 2.0;
  Interval out;

  auto bisect = [](auto f, double target) {
    // f must be monotone decreasing in p; solve f(p) = target.
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
      double mid = 0.5 * (lo + hi);
      if (f(mid) > target)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  if (k == 0) {
    out.low = 0.0;
  } else {
    // low solves P(X >= k | p) = alpha/2; that tail grows with p.
    out.low = bisect(
        [&](double p) { return binomial_cdf(n, k - 1, p); }, 1.0 - half);
  }
  if (k == n) {
    out.high = 1.0;
  } else {
    // high solves P(X <= k | p) = alpha/2.
    out.high = bisect([&](double p) { return binomial_cdf(n, k, p); }, half);
  }
  return out;
}

double cohens_h(double p1, double p2) {
  if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0)
    throw std::invalid_argument("cohens_h: proportions must be in [0,1]");
  return 2.0 * std::asin(std::sqrt(p1)) - 2.0 * std::asin(std::sqrt(p2));
}

EffectLabel effect_label(double h) {
  double a = std::fabs(h);
  if (a < 0.2) return EffectLabel::kNegligible;
  if (a < 0.5) return EffectLabel::kSmall;
  if (a < 0.8) return EffectLabel::kModerate;
  return EffectLabel::kLarge;
}

BinomialResult compare_feature(const std::string& feature,
                               std::int64_t k_human, std::int64_t k_ai,
                               const TestConfig& cfg) {
  if (k_human < 0 || k_ai < 0)
    throw std::invalid_argument("compare_feature: negative count");
  if (k_human + k_ai < 1)
    throw std::invalid_argument("compare_feature: both counts are zero for '" +
                                feature + "'");
  BinomialResult r;
  r.feature = feature;
  r.k_human = k_human;
  r.k_ai = k_ai;
  r.n = k_human + k_ai;
  r.prob = static_cast<double>(k_human) / static_cast<double>(r.n);
  r.p_value = exact_binomial_test(k_human, r.n, cfg);
  Interval ci = clopper_pearson(k_human, r.n, cfg.alpha);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  r.cohens_h = cohens_h(r.prob, 1.0 - r.prob);
  r.effect_label = effect_label(r.cohens_h);
  r.significant = r.p_value < cfg.alpha;
  return r;
}

}  // namespace obai::stats
