#pragma once

#include <cstdint>
#include <string>

namespace obai::stats {

struct TestConfig {
  double alpha = 0.05;
  double null_p = 0.5;
  double relative_tie_epsilon = 1e-7;
};

enum class EffectLabel { kNegligible, kSmall, kModerate, kLarge };

std::string to_string(EffectLabel label);

// Per-feature comparison of pooled counts from two corpora against a
// fixed null proportion.
struct BinomialResult {
  std::string feature;
  std::int64_t k_human = 0;
  std::int64_t k_ai = 0;
  std::int64_t n = 0;
  double p_value = 1.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  double prob = 0.0;  // k_human / n
  double cohens_h = 0.0;
  EffectLabel effect_label = EffectLabel::kNegligible;
  bool significant = false;
};

// Pr(X = k) for X ~ Binomial(n, p). Uses a log-space binomial
// coefficient for n > 50 and the exact coefficient otherwise.
double binomial_pmf(std::int64_t n, std::int64_t k, double p);

// Cumulative Pr(X <= k).
double binomial_cdf(std::int64_t n, std::int64_t k, double p);

// Two-sided exact binomial test: sums the probabilities of all outcomes
// no more likely than the observed one (with a relative tolerance for
// floating-point ties). Equals the symmetric two-tail sum at null_p 0.5.
double exact_binomial_test(std::int64_t k, std::int64_t n,
                           const TestConfig& cfg = TestConfig{});

// Exact (Clopper-Pearson) confidence interval for a binomial proportion,
// found by bisection on the binomial tail to absolute tolerance 1e-10.
struct Interval {
  double low = 0.0;
  double high = 1.0;
};
Interval clopper_pearson(std::int64_t k, std::int64_t n, double alpha);

// Effect size for two proportions: 2*asin(sqrt(p1)) - 2*asin(sqrt(p2)).
double cohens_h(double p1, double p2);

// Magnitude buckets anchored at 0.2 / 0.5 / 0.8, left-closed.
EffectLabel effect_label(double h);

BinomialResult compare_feature(const std::string& feature,
                               std::int64_t k_human, std::int64_t k_ai,
                               const TestConfig& cfg = TestConfig{});

}  // namespace obai::stats
