#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "obai/stats.hpp"

using namespace obai::stats;

namespace {

// Independent enumeration oracle. Binomial coefficients come from
// Pascal's triangle in long double (exact up to n = 60, ~1e-17 relative
// beyond); the two-sided rule sums every outcome whose coefficient is no
// larger than the observed one. Null p is fixed at 1/2 so pmf comparison
// reduces to coefficient comparison.
long double oracle_two_sided_half(int n, int k) {
  std::vector<long double> row(static_cast<std::size_t>(n) + 1, 0.0L);
  row[0] = 1.0L;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  const long double ck = row[k];
  long double total = 0.0L;
  for (int i = 0; i <= n; ++i)
    if (row[i] <= ck * (1.0L + 1e-12L)) total += row[i];
  return total / std::pow(2.0L, static_cast<long double>(n));
}

}  // namespace

TEST_CASE("binomial_pmf small-n closed forms") {
  CHECK(binomial_pmf(10, 5, 0.5) == doctest::Approx(252.0 / 1024.0).epsilon(1e-12));
  CHECK(binomial_pmf(7, 0, 0.0) == 1.0);
  CHECK(binomial_pmf(4, 4, 0.5) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  CHECK_THROWS(binomial_pmf(3, 4, 0.5));
  CHECK_THROWS(binomial_pmf(3, 1, 1.5));
}

TEST_CASE("binomial_pmf symmetric at p=0.5") {
  for (int n : {3, 17, 50, 61, 200})
    for (int k = 0; k <= n; ++k)
      CHECK(binomial_pmf(n, k, 0.5) ==
            doctest::Approx(binomial_pmf(n, n - k, 0.5)).epsilon(1e-12));
}

TEST_CASE("exact test matches hand-computed examples") {
  CHECK(exact_binomial_test(5, 10) == 1.0);
  CHECK(exact_binomial_test(8, 10) == doctest::Approx(0.109375).epsilon(1e-12));
  CHECK(exact_binomial_test(10, 10) ==
        doctest::Approx(2.0 / 1024.0).epsilon(1e-12));
  CHECK_THROWS(exact_binomial_test(0, 0));
}

TEST_CASE("exact test equals the enumeration oracle for n <= 60") {
  for (int n = 1; n <= 60; ++n)
    for (int k = 0; k <= n; ++k) {
      double impl = exact_binomial_test(k, n);
      double oracle = static_cast<double>(oracle_two_sided_half(n, k));
      CHECK(std::fabs(impl - oracle) <= 1e-10);
    }
}

TEST_CASE("exact test symmetry and monotonicity at p0 = 0.5") {
  for (int n : {5, 12, 33, 57, 101}) {
    for (int k = 0; k <= n; ++k)
      CHECK(exact_binomial_test(k, n) ==
            doctest::Approx(exact_binomial_test(n - k, n)).epsilon(1e-14));
    double prev = 2.0;
    for (int k = (n + 1) / 2; k <= n; ++k) {
      double p = exact_binomial_test(k, n);
      CHECK(p <= prev + 1e-14);
      prev = p;
    }
  }
}

TEST_CASE("clopper_pearson closed-form anchors") {
  Interval ci = clopper_pearson(0, 10, 0.05);
  CHECK(ci.low == 0.0);
  CHECK(ci.high ==
        doctest::Approx(1.0 - std::pow(0.025, 0.1)).epsilon(1e-6));

  Interval top = clopper_pearson(10, 10, 0.05);
  CHECK(top.high == 1.0);
  CHECK(top.low == doctest::Approx(std::pow(0.025, 0.1)).epsilon(1e-6));
}

TEST_CASE("clopper_pearson bounds satisfy their tail equations") {
  std::mt19937 rng(7331);
  const double alphas[] = {0.01, 0.05, 0.10};
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 200);
    int k = static_cast<int>(rng() % (n + 1));
    double alpha = alphas[trial % 3];
    Interval ci = clopper_pearson(k, n, alpha);
    double point = static_cast<double>(k) / n;
    CHECK(ci.low <= point + 1e-12);
    CHECK(ci.high >= point - 1e-12);
    if (k > 0) {
      double upper_tail = 1.0 - binomial_cdf(n, k - 1, ci.low);
      CHECK(std::fabs(upper_tail - alpha / 2.0) <= 1e-8);
    }
    if (k < n) {
      double lower_tail = binomial_cdf(n, k, ci.high);
      CHECK(std::fabs(lower_tail - alpha / 2.0) <= 1e-8);
    }
  }
}

TEST_CASE("cohens_h reference values and antisymmetry") {
  CHECK(cohens_h(0.65, 0.35) == doctest::Approx(0.61).epsilon(0.02));
  CHECK(cohens_h(0.41, 0.59) == doctest::Approx(-0.36).epsilon(0.02));
  CHECK(cohens_h(0.5, 0.5) == 0.0);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    double a = unit(rng), b = unit(rng);
    CHECK(cohens_h(a, b) == doctest::Approx(-cohens_h(b, a)).epsilon(1e-12));
    CHECK(std::fabs(cohens_h(a, b)) <= 3.1415926535897932 + 1e-12);
  }
  CHECK_THROWS(cohens_h(-0.1, 0.5));
  CHECK_THROWS(cohens_h(0.5, 1.1));
}

TEST_CASE("effect labels bucket by magnitude, left-closed") {
  CHECK(effect_label(0.0) == EffectLabel::kNegligible);
  CHECK(effect_label(0.19) == EffectLabel::kNegligible);
  CHECK(effect_label(0.2) == EffectLabel::kSmall);
  CHECK(effect_label(-0.36) == EffectLabel::kSmall);
  CHECK(effect_label(0.5) == EffectLabel::kModerate);
  CHECK(effect_label(0.60) == EffectLabel::kModerate);
  CHECK(effect_label(0.8) == EffectLabel::kLarge);
  CHECK(effect_label(-3.0) == EffectLabel::kLarge);
}

TEST_CASE("compare_feature assembles the full row") {
  SUBCASE("perfect symmetry") {
    BinomialResult r = compare_feature("noun", 25, 25);
    CHECK(r.p_value == 1.0);
    CHECK(r.cohens_h == 0.0);
    CHECK_FALSE(r.significant);
    CHECK(r.prob == 0.5);
  }
  SUBCASE("80 vs 20") {
    BinomialResult r = compare_feature("verb", 80, 20);
    CHECK(r.prob == doctest::Approx(0.8));
    CHECK(r.cohens_h == doctest::Approx(cohens_h(0.8, 0.2)));
    double oracle = static_cast<double>(oracle_two_sided_half(100, 80));
    CHECK(r.p_value == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(r.significant);
    CHECK(r.ci_low <= 0.8);
    CHECK(r.ci_high >= 0.8);
  }
  SUBCASE("zero against five") {
    BinomialResult r = compare_feature("dental", 0, 5);
    CHECK(r.prob == 0.0);
    CHECK(r.ci_low == 0.0);
    CHECK(r.cohens_h == doctest::Approx(-3.14159265358979).epsilon(1e-10));
    CHECK(r.effect_label == EffectLabel::kLarge);
  }
  SUBCASE("both zero is an error") {
    CHECK_THROWS(compare_feature("nothing", 0, 0));
  }
}
