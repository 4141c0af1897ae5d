// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "consistat/errors.hpp"
#include "consistat/hypothesis_tests.hpp"
#include "consistat/rng.hpp"
#include "oracle.hpp"

using namespace consistat;

namespace {

std::vector<double> random_sample(CounterRng& rng, int n, double mean = 0.0, double sd = 1.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.next_normal(mean, sd);
  return v;
}

// Removes the component of y along centered x, leaving Pearson r ~ 0
// up to rounding.
void orthogonalize(std::vector<double>& y, const std::vector<double>& x) {
  const auto sx = summarize(x);
  const double cov = covariance_n(x, y);
  const double beta = cov / sx.var_n;
  const auto sy = summarize(y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = y[i] - sy.mean - beta * (x[i] - sx.mean);
  }
}

}  // namespace

TEST_CASE("midranks: plain and tied") {
  const std::vector<double> plain{3.0, 1.0, 2.0};
  const auto r1 = midranks(plain);
  CHECK(r1 == std::vector<double>{3.0, 1.0, 2.0});
  const std::vector<double> tied{1.0, 2.0, 2.0, 3.0};
  const auto r2 = midranks(tied);
  CHECK(r2 == std::vector<double>{1.0, 2.5, 2.5, 4.0});
}

TEST_CASE("sample summary carries both variance conventions") {
  const std::vector<double> v{1.0, 2.0, 3.0};
  const auto s = summarize(v);
  CHECK(s.mean == 2.0);
  CHECK(s.var_n == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(s.var_unbiased == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.var_unbiased ==
        doctest::Approx(s.var_n * static_cast<double>(s.n) / (s.n - 1.0)).epsilon(1e-15));
}

TEST_CASE("rater influence: degenerate and regular paths") {
  const std::vector<double> zeros{0.0, 0.0, 0.0, 0.0};
  auto out = rater_influence_test(zeros, 0.05);
  CHECK_FALSE(out.decision.reject);
  CHECK(out.decision.p_value == 1.0);

  const std::vector<double> offset{5.0, 5.0, 5.0};
  out = rater_influence_test(offset, 0.05);
  CHECK(out.decision.reject);
  CHECK(out.decision.p_value == 0.0);

  // Hand check: d = (1, -1, 2, 0), mean 0.5, divisor-n sd sqrt(1.25);
  // t = 0.5 / (sqrt(1.25)/sqrt(3)).
  const std::vector<double> diffs{1.0, -1.0, 2.0, 0.0};
  out = rater_influence_test(diffs, 0.05);
  const double expected_t = 0.5 / (std::sqrt(1.25) / std::sqrt(3.0));
  CHECK(out.statistic == doctest::Approx(expected_t).epsilon(1e-12));
  CHECK(out.df_or_sizes == std::vector<int>{3});
  CHECK_THROWS_AS(rater_influence_test(std::vector<double>{1.0}, 0.05), DomainError);
}

TEST_CASE("KS normality: constant sample, brute-force D, and a clean normal sample") {
  const std::vector<double> constant{2.0, 2.0, 2.0, 2.0};
  auto out = ks_normality(constant, 0.05);
  CHECK(out.decision.reject);
  CHECK(out.decision.p_value == 0.0);

  const std::vector<double> tiny{1.0, 2.0, 3.0};
  out = ks_normality(tiny, 0.05);
  const auto s = summarize(tiny);
  CHECK(out.statistic ==
        doctest::Approx(oracle::brute_force_ks_d(tiny, s.mean, std::sqrt(s.var_n)))
            .epsilon(1e-12));

  // Normal quantiles at plotting positions (i - 0.5)/n: as close to
  // normal as a 20-point sample gets.
  std::vector<double> ideal(20);
  for (int i = 0; i < 20; ++i) {
    ideal[i] = std_normal_quantile((i + 0.5) / 20.0);
  }
  out = ks_normality(ideal, 0.05);
  CHECK_FALSE(out.decision.reject);
  CHECK(out.statistic < 0.08);
  const auto si = summarize(ideal);
  CHECK(out.statistic ==
        doctest::Approx(oracle::brute_force_ks_d(ideal, si.mean, std::sqrt(si.var_n)))
            .epsilon(1e-12));

  CHECK_THROWS_AS(ks_normality(std::vector<double>{1.0, 2.0}, 0.05), DomainError);
}

TEST_CASE("KS normality flags an exponential-shaped sample") {
  CounterRng rng(7, 0);
  std::vector<double> skewed(200);
  for (auto& v : skewed) v = -std::log(rng.next_uniform());
  const auto out = ks_normality(skewed, 0.05);
  CHECK(out.decision.reject);
}

TEST_CASE("lilliefors switch tightens the critical value") {
  CounterRng rng(11, 0);
  // Mildly skewed data at n = 40: the plain asymptotic p-value is
  // conservative, the corrected one smaller.
  std::vector<double> sample(40);
  for (auto& v : sample) {
    const double z = rng.next_normal(0.0, 1.0);
    v = z + 0.4 * z * z;
  }
  const auto plain = ks_normality(sample, 0.05, false);
  const auto lillie = ks_normality(sample, 0.05, true);
  CHECK(lillie.decision.p_value < plain.decision.p_value);
}

TEST_CASE("correlation: exact lines, hand ranks, and errors") {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  std::vector<double> y{3.0, 5.0, 7.0, 9.0};  // 2x + 1
  auto out = correlation(x, y, CorrelationKind::Pearson, 0.05);
  CHECK(out.r == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(out.p_value == 0.0);

  y = {-1.0, -2.0, -3.0, -4.0};
  out = correlation(x, y, CorrelationKind::Pearson, 0.05);
  CHECK(out.r == doctest::Approx(-1.0).epsilon(1e-14));

  // Hand-computed Spearman: ranks (1,2,3,4) vs (1,3,2,4), sum d^2 = 2,
  // rho = 1 - 6*2/(4*15) = 0.8.
  y = {1.0, 3.0, 2.0, 4.0};
  out = correlation(x, y, CorrelationKind::Spearman, 0.05);
  CHECK(out.r == doctest::Approx(0.8).epsilon(1e-14));
  // And (2,1,4,3): sum d^2 = 4, rho = 0.6.
  y = {2.0, 1.0, 4.0, 3.0};
  out = correlation(x, y, CorrelationKind::Spearman, 0.05);
  CHECK(out.r == doctest::Approx(0.6).epsilon(1e-14));

  // Kendall: a perfectly concordant order.
  y = {10.0, 20.0, 30.0, 40.0};
  out = correlation(x, y, CorrelationKind::Kendall, 0.05);
  CHECK(out.r == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(correlation(x, std::vector<double>{1.0, 1.0, 1.0, 1.0},
                              CorrelationKind::Pearson, 0.05),
                  ZeroVarianceError);
  CHECK_THROWS_AS(correlation(x, std::vector<double>{1.0, 2.0}, CorrelationKind::Pearson, 0.05),
                  DomainError);
}

TEST_CASE("independent means, large samples") {
  CounterRng rng(3, 0);
  const auto a = random_sample(rng, 40);
  const auto sa = summarize(a);
  auto out = means_indep_large(sa, sa, 0.05);
  CHECK(out.statistic == 0.0);
  CHECK_FALSE(out.decision.reject);

  // Direct-substitution oracle.
  const auto b = random_sample(rng, 55, 0.3, 1.4);
  const auto sb = summarize(b);
  out = means_indep_large(sa, sb, 0.05);
  const double expected =
      (sa.mean - sb.mean) /
      std::sqrt(sa.var_n / (sa.n - 1.0) + sb.var_n / (sb.n - 1.0));
  CHECK(out.statistic == doctest::Approx(expected).epsilon(1e-14));
  CHECK(out.test_id == TestId::MeansIndepZ);

  CHECK_THROWS_AS(means_indep_large(summarize(random_sample(rng, 30)), sb, 0.05), DomainError);
}

TEST_CASE("independent means, small samples: pooled t") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  auto out = means_indep_small(summarize(a), summarize(a), 0.05);
  CHECK(out.statistic == 0.0);
  CHECK_FALSE(out.decision.reject);

  const std::vector<double> b{2.0, 3.0, 4.0};
  out = means_indep_small(summarize(a), summarize(b), 0.05);
  CHECK(out.statistic == doctest::Approx(oracle::pooled_t(a, b)).epsilon(1e-13));
  CHECK(out.statistic == doctest::Approx(-std::sqrt(1.5)).epsilon(1e-13));
  CHECK(out.df_or_sizes == std::vector<int>{4});

  // Swapping the samples negates t and keeps the p-value.
  const auto swapped = means_indep_small(summarize(b), summarize(a), 0.05);
  CHECK(swapped.statistic == doctest::Approx(-out.statistic).epsilon(1e-14));
  CHECK(swapped.decision.p_value == doctest::Approx(out.decision.p_value).epsilon(1e-14));
}

TEST_CASE("independent variances: F ratio") {
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0};
  std::vector<double> doubled(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) doubled[i] = 2.0 * a[i];
  auto out = var_indep_f(summarize(a), summarize(doubled), 0.05);
  CHECK(out.statistic == doctest::Approx(0.25).epsilon(1e-14));

  out = var_indep_f(summarize(a), summarize(a), 0.05);
  CHECK(out.statistic == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(out.decision.reject);

  CounterRng rng(5, 0);
  const auto x = random_sample(rng, 9);
  const auto y = random_sample(rng, 9, 0.0, 2.0);
  const auto fwd = var_indep_f(summarize(x), summarize(y), 0.05);
  const auto rev = var_indep_f(summarize(y), summarize(x), 0.05);
  CHECK(fwd.statistic * rev.statistic == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(fwd.decision.p_value == doctest::Approx(rev.decision.p_value).epsilon(1e-12));

  // Degenerate variance paths.
  const std::vector<double> flat{3.0, 3.0, 3.0};
  CHECK(var_indep_f(summarize(a), summarize(flat), 0.05).decision.p_value == 0.0);
  CHECK(var_indep_f(summarize(flat), summarize(flat), 0.05).decision.p_value == 1.0);
}

TEST_CASE("related means Z: degenerate and reduction to the independent Z") {
  const std::vector<double> x{1.0, 2.0, 3.0};
  auto out = means_related_z(x, x, 0.05);
  CHECK_FALSE(out.decision.reject);
  CHECK(out.decision.p_value == 1.0);

  // With r12 = 0 the statistic coincides with the independent
  // large-sample Z on the same summaries.
  CounterRng rng(9, 0);
  const auto base = random_sample(rng, 50, 10.0, 2.0);
  auto other = random_sample(rng, 50, 10.5, 1.5);
  orthogonalize(other, base);
  for (auto& v : other) v += 10.5;
  const auto related = means_related_z(base, other, 0.05);
  const auto indep = means_indep_large(summarize(base), summarize(other), 0.05);
  CHECK(std::fabs(related.statistic - indep.statistic) < 1e-12);

  // Direct-substitution check on constructed pairs.
  const std::vector<double> u{1.0, 3.0, 5.0, 7.0};
  const std::vector<double> v{2.0, 3.0, 7.0, 6.0};
  const auto su = summarize(u);
  const auto sv = summarize(v);
  const double cov = covariance_n(u, v);
  const double expected =
      (su.mean - sv.mean) / std::sqrt((su.var_n + sv.var_n - 2.0 * cov) / (u.size() - 1.0));
  const auto uv = means_related_z(u, v, 0.05);
  CHECK(uv.statistic == doctest::Approx(expected).epsilon(1e-13));
  const auto detail = std::get<MeansDetail>(uv.detail);
  REQUIRE(detail.r12.has_value());
  CHECK(*detail.r12 ==
        doctest::Approx(cov / std::sqrt(su.var_n * sv.var_n)).epsilon(1e-13));
}

TEST_CASE("related variances chi-square: zero at equal variances, non-negative, symmetric") {
  // Integer data keeps the permuted moments bit-identical.
  const std::vector<double> x{3.0, 7.0, 1.0, 9.0, 4.0, 6.0};
  const std::vector<double> y{9.0, 1.0, 4.0, 3.0, 6.0, 7.0};  // permutation of x
  auto out = var_related_chi2(x, y, 0.05);
  CHECK(out.statistic == 0.0);
  CHECK_FALSE(out.decision.reject);
  CHECK(out.decision.p_value == 1.0);

  CounterRng rng(13, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const auto a = random_sample(rng, 12, 0.0, 1.0);
    const auto b = random_sample(rng, 12, 0.0, 1.7);
    const auto fwd = var_related_chi2(a, b, 0.05);
    CHECK(fwd.statistic >= 0.0);
    const auto rev = var_related_chi2(b, a, 0.05);
    CHECK(fwd.statistic == doctest::Approx(rev.statistic).epsilon(1e-12));
  }

  // An affine relation makes the covariance matrix singular.
  std::vector<double> affine(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) affine[i] = 2.0 * x[i] + 3.0;
  CHECK_THROWS_AS(var_related_chi2(x, affine, 0.05), ZeroVarianceError);
  CHECK_THROWS_AS(var_related_chi2(std::vector<double>{1.0, 2.0, 3.0},
                                   std::vector<double>{2.0, 1.0, 3.0}, 0.05),
                  DomainError);
}

TEST_CASE("related variances decision tracks the Pitman-Morgan route") {
  CounterRng rng(17, 0);
  int agreements = 0;
  const int reps = 200;
  for (int rep = 0; rep < reps; ++rep) {
    std::vector<double> x(30), y(30);
    for (int i = 0; i < 30; ++i) {
      const double z1 = rng.next_normal(0.0, 1.0);
      const double z2 = rng.next_normal(0.0, 1.0);
      x[i] = z1;
      y[i] = 0.5 * z1 + std::sqrt(1.0 - 0.25) * z2;
    }
    const auto mine = var_related_chi2(x, y, 0.05);
    const bool pm_rejects = oracle::pitman_morgan_p(x, y) < 0.05;
    if (mine.decision.reject == pm_rejects) ++agreements;
  }
  CHECK(agreements >= reps * 97 / 100);
}

TEST_CASE("Mann-Whitney: separation, midranks, and the U_A + U_B identity") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  const std::vector<double> b{4.0, 5.0, 6.0};
  auto out = mann_whitney(a, b, 0.05);
  auto detail = std::get<RankTestDetail>(out.detail);
  CHECK(detail.rank_sum_a == 6.0);
  CHECK(detail.u_a == 9.0);
  CHECK(detail.u_b == 0.0);
  CHECK(out.statistic == 0.0);  // U = min
  CHECK(out.test_id == TestId::MannWhitneySmall);

  // Tied value across the samples: midranks, and the exact regime
  // falls back to the normal approximation with a warning.
  const std::vector<double> a2{1.0, 2.0};
  const std::vector<double> b2{2.0, 3.0};
  out = mann_whitney(a2, b2, 0.05);
  detail = std::get<RankTestDetail>(out.detail);
  CHECK(detail.rank_sum_a == 3.5);
  CHECK(detail.u_a == 3.5);
  CHECK(detail.u_b == 0.5);
  CHECK(detail.u_a + detail.u_b == 4.0);
  CHECK(detail.tie_groups == 1);
  CHECK(out.test_id == TestId::MannWhitneyLarge);
  CHECK_FALSE(out.warnings.empty());

  CounterRng rng(23, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n_a = 1 + static_cast<int>(rng.next_u64() % 15);
    const int n_b = 1 + static_cast<int>(rng.next_u64() % 15);
    const auto x = random_sample(rng, n_a);
    const auto y = random_sample(rng, n_b, 0.4);
    const auto o = mann_whitney(x, y, 0.05);
    const auto d = std::get<RankTestDetail>(o.detail);
    CHECK(d.u_a + d.u_b == doctest::Approx(n_a * n_b).epsilon(1e-14));
    CHECK(d.rank_sum_a + d.rank_sum_b ==
          doctest::Approx((n_a + n_b) * (n_a + n_b + 1) / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("Mann-Whitney is invariant under strictly monotone transforms") {
  CounterRng rng(29, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const auto x = random_sample(rng, 8);
    const auto y = random_sample(rng, 12, 0.5);
    std::vector<double> ex(x.size()), ey(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) ex[i] = std::exp(x[i]);
    for (std::size_t i = 0; i < y.size(); ++i) ey[i] = std::exp(y[i]);
    const auto plain = mann_whitney(x, y, 0.05);
    const auto mapped = mann_whitney(ex, ey, 0.05);
    CHECK(plain.statistic == mapped.statistic);
    CHECK(plain.decision.p_value == mapped.decision.p_value);
  }
}

TEST_CASE("Mann-Whitney large regime and the pmf cap fallthrough") {
  CounterRng rng(31, 0);
  const auto a = random_sample(rng, 11);
  const auto b = random_sample(rng, 12);
  auto out = mann_whitney(a, b, 0.05);
  CHECK(out.test_id == TestId::MannWhitneyLarge);
  const auto detail = std::get<RankTestDetail>(out.detail);
  REQUIRE(detail.mu_u.has_value());
  CHECK(*detail.mu_u == doctest::Approx(11.0 * 12.0 / 2.0));
  REQUIRE(detail.sigma_u.has_value());
  CHECK(*detail.sigma_u == doctest::Approx(std::sqrt(11.0 * 12.0 * 24.0 / 12.0)));

  // nA <= 10 but nA * nB beyond the exact cap: normal route + warning.
  const auto small = random_sample(rng, 3);
  const auto huge = random_sample(rng, 150);
  out = mann_whitney(small, huge, 0.05);
  CHECK(out.test_id == TestId::MannWhitneyLarge);
  CHECK_FALSE(out.warnings.empty());
}

TEST_CASE("Wilcoxon signed rank: hand values and identities") {
  // Differences (1, -2, 3) rank to T_p = 4, T_N = 2.
  const std::vector<double> y{0.0, 0.0, 0.0};
  auto out = wilcoxon_signed_rank(std::vector<double>{1.0, -2.0, 3.0}, y, 0.05);
  auto detail = std::get<SignedRankDetail>(out.detail);
  CHECK(detail.t_positive == 4.0);
  CHECK(detail.t_negative == 2.0);

  out = wilcoxon_signed_rank(std::vector<double>{1.0, 2.0, 3.0}, y, 0.05);
  detail = std::get<SignedRankDetail>(out.detail);
  CHECK(detail.t_positive == 6.0);
  CHECK(detail.t_negative == 0.0);

  // All pairs equal: accepted with p = 1.
  out = wilcoxon_signed_rank(y, y, 0.05);
  CHECK(out.decision.p_value == 1.0);
  CHECK_FALSE(out.decision.reject);

  // Zero differences are discarded before ranking.
  out = wilcoxon_signed_rank(std::vector<double>{1.0, 5.0, 2.0, 7.0},
                             std::vector<double>{1.0, 4.0, 2.0, 3.0}, 0.05);
  detail = std::get<SignedRankDetail>(out.detail);
  CHECK(detail.n_effective == 2);

  CounterRng rng(37, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 20);
    const auto x = random_sample(rng, n);
    const auto z = random_sample(rng, n, 0.3);
    const auto o = wilcoxon_signed_rank(x, z, 0.05);
    const auto d = std::get<SignedRankDetail>(o.detail);
    const double n_eff = static_cast<double>(d.n_effective);
    CHECK(d.t_positive + d.t_negative ==
          doctest::Approx(n_eff * (n_eff + 1.0) / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("Wilcoxon regimes, tie fallback, and scale invariance") {
  CounterRng rng(41, 0);
  const auto x = random_sample(rng, 40);
  const auto y = random_sample(rng, 40, 0.2);
  auto out = wilcoxon_signed_rank(x, y, 0.05);
  CHECK(out.test_id == TestId::WilcoxonLarge);

  // Tied absolute differences in the exact regime force the fallback.
  out = wilcoxon_signed_rank(std::vector<double>{1.0, 2.0, 3.0, 5.0},
                             std::vector<double>{0.0, 1.0, 1.0, 2.0}, 0.05);
  CHECK(out.test_id == TestId::WilcoxonLarge);
  CHECK_FALSE(out.warnings.empty());

  // Positive rescaling preserves signs and |d| ranks, hence the statistic.
  const auto a = random_sample(rng, 12);
  const auto b = random_sample(rng, 12, 0.4);
  std::vector<double> a2(a.size()), b2(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a2[i] = 3.0 * a[i];
    b2[i] = 3.0 * b[i];
  }
  const auto plain = wilcoxon_signed_rank(a, b, 0.05);
  const auto scaled = wilcoxon_signed_rank(a2, b2, 0.05);
  CHECK(plain.statistic == scaled.statistic);
  CHECK(plain.decision.p_value == scaled.decision.p_value);
}

TEST_CASE("intermethod t: degenerate, normal, and fallback paths") {
  auto out = intermethod_t_test(std::vector<double>{0.0, 0.0, 0.0}, 0.05);
  CHECK(out.decision.p_value == 1.0);
  out = intermethod_t_test(std::vector<double>{5.0, 5.0, 5.0}, 0.05);
  CHECK(out.decision.p_value == 0.0);
  CHECK(out.decision.reject);

  CounterRng rng(43, 0);
  const auto dab = random_sample(rng, 20, 0.1, 1.0);
  out = intermethod_t_test(dab, 0.05);
  CHECK(out.test_id == TestId::InterMethodT);
  const auto s = summarize(dab);
  const double expected = s.mean / (std::sqrt(s.var_n) / std::sqrt(19.0));
  CHECK(out.statistic == doctest::Approx(expected).epsilon(1e-13));

  // A two-point mass series is decisively non-normal: signed-rank route.
  std::vector<double> bimodal;
  for (int i = 0; i < 60; ++i) bimodal.push_back(i % 2 == 0 ? -1.0 + i * 1e-9 : 1.0 + i * 1e-9);
  out = intermethod_t_test(bimodal, 0.05);
  CHECK((out.test_id == TestId::WilcoxonSmall || out.test_id == TestId::WilcoxonLarge));
  CHECK_FALSE(out.warnings.empty());
}

TEST_CASE("every decision satisfies reject iff p < alpha and the critical-value rule") {
  CounterRng rng(47, 0);
  for (int rep = 0; rep < 300; ++rep) {
    const double alpha = 0.01 + 0.1 * rng.next_uniform();
    const int n = 31 + static_cast<int>(rng.next_u64() % 20);
    const auto x = random_sample(rng, n);
    const auto y = random_sample(rng, n, 0.3 * rng.next_uniform());
    const std::vector<TestOutcome> outcomes = {
        means_indep_large(summarize(x), summarize(y), alpha),
        means_indep_small(summarize(x), summarize(y), alpha),
        var_indep_f(summarize(x), summarize(y), alpha),
        means_related_z(x, y, alpha),
        var_related_chi2(x, y, alpha),
        mann_whitney(x, y, alpha),
        wilcoxon_signed_rank(x, y, alpha),
        rater_influence_test(x, alpha),
        ks_normality(x, alpha),
    };
    for (const auto& o : outcomes) {
      CHECK(o.decision.reject == (o.decision.p_value < alpha));
      CHECK(o.decision.p_value >= 0.0);
      CHECK(o.decision.p_value <= 1.0);
    }
    // Two-sided critical-value comparisons agree with the p-value rule
    // for the continuous statistics.
    const auto& z_test = outcomes[0];
    CHECK((std::fabs(z_test.statistic) > z_test.decision.critical_value) == z_test.decision.reject);
    const auto& t_test = outcomes[1];
    CHECK((std::fabs(t_test.statistic) > t_test.decision.critical_value) == t_test.decision.reject);
    const auto& chi2_test = outcomes[4];
    CHECK((chi2_test.statistic > chi2_test.decision.critical_value) == chi2_test.decision.reject);
  }
}
