// SPDX-License-Identifier: Apache-2.0

#include "qwalk/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qwalk/walk.hpp"

namespace qwalk {
namespace {

using std::numbers::e;

TEST(ConstantC, Value) {
  EXPECT_NEAR(constant_c(), 3.2287785898222778, 1e-15);
  EXPECT_NEAR(constant_c() * std::sqrt(2.0 * std::numbers::pi) * e, 22.0, 1e-12);
  EXPECT_GT(constant_c(), 1.0);
}

TEST(Zeta, Values) {
  EXPECT_NEAR(zeta(30.0, 1e-5, 30), 7.1685424531340705, 1e-12);
  EXPECT_NEAR(zeta(60.0, 1e-5, 30), 8.5432843612446287, 1e-12);
  // Second term vanishes when c / (eps sqrt t) = 1, leaving 2 ln t.
  const double t = 16.0;
  EXPECT_NEAR(zeta(t, constant_c() / 4.0, 7), 2.0 * std::log(t), 1e-14);
}

TEST(Zeta, DomainErrors) {
  EXPECT_THROW(zeta(0.0, 1e-5, 30), std::domain_error);
  EXPECT_THROW(zeta(-1.0, 1e-5, 30), std::domain_error);
  EXPECT_THROW(zeta(1.0, 0.0, 30), std::domain_error);
  EXPECT_THROW(zeta(1.0, 1.0, 30), std::domain_error);
  EXPECT_THROW(zeta(1.0, 0.5, 0), std::domain_error);
}

TEST(Threshold, Values) {
  EXPECT_NEAR(t_threshold(1e-5, 30), 3.1815499867866071, 1e-12);
  EXPECT_NEAR(zeta(t_threshold(1e-5, 30), 1e-5, 30), e, 1e-12);
  EXPECT_NEAR(t_threshold(0.5, 8), 3.6061668320411909, 1e-12);
  for (double eps : {1e-12, 1e-7, 1e-3, 0.3, 0.99})
    for (int N : {1, 2, 8, 30, 200}) EXPECT_GE(t_threshold(eps, N), 1.0);
}

TEST(Threshold, ZetaEqualsEAtThreshold) {
  // Wherever the clamp at 1 is inactive the threshold solves zeta = e.
  for (int N : {4, 8, 16, 30}) {
    for (double eps : {1e-3, 1e-5, 1e-7}) {
      const double thr = t_threshold(eps, N);
      if (thr > 1.0) {
        EXPECT_NEAR(zeta(thr, eps, N), e, 1e-12);
      } else {
        EXPECT_GE(zeta(1.0, eps, N), e);
      }
    }
  }
}

TEST(TruncationK, FigureOneConfiguration) {
  const auto plan = truncation_k(60.0, 1e-5, 30);
  EXPECT_EQ(plan.k, 12);
  EXPECT_FALSE(plan.fallback_used);
  EXPECT_NEAR(plan.zeta, 8.5432843612446287, 1e-12);
  EXPECT_GT(plan.apriori_bound, 0.0);
  EXPECT_LE(plan.apriori_bound, 1e-5);
  EXPECT_NEAR(plan.apriori_bound, 3.3452392302816222e-19, 1e-30);
}

TEST(TruncationK, HalfHorizon) { EXPECT_EQ(truncation_k(30.0, 1e-5, 30).k, 8); }

TEST(TruncationK, LargeEpsilonByHand) {
  // zeta = 4.694415005, k = (18/8) * zeta / ln zeta = 6.8305 -> 7.
  const auto plan = truncation_k(10.0, 0.5, 8);
  EXPECT_EQ(plan.k, 7);
  EXPECT_FALSE(plan.fallback_used);
}

TEST(TruncationK, FallbackBelowThreshold) {
  const double thr = t_threshold(1e-5, 30);
  const auto below = truncation_k(1.0, 1e-5, 30);
  EXPECT_TRUE(below.fallback_used);
  const auto at = truncation_k(thr, 1e-5, 30);
  EXPECT_TRUE(at.fallback_used);
  // At the threshold zeta = e, so the formula gives ceil(((thr+N)/N) e).
  EXPECT_EQ(at.k, static_cast<int>(std::ceil((thr + 30.0) / 30.0 * e)));
  EXPECT_EQ(below.k, at.k);
  EXPECT_FALSE(truncation_k(thr * 1.0001, 1e-5, 30).fallback_used);
}

TEST(TruncationK, ConvergenceGuardAndPositivity) {
  for (int N : {1, 2, 4, 8, 16, 30, 64}) {
    for (double eps : {0.9, 0.1, 1e-3, 1e-5, 1e-7, 1e-10}) {
      for (double t : {0.01, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 30.0, 60.0, 150.0}) {
        const auto plan = truncation_k(t, eps, N);
        EXPECT_GE(plan.k, 1);
        EXPECT_GT(plan.k, t * e / N) << "t=" << t << " eps=" << eps << " N=" << N;
        EXPECT_TRUE(std::isfinite(plan.apriori_bound));
        EXPECT_GT(plan.apriori_bound, 0.0);
        if (!plan.fallback_used) EXPECT_GE(plan.zeta, e);
      }
    }
  }
}

TEST(TruncationK, Monotonicity) {
  for (int N : {4, 8, 16, 30}) {
    for (double eps : {1e-3, 1e-5, 1e-7}) {
      int previous = 0;
      for (double t = t_threshold(eps, N) + 1e-9; t < 200.0; t *= 1.07) {
        const int k = truncation_k(t, eps, N).k;
        EXPECT_GE(k, previous) << "t=" << t;
        previous = k;
      }
    }
    for (double t : {5.0, 10.0, 30.0, 60.0}) {
      int previous = 1 << 30;
      for (double eps : {1e-9, 1e-7, 1e-5, 1e-3, 1e-1}) {
        if (t <= t_threshold(eps, N)) continue;
        const int k = truncation_k(t, eps, N).k;
        EXPECT_LE(k, previous);
        previous = k;
      }
    }
  }
}

TEST(AprioriBound, DomainAndDecay) {
  // k = ceil(te/N) for t=5, N=8: te/N = 1.699 -> k = 2 is fine, k = 1 is not.
  EXPECT_THROW(apriori_error_bound(1, 5.0, 8), std::domain_error);
  // An integer k equal to te/N exactly: t = N/e gives te/N = 1.
  EXPECT_THROW(apriori_error_bound(1, 8.0 / e, 8), std::domain_error);
  double previous = apriori_error_bound(3, 5.0, 8);
  for (int k = 4; k < 40; ++k) {
    const double b = apriori_error_bound(k, 5.0, 8);
    if (previous > 1e-300) {
      EXPECT_LT(b, previous);
    } else {
      EXPECT_LE(b, previous);
    }
    previous = b;
  }
}

TEST(AprioriBound, LogSpaceAvoidsOverflow) {
  // t^(2N) = 60^60 alone is ~1e106; a large N would overflow directly.
  const double b = apriori_error_bound(40, 60.0, 200);
  EXPECT_TRUE(std::isfinite(b));
  EXPECT_GE(b, 0.0);
}

TEST(FactorialTailBound, FrozenValues) {
  // mpmath, 40 digits: exact tail 8.7337647158799e-17, derived bound
  // 8.7493019347448e-17 at (k=6, t=5, N=8).
  EXPECT_NEAR(apriori_error_bound(6, 5.0, 8), 8.749301934744837e-17, 1e-28);
  EXPECT_NEAR(factorial_tail_bound(6, 5.0, 8, 20), 8.733764715879916e-17, 1e-28);
  EXPECT_LE(factorial_tail_bound(6, 5.0, 8, 20), apriori_error_bound(6, 5.0, 8));
}

TEST(FactorialTailBound, SingleTermDominates) {
  const double k = 20, t = 5.0, N = 8;
  const double first = std::exp(std::log(2.0) + 2 * N * std::log(t) + k * N * std::log(t) - std::lgamma(k * N + 1));
  const double bound = factorial_tail_bound(20, 5.0, 8, 1);
  EXPECT_GE(bound, first);
  EXPECT_LT(bound, first * 1.01);
}

TEST(FactorialTailBound, NeverExceedsAprioriBound) {
  for (int N : {2, 4, 8, 16, 30}) {
    for (double t : {0.5, 2.0, 5.0, 10.0, 30.0, 60.0}) {
      const int k0 = static_cast<int>(std::floor(t * e / N)) + 1;
      for (int k = k0; k < k0 + 15; ++k) {
        for (int terms : {1, 5, 20}) {
          const double tail = factorial_tail_bound(k, t, N, terms);
          const double bound = apriori_error_bound(k, t, N);
          // Relative rounding, plus subnormal slack where both underflow.
          EXPECT_LE(tail, bound * (1.0 + 1e-12) + 1e-300) << "k=" << k << " t=" << t << " N=" << N;
        }
      }
    }
  }
}

TEST(FactorialTailBound, StirlingLowerBound) {
  for (int x = 1; x <= 400; ++x) {
    const double log_factorial = std::lgamma(x + 1.0);
    const double log_stirling = 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(x) - x;
    EXPECT_GE(log_factorial, log_stirling) << x;
  }
}

TEST(FactorialTailBound, CoversEmpiricalTruncationError) {
  const WalkSpec spec{Dirichlet{0, 8}, 0.0, 3};
  const double t = 5.0;
  const int k = 2;  // te/N = 1.70
  double worst = 0.0;
  for (Site x = 1; x < 8; ++x) {
    worst = std::max(worst, std::abs(amplitude_dirichlet(spec, x, t, k) - amplitude_dirichlet(spec, x, t, k + 20)));
  }
  EXPECT_LE(worst, factorial_tail_bound(k, t, 8, 20));
}

}  // namespace
}  // namespace qwalk
