#include <gtest/gtest.h>

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <random>

#include "hlzeta/hlseries.hpp"
#include "hlzeta/specfun.hpp"

using namespace hlzeta;

namespace {

// sum_{n<=N} of a term plus a hand-made tail; N is large enough for 1e-11 on moderate x
template <class F>
long double brute(F term, long N) {
    long double s = 0.0L;
    for (long n = N; n >= 1; --n) s += term(static_cast<long double>(n));
    return s;
}

// sum_{n>N} n^{-2}
long double tail2(long N) {
    long double a = N + 0.5L;
    return 1.0L / a - 1.0L / (12.0L * a * a * a);
}

}  // namespace

TEST(HLSeries, FAgainstBruteForce) {
    const long N = 2'000'000;
    for (double x : {0.1, 1.0, 3.0, 10.0, 57.3}) {
        long double ref = brute([x](long double n) { return std::sin(x / n) / n; }, N) + x * tail2(N);
        auto r = eval_f(x);
        EXPECT_NEAR(r.value, static_cast<double>(ref), 1e-10) << x;
        EXPECT_LT(r.error_bound, 1e-9);
    }
}

TEST(HLSeries, FIsOddBitForBit) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 500.0);
    for (int i = 0; i < 30; ++i) {
        double x = u(rng);
        EXPECT_EQ(eval_f(-x).value, -eval_f(x).value) << x;
    }
    EXPECT_EQ(eval_f(0.0).value, 0.0);
}

TEST(HLSeries, DerivativeRelations) {
    // f' = F_cos and (sum sin^2(x/n))' = f(2x)
    for (double x : {0.7, 4.0, 25.0}) {
        double h = 1e-4;
        double df = (eval_f(x + h).value - eval_f(x - h).value) / (2 * h);
        EXPECT_NEAR(df, eval_F_cos(x).value, 1e-7) << x;
        double ds = (eval_sin2_sum(x + h).value - eval_sin2_sum(x - h).value) / (2 * h);
        EXPECT_NEAR(ds, eval_f(2 * x).value, 1e-7) << x;
    }
}

TEST(HLSeries, FCosAtZeroIsZeta2) { EXPECT_NEAR(eval_F_cos(0.0).value, kZeta2, 1e-13); }

TEST(HLSeries, PowerSeriesAgreeWithDirectSums) {
    for (double x : {0.2, 0.5, 0.9, -0.7}) {
        EXPECT_NEAR(eval_power_series(PowerForm::sin_form, x).value.real(), eval_f(x).value, 1e-10) << x;
        EXPECT_NEAR(eval_power_series(PowerForm::onemcos_form, x).value.real(), eval_onemcos_sum(x).value, 1e-10)
            << x;
    }
    for (cplx z : {cplx{0.5, 0.0}, cplx{0.3, 0.4}, cplx{0.2, -0.6}})
        EXPECT_LT(std::abs(eval_power_series(PowerForm::exp_form, z).value - eval_exp_sum(z).value), 1e-10) << z;
}

TEST(HLSeries, SinSquaredMeanTendsToHalfPi) {
    for (double x : {1e3, 1e5}) {
        double v = eval_sin2_sum(x).value / x;
        EXPECT_NEAR(v, kPi / 2, 2 / std::sqrt(x) + 10 / x) << x;
    }
}

TEST(HLSeries, TailBoundsAreSound) {
    // a coarse policy must still bracket the fine value
    TruncationPolicy coarse;
    coarse.tail_tolerance = 1e-6;
    for (double x : {2.0, 40.0}) {
        auto c = eval_f(x, coarse), fine = eval_f(x);
        EXPECT_LE(std::abs(c.value - fine.value), c.error_bound + fine.error_bound) << x;
        auto cs = eval_sin2_sum(x, coarse), fs = eval_sin2_sum(x);
        EXPECT_LE(std::abs(cs.value - fs.value), cs.error_bound + fs.error_bound) << x;
    }
}

TEST(HLSeries, GMatchesBruteForce) {
    for (cplx z : {cplx{-1.0, 0.0}, cplx{0.0, 3.0}, cplx{-0.5, -2.0}}) {
        const long N = 1'000'000;
        std::complex<long double> s = 0;
        std::complex<long double> zl(z.real(), z.imag());
        for (long n = N; n >= 1; --n) s += std::exp(zl / static_cast<long double>(n)) / (static_cast<long double>(n) * n);
        s += tail2(N) + zl / (2.0L * N * N);
        cplx ref(static_cast<double>(s.real()), static_cast<double>(s.imag()));
        EXPECT_LT(std::abs(eval_G(z).value - ref), 1e-11) << z;
    }
    EXPECT_THROW(eval_G({0.5, 0.0}), DomainError);
}

TEST(HLSeries, ChiTildeMatchesBruteForce) {
    for (double s : {1.5, 2.0, 3.0})
        for (double t : {0.0, 0.5, 4.0}) {
            const long N = 2'000'000;
            long double ref = brute([s, t](long double n) { return std::exp(-t / n) * std::pow(n, -s); }, N);
            // tail: sum_{n>N} n^{-s} - t sum_{n>N} n^{-s-1}
            ref += boost::math::zeta(s) - brute([s](long double n) { return std::pow(n, -s); }, N);
            ref -= t * std::pow(static_cast<long double>(N) + 0.5L, -s) / s;
            EXPECT_NEAR(eval_chi_tilde(s, t).value, static_cast<double>(ref), 1e-11)
                << s << " " << t;
        }
}

TEST(HLSeries, ChiTaylorAgreesWithDirect) {
    for (double s : {0.5, 1.0, 2.0})
        for (double t : {0.1, 0.5, 2.0}) {
            auto a = chi_taylor(s, t), b = chi_direct(s, t).result;
            EXPECT_NEAR(a.value, b.value, 1e-10) << s << " " << t;
        }
    // chi(s,0) = -eta(s)
    EXPECT_NEAR(chi_direct(2.0, 0.0).result.value, -kZeta2 / 2, 1e-12);
}

TEST(HLSeries, GNuSeriesAgainstReferenceSums) {
    // nu = 0: sum (e^{-z/k} - 1 + z/k); nu = -1: sum (e^{-z/k} - 1)/k, both at z = 0.9
    const long N = 1'000'000;
    const long double z = 0.9L;
    long double r0 = 0, r1 = 0;
    for (long k = N; k >= 1; --k) {
        long double u = z / k;
        r0 += std::expm1(-u) + u;
        r1 += std::expm1(-u) / k;
    }
    r0 += z * z / 2 * tail2(N);
    r1 -= z * tail2(N);
    EXPECT_NEAR(g_nu_series(0.0, 0.9).value.real(), static_cast<double>(r0), 1e-12);
    EXPECT_NEAR(g_nu_series(-1.0, 0.9).value.real(), static_cast<double>(r1), 1e-12);
}

TEST(HLSeries, PowerSeriesRadius) { EXPECT_THROW(eval_power_series(PowerForm::sin_form, 1.5), DomainError); }

TEST(HLSeries, ChiTildeAtZeroIsZeta) {
    for (double s : {1.5, 2.0, 3.0}) EXPECT_NEAR(eval_chi_tilde(s, 0.0).value, boost::math::zeta(s), 1e-13) << s;
}

TEST(HLSeries, EvalSeriesDispatch) {
    EXPECT_EQ(eval_series(SeriesKind::f_hl, 2.0).value.real(), eval_f(2.0).value);
    EXPECT_THROW(eval_series(SeriesKind::G_tenenbaum, {1.0, 0.0}), DomainError);
    EXPECT_THROW(eval_series(SeriesKind::chi_tilde, 1.0, 1.0), DomainError);
}

TEST(HLSeries, DavenportSumStaysBounded) {
    // sum mu(n) ((n x))/n -> -sin(2 pi x)/pi, checked loosely at moderate N
    double x = 0.3;
    double v = davenport_sum(x, 100000);
    EXPECT_NEAR(v, -std::sin(2 * kPi * x) / kPi, 0.05);
}

TEST(HLSeries, GMeanDivisorWeights) {
    for (int n : {1, 6}) {
        auto r = g_mean_check(n, 1000);
        EXPECT_TRUE(r.pass) << r.abs_diff << " " << r.tolerance;
        EXPECT_FALSE(r.anchor.empty());
    }
}

TEST(HLSeries, DelangeConstruction) {
    auto out = delange_check(100.0, delange_sin());
    EXPECT_TRUE(out.report.pass) << out.report.abs_diff;
    EXPECT_LT(out.theta_sup_dev, 0.5);
}
