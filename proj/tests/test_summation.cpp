#include <gtest/gtest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "hlzeta/specfun.hpp"
#include "hlzeta/summation.hpp"

using namespace hlzeta;

namespace {

// sum_{n>=1} e^{-c n^2} through the theta transformation, independent of any quadrature
double gauss_sum_dual(double c) {
    double s = 0.0;
    for (int n = 1; n < 60; ++n) s += std::exp(-kPi * kPi * n * n / c);
    return 0.5 * (std::sqrt(kPi / c) * (1.0 + 2.0 * s) - 1.0);
}

double koshliakov_side(double a) {
    double k = 0.0;
    for (int n = 1; n < 400; ++n) k += divisor_count(n) * boost::math::cyl_bessel_k(0, 2 * kPi * a * n);
    return std::sqrt(a) * (kEulerGamma - std::log(4 * kPi / a) + 4 * k);
}

}  // namespace

TEST(Summation, PoissonGaussians) {
    for (double c : {0.3, 0.5, 1.0, 2.0, 5.0}) {
        auto rep = poisson_even_check(TestFunction::gaussian(c));
        EXPECT_TRUE(rep.pass) << c << " " << rep.abs_diff;
        double ref = gauss_sum_dual(c);
        EXPECT_NEAR(rep.lhs.real(), ref, 1e-13) << c;
        EXPECT_NEAR(rep.rhs.real(), ref, 1e-11) << c;
    }
}

TEST(Summation, PoissonScalesWithAmplitude) {
    auto a = poisson_even_check(TestFunction::gaussian(1.0, 1.0));
    auto b = poisson_even_check(TestFunction::gaussian(1.0, 3.0));
    EXPECT_NEAR(b.lhs.real(), 3.0 * a.lhs.real(), 1e-13);
    EXPECT_NEAR(b.rhs.real(), 3.0 * a.rhs.real(), 1e-11);
}

TEST(Summation, KoshliakovAgainstBoostBessel) {
    for (double a : {0.5, 1.0, 1.7, 3.0}) {
        auto rep = koshliakov_check(a);
        EXPECT_TRUE(rep.pass) << a;
        EXPECT_NEAR(rep.lhs.real(), koshliakov_side(a), 1e-12) << a;
        EXPECT_NEAR(rep.rhs.real(), koshliakov_side(1.0 / a), 1e-12) << a;
    }
}

TEST(Summation, KoshliakovInversionSwapsSides) {
    for (double a : {0.4, 2.5}) {
        auto x = koshliakov_check(a), y = koshliakov_check(1.0 / a);
        EXPECT_NEAR(x.lhs.real(), y.rhs.real(), 1e-13);
        EXPECT_NEAR(x.rhs.real(), y.lhs.real(), 1e-13);
    }
    EXPECT_THROW(koshliakov_check(20.0), DomainError);
}

TEST(Summation, VoronoiKernelSelection) {
    for (double c : {0.3, 1.0, 2.0}) {
        auto out = voronoi_check(TestFunction::gaussian(c));
        EXPECT_EQ(out.winner, VoronoiKernel::two_pi_y0) << c;
        EXPECT_TRUE(out.report.pass) << c;
        EXPECT_LT(out.residual_two_pi, 1e-9) << c;
        EXPECT_GT(out.residual_four, 1e-3) << c;
    }
}

TEST(Summation, MellinPairs) {
    for (double s : {0.25, 0.5, 0.75})
        for (auto k : {MellinKernel::K0, MellinKernel::Y0, MellinKernel::J0}) {
            auto rep = voronoi_mellin_check(s, k);
            EXPECT_TRUE(rep.pass) << s << " " << static_cast<int>(k) << " " << rep.abs_diff;
        }
    EXPECT_NEAR(voronoi_mellin_check(0.5, MellinKernel::J0).rhs.real(), 2.0, 1e-13);
}

TEST(Summation, MellinK0AgainstBoostQuadrature) {
    boost::math::quadrature::exp_sinh<double> q;
    for (double s : {0.25, 0.6}) {
        auto f = [s](double u) { return 2 * std::pow(u, 2 * s - 1) * boost::math::cyl_bessel_k(0, 4 * kPi * u); };
        double ref = q.integrate(f);
        EXPECT_NEAR(voronoi_mellin_check(s, MellinKernel::K0).lhs.real(), ref, 1e-10) << s;
        EXPECT_NEAR(ref, 0.5 * std::pow(2 * kPi, -2 * s) * std::pow(boost::math::tgamma(s), 2), 1e-10) << s;
    }
}
