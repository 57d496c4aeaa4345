#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <vector>

#include "hlzeta/franel.hpp"

using namespace hlzeta;

namespace {

// int_0^1 {nx}{m/x} dx between the jumps j/n and m/k, k <= K; the head [0, m/K]
// lies below 1/n, so there {nx}{m/x} = n x {m/x} and replacing {m/x} by 1/2
// leaves at most n x0^2 / 4
struct Oracle {
    double value, bound;
};
Oracle franel2_reference(std::int64_t n, std::int64_t m, std::int64_t K) {
    using GL = boost::math::quadrature::gauss<double, 20>;
    double x0 = static_cast<double>(m) / K;
    std::vector<double> pts{x0, 1.0};
    for (std::int64_t j = 1; j < n; ++j) pts.push_back(static_cast<double>(j) / n);
    for (std::int64_t k = m; k < K; ++k) pts.push_back(static_cast<double>(m) / k);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    long double acc = 0.0L;
    for (std::size_t i = pts.size() - 1; i >= 1; --i) {
        double lo = pts[i - 1], hi = pts[i];
        // evaluate with the floors pinned at the midpoint, the integrand is smooth inside
        double mid = 0.5 * (lo + hi);
        double fa = std::floor(n * mid), fb = std::floor(m / mid);
        acc += GL::integrate([&](double x) { return (n * x - fa) * (m / x - fb); }, lo, hi);
    }
    double head = n * x0 * x0 / 4.0;
    return {static_cast<double>(acc) + head, head};
}

Rational gcd_form(std::int64_t a, std::int64_t b) {
    std::int64_t g = gcd64(a, b);
    return Rational(g * g, 12 * a * b);
}

}  // namespace

TEST(Franel, ClosedFormAgainstPiecewiseOracle) {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t m = 1; m <= 6; ++m) {
            auto ref = franel2_reference(n, m, 200000);
            double closed = franel2_closed(n, m).numeric();
            EXPECT_NEAR(closed, ref.value, ref.bound + 1e-11) << n << "," << m;
        }
}

TEST(Franel, LibraryOracleAgreesWithClosedForm) {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t m = 1; m <= 6; ++m) {
            auto o = franel2_oracle(n, m);
            EXPECT_NEAR(o.value, franel2_closed(n, m).numeric(), std::max(1e-9, o.error_bound)) << n << "," << m;
        }
}

TEST(Franel, CertifiedClosedFormDoesNotThrow) { EXPECT_NO_THROW(franel2_closed(5, 4, true)); }

TEST(Franel, KnownSmallCase) {
    // int_0^1 x {1/x} dx = 1 - zeta2/2 and n = m = 1 differs from it by int {1/x}(x - 1)... only the zeta2 part is checked
    auto c = franel2_closed(1, 1);
    EXPECT_EQ(c.zeta2_coeff(), Rational(-1, 2));
}

TEST(Franel, Zeta2CoefficientProperty) {
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t m = 1; m <= 6; ++m)
            EXPECT_EQ(franel2_closed(n, m).zeta2_coeff(), Rational(-n * m * m, 2)) << n << "," << m;
}

TEST(Franel, PrintedTableEntries) {
    int matched = 0;
    for (const auto& e : franel2_printed_table()) {
        auto closed = franel2_closed(e.n, e.m);
        if (e.n == 1 && e.m == 4) {
            EXPECT_NE(e.value, closed);
            EXPECT_EQ(e.value, franel2_closed(1, 5));  // the printed entry is the m = 5 value
            continue;
        }
        if (e.n == 5 && e.m == 1) {
            EXPECT_NE(e.value, closed);
            EXPECT_EQ(e.value, franel2_closed(4, 1));  // repeats the row above
            continue;
        }
        EXPECT_EQ(e.value, closed) << e.n << "," << e.m << ": " << e.value.str() << " vs " << closed.str();
        ++matched;
    }
    EXPECT_EQ(matched, 10);
}

TEST(Franel, FiveOneTrueValue) {
    SymbolicConstant v(Rational(91, 12));
    v.add_log(2, 3).add_log(3, 1).add_log(5, -4).add_zeta2(Rational(-5, 2));
    EXPECT_EQ(franel2_closed(5, 1), v) << franel2_closed(5, 1).str();
}

TEST(Franel, SymbolicLogsSplitOverPrimes) {
    SymbolicConstant a, b;
    a.add_log(6, Rational(3, 2));
    b.add_log(2, Rational(3, 2)).add_log(3, Rational(3, 2));
    EXPECT_EQ(a, b);
    SymbolicConstant c;
    c.add_log(1, 5);
    EXPECT_TRUE(c.log_coeffs().empty());
    SymbolicConstant d;
    d.add_log(12, 1).add_log(3, -1).add_log(2, -2);
    EXPECT_EQ(d, SymbolicConstant());
    EXPECT_NEAR(a.numeric(), 1.5 * std::log(6.0), 1e-15);
}

TEST(Franel, SymbolicArithmetic) {
    SymbolicConstant x(Rational(1, 3));
    x.add_zeta2(2).add_log(5, -1);
    auto y = x * Rational(3) - x - x;
    EXPECT_EQ(y, x);
    EXPECT_EQ((x - x), SymbolicConstant());
    EXPECT_FALSE(x.str().empty());
}

TEST(Franel, ClassicalFormulaExact) {
    // gcd(a,b)^2/(12ab) for the first Bernoulli function
    for (std::int64_t a = 1; a <= 8; ++a)
        for (std::int64_t b = 1; b <= 8; ++b) {
            auto c = classical_product(1, a, b, ProductKind::sawtooth);
            EXPECT_EQ(c.rational_part(), gcd_form(a, b)) << a << "," << b;
        }
}

TEST(Franel, ClassicalProductAgainstQuadrature) {
    for (int r = 1; r <= 3; ++r)
        for (std::int64_t a = 1; a <= 8; ++a)
            for (std::int64_t b = 1; b <= 8; ++b) {
                double exact = classical_product(r, a, b).numeric();
                EXPECT_NEAR(classical_product_quad(r, a, b).value, exact, 1e-10) << r << " " << a << "," << b;
            }
}

TEST(Franel, DisambiguationPicksGcdForm) {
    auto rep = franel_disambiguation(1, 2);
    EXPECT_TRUE(rep.pass);
    EXPECT_NE(franel_printed_lcm(2, 3), gcd_form(2, 3));
}

TEST(Franel, HurwitzProducts) {
    for (double s : {0.6, 0.75, 1.5, 2.5})
        for (std::int64_t a : {1, 2, 3, 5})
            for (std::int64_t b : {1, 2, 5}) {
                auto r = hurwitz_product_check(s, a, b);
                EXPECT_TRUE(r.pass) << s << " " << a << "," << b;
                EXPECT_LT(r.abs_diff, 1e-9) << s << " " << a << "," << b;
            }
    EXPECT_THROW(hurwitz_product_check(0.5, 1, 2), DomainError);
}

TEST(Franel, FirstKindAtOne) {
    EXPECT_NEAR(franel_first_kind(1.0).value, std::log(2 * kPi) - kEulerGamma - 1, 1e-7);
    EXPECT_NEAR(franel_first_kind(0.0).value, 0.0, 1e-12);
}

TEST(Franel, TablesAndCaps) {
    auto t = franel2_table(1, 3, 1, 2);
    EXPECT_EQ(t.rows(), 6u);
    EXPECT_THROW(franel2_table(1, 30, 1, 2), CapacityError);
    EXPECT_THROW(franel2_table(3, 1, 1, 2), DomainError);
    EXPECT_EQ(franel1_table({0.0, 0.5, 1.0}).rows(), 3u);
}
