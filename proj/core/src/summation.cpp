#include "hlzeta/summation.hpp"

#include <cmath>
#include <vector>

#include "hlzeta/quad.hpp"
#include "hlzeta/specfun.hpp"

namespace hlzeta {

double TestFunction::operator()(double x) const { return amp * std::exp(-c * x * x); }

TestFunction TestFunction::gaussian(double c, double amp) {
    if (!(c > 0.0)) throw DomainError("test function: Gaussian rate must be positive");
    return {"gauss" + fmt_num(c), c, amp};
}

namespace {

std::string test_id(const TestFunction& f) { return f.name; }

// sum_{n>=N} amp e^{-c n^2} <= amp e^{-c N^2} / (1 - e^{-c(2N+1)})
double gaussian_tail(double amp, double c, double N) {
    double r = std::exp(-c * (2.0 * N + 1.0));
    return amp * std::exp(-c * N * N) / (1.0 - r);
}

double j0(double x) { return bessel_real(BesselKind::J0, x).value; }
double y0(double x) { return bessel_real(BesselKind::Y0, x).value; }
double k0(double x) { return x > 700.0 ? 0.0 : bessel_real(BesselKind::K0, x).value; }

}  // namespace

IdentityReport poisson_even_check(const TestFunction& f) {
    const double tol = 1e-9;
    KahanSum<double> lhs;
    double N = 1.0;
    for (; gaussian_tail(f.amp, f.c, N) > 1e-17; N += 1.0) lhs.add(f(N));
    double lhs_tail = gaussian_tail(f.amp, f.c, N);
    QuadratureSpec qs;
    qs.abs_tol = 1e-13;
    qs.rel_tol = 1e-13;
    Integrand g([&f](double x) { return f(x); });
    g.with_decay(DecayHint::gaussian(f.c, f.amp));
    auto mass = integrate(g, 0.0, kInf, qs);
    KahanSum<double> dual;
    double err = mass.error_bound + lhs_tail;
    // the transform of a Gaussian is Gaussian: |int f cos(2 pi n y)| <= amp sqrt(pi/c)/2 e^{-pi^2 n^2/c}
    double damp = f.amp * std::sqrt(kPi / f.c) / 2.0, dc = kPi * kPi / f.c;
    double n = 1.0;
    for (; 2.0 * gaussian_tail(damp, dc, n) > 1e-14; n += 1.0) {
        double w = 2.0 * kPi * n;
        Integrand h([&f, w](double y) { return f(y) * std::cos(w * y); });
        h.with_decay(DecayHint::gaussian(f.c, f.amp)).oscillating(kPi / w, 0.5 * kPi / w);
        auto r = integrate(h, 0.0, kInf, qs);
        dual.add(2.0 * r.value);
        err += 2.0 * r.error_bound;
    }
    err += 2.0 * gaussian_tail(damp, dc, n);
    double rhs = -0.5 * f(0.0) + mass.value + dual.value();
    auto rep = make_report("poisson." + test_id(f), "Poisson summation, even form", lhs.value(), rhs, tol);
    rep.note("bound", fmt_num(err));
    rep.note("dual_terms", fmt_num(n - 1.0));
    return rep;
}

VoronoiOut voronoi_check(const TestFunction& f) {
    const double tol = 1e-6;
    // lhs: d(n) <= 2 sqrt(n) under the Gaussian tail
    KahanSum<double> lhs;
    std::int64_t n = 1;
    for (;; ++n) {
        double dn = static_cast<double>(n);
        double t = divisor_count(n) * f(dn);
        lhs.add(t);
        if (2.0 * std::sqrt(dn + 1.0) * gaussian_tail(f.amp, f.c, dn + 1.0) * (dn + 2.0) < 1e-17) break;
    }
    QuadratureSpec qs;
    qs.abs_tol = 1e-13;
    qs.rel_tol = 1e-12;
    Integrand lg([&f](double x) { return f(x) * (2.0 * kEulerGamma + std::log(x)); });
    lg.with_decay(DecayHint::exponential(f.c, f.amp * 2.0, 1.0));  // |2 gamma + log x| <= 2x for x >= 1
    auto logint = integrate(lg, 0.0, kInf, qs);
    // kernel integrals in y = u^2, cut once d(n)|I_n| stays below 1e-14 three times running
    auto kernel_sum = [&](double ycoef, double& err) {
        KahanSum<double> acc;
        int quiet = 0;
        for (std::int64_t m = 1; m <= 400 && quiet < 3; ++m) {
            double b = 4.0 * kPi * std::sqrt(static_cast<double>(m));
            Integrand h([&f, b, ycoef](double u) {
                double z = b * u;
                return 2.0 * u * f(u * u) * (4.0 * k0(z) - ycoef * y0(z));
            });
            // e^{-c u^4} <= e^{-c u^2} on u >= 1; |4K0| + |ycoef Y0| <= 1 + ycoef there
            h.with_decay(DecayHint::gaussian(f.c, 2.0 * f.amp * (1.0 + ycoef), 1.0)).oscillating(kPi / b, 0.25 * kPi / b);
            auto r = integrate(h, 0.0, kInf, qs);
            double t = divisor_count(m) * r.value;
            acc.add(t);
            err += divisor_count(m) * r.error_bound;
            quiet = std::abs(t) < 1e-14 ? quiet + 1 : 0;
        }
        return acc.value();
    };
    double e2 = 0.0, e4 = 0.0;
    double base = 0.25 * f(0.0) + logint.value;
    double rhs2 = base + kernel_sum(2.0 * kPi, e2);
    double rhs4 = base + kernel_sum(4.0, e4);
    VoronoiOut out;
    out.residual_two_pi = std::abs(lhs.value() - rhs2);
    out.residual_four = std::abs(lhs.value() - rhs4);
    out.winner = out.residual_two_pi <= out.residual_four ? VoronoiKernel::two_pi_y0 : VoronoiKernel::four_y0;
    double rhs = out.winner == VoronoiKernel::two_pi_y0 ? rhs2 : rhs4;
    out.report = make_report("voronoi." + test_id(f), "Voronoi summation", lhs.value(), rhs, tol);
    out.report.note("kernel", out.winner == VoronoiKernel::two_pi_y0 ? "4K0-2piY0" : "4K0-4Y0");
    out.report.note("residual_4K0_2piY0", fmt_num(out.residual_two_pi));
    out.report.note("residual_4K0_4Y0", fmt_num(out.residual_four));
    out.report.note("bound", fmt_num(logint.error_bound + e2));
    return out;
}

IdentityReport koshliakov_check(double a) {
    if (!(a >= 0.1 && a <= 10.0)) throw DomainError("koshliakov: requires 0.1 <= a <= 10");
    // sum d(n) K0(b n) with K0(x) <= sqrt(pi/(2x)) e^{-x} and d(n) <= 2 sqrt(n)
    auto ksum = [](double b, double& err) {
        KahanSum<double> acc;
        std::int64_t n = 1;
        for (;; ++n) {
            double x = b * static_cast<double>(n);
            acc.add(divisor_count(n) * k0(x));
            double nx = x + b;
            double tail = 2.0 * std::sqrt(n + 1.0) * std::sqrt(kPi / (2.0 * nx)) * std::exp(-nx) /
                          (1.0 - std::exp(-b)) * (1.0 + 1.0 / (n + 1.0));
            if (tail < 1e-18) {
                err += tail;
                break;
            }
        }
        err += 4.0 * kEps * std::abs(acc.value()) * std::log2(static_cast<double>(n) + 2.0);
        return acc.value();
    };
    double el = 0.0, er = 0.0;
    double sa = std::sqrt(a);
    double lhs = sa * (kEulerGamma - std::log(4.0 * kPi / a) + 4.0 * ksum(2.0 * kPi * a, el));
    double rhs = (kEulerGamma - std::log(4.0 * kPi * a) + 4.0 * ksum(2.0 * kPi / a, er)) / sa;
    auto rep = make_report("koshliakov.a" + fmt_num(a), "Koshliakov formula", lhs, rhs, 1e-10);
    rep.note("bound", fmt_num(4.0 * (sa * el + er / sa)));
    return rep;
}

namespace {

// Neville extrapolation of I(eps) to eps = 0; returns value and |last - previous|
std::pair<double, double> extrapolate_zero(const std::vector<double>& eps, const std::vector<double>& val) {
    std::vector<double> p = val;
    std::size_t n = eps.size();
    double prev = p[n - 1];
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = n - 1; i >= k; --i) {
            p[i] = (eps[i - k] * p[i] - eps[i] * p[i - 1]) / (eps[i - k] - eps[i]);
            if (i == k) break;
        }
        if (k == n - 2) prev = p[n - 1];
    }
    return {p[n - 1], std::abs(p[n - 1] - prev)};
}

}  // namespace

IdentityReport voronoi_mellin_check(double s, MellinKernel kind) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("voronoi mellin: requires 0 < s < 1");
    double g = gamma_real(s).value;
    QuadratureSpec qs;
    qs.abs_tol = 1e-12;
    qs.rel_tol = 1e-12;
    qs.max_subdivisions = 20000;
    double lhs = 0.0, bound = 0.0, rhs = 0.0;
    std::string name;
    if (kind == MellinKernel::K0) {
        name = "K0";
        rhs = 0.5 * std::pow(2.0 * kPi, -2.0 * s) * g * g;
        // x = u^2: 2 int u^{2s-1} K0(4 pi u) du
        Integrand h([](double u) { return 2.0 * k0(4.0 * kPi * u); });
        h.with_decay(DecayHint::exponential(4.0 * kPi, 2.0));
        auto r = mellin_integral(h, 2.0 * s, qs);
        lhs = r.value;
        bound = r.error_bound;
    } else {
        // conditionally convergent: Abel factor e^{-eps u}, I(eps) analytic in |eps| < frequency
        double freq = kind == MellinKernel::Y0 ? 4.0 * kPi : 1.0;
        if (kind == MellinKernel::Y0) {
            name = "Y0";
            rhs = -std::pow(2.0 * kPi, -2.0 * s) * std::cos(kPi * s) * g * g / kPi;
        } else {
            name = "J0";
            rhs = std::pow(4.0, s) * g / gamma_real(1.0 - s).value;
        }
        std::vector<double> eps, val;
        double e = 0.25 * freq;
        QuadratureSpec qa = qs;
        qa.abs_tol = 1e-10;
        for (int k = 0; k < 7; ++k, e *= 0.5) {
            Integrand h([kind, e](double u) {
                double b = kind == MellinKernel::Y0 ? y0(4.0 * kPi * u) : j0(u);
                return 2.0 * b * std::exp(-e * u);
            });
            // |Y0(4 pi u)| <= 0.3 u^{-1/2}, |J0(u)| <= 0.8 u^{-1/2} for u >= 1
            double amp = kind == MellinKernel::Y0 ? 0.6 : 1.6;
            h.with_decay(DecayHint::exponential(e, amp, -0.5)).oscillating(kPi / freq, 0.25 * kPi / freq);
            auto r = mellin_integral(h, 2.0 * s, qa);
            eps.push_back(e);
            val.push_back(r.value);
            bound = std::max(bound, r.error_bound);
        }
        auto [v, d] = extrapolate_zero(eps, val);
        lhs = v;
        bound += d;
        if (d > 1e-8)
            throw RegularizationError("voronoi mellin: Abel extrapolation did not settle for " + name, v, d);
    }
    auto rep = make_report("voronoi.mellin." + name + ".s" + fmt_num(s), "Voronoi Mellin pair", lhs, rhs, 1e-7);
    rep.note("bound", fmt_num(bound));
    return rep;
}

}  // namespace hlzeta
