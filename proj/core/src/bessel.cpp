#include <cmath>
#include <vector>

#include "hlzeta/specfun.hpp"

namespace hlzeta {

namespace {

constexpr double kMillerLimit = 25.0;

struct MillerOut {
    double j0, j1;
    double neumann;  // sum_{k>=1} (-1)^k J_{2k}(x) / k
};

// backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, normalised by J0 + 2 sum J_{2k} = 1
MillerOut miller(double x) {
    int m = static_cast<int>(x + 12.0 * std::cbrt(x) + 40.0);
    if (m % 2) ++m;
    double jp1 = 0.0, jk = 1e-300;
    double norm = 0.0, neu = 0.0, j1 = 0.0;
    for (int k = m; k >= 1; --k) {
        double jm1 = (2.0 * k / x) * jk - jp1;
        jp1 = jk;
        jk = jm1;
        // jk now holds J_{k-1}
        int idx = k - 1;
        if (idx == 1) j1 = jk;
        if (idx > 0 && idx % 2 == 0) {
            norm += 2.0 * jk;
            int h = idx / 2;
            neu += ((h % 2) ? -1.0 : 1.0) * jk / h;
        }
        if (std::abs(jk) > 1e250) {
            jk *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            neu *= 1e-250;
            j1 *= 1e-250;
        }
    }
    norm += jk;
    return {jk / norm, j1 / norm, neu / norm};
}

struct Hankel {
    double p, q, err;
};

Hankel hankel_pq(double nu, double x) {
    double mu = 4.0 * nu * nu;
    double p = 0.0, q = 0.0;
    double term = 1.0;  // a_k(nu)/x^k
    double prev = HUGE_VAL;
    double err = 0.0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) term *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
        double a = std::abs(term);
        if (a > prev || a < 1e-18) {
            err = a;
            break;
        }
        prev = a;
        // sign pattern: P = a0 - a2 + a4 ..., Q = a1 - a3 + ...
        double sgn = ((k / 2) % 2) ? -1.0 : 1.0;
        if (k % 2 == 0)
            p += sgn * term;
        else
            q += sgn * term;
    }
    return {p, q, err};
}

EvalResult j_asym(int order, double x) {
    double nu = order;
    auto h = hankel_pq(nu, x);
    double chi = x - (0.5 * nu + 0.25) * kPi;
    double amp = std::sqrt(2.0 / (kPi * x));
    double val = amp * (h.p * std::cos(chi) - h.q * std::sin(chi));
    double err = amp * (h.err + 4.0 * kEps * (1.0 + x));
    return {val, err};
}

EvalResult y0_asym(double x) {
    auto h = hankel_pq(0.0, x);
    double chi = x - 0.25 * kPi;
    double amp = std::sqrt(2.0 / (kPi * x));
    double val = amp * (h.p * std::sin(chi) + h.q * std::cos(chi));
    return {val, amp * (h.err + 4.0 * kEps * (1.0 + x))};
}

// K0 for real x > 0: trapezoid on e^{-x} int_0^inf e^{-x(cosh t - 1)} dt
EvalResult k0_real(double x) {
    double d = std::min(kPi / 4.0, std::sqrt(2.0 / x));
    double h = 2.0 * kPi * d / 40.0;
    KahanSum<double> acc;
    acc.add(0.5);
    for (int k = 1; k < 1000000; ++k) {
        double t = k * h;
        double e = x * (std::cosh(t) - 1.0);
        if (e > 46.0) break;
        acc.add(std::exp(-e));
    }
    double val = std::exp(-x) * h * acc.value();
    return {val, 2e-15 * val};
}

}  // namespace

EvalResult bessel_real(BesselKind kind, double x) {
    if (!std::isfinite(x)) throw DomainError("bessel: non-finite argument");
    switch (kind) {
        case BesselKind::J0:
        case BesselKind::J1: {
            int order = kind == BesselKind::J0 ? 0 : 1;
            double ax = std::abs(x);
            double sgn = (order == 1 && x < 0) ? -1.0 : 1.0;
            if (ax == 0.0) return {order == 0 ? 1.0 : 0.0, 0.0};
            if (ax < 1e-4) {
                double q = 0.25 * ax * ax;
                double v = order == 0 ? 1.0 - q + q * q / 4.0 : 0.5 * ax * (1.0 - q / 2.0 + q * q / 12.0);
                return {sgn * v, 1e-17};
            }
            if (ax <= kMillerLimit) {
                auto m = miller(ax);
                return {sgn * (order == 0 ? m.j0 : m.j1), 2e-15};
            }
            auto r = j_asym(order, ax);
            return {sgn * r.value, r.error_bound};
        }
        case BesselKind::Y0: {
            if (!(x > 0.0)) throw DomainError("Y0: requires x > 0");
            if (x <= kMillerLimit) {
                if (x < 1e-4) {
                    double q = 0.25 * x * x;
                    double j0 = 1.0 - q;
                    double v = (2.0 / kPi) * ((std::log(x / 2.0) + kEulerGamma) * j0 + q);
                    return {v, 1e-15 * (1.0 + std::abs(v))};
                }
                auto m = miller(x);
                double v = (2.0 / kPi) * (std::log(x / 2.0) + kEulerGamma) * m.j0 - (4.0 / kPi) * m.neumann;
                return {v, 4e-15 * (1.0 + std::abs(std::log(x)))};
            }
            return y0_asym(x);
        }
        case BesselKind::K0:
            if (!(x > 0.0)) throw DomainError("K0: requires x > 0");
            return k0_real(x);
    }
    throw DomainError("bessel: unknown kind");
}

namespace {

EvalResultC k0_series(cplx z) {
    cplx q = 0.25 * z * z;
    cplx term = 1.0;
    cplx i0 = 1.0;
    cplx rest = 0.0;
    double harmonic = 0.0;
    double abs_sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        rest += term * harmonic;
        abs_sum += std::abs(term) * (1.0 + harmonic);
        if (std::abs(term) * (1.0 + harmonic) < 1e-18 * std::abs(i0)) break;
    }
    cplx lg = std::log(0.5 * z) + kEulerGamma;
    cplx val = -lg * i0 + rest;
    double err = 8.0 * kEps * abs_sum * (1.0 + std::abs(lg));
    return {val, err};
}

// rotated contour u = 1 + tau e^{-i phi}, tau = sigma^2:
// K0(z) = 2 e^{-z} e^{-i phi/2} int_0^inf e^{-|z| s^2} / sqrt(2 + s^2 e^{-i phi}) ds
EvalResultC k0_contour(cplx z) {
    double r = std::abs(z);
    double phi = std::arg(z);
    cplx rot = std::polar(1.0, -phi);
    double dist = std::sqrt(2.0) * std::abs(std::cos(0.5 * phi));
    double d = std::min(0.8 * dist, std::sqrt(2.0 / r));
    double h = 2.0 * kPi * d / 40.0;
    KahanSum<cplx> acc;
    double abs_sum = 0.0;
    cplx f0 = 1.0 / std::sqrt(2.0 + 0.0 * rot);
    acc.add(0.5 * f0);
    abs_sum += 0.5 * std::abs(f0);
    for (int k = 1; k < 10000000; ++k) {
        double s = k * h;
        double e = r * s * s;
        if (e > 46.0) break;
        cplx f = std::exp(-e) / std::sqrt(2.0 + s * s * rot);
        acc.add(f);
        abs_sum += std::abs(f);
    }
    cplx pref = 2.0 * std::exp(-z) * std::polar(1.0, -0.5 * phi) * h;
    cplx val = pref * acc.value();
    double err = std::abs(pref) * abs_sum * (1e-15 + 16.0 * kEps) + 4.0 * kEps * std::abs(val) * (1.0 + r);
    return {val, err};
}

}  // namespace

EvalResultC bessel_k_complex(double nu, cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0) throw BranchError("K_nu: argument on the branch cut");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("K_nu: non-finite argument");
    if (nu == 0.5) {
        cplx v = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
        return {v, 4.0 * kEps * std::abs(v) * (1.0 + std::abs(z))};
    }
    if (nu != 0.0) throw DomainError("K_nu: only nu in {0, 1/2} supported");
    if (std::abs(z) <= 2.0) return k0_series(z);
    return k0_contour(z);
}

}  // namespace hlzeta
