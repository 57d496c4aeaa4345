#include "hlzeta/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "hlzeta/hlseries.hpp"
#include "hlzeta/quad.hpp"
#include "hlzeta/report.hpp"
#include "hlzeta/specfun.hpp"

namespace hlzeta {

ThetaArg ThetaArg::from_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("theta: requires 0 < q < 1");
    return {q, -std::log(q)};
}

ThetaArg ThetaArg::from_t(double t) {
    if (!(t > 0.0)) throw DomainError("theta: requires t > 0");
    return {std::exp(-t), t};
}

namespace {

double sgn(std::int64_t n) { return (n % 2) ? -1.0 : 1.0; }

void theta_domain(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("theta: requires 0 < q < 1");
    if (q >= 0.999) throw ConvergenceError("theta4_cubed: q too close to 1", 0.0, kInf);
}

EvalResult theta4_direct(double q, double tol) {
    double lq = std::log(q);
    KahanSum<double> acc;
    acc.add(1.0);
    std::int64_t n = 1;
    for (;; ++n) {
        double e = std::exp(lq * static_cast<double>(n * n));
        acc.add(2.0 * sgn(n) * e);
        double next = 2.0 * std::exp(lq * static_cast<double>((n + 1) * (n + 1))) / (1.0 - q);
        if (next < tol) return {acc.value(), next + 4.0 * kEps};
    }
}

// theta4(e^{-t}) = 2 sqrt(pi/t) sum_{n>=0} e^{-pi^2 (n+1/2)^2 / t}
EvalResult theta4_jacobi(double t) {
    double pref = 2.0 * std::sqrt(kPi / t);
    KahanSum<double> acc;
    for (int n = 0; n < 200; ++n) {
        double x = (n + 0.5);
        double e = std::exp(-kPi * kPi * x * x / t);
        acc.add(e);
        if (e < 1e-30) break;
    }
    double v = pref * acc.value();
    return {v, 4.0 * kEps * v + 1e-300};
}

}  // namespace

EvalResult theta4_cubed(const ThetaArg& arg, ThetaMethod method, double tol) {
    double q = arg.q;
    theta_domain(q);
    if (method == ThetaMethod::direct_cube) {
        auto th = theta4_direct(q, tol);
        double v = th.value;
        double d = th.error_bound;
        double a = std::abs(v) + d;
        return {v * v * v, 3.0 * a * a * d + 8.0 * kEps * std::abs(v * v * v)};
    }
    double lq = std::log(q);
    KahanSum<double> acc;
    acc.add(1.0);
    std::int64_t N = 1;
    const std::int64_t cap = 10'000'000;
    for (;; ++N) {
        if (N > cap) throw ConvergenceError("theta4_cubed: andrews truncation exceeded capacity", acc.value(), kInf);
        double dn = static_cast<double>(N);
        double qn = std::exp(lq * dn);
        acc.add(4.0 * sgn(N) * qn / (1.0 + qn));
        double w = (1.0 - qn) / (1.0 + qn);
        // |j| < N: exponent N^2 - j^2 = k (2N - k) with k = N - |j|
        KahanSum<double> inner;
        for (std::int64_t k = 1; k <= N; ++k) {
            double ex = static_cast<double>(k * (2 * N - k));
            double e = std::exp(lq * ex);
            std::int64_t j = N - k;
            double mult = j == 0 ? 1.0 : 2.0;
            inner.add(mult * sgn(j) * e);
            if (e < 1e-32) break;
        }
        acc.add(-2.0 * w * inner.value());
        double qN1 = qn * q;
        double tail = 4.0 * qN1 / (1.0 - q) +
                      6.0 * std::exp(lq * (2.0 * dn + 1.0)) / ((1.0 - q * q) * (1.0 - std::min(qn, 0.999)));
        if (tail < tol) return {acc.value(), tail + 1e-30 * dn + 8.0 * kEps * std::log2(dn + 2.0)};
    }
}

std::vector<std::int64_t> theta4_cubed_coeffs(int degree, ThetaMethod method) {
    if (degree < 0) throw DomainError("theta4 coefficients: degree must be >= 0");
    std::size_t D = static_cast<std::size_t>(degree);
    std::vector<std::int64_t> c(D + 1, 0);
    if (method == ThetaMethod::direct_cube) {
        std::vector<std::int64_t> th(D + 1, 0);
        th[0] = 1;
        for (std::int64_t n = 1; static_cast<std::size_t>(n * n) <= D; ++n) th[n * n] = n % 2 ? -2 : 2;
        auto mul = [D](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
            std::vector<std::int64_t> r(D + 1, 0);
            for (std::size_t i = 0; i <= D; ++i)
                if (a[i])
                    for (std::size_t j = 0; i + j <= D; ++j) r[i + j] += a[i] * b[j];
            return r;
        };
        return mul(mul(th, th), th);
    }
    c[0] = 1;
    // 4 sum (-1)^n q^n/(1+q^n) = 4 sum_n sum_{k>=0} (-1)^{n+k} q^{n(k+1)}
    for (std::int64_t n = 1; static_cast<std::size_t>(n) <= D; ++n)
        for (std::int64_t k = 0; static_cast<std::size_t>(n * (k + 1)) <= D; ++k) c[n * (k + 1)] += (n + k) % 2 ? -4 : 4;
    // (1-q^n)/(1+q^n) = 1 + 2 sum_{k>=1} (-1)^k q^{nk}
    for (std::int64_t n = 1; static_cast<std::size_t>(2 * n - 1) <= D; ++n) {
        for (std::int64_t j = -(n - 1); j <= n - 1; ++j) {
            std::int64_t e0 = n * n - j * j;
            if (static_cast<std::size_t>(e0) > D) continue;
            std::int64_t s = (j % 2) ? 2 : -2;  // -2 (-1)^j
            c[e0] += s;
            for (std::int64_t k = 1; static_cast<std::size_t>(e0 + n * k) <= D; ++k) c[e0 + n * k] += s * (k % 2 ? -2 : 2);
        }
    }
    return c;
}

ChiAccel chi_half_accel(double t, std::int64_t n_odd) {
    if (!(t > 0.0)) throw DomainError("chi_half_accel: requires t > 0");
    if (n_odd < 1) throw DomainError("chi_half_accel: requires at least one term");
    // d and -d pair into 2 e^{-x} cos(x + pi/4)/sqrt(d), x = sqrt(2 pi d t)
    double c = std::sqrt(2.0 * kPi * t);
    KahanSum<double> acc;
    for (std::int64_t i = 0; i < n_odd; ++i) {
        double d = 2.0 * static_cast<double>(i) + 1.0;
        double x = c * std::sqrt(d);
        acc.add(2.0 * std::exp(-x) * std::cos(x + 0.25 * kPi) / std::sqrt(d));
    }
    double D = 2.0 * static_cast<double>(n_odd) - 1.0;
    double tail = (2.0 / c) * std::exp(-c * std::sqrt(D));
    ChiAccel out;
    out.result = {acc.value(), tail + 4.0 * kEps * (std::abs(acc.value()) + 2.0 * std::exp(-c))};
    out.terms = n_odd;
    return out;
}

ChiAccel chi_half_accel_tol(double t, double tol) {
    if (!(t > 0.0)) throw DomainError("chi_half_accel: requires t > 0");
    double c = std::sqrt(2.0 * kPi * t);
    // (2/c) e^{-c sqrt D} < tol
    double r = std::log(2.0 / (c * tol)) / c;
    double D = std::max(1.0, r > 0.0 ? r * r : 1.0);
    double n = std::ceil((D + 1.0) / 2.0);
    if (n > 1e8) throw ConvergenceError("chi_half_accel: t too small for the accelerated sum", 0.0, kInf);
    return chi_half_accel(t, static_cast<std::int64_t>(n));
}

EvalResult chi_value(double s, double t) {
    if (t < 0.0) throw DomainError("chi: requires t >= 0");
    if (s == 0.5) {
        if (t < 1.0) return chi_taylor(s, t);
        return chi_half_accel_tol(t, 1e-17).result;
    }
    if (s > 1.0) {
        if (t == 0.0) return {-dirichlet_eta(s).value, 4.0 * kEps};
        auto a = eval_chi_tilde(s, 0.5 * t);
        auto b = eval_chi_tilde(s, t);
        double f = std::pow(2.0, 1.0 - s);
        return {f * a.value - b.value, f * a.error_bound + b.error_bound + 2.0 * kEps * std::abs(b.value)};
    }
    if (t < 8.0) return chi_taylor(s, t);
    return chi_direct(s, t, 1e-12).result;
}

namespace {

QuadratureSpec mellin_spec() {
    QuadratureSpec qs;
    qs.abs_tol = 1e-13;
    qs.rel_tol = 1e-12;
    qs.max_subdivisions = 20000;
    return qs;
}

EvalResult epstein_q1_mellin(double s) {
    Integrand g([](double t) {
        if (t < 1.0) {
            double th = theta4_jacobi(t).value;
            return th * th * th - 1.0;
        }
        return theta4_cubed(ThetaArg::from_t(t), ThetaMethod::direct_cube, 1e-18).value - 1.0;
    });
    // theta4^3 - 1 ~ -6 e^{-t}
    g.with_decay(DecayHint::exponential(1.0, 8.0));
    auto r = mellin_integral(g, s, mellin_spec());
    double gm = gamma_real(s).value;
    return {r.value / gm, r.error_bound / gm + 4.0 * kEps * std::abs(r.value / gm)};
}

EvalResult epstein_q2_mellin(double s) {
    Integrand g([s](double t) {
        double c = chi_value(s, t).value;
        return c * c * c;
    });
    // |chi(s,t)| <~ A t^{(1-s)/2 - 1/4} e^{-sqrt(2 pi t)} from the odd-frequency Poisson dual
    double A = 10.0 * std::pow(kPi, 0.5 * std::abs(s - 1.0));
    g.with_decay(DecayHint::root_exponential(3.0 * std::sqrt(2.0 * kPi), A * A * A, 3.0 * (0.25 - 0.5 * s)));
    auto r = mellin_integral(g, s, mellin_spec());
    double gm = gamma_real(s).value;
    return {r.value / gm, r.error_bound / gm + 4.0 * kEps * std::abs(r.value / gm)};
}

// sum_{r in Z} (-1)^r (a + r^2)^{-s}, a > 0: partial sum to R plus the Boole end terms f/2 - f'/4
double alt_inner_q1(double a, double s, int R, double& err) {
    KahanSum<double> acc;
    acc.add(std::pow(a, -s));
    for (int r = 1; r <= R; ++r) acc.add(2.0 * sgn(r) * std::pow(a + double(r) * r, -s));
    double x = R + 1.0;
    double f = std::pow(a + x * x, -s);
    double fp = -2.0 * s * x * std::pow(a + x * x, -s - 1.0);
    acc.add(2.0 * sgn(R + 1) * (0.5 * f - 0.25 * fp));
    // next Boole term f'''/48 with |f'''| <~ f (2s+2)^3 / x^3, doubled
    double k = (2.0 * s + 2.0) / x;
    err += 2.0 * 2.0 * f * k * k * k / 48.0 + 2.0 * kEps * std::abs(acc.value());
    return acc.value();
}

EvalResult epstein_q1_direct(double s, int L) {
    const int R = 200;
    double err = 0.0;
    KahanSum<double> acc;
    acc.add(-2.0 * dirichlet_eta(2.0 * s).value);  // p = q = 0
    err += 4.0 * kEps;
    for (int p = 0; p <= L; ++p) {
        for (int q = p; q <= L; ++q) {
            if (p == 0 && q == 0) continue;
            double a = double(p) * p + double(q) * q;
            // orbit of (p,q) under signs and swap
            double mult = (p == 0 ? 2.0 : 4.0) * (p == q ? 1.0 : 2.0);
            double e = 0.0;
            double v = alt_inner_q1(a, s, R, e);
            acc.add(mult * sgn(p + q) * v);
            err += mult * e;
        }
    }
    // outside the box: |inner(a)| <= (8 pi^s/Gamma(s)) a^{(1/2-s)/2} K_{s-1/2}(pi sqrt a) and
    // K_nu(x) <= 2 sqrt(pi/(2x)) e^{-x} once x >= nu^2; at most 8 rho + 8 points per unit radius
    double nu = s - 0.5;
    if (kPi * L < nu * nu) throw DomainError("alt_epstein direct: cutoff too small for the tail bound");
    double gs = gamma_real(s).value;
    double tail = 0.0;
    for (double rho = L; rho < L + 400.0; rho += 1.0) {
        double x = kPi * rho;
        double k = 2.0 * std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
        tail += (8.0 * rho + 8.0) * 8.0 * std::pow(kPi, s) / gs * std::pow(rho, 0.5 - s) * k * 2.0;
    }
    return {acc.value(), err + tail};
}

// H_p(q) = sum_{r>=1} (-1)^r (pq + r(p+q))^{-s}, negative, |H| decreasing and convex in q
double h_q2(double s, std::int64_t p, std::int64_t q) {
    double b = double(p + q), c = double(p) * double(q) / b;
    double z1 = hurwitz_zeta(s, 1.0 + 0.5 * c).value;
    double z2 = hurwitz_zeta(s, 0.5 * (1.0 + c)).value;
    return std::pow(2.0 * b, -s) * (z1 - z2);
}

EvalResult epstein_q2_direct(double s, int P) {
    double err = 0.0;
    KahanSum<double> acc;
    auto T = [s](std::int64_t p, std::int64_t q) { return sgn(p + q) * h_q2(s, p, q); };
    // convex alternating tail: sum_{k>n} (-1)^k a_k = (-1)^{n+1} (a/2 + d/4) up to d/4
    auto conv_tail = [](double t1, double t2, double& e) {
        double d = std::abs(t1) - std::abs(t2);
        e += 0.25 * std::abs(d);
        return 0.5 * t1 + 0.25 * (t1 + t2);
    };
    for (std::int64_t p = 1; p <= P; ++p) {
        for (std::int64_t q = 1; q <= P; ++q) acc.add(T(p, q));
        acc.add(conv_tail(T(p, P + 1), T(p, P + 2), err));  // row p, q > P
    }
    for (std::int64_t q = 1; q <= P; ++q) acc.add(conv_tail(T(P + 1, q), T(P + 2, q), err));  // p > P, q <= P
    // p, q > P: |T| <= (pq)^{-s}
    double tp = std::pow(double(P), 1.0 - s) / (s - 1.0);
    err += tp * tp + 8.0 * kEps * std::abs(acc.value()) * std::log2(double(P) * P);
    return {acc.value(), err};
}

}  // namespace

EvalResult alt_epstein(double s, TernaryForm form, EpsteinMethod method, int cutoff) {
    if (!(s > 0.0)) throw DomainError("alt_epstein: requires s > 0");
    if (method == EpsteinMethod::mellin)
        return form == TernaryForm::q1 ? epstein_q1_mellin(s) : epstein_q2_mellin(s);
    if (s < 3.0) throw DomainError("alt_epstein direct: requires s >= 3");
    if (cutoff < 8) throw DomainError("alt_epstein direct: cutoff must be >= 8");
    return form == TernaryForm::q1 ? epstein_q1_direct(s, cutoff) : epstein_q2_direct(s, cutoff);
}

IdentityReport crandall_relation_check(double s) {
    if (!(s > 1.0)) throw DomainError("crandall relation: requires s > 1");
    auto e1 = alt_epstein(s, TernaryForm::q1, EpsteinMethod::mellin);
    auto e2 = alt_epstein(s, TernaryForm::q2, EpsteinMethod::mellin);
    double z = riemann_zeta(s).value;
    double f = 1.0 - std::pow(2.0, 1.0 - s);
    double base = -6.0 * f * f * z * z;
    double rhs = base - 4.0 * e2.value;
    double tol = s == 2.0 ? 1e-5 : 1e-6;
    auto rep = make_report("crandall.relation.s" + fmt_num(s), "two not equivalent ternary forms", e1.value, rhs, tol);
    rep.note("q1_mellin", fmt_num(e1.value));
    rep.note("q2_mellin", fmt_num(e2.value));
    rep.note("bound", fmt_num(e1.error_bound + 4.0 * e2.error_bound));
    if (s >= 3.0) {
        auto d = alt_epstein(s, TernaryForm::q2, EpsteinMethod::direct);
        rep.note("q2_direct", fmt_num(d.value));
        rep.note("residual_with_direct_q2", fmt_num(std::abs(e1.value - (base - 4.0 * d.value))));
    }
    return rep;
}

namespace {

double logistic_sq(double x) { return 1.0 / (1.0 + std::exp(x * x)); }

}  // namespace

DoubleIntegralParts crandall_double_integral(double L) {
    if (!(L > 0.0 && L <= 20.0)) throw DomainError("double integral: requires 0 < L <= 20");
    QuadratureSpec inner_spec;
    inner_spec.abs_tol = 1e-13;
    inner_spec.rel_tol = 1e-11;
    QuadratureSpec outer_spec;
    outer_spec.abs_tol = 1e-12;
    outer_spec.rel_tol = 1e-10;
    double inner_err = 0.0;
    auto run = [&](bool half) {
        inner_err = 0.0;
        Integrand outer([&, half](double y) {
            double lo = half ? y : -L;
            if (lo >= L) return 0.0;
            Integrand h([y](double z) { return logistic_sq(z) * logistic_sq(y - z); });
            auto r = integrate(h, lo, L, inner_spec);
            inner_err = std::max(inner_err, r.error_bound);
            return logistic_sq(y) * r.value;
        });
        auto r = integrate(outer, -L, L, outer_spec);
        // inner errors weighted by int 1/(1+e^{y^2}) <= sqrt(pi)
        return EvalResult{r.value, r.error_bound + std::sqrt(kPi) * inner_err};
    };
    DoubleIntegralParts out;
    out.full = run(false);
    out.half = run(true);
    // outside the square: 1/(1+e^{x^2}) <= e^{-x^2}, the remaining factors <= 1 and int <= sqrt(pi)
    out.tail_bound = 2.0 * kPi * std::erfc(L);
    return out;
}

IdentityReport double_integral_check(double L) {
    auto parts = crandall_double_integral(L);
    auto e2 = alt_epstein(0.5, TernaryForm::q2, EpsteinMethod::mellin);
    auto rep = make_report("crandall.double_integral", "Compare with [Crandall]", parts.full.value, -kPi * e2.value, 1e-4);
    rep.note("L", fmt_num(L));
    rep.note("half_doubled", fmt_num(2.0 * parts.half.value));
    rep.note("tail_bound", fmt_num(parts.tail_bound));
    rep.note("bound", fmt_num(parts.full.error_bound + parts.tail_bound + kPi * e2.error_bound));
    return rep;
}

IdentityReport ghat_check(double t) {
    if (!(std::abs(t) <= 20.0)) throw DomainError("ghat: requires |t| <= 20");
    double at = std::abs(t);
    QuadratureSpec qs;
    qs.abs_tol = 1e-14;
    qs.rel_tol = 1e-12;
    Integrand h([at](double x) { return std::cos(at * x) * logistic_sq(x); });
    h.with_decay(DecayHint::gaussian(1.0));
    if (at > 0.0) h.oscillating(kPi / at, 0.5 * kPi / at);
    auto r = integrate(h, 0.0, kInf, qs);
    double lhs = r.value / kPi;
    auto c = chi_value(0.5, 0.25 * t * t);
    double rhs = -c.value / (2.0 * std::sqrt(kPi));
    auto rep = make_report("ghat.t" + fmt_num(t), "is a Fourier transform of a function of the Schwartz class", lhs, rhs,
                           1e-8);
    rep.note("bound", fmt_num(r.error_bound / kPi + c.error_bound / (2.0 * std::sqrt(kPi))));
    return rep;
}

IdentityReport segal_identity_check(double z) {
    if (!(z > 0.0 && z <= 10.0)) throw DomainError("segal: requires 0 < z <= 10");
    // sum (1 - cos(z/k)) = 2 sum sin^2(z/(2k))
    auto l = eval_sin2_sum(0.5 * z);
    double lhs = 2.0 * l.value;
    double a = 2.0 * std::sqrt(2.0 * kPi * z);
    const std::int64_t K = 100000;
    KahanSum<double> acc;
    auto J0 = [](double w) { return bessel_real(BesselKind::J0, w).value; };
    auto J1 = [](double w) { return bessel_real(BesselKind::J1, w).value; };
    for (std::int64_t k = 1; k <= K; ++k) {
        double w = a * std::sqrt(double(k));
        acc.add(a * J1(w) / std::sqrt(double(k)));
    }
    // Euler-Maclaurin midpoint tail: int_{K+1/2}^inf f + f'(K+1/2)/24, with int f = 2 J0(a sqrt x)
    double x = K + 0.5;
    double W = a * std::sqrt(x);
    double j0 = J0(W), j1 = J1(W);
    double fp = a * (-0.5 * std::pow(x, -1.5) * j1 + (a / (2.0 * x)) * (j0 - j1 / W));
    acc.add(2.0 * j0 + fp / 24.0);
    double om = a / (2.0 * std::sqrt(x)) + 1.0 / x;
    double em = 4.0 * (7.0 / 5760.0) * std::sqrt(2.0 * a / kPi) * std::pow(x, -0.75) * 2.0 * om * om * om;
    double rhs = 0.5 * kPi * z - 0.5 + 0.25 * acc.value();
    auto rep = make_report("segal.z" + fmt_num(z), "Segal proves the following result", lhs, rhs, 1e-6);
    rep.note("terms", fmt_num(double(K)));
    rep.note("bound", fmt_num(2.0 * l.error_bound + 0.25 * (em + 1e-14 * double(K) * kEps * 1e3)));
    return rep;
}

namespace {

std::string cplx_tag(cplx z) {
    std::string s = fmt_num(z.real());
    if (z.imag() != 0.0) s += (z.imag() > 0.0 ? "+" : "") + fmt_num(z.imag()) + "i";
    return s;
}

// 2 sum_n [K0(c sqrt(2 n pi i z)) + K0(c sqrt(-2 n pi i z))] until the K0(Re w) majorant tail is below tol
cplx k0_pair_sum(cplx z, double c, double tol, std::int64_t& terms, double& err) {
    const cplx iz = cplx(0.0, 1.0) * z;
    for (cplx u : {iz, -iz})
        if (u.imag() == 0.0 && u.real() < 0.0) throw BranchError("hardy k0 sum: square-root argument on the cut");
    double rate = 1e300;
    for (cplx u : {iz, -iz}) rate = std::min(rate, c * std::sqrt(2.0 * kPi) * std::sqrt(std::abs(u)) * std::cos(0.5 * std::arg(u)));
    if (!(rate > 0.0)) throw BranchError("hardy k0 sum: no decay on this branch");
    KahanSum<cplx> acc;
    std::int64_t n = 1;
    for (;; ++n) {
        double dn = double(n);
        for (cplx u : {iz, -iz}) {
            cplx w = c * std::sqrt(2.0 * dn * kPi * u);
            acc.add(bessel_k_complex(0.0, w).value);
        }
        // |K0(w)| <= K0(Re w) <= sqrt(pi/(2x)) e^{-x}; sum_{m>n} e^{-r sqrt m} <= 2 e^{-r sqrt n}(sqrt n/r + 1/r^2)
        double sn = std::sqrt(dn), x = rate * sn;
        double tail = 2.0 * 2.0 * std::sqrt(kPi / (2.0 * x)) * 2.0 * std::exp(-x) * (sn / rate + 1.0 / (rate * rate));
        if (tail < tol) {
            err += tail;
            break;
        }
        if (n > 10'000'000) throw ConvergenceError("hardy k0 sum: too many terms", std::abs(acc.value()), tail);
    }
    terms = n;
    err += 2.0 * 1e-15 * double(n);
    return 2.0 * acc.value();
}

}  // namespace

IdentityReport hl_k0_identity_check(cplx z) {
    if (!(z.real() > 0.0)) throw DomainError("hardy k0 identity: requires Re z > 0");
    auto l = eval_exp_sum(z);
    std::int64_t terms = 0, pterms = 0;
    double err = 0.0, perr = 0.0;
    cplx ks = k0_pair_sum(z, 2.0, 1e-14, terms, err);
    cplx rhs = std::log(z) + 2.0 * kEulerGamma - ks;
    cplx kp = k0_pair_sum(z, 1.0, 1e-12, pterms, perr);
    cplx printed = 2.0 * std::log(z) + 2.0 * kEulerGamma - kp;
    auto rep = make_report("hardy2.z" + cplx_tag(z), "Hardy and Littlewood gave in [Hardy] (p.269) the following relation",
                           l.value, rhs, 1e-8);
    rep.note("k0_terms", fmt_num(double(terms)));
    rep.note("printed_residual", fmt_num(std::abs(l.value - printed)));
    rep.note("bound", fmt_num(l.error_bound + err));
    return rep;
}

IdentityReport laplace_partial_fraction_check(double p) {
    if (!(p > 0.0)) throw DomainError("laplace: requires p > 0");
    double c = 1.0 / (p * p);
    std::int64_t K = std::max<std::int64_t>(50, static_cast<std::int64_t>(std::ceil(4.0 * std::sqrt(c))));
    if (K > 50'000'000) throw ConvergenceError("laplace: p too small", 0.0, kInf);
    KahanSum<double> acc;
    for (std::int64_t k = K; k >= 1; --k) {
        double dk = double(k);
        acc.add(1.0 / (dk * dk + c));
    }
    // sum_{k>K} 1/(k^2+c) = sum_j (-c)^j zeta(2j+2, K+1), ratio <= 1/16
    KahanSum<double> tail;
    double cj = 1.0, err = 0.0;
    for (int j = 0; j < 200; ++j) {
        double t = cj * hurwitz_zeta(2.0 * j + 2.0, double(K + 1)).value;
        if (std::abs(t) < 1e-20 * std::abs(acc.value())) {
            err = std::abs(t);
            break;
        }
        tail.add(t);
        cj *= -c;
    }
    double p3 = p * p * p;
    double lhs = (acc.value() + tail.value()) / p3;
    double ex = std::expm1(2.0 * kPi / p);
    double rhs = kPi / (2.0 * p * p) - 1.0 / (2.0 * p) + (kPi / (p * p)) / ex;
    double printed = kPi / (2.0 * p * p) - 1.0 / p + (kPi / (p * p)) / ex;
    // absolute 1e-12 for values of order one, relative once the sum itself is large
    double tol = 1e-12 * std::max(1.0, std::abs(rhs));
    auto rep = make_report("laplace.p" + fmt_num(p), "well known partial fractions decomposition", lhs, rhs, tol);
    rep.note("printed_residual", fmt_num(std::abs(lhs - printed)));
    rep.note("bound", fmt_num(err / p3 + 8.0 * kEps * std::abs(lhs)));
    return rep;
}

IdentityReport g_nu_check(double nu, cplx z) {
    if (nu != 0.0 && nu != -1.0) throw DomainError("g_nu check: nu must be 0 or -1");
    auto g = g_nu_series(nu, z);
    EvalResultC d = nu == 0.0 ? eval_exp_rem_sum(z) : eval_exp_sum(z);
    cplx rhs = nu == 0.0 ? d.value : -d.value;
    auto rep = make_report("gnu.nu" + fmt_num(nu) + ".z" + cplx_tag(z), "More generally we define the series", g.value, rhs,
                           1e-12);
    rep.note("bound", fmt_num(g.error_bound + d.error_bound));
    return rep;
}

}  // namespace hlzeta
