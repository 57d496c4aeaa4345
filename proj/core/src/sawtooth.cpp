#include "hlzeta/sawtooth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hlzeta/hlseries.hpp"
#include "hlzeta/specfun.hpp"

namespace hlzeta {

IdentityReport kubert_check(int m, double x) {
    if (m < 1) throw DomainError("kubert: requires m >= 1");
    KahanSum<double> lhs;
    for (int l = 0; l < m; ++l) lhs.add(sawtooth(x + static_cast<double>(l) / m, SawtoothConvention::centered));
    double rhs = sawtooth(m * x, SawtoothConvention::centered);
    auto rep = make_report("kubert.m" + std::to_string(m) + ".x" + fmt_num(x), "Kubert identity", lhs.value(), rhs,
                           1e-13);
    return rep;
}

double rho_sum(double x) {
    auto N = static_cast<std::int64_t>(std::floor(x));
    KahanSum<double> acc;
    for (std::int64_t n = N; n >= 1; --n) {
        double q = x / static_cast<double>(n);
        acc.add((q - std::floor(q) - 0.5) / static_cast<double>(n));
    }
    return acc.value();
}

DivisorSumOut divisor_sum_identity(double x) {
    if (!(x >= 1.0)) throw DomainError("divisor sums: requires x >= 1");
    if (x > 1e7) throw CapacityError("divisor sums: x beyond 1e7");
    auto N = static_cast<std::int64_t>(std::floor(x));
    KahanSum<double> s1, inv2, harm, rho, s_up;
    double mag = 0.0;
    for (std::int64_t n = N; n >= 1; --n) {
        double dn = static_cast<double>(n);
        double q = x / dn;
        double fl = std::floor(q);
        s1.add(fl / dn);
        inv2.add(1.0 / (dn * dn));
        harm.add(1.0 / dn);
        rho.add((q - fl - 0.5) / dn);
        s_up.add(dn * fl);  // sum_{k<=x} sigma(k) by counting d*(multiples)
        mag += q / dn;
    }
    double lhs = s1.value();
    double rhs = x * inv2.value() - rho.value() - 0.5 * harm.value();
    double tol = 16.0 * kEps * (mag + x * inv2.value() + harm.value());
    DivisorSumOut out{make_report("divisor.S1.x" + fmt_num(x), "hyperbola S_1", lhs, rhs, tol), 0.0, 0.0};
    out.s1_remainder = lhs - kZeta2 * x + 0.5 * std::log(x);
    out.s_upper_scaled = (s_up.value() - kPi * kPi * x * x / 12.0 + x * rho.value()) / x;
    out.report.note("s1_remainder", fmt_num(out.s1_remainder));
    out.report.note("s_upper_scaled", fmt_num(out.s_upper_scaled));
    return out;
}

bool divisor_sum_exact_scan(std::int64_t limit) {
    if (limit > sieve_bound()) throw CapacityError("divisor scan: limit beyond sieve bound");
    // sum_{k<=x} sigma_{-1}(k) = sum_d c_d(x)/d with c_d(x) counted from divisor lists,
    // hyperbola side gives c_d(x) = floor(x/d); equality of coefficients is exact equality
    std::vector<std::int64_t> count(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t x = 1; x <= limit; ++x) {
        for (auto d : divisors(x)) ++count[static_cast<std::size_t>(d)];
        for (std::int64_t d = 1; d <= x; ++d)
            if (count[static_cast<std::size_t>(d)] != x / d) return false;
    }
    // literal rational form of the identity with rho_sum and H for small x
    for (std::int64_t x = 1; x <= std::min<std::int64_t>(limit, 60); ++x) {
        Rational s1 = 0, inv2 = 0, harm = 0, rho = 0;
        for (std::int64_t n = 1; n <= x; ++n) {
            Rational q(x, n);
            BigInt fl = x / n;
            s1 += Rational(fl, n);
            inv2 += Rational(1, n * n);
            harm += Rational(1, n);
            rho += (q - Rational(fl) - Rational(1, 2)) / n;
        }
        if (s1 != Rational(x) * inv2 - rho - harm / 2) return false;
    }
    return true;
}

EvalResult integrate_rho_theta(const std::function<double(double)>& g, double theta, SawtoothConvention conv,
                               double tol) {
    if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("rho integral: requires theta in (0, 1]");
    if (!(tol > 0.0)) throw DomainError("rho integral: tolerance must be positive");
    // sample size of g and g' near 0 to size the analytic head
    auto gmax_on = [&](double hi) {
        double m = 0.0;
        for (int i = 1; i <= 32; ++i) m = std::max(m, std::abs(g(hi * i / 32.0)));
        return 2.0 * m;
    };
    // on (theta/(k+1), theta/k) rho - 1/2 integrates to about -theta/(6k^3) against a constant
    double xmin = std::min(theta / 2.0, 0.25);
    double head_err = 0.0;
    for (int it = 0; it < 200; ++it) {
        double gm = gmax_on(xmin);
        double gp = 2.0 * std::abs(g(xmin) - g(0.5 * xmin)) / (0.5 * xmin);
        head_err = gm * xmin * xmin / (6.0 * theta) + gp * xmin * xmin * xmin / (3.0 * theta);
        if (head_err <= tol / 4.0) break;
        xmin *= 0.7;
    }
    if (head_err > tol / 4.0) throw ConvergenceError("rho integral: head bound not met", 0.0, head_err);
    auto K = static_cast<std::int64_t>(std::ceil(theta / xmin));
    if (K > 20'000'000) throw ConvergenceError("rho integral: too many pieces", 0.0, head_err);
    xmin = theta / static_cast<double>(K);
    double shift = conv == SawtoothConvention::centered ? 0.5 : 0.0;
    Integrand f([&g, theta, shift](double x) {
        double q = theta / x;
        return (q - std::floor(q) - shift) * g(x);
    });
    f.smoothness = Smoothness::piecewise;
    QuadratureSpec qs;
    qs.abs_tol = tol / 2.0;
    qs.rel_tol = 1e-14;
    qs.max_subdivisions = 200000;
    for (std::int64_t k = K - 1; k >= 1; --k) qs.breakpoints.push_back(theta / static_cast<double>(k));
    if (theta < 1.0) {
        if (!qs.breakpoints.empty() && qs.breakpoints.back() >= 1.0) qs.breakpoints.pop_back();
    } else {
        qs.breakpoints.pop_back();  // theta/1 = 1 is the endpoint
    }
    auto body = integrate(f, xmin, 1.0, qs);
    double head = 0.0;
    if (conv == SawtoothConvention::fractional) {
        Integrand hg([&g](double x) { return 0.5 * g(x); });
        QuadratureSpec hs;
        hs.abs_tol = tol / 8.0;
        auto h = integrate(hg, 0.0, xmin, hs);
        head = h.value;
        head_err += h.error_bound;
    }
    return {body.value + head, body.error_bound + head_err};
}

IdentityReport beurling_mellin_check(double theta, double s) {
    if (!(s > 1.0)) throw DomainError("beurling mellin: requires s > 1");
    auto lhs = integrate_rho_theta([s](double x) { return std::pow(x, s - 1.0); }, theta,
                                   SawtoothConvention::fractional, 1e-11);
    auto z = riemann_zeta(s);
    double rhs = -theta / (1.0 - s) - std::pow(theta, s) * z.value / s;
    auto rep = make_report("beurling.mellin.theta" + fmt_num(theta) + ".s" + fmt_num(s), "Nyman-Beurling Mellin",
                           lhs.value, rhs, 1e-8);
    rep.note("quad_bound", fmt_num(lhs.error_bound + z.error_bound));
    return rep;
}

IdentityReport rho_decomposition_check(double theta, const DecompFn& fn) {
    if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("decomposition: requires theta in (0, 1]");
    const double tol = 1e-9;
    auto lhs = integrate_rho_theta(fn.f, theta, SawtoothConvention::fractional, tol);
    // sum_{n>N} n (F(theta/n) - F(theta/(n+1))) = int_0^{x0} floor(theta/x) f, replaced by
    // theta int f/x - F(x0)/2 with |error| <= int |rho - 1/2||f| <= L x0^2 / 4
    double L = std::max(fn.lipschitz, 1e-300);
    auto N = static_cast<std::int64_t>(std::ceil(theta / std::sqrt(tol / L)));
    N = std::max<std::int64_t>(N, 16);
    double x0 = theta / static_cast<double>(N + 1);
    KahanSum<double> series;
    for (std::int64_t n = N; n >= 1; --n) {
        double dn = static_cast<double>(n);
        series.add(dn * (fn.F(theta / dn) - fn.F(theta / (dn + 1.0))));
    }
    Integrand ft([&fn](double t) { return t == 0.0 ? 0.0 : fn.f(t) / t; });
    QuadratureSpec qs;
    qs.abs_tol = tol / 16.0;
    auto whole = integrate(ft, 0.0, 1.0, qs);
    auto near0 = integrate(ft, 0.0, x0, qs);
    double tail = theta * near0.value - 0.5 * fn.F(x0);
    double tail_err = L * x0 * x0 / 4.0 + theta * near0.error_bound;
    double rhs = theta * whole.value - series.value() - tail;
    double bound = lhs.error_bound + tail_err + theta * whole.error_bound;
    auto rep = make_report("decomp." + fn.name + ".theta" + fmt_num(theta), "decomposition formula", lhs.value, rhs,
                           std::max(1e-7, 4.0 * bound));
    rep.note("bound", fmt_num(bound));
    return rep;
}

FourierCoeff fourier_coeff_an(double theta, int n) {
    if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("a_n: requires theta in (0, 1]");
    if (n < 1 || n > 200) throw DomainError("a_n: requires 1 <= n <= 200");
    double w = n * kPi;
    Integrand si([w](double t) { return t == 0.0 ? w : std::sin(w * t) / t; });
    si.oscillating(1.0 / n);
    QuadratureSpec qs;
    qs.abs_tol = 1e-13;
    qs.rel_tol = 1e-13;
    auto sint = integrate(si, 0.0, 1.0, qs);
    const double r2 = std::sqrt(2.0);
    // 1 - cos u = 2 sin^2(u/2) in the antiderivative of sin(n pi x)
    auto s2 = eval_sin2_sum(0.5 * w * theta);
    FourierCoeff out;
    out.closed.value = r2 * (theta * sint.value - 2.0 / w * s2.value);
    out.closed.error_bound = r2 * (theta * sint.error_bound + 2.0 / w * s2.error_bound);
    auto s2p = eval_sin2_sum(w * theta);
    out.printed_variant = r2 * (theta * sint.value - s2p.value / w);
    auto d = integrate_rho_theta([w](double x) { return std::sin(w * x); }, theta, SawtoothConvention::fractional,
                                 1e-11);
    out.direct = {r2 * d.value, r2 * d.error_bound};
    return out;
}

IdentityReport fourier_coeff_check(double theta, int n) {
    auto c = fourier_coeff_an(theta, n);
    auto rep = make_report("fourier.an.theta" + fmt_num(theta) + ".n" + std::to_string(n), "Fourier coefficient a_n",
                           c.closed.value, c.direct.value, 1e-8);
    rep.note("printed_variant", fmt_num(c.printed_variant));
    rep.note("printed_variant_diff", fmt_num(std::abs(c.printed_variant - c.direct.value)));
    return rep;
}

CsvTable fourier_coeff_table(double theta, int n_max) {
    if (n_max < 1 || n_max > 200) throw CapacityError("a_n table: requires 1 <= n_max <= 200");
    CsvTable table({"theta", "n", "closed", "direct", "abs_diff", "printed_variant"});
    for (int n = 1; n <= n_max; ++n) {
        auto c = fourier_coeff_an(theta, n);
        table.add({fmt_num(theta), std::to_string(n), fmt_num(c.closed.value), fmt_num(c.direct.value),
                   fmt_num(std::abs(c.closed.value - c.direct.value)), fmt_num(c.printed_variant)});
    }
    return table;
}

CsvTable bod_pointwise_scan(double theta, double x, const std::vector<std::int64_t>& n_grid) {
    if (!(theta > 0.0 && theta <= 1.0) || !(x > 0.0 && x <= 1.0)) throw DomainError("bod scan: theta, x in (0, 1]");
    std::vector<std::int64_t> ns = n_grid;
    std::sort(ns.begin(), ns.end());
    if (!ns.empty() && ns.back() > sieve_bound()) throw CapacityError("bod scan: N beyond sieve bound");
    double target = x <= theta ? -1.0 : 0.0;
    double base = frac_part(theta / x);
    CsvTable table({"theta", "x", "N", "partial_sum", "target", "abs_diff"});
    KahanSum<double> acc;
    std::int64_t n = 0;
    for (auto N : ns) {
        for (; n < N;) {
            ++n;
            int mu = mobius(n);
            if (mu == 0) continue;
            double dn = static_cast<double>(n);
            acc.add(mu * (frac_part(theta / (dn * x)) - base / dn));
        }
        double v = acc.value();
        table.add({fmt_num(theta), fmt_num(x), std::to_string(N), fmt_num(v), fmt_num(target),
                   fmt_num(std::abs(v - target))});
    }
    return table;
}

}  // namespace hlzeta
