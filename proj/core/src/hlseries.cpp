#include "hlzeta/hlseries.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "hlzeta/quad.hpp"
#include "hlzeta/sawtooth.hpp"
#include "hlzeta/specfun.hpp"

namespace hlzeta {

namespace {

double inv_factorial(int j) {
    double f = 1.0;
    for (int i = 2; i <= j; ++i) f /= i;
    return f;
}

double weight(std::int64_t n, double a) {
    if (a == 0.0) return 1.0;
    double dn = static_cast<double>(n);
    if (a == 1.0) return 1.0 / dn;
    if (a == 2.0) return 1.0 / (dn * dn);
    return std::pow(dn, -a);
}

// sum_n phi(z/n) n^{-a}: head n <= N, Taylor tail sum_j c_j z^j zeta(a+j, N+1).
// |c_j| <= base^j/j! and N + 1 > base |z| keep the tail remainder geometric.
template <class T, class Phi, class Coef>
Eval<T> dirichlet_sum(Phi phi, Coef coef, double a, T z, int jmin, double base, const TruncationPolicy& pol,
                      const char* name) {
    double az = std::abs(z);
    auto N = std::max<std::int64_t>(64, static_cast<std::int64_t>(std::ceil(2.0 * std::max(1.0, base) * az)));
    if (N > pol.max_terms)
        throw ConvergenceError(std::string(name) + ": needs " + std::to_string(N) + " terms, policy allows " +
                                   std::to_string(pol.max_terms),
                               0.0, HUGE_VAL);
    KahanSum<T> head;
    double abs_head = 0.0;
    for (std::int64_t n = N; n >= 1; --n) {
        T t = phi(z / static_cast<double>(n)) * weight(n, a);
        head.add(t);
        abs_head += std::abs(t);
    }
    double Np1 = static_cast<double>(N) + 1.0;
    double rho = base * az / Np1;
    auto remainder = [&](int J) {
        if (az == 0.0) return 0.0;
        double c = 1.0 / Np1 + 1.0 / (a + J);
        double r = std::pow(Np1, 1.0 - a) * c * std::pow(rho, J + 1) * inv_factorial(J + 1);
        return r / (1.0 - rho / (J + 2.0));
    };
    KahanSum<T> tail;
    double tail_err = 0.0;
    int J = jmin - 1;
    T zj = T(1.0);
    for (int j = 0; j < jmin; ++j) zj *= z;
    // at z = 0 the remainder model is 0 but the j = jmin term still counts when jmin = 0
    while ((J < jmin || remainder(J) > pol.tail_tolerance) && J < 400) {
        ++J;
        double c = coef(J);
        if (c != 0.0) {
            auto hz = hurwitz_zeta(a + J, Np1);
            T t = c * zj * hz.value;
            tail.add(t);
            tail_err += std::abs(c * zj) * hz.error_bound + 4.0 * kEps * std::abs(t);
        }
        zj *= z;
    }
    double rem = remainder(J);
    if (rem > pol.tail_tolerance)
        throw ConvergenceError(std::string(name) + ": tail tolerance not met", std::abs(head.value()), rem);
    double harmonic = a > 0.0 ? riemann_zeta(a + 1.0).value : 1.0 + std::log(static_cast<double>(N));
    double rounding = 4.0 * kEps * abs_head + kEps * az * harmonic;
    T value = head.value() + tail.value();
    return {value, rem + tail_err + rounding};
}

double sin_coef(int j) { return (j % 2 == 1) ? (((j / 2) % 2) ? -1.0 : 1.0) * inv_factorial(j) : 0.0; }
double cos_coef(int j) { return (j % 2 == 0) ? (((j / 2) % 2) ? -1.0 : 1.0) * inv_factorial(j) : 0.0; }
// sin^2 u = (1 - cos 2u)/2
double sin2_coef(int j) {
    if (j == 0 || j % 2) return 0.0;
    int k = j / 2;
    return ((k % 2) ? 1.0 : -1.0) * std::ldexp(1.0, 2 * k - 1) * inv_factorial(j);
}
double exp_coef(int j) { return inv_factorial(j); }
// 1 - e^{-u}
double onemexp_coef(int j) { return j == 0 ? 0.0 : ((j % 2) ? 1.0 : -1.0) * inv_factorial(j); }
double onemcos_coef(int j) { return j == 0 ? 0.0 : -cos_coef(j); }

// e^{-u} - 1 + u for small u, free of cancellation
cplx expm1_rem(cplx u) {
    cplx term = u * u / 2.0, acc = 0.0;
    for (int j = 2; j < 30 && std::abs(term) > 1e-36; ++j) {
        acc += term;
        term *= -u / static_cast<double>(j + 1);
    }
    return acc;
}

}  // namespace

EvalResult eval_f(double x, const TruncationPolicy& policy) {
    if (!(std::abs(x) < 1e12)) throw DomainError("f: |x| must be below 1e12");
    if (x < 0.0) {
        auto r = eval_f(-x, policy);
        return {-r.value, r.error_bound};
    }
    return dirichlet_sum<double>([](double u) { return std::sin(u); }, sin_coef, 1.0, x, 1, 1.0, policy, "f");
}

EvalResult eval_sin2_sum(double x, const TruncationPolicy& policy) {
    x = std::abs(x);
    return dirichlet_sum<double>(
        [](double u) {
            double s = std::sin(u);
            return s * s;
        },
        sin2_coef, 0.0, x, 2, 2.0, policy, "sin2");
}

EvalResult eval_F_cos(double x, const TruncationPolicy& policy) {
    x = std::abs(x);
    return dirichlet_sum<double>([](double u) { return std::cos(u); }, cos_coef, 2.0, x, 0, 1.0, policy, "F");
}

EvalResultC eval_G(cplx z, const TruncationPolicy& policy) {
    if (z.real() > 0.0) throw DomainError("G: requires Re z <= 0");
    return dirichlet_sum<cplx>([](cplx u) { return std::exp(u); }, exp_coef, 2.0, z, 0, 1.0, policy, "G");
}

EvalResult eval_chi_tilde(double s, double t, const TruncationPolicy& policy) {
    if (!(s > 1.0)) throw DomainError("chi~: requires s > 1");
    if (t < 0.0) throw DomainError("chi~: requires t >= 0");
    return dirichlet_sum<double>([](double u) { return std::exp(-u); },
                                 [](int j) { return ((j % 2) ? -1.0 : 1.0) * inv_factorial(j); }, s, t, 0, 1.0,
                                 policy, "chi~");
}

EvalResultC eval_exp_sum(cplx z, const TruncationPolicy& policy) {
    if (z.real() < 0.0) throw DomainError("exp sum: requires Re z >= 0");
    return dirichlet_sum<cplx>([](cplx u) { return 1.0 - std::exp(-u); }, onemexp_coef, 1.0, z, 1, 1.0, policy,
                               "exp-sum");
}

EvalResult eval_onemcos_sum(double x, const TruncationPolicy& policy) {
    x = std::abs(x);
    return dirichlet_sum<double>([](double u) { return 1.0 - std::cos(u); }, onemcos_coef, 1.0, x, 2, 1.0,
                                 policy, "1-cos");
}

EvalResultC eval_exp_rem_sum(cplx z, const TruncationPolicy& policy) {
    if (z.real() < 0.0) throw DomainError("exp remainder sum: requires Re z >= 0");
    return dirichlet_sum<cplx>([](cplx u) { return std::abs(u) < 1e-3 ? expm1_rem(u) : std::exp(-u) - 1.0 + u; },
                               [](int j) { return j < 2 ? 0.0 : ((j % 2) ? -1.0 : 1.0) * inv_factorial(j); }, 0.0, z,
                               2, 1.0, policy, "exp-rem");
}

ChiDirect chi_direct(double s, double t, double tol, std::int64_t max_terms) {
    if (!(s > 0.0)) throw DomainError("chi: requires s > 0");
    if (t < 0.0) throw DomainError("chi: requires t >= 0");
    auto h = [s, t](double x) { return std::pow(x, -s) * std::exp(-t / x); };
    // h is decreasing and convex beyond xc, so alternating tail sits in [h(m)/2, h(m)/2 + D/2]
    double xc = t * ((s + 1.0) + std::sqrt(s + 1.0)) / (s * (s + 1.0));
    double need = std::pow(s / (2.0 * tol), 1.0 / (s + 1.0));
    double m_min = std::max({xc + 1.0, need, 3.0});
    auto K = static_cast<std::int64_t>(std::ceil((m_min - 1.0) / 2.0));
    if (2 * K + 2 > max_terms) throw ConvergenceError("chi: direct sum exceeds term budget", 0.0, HUGE_VAL);
    KahanSum<double> acc;
    double abs_acc = 0.0;
    for (std::int64_t k = K; k >= 1; --k) {
        double p = h(2.0 * k) - h(2.0 * k - 1.0);
        acc.add(p);
        abs_acc += std::abs(p);
    }
    double m = 2.0 * K + 1.0;
    double D = h(m) - h(m + 1.0);
    acc.add(-0.5 * h(m) - 0.25 * D);
    double err = 0.25 * std::abs(D) + 8.0 * kEps * (abs_acc + h(1.0));
    return {{acc.value(), err}, 2 * K};
}

EvalResult chi_taylor(double s, double t) {
    if (!(s > 0.0)) throw DomainError("chi: requires s > 0");
    KahanSum<double> acc;
    double term = 1.0;  // (-t)^j / j!
    double abs_sum = 0.0, err = 0.0;
    for (int j = 0; j < 200; ++j) {
        auto e = dirichlet_eta(s + j);
        double v = -term * e.value;
        acc.add(v);
        abs_sum += std::abs(v);
        err += std::abs(term) * e.error_bound;
        double next = term * (-t) / (j + 1.0);
        // eta <= 1 bounds the remainder by the next term times e^t/(...) for t < j
        if (std::abs(next) < 1e-20 && j > t) {
            err += 2.0 * std::abs(next);
            break;
        }
        term = next;
    }
    return {acc.value(), err + 4.0 * kEps * abs_sum};
}

EvalResultC g_nu_series(double nu, cplx z) {
    double az = std::abs(z);
    if (!(az < 1.0)) throw DomainError("G_nu: requires |z| < 1");
    int n0 = static_cast<int>(std::floor(nu + 1.0)) + 1;
    if (n0 < 0) n0 = 0;
    KahanSum<cplx> acc;
    double err = 0.0;
    cplx zn = std::pow(-z, n0);
    double fact = 1.0;
    for (int i = 2; i <= n0; ++i) fact *= i;
    double zeta0 = riemann_zeta(n0 - nu).value;
    int n = n0;
    for (; n < n0 + 400; ++n) {
        auto zv = riemann_zeta(n - nu);
        cplx t = zv.value * zn / fact;
        acc.add(t);
        err += std::abs(zn) / fact * zv.error_bound + 4.0 * kEps * std::abs(t);
        zn *= -z;
        fact *= (n + 1.0);
        double tail = zeta0 * std::abs(zn) / fact / (1.0 - az / (n + 2.0));
        if (tail < 1e-20) {
            err += tail;
            break;
        }
    }
    return {acc.value(), err};
}

EvalResultC eval_power_series(PowerForm form, cplx z) {
    double az = std::abs(z);
    if (!(az < 1.0)) throw DomainError("power series: requires |z| < 1");
    KahanSum<cplx> acc;
    double err = 0.0;
    cplx zp = 1.0;
    double fact = 1.0;
    for (int m = 0; m < 400; ++m) {
        if (m > 0) {
            zp *= z;
            fact *= m;
        }
        double c = 0.0;
        double zarg = 0.0;
        switch (form) {
            case PowerForm::sin_form:  // sum (-1)^j zeta(2j+2) z^{2j+1}/(2j+1)!
                if (m % 2 == 1) {
                    c = ((m / 2) % 2) ? -1.0 : 1.0;
                    zarg = m + 1.0;
                }
                break;
            case PowerForm::onemcos_form:  // sum_{k>=1} (-1)^{k-1} zeta(2k+1) z^{2k}/(2k)!
                if (m >= 2 && m % 2 == 0) {
                    c = ((m / 2) % 2) ? 1.0 : -1.0;
                    zarg = m + 1.0;
                }
                break;
            case PowerForm::exp_form:  // -sum_{n>=1} zeta(n+1) (-z)^n / n!
                if (m >= 1) {
                    c = (m % 2) ? 1.0 : -1.0;
                    zarg = m + 1.0;
                }
                break;
        }
        if (c != 0.0) {
            auto zv = riemann_zeta(zarg);
            cplx t = c * zv.value * zp / fact;
            acc.add(t);
            err += std::abs(zp) / fact * zv.error_bound + 4.0 * kEps * std::abs(t);
        }
        // remaining terms bounded with zeta(m) <= 2
        double tail = 2.0 * az * std::abs(zp) / (fact * (m + 1.0)) / (1.0 - az / (m + 2.0));
        if (m > 4 && tail < 1e-20) {
            err += tail;
            break;
        }
    }
    return {acc.value(), err};
}

EvalResultC eval_series(SeriesKind kind, cplx arg, double s, double nu, const TruncationPolicy& policy) {
    auto real_only = [&](const char* what) {
        if (arg.imag() != 0.0) throw DomainError(std::string(what) + ": real argument required");
        return arg.real();
    };
    auto lift = [](EvalResult r) { return EvalResultC{cplx(r.value, 0.0), r.error_bound}; };
    switch (kind) {
        case SeriesKind::f_hl:
            return lift(eval_f(real_only("f"), policy));
        case SeriesKind::F_cos:
            return lift(eval_F_cos(real_only("F"), policy));
        case SeriesKind::sin2_sum:
            return lift(eval_sin2_sum(real_only("sin2"), policy));
        case SeriesKind::G_tenenbaum:
            if (arg.real() > 0.0) throw DomainError("G: requires Re z <= 0");
            return eval_G(arg, policy);
        case SeriesKind::chi_tilde:
            return lift(eval_chi_tilde(s, real_only("chi~"), policy));
        case SeriesKind::chi: {
            double t = real_only("chi");
            auto r = chi_direct(s, t, std::max(policy.tail_tolerance, 1e-14), policy.max_terms);
            return lift(r.result);
        }
        case SeriesKind::G_nu:
            return g_nu_series(nu, arg);
    }
    throw DomainError("eval_series: unknown kind");
}

double davenport_sum(double x, std::int64_t N) {
    if (N > sieve_bound()) throw CapacityError("davenport: N beyond sieve bound");
    KahanSum<double> acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        int mu = mobius(n);
        if (mu == 0) continue;
        acc.add(mu * sawtooth(static_cast<double>(n) * x, SawtoothConvention::centered) / static_cast<double>(n));
    }
    return acc.value();
}

IdentityReport g_mean_check(std::int64_t n, std::int64_t K) {
    if (n < 1 || n > 1000) throw DomainError("g_mean: requires 1 <= n <= 1000");
    if (K < 1 || K > 100000) throw DomainError("g_mean: requires 1 <= K <= 1e5");
    // (1/K) sum_k G(2 i pi n k) = sum_m m^{-2} A_K(n/m), A_K the averaged geometric sum
    const std::int64_t M = 1'000'000;
    KahanSum<cplx> lhs;
    KahanSum<double> gap_bound;
    double dK = static_cast<double>(K);
    for (std::int64_t m = M; m >= 1; --m) {
        double w = 1.0 / (static_cast<double>(m) * static_cast<double>(m));
        std::int64_t r = n % m;
        if (r == 0) {
            lhs.add(w);
            continue;
        }
        double th = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(m);
        double sh = std::sin(0.5 * th);
        double amp = std::sin(0.5 * dK * th) / (dK * sh);
        lhs.add(w * amp * std::polar(1.0, 0.5 * (dK + 1.0) * th));
        gap_bound.add(w * std::min(1.0, 1.0 / (dK * std::abs(sh))));
    }
    auto tailz = hurwitz_zeta(2.0, static_cast<double>(M) + 1.0);
    lhs.add(tailz.value);  // A_K ~ 1 once m >> nK
    double numeric = kPi * (dK + 1.0) * static_cast<double>(n) / (2.0 * static_cast<double>(M) * M) +
                     tailz.error_bound + 1e-14;
    double rhs = 0.0;
    for (auto d : divisors(n)) rhs += 1.0 / (static_cast<double>(d) * static_cast<double>(d));
    double tol = gap_bound.value() + tailz.value + numeric;
    auto rep = make_report("hl.g_mean.n" + std::to_string(n) + ".K" + std::to_string(K), "Tenenbaum mean of G",
                           lhs.value(), rhs, tol);
    rep.note("finite_K_gap", fmt_num(std::abs(lhs.value() - rhs)));
    rep.note("gap_bound", fmt_num(gap_bound.value() + tailz.value));
    return rep;
}

DelangeFn delange_sin() {
    return {"sin", [](double u) { return std::sin(u); }, [](double u) { return std::cos(u); }, {}};
}

DelangeFn delange_zero() {
    return {"zero", [](double) { return 0.0; }, [](double) { return 0.0; }, {}};
}

DelangeFn delange_char_table(std::vector<int> values) {
    if (values.empty()) throw ConfigError("character table is empty");
    std::string name = "char" + std::to_string(values.size());
    return {name, [](double u) { return std::sin(u); }, [](double u) { return std::cos(u); }, std::move(values)};
}

DelangeFn delange_char(int modulus, int index) {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{3, 0}, {0, 1, 1}},
        {{3, 1}, {0, 1, -1}},
        {{4, 0}, {0, 1, 0, 1}},
        {{4, 1}, {0, 1, 0, -1}},
        {{5, 0}, {0, 1, 1, 1, 1}},
        {{5, 1}, {0, 1, -1, -1, 1}},
    };
    auto it = table.find({modulus, index});
    if (it == table.end())
        throw ConfigError("no builtin character mod " + std::to_string(modulus) + " index " + std::to_string(index));
    auto fn = delange_char_table(it->second);
    fn.name = "chi" + std::to_string(modulus) + "_" + std::to_string(index);
    return fn;
}

DelangeOut delange_check(double x, const DelangeFn& fn) {
    if (!(x >= 10.0)) throw DomainError("delange: requires x >= 10");
    auto N = static_cast<std::int64_t>(std::floor(x));
    auto w = [&fn](std::int64_t n) {
        if (fn.character.empty()) return 1.0;
        return static_cast<double>(fn.character[static_cast<std::size_t>(n % static_cast<std::int64_t>(fn.character.size()))]);
    };
    KahanSum<double> lhs;
    std::vector<std::pair<double, double>> jumps;  // ({x/n}, w(n)/n)
    jumps.reserve(static_cast<std::size_t>(N));
    for (std::int64_t n = N; n >= 1; --n) {
        double wn = w(n) / static_cast<double>(n);
        double v = x / static_cast<double>(n);
        lhs.add(wn * fn.f(2.0 * kPi * v));
        if (wn != 0.0) jumps.emplace_back(frac_part(v), wn);
    }
    std::sort(jumps.begin(), jumps.end());
    double logx = std::log(x);
    // theta(u) = (1/log x) sum w(n)/n [ {x/n} < u ], a right-continuous step after each jump
    KahanSum<double> integral;
    double qerr = 0.0;
    double level = 0.0;
    double sup_dev = 0.0;
    double prev = 0.0;
    QuadratureSpec qs;
    qs.abs_tol = 1e-15;
    qs.rel_tol = 1e-13;
    Integrand fp([&fn](double u) { return fn.fprime(2.0 * kPi * u); });
    auto segment = [&](double a, double b) {
        sup_dev = std::max({sup_dev, std::abs(level / logx - a), std::abs(level / logx - b)});
        if (b <= a || level == 0.0) return;
        auto r = integrate(fp, a, b, qs);
        integral.add(level * r.value);
        qerr += std::abs(level) * r.error_bound;
    };
    std::size_t i = 0;
    while (i < jumps.size()) {
        double u = jumps[i].first;
        segment(prev, u);
        while (i < jumps.size() && jumps[i].first == u) level += jumps[i++].second;
        prev = u;
    }
    segment(prev, 1.0);
    double rhs = -2.0 * kPi * integral.value();
    double tol = 2.0 * kPi * qerr + 1e-10 * (1.0 + std::abs(lhs.value()));
    std::string id = "hl.delange." + fn.name + ".x" + fmt_num(x);
    DelangeOut out{make_report(id, "Delange", lhs.value(), rhs, tol), sup_dev};
    out.report.note("theta_sup_dev", fmt_num(sup_dev));
    out.report.note("log_pow_2_3", fmt_num(std::pow(logx, 2.0 / 3.0)));
    return out;
}

CsvTable mobius_exp_scan(const std::vector<std::int64_t>& y_grid, const std::vector<double>& x_grid) {
    std::vector<std::int64_t> ys = y_grid;
    std::sort(ys.begin(), ys.end());
    if (!ys.empty() && ys.back() > sieve_bound()) throw CapacityError("mobius scan: y beyond sieve bound");
    CsvTable table({"y", "max_ratio", "argmax_x", "mertens_ratio"});
    std::vector<cplx> partial(x_grid.size(), 0.0);
    std::int64_t mertens = 0;
    std::int64_t n = 0;
    for (auto y : ys) {
        for (; n < y;) {
            ++n;
            int mu = mobius(n);
            if (mu == 0) continue;
            mertens += mu;
            for (std::size_t i = 0; i < x_grid.size(); ++i) {
                double ph = 2.0 * kPi * frac_part(static_cast<double>(n) * x_grid[i]);
                partial[i] += static_cast<double>(mu) * std::polar(1.0, ph);
            }
        }
        double best = -1.0, arg = 0.0;
        for (std::size_t i = 0; i < x_grid.size(); ++i) {
            double r = std::abs(partial[i]) / static_cast<double>(y);
            if (r > best) {
                best = r;
                arg = x_grid[i];
            }
        }
        table.add({std::to_string(y), fmt_num(best), fmt_num(arg),
                   fmt_num(std::abs(static_cast<double>(mertens)) / static_cast<double>(y))});
    }
    return table;
}

CsvTable growth_scan(double x_lo, double x_hi, int points, double eps) {
    if (!(x_lo > 0.0 && x_hi > x_lo) || points < 2) throw DomainError("growth scan: bad grid");
    CsvTable table({"x", "f", "bound", "running_max", "envelope"});
    double run = -HUGE_VAL;
    for (int i = 0; i < points; ++i) {
        double x = x_lo * std::pow(x_hi / x_lo, static_cast<double>(i) / (points - 1));
        auto f = eval_f(x);
        run = std::max(run, f.value);
        double lx = std::log(x);
        double env = lx > 1.0 ? std::pow(lx, 0.75) * std::pow(std::log(lx), 0.75 + eps) : 0.0;
        table.add({fmt_num(x), fmt_num(f.value), fmt_num(f.error_bound), fmt_num(run), fmt_num(env)});
    }
    return table;
}

CsvTable davenport_scan(const std::vector<double>& x_grid, const std::vector<std::int64_t>& n_grid) {
    CsvTable table({"x", "N", "value", "target", "abs_diff"});
    for (double x : x_grid)
        for (auto N : n_grid) {
            double v = davenport_sum(x, N);
            double target = -std::sin(2.0 * kPi * x) / kPi;
            table.add({fmt_num(x), std::to_string(N), fmt_num(v), fmt_num(target), fmt_num(std::abs(v - target))});
        }
    return table;
}

CsvTable saffari_scan(const std::vector<double>& x_grid, const DelangeFn& fn) {
    CsvTable table({"x", "lhs", "rhs", "theta_sup_dev", "dev_scaled", "lhs_scaled"});
    for (double x : x_grid) {
        auto out = delange_check(x, fn);
        double lx = std::log(x);
        double p = std::pow(lx, 2.0 / 3.0);
        table.add({fmt_num(x), fmt_num(out.report.lhs.real()), fmt_num(out.report.rhs.real()),
                   fmt_num(out.theta_sup_dev), fmt_num(out.theta_sup_dev * lx / p),
                   fmt_num(out.report.lhs.real() / p)});
    }
    return table;
}

}  // namespace hlzeta
