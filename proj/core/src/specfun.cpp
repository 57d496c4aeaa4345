#include "hlzeta/specfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <string>

namespace hlzeta {

namespace {

constexpr int kMaxBernoulli = 30;

std::vector<Rational> build_bernoulli() {
    std::vector<Rational> b(kMaxBernoulli + 1);
    b[0] = 1;
    for (int m = 1; m <= kMaxBernoulli; ++m) {
        // sum_{k<=m} C(m+1,k) B_k = 0
        Rational acc = 0;
        BigInt binom = 1;  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += Rational(binom) * b[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[m] = -acc / Rational(m + 1);
    }
    return b;
}

const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = build_bernoulli();
    return table;
}

const std::vector<double>& bernoulli_double() {
    static const std::vector<double> table = [] {
        std::vector<double> d;
        for (const auto& r : bernoulli_table()) d.push_back(static_cast<double>(r));
        return d;
    }();
    return table;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log Gamma(w) for Re w >= 12 by Stirling, with remainder bound
cplx stirling_log_gamma(cplx w, double& rem) {
    const auto& B = bernoulli_double();
    cplx lg = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi);
    cplx wp = w;
    cplx w2 = w * w;
    constexpr int K = 10;
    for (int k = 1; k <= K; ++k) {
        lg += B[2 * k] / (2.0 * k * (2.0 * k - 1.0) * wp);
        wp *= w2;
    }
    double sec = 1.0 / std::cos(0.5 * std::arg(w));
    rem = std::abs(B[2 * K + 2]) / ((2.0 * K + 2) * (2.0 * K + 1)) * std::pow(std::abs(w), -(2.0 * K + 1)) *
          std::pow(sec, 2.0 * K + 2);
    return lg;
}

EvalResultC gamma_right(cplx z) {
    int m = 0;
    cplx w = z;
    while (w.real() < 12.0) {
        w += 1.0;
        ++m;
    }
    double rem = 0.0;
    cplx lg = stirling_log_gamma(w, rem);
    cplx denom = 1.0;
    for (int j = 0; j < m; ++j) denom *= (z + static_cast<double>(j));
    cplx val = std::exp(lg) / denom;
    double logscale = std::abs(w) * (1.0 + std::abs(std::log(w)));
    double rel = rem + 8.0 * kEps * (logscale + m + 4.0);
    return {val, rel * std::abs(val)};
}

}  // namespace

EvalResultC gamma_complex(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at nonpositive integer");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("gamma: non-finite argument");
    if (z.real() >= 0.5) return gamma_right(z);
    auto g = gamma_right(1.0 - z);
    cplx sn = std::sin(kPi * z);
    cplx val = kPi / (sn * g.value);
    double rel = g.error_bound / std::abs(g.value) + 4.0 * kEps * (3.0 + kPi * std::abs(z));
    return {val, rel * std::abs(val)};
}

EvalResult gamma_real(double x) {
    auto g = gamma_complex(cplx(x, 0.0));
    return {g.value.real(), g.error_bound};
}

namespace {

EvalResult hurwitz_em(double s, double x) {
    const auto& B = bernoulli_double();
    constexpr int M = 10;
    // rising factorial (s)_{2M+1} for the remainder
    auto rem_bound = [&](double w) {
        double rf = 1.0;
        for (int i = 0; i < 2 * M + 1; ++i) rf *= (s + i);
        return std::abs(rf * B[2 * M + 2] / factorial(2 * M + 2)) * std::pow(w, -s - 2.0 * M - 1.0);
    };
    long N = std::max(0L, static_cast<long>(std::ceil(12.0 - x)));
    // push the cutoff out until the remainder is negligible against the head term
    while (N < 100000) {
        double w = x + N;
        double scale = std::pow(w, -s) + std::abs(std::pow(w, 1.0 - s) / (s - 1.0));
        if (rem_bound(w) <= 1e-18 * scale) break;
        N = N < 16 ? N + 16 : 2 * N;
    }
    KahanSum<double> acc;
    double abs_sum = 0.0;
    for (long k = N - 1; k >= 0; --k) {
        double t = std::pow(x + k, -s);
        acc.add(t);
        abs_sum += std::abs(t);
    }
    double w = x + N;
    double tail0 = std::pow(w, 1.0 - s) / (s - 1.0);
    double tail1 = 0.5 * std::pow(w, -s);
    acc.add(tail0);
    acc.add(tail1);
    abs_sum += std::abs(tail0) + std::abs(tail1);
    double rf = s;  // (s)_{2j-1}
    double wp = std::pow(w, -s - 1.0);
    for (int j = 1; j <= M; ++j) {
        double t = B[2 * j] / factorial(2 * j) * rf * wp;
        acc.add(t);
        abs_sum += std::abs(t);
        rf *= (s + 2 * j - 1) * (s + 2 * j);
        wp /= (w * w);
    }
    double err = rem_bound(w) + 4.0 * kEps * abs_sum;
    return {acc.value(), err};
}

EvalResult eta_borwein(double s) {
    constexpr int n = 30;
    std::array<double, n + 1> d{};
    double term = 1.0 / n;  // i = 0 term of the inner sum: (n-1)!/(n! 0!) = 1/n
    double acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i - 1.0) * (2.0 * i));
        acc += term;
        d[i] = n * acc;
    }
    KahanSum<double> sum;
    double abs_sum = 0.0;
    for (int k = 0; k < n; ++k) {
        double t = ((k % 2 == 0) ? 1.0 : -1.0) * (d[k] - d[n]) * std::pow(k + 1.0, -s);
        sum.add(t);
        abs_sum += std::abs(t);
    }
    double val = -sum.value() / d[n];
    double trunc = 3.0 / std::pow(3.0 + std::sqrt(8.0), n) / std::abs(gamma_real(s).value);
    return {val, trunc + 8.0 * kEps * (abs_sum / d[n] + std::abs(val))};
}

}  // namespace

EvalResult zeta_family(ZetaKind kind, double s, double x) {
    if (!std::isfinite(s)) throw DomainError("zeta: non-finite s");
    switch (kind) {
        case ZetaKind::eta:
            if (s <= 0.0) throw DomainError("eta: requires s > 0");
            return eta_borwein(s);
        case ZetaKind::riemann:
            x = 1.0;
            [[fallthrough]];
        case ZetaKind::hurwitz:
            if (s == 1.0) throw PoleError("zeta: pole at s = 1");
            if (!(x > 0.0)) throw DomainError("hurwitz zeta: requires x > 0");
            if (s <= -2.0) throw DomainError("zeta: continuation limited to s > -2");
            return hurwitz_em(s, x);
    }
    throw DomainError("zeta: unknown kind");
}

const Rational& bernoulli_number(int r) {
    if (r < 0 || r > kMaxBernoulli) throw DomainError("bernoulli: order outside 0..30");
    return bernoulli_table()[r];
}

double bernoulli_poly(int r, double x) {
    if (r < 0 || r > kMaxBernoulli) throw DomainError("bernoulli: order outside 0..30");
    const auto& B = bernoulli_double();
    // Horner in x; coefficient of x^k is C(r,k) B_{r-k}
    double binom = 1.0;
    double acc = 0.0;
    std::vector<double> c(r + 1);
    for (int k = 0; k <= r; ++k) {
        c[k] = binom * B[r - k];
        binom = binom * (r - k) / (k + 1);
    }
    for (int k = r; k >= 0; --k) acc = acc * x + c[k];
    return acc;
}

Rational bernoulli_poly_exact(int r, const Rational& x) {
    if (r < 0 || r > kMaxBernoulli) throw DomainError("bernoulli: order outside 0..30");
    const auto& B = bernoulli_table();
    Rational acc = 0;
    BigInt binom = 1;
    std::vector<Rational> c(r + 1);
    for (int k = 0; k <= r; ++k) {
        c[k] = Rational(binom) * B[r - k];
        binom = binom * (r - k) / (k + 1);
    }
    for (int k = r; k >= 0; --k) acc = acc * x + c[k];
    return acc;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return (a / gcd64(a, b)) * b;
}

}  // namespace hlzeta
