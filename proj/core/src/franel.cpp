#include "hlzeta/franel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hlzeta/quad.hpp"

namespace hlzeta {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

long double to_ld(const Rational& r) { return r.convert_to<long double>(); }

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

// coefficient c next to a symbol, with sign handled by the caller
std::string coef_str(const Rational& c, const std::string& sym) {
    if (c == 1) return sym;
    return rat_str(c) + (sym.empty() ? "" : "*" + sym);
}

Rational pow_rational(const Rational& x, int r) {
    Rational out = 1;
    for (int i = 0; i < r; ++i) out *= x;
    return out;
}

BigInt factorial(int r) {
    BigInt f = 1;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

}  // namespace

SymbolicConstant& SymbolicConstant::add_log(std::int64_t n, const Rational& c) {
    if (n < 1) throw DomainError("log of a non-positive integer");
    if (c == 0) return *this;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            logs_[p] += c;
            n /= p;
        }
    }
    if (n > 1) logs_[n] += c;
    for (auto it = logs_.begin(); it != logs_.end();) it = it->second == 0 ? logs_.erase(it) : std::next(it);
    return *this;
}

SymbolicConstant& SymbolicConstant::add_zeta2(const Rational& c) {
    zeta2_ += c;
    return *this;
}

SymbolicConstant& SymbolicConstant::add_rational(const Rational& c) {
    rational_ += c;
    return *this;
}

SymbolicConstant SymbolicConstant::operator+(const SymbolicConstant& o) const {
    SymbolicConstant out = *this;
    out.rational_ += o.rational_;
    out.zeta2_ += o.zeta2_;
    for (const auto& [p, c] : o.logs_) out.add_log(p, c);
    return out;
}

SymbolicConstant SymbolicConstant::operator-(const SymbolicConstant& o) const { return *this + o * Rational(-1); }

SymbolicConstant SymbolicConstant::operator*(const Rational& c) const {
    SymbolicConstant out;
    if (c == 0) return out;
    out.rational_ = rational_ * c;
    out.zeta2_ = zeta2_ * c;
    for (const auto& [p, v] : logs_) out.logs_[p] = v * c;
    return out;
}

bool SymbolicConstant::operator==(const SymbolicConstant& o) const {
    return rational_ == o.rational_ && zeta2_ == o.zeta2_ && logs_ == o.logs_;
}

double SymbolicConstant::numeric() const {
    long double v = to_ld(rational_);
    for (const auto& [p, c] : logs_) v += to_ld(c) * std::log(static_cast<long double>(p));
    v += to_ld(zeta2_) * (3.14159265358979323846264338327950288L * 3.14159265358979323846264338327950288L / 6.0L);
    return static_cast<double>(v);
}

std::string SymbolicConstant::str() const {
    std::vector<std::pair<Rational, std::string>> parts;
    if (rational_ != 0) parts.emplace_back(rational_, "");
    for (const auto& [p, c] : logs_) parts.emplace_back(c, "log(" + std::to_string(p) + ")");
    if (zeta2_ != 0) parts.emplace_back(zeta2_, "zeta2");
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational c = parts[i].first;
        bool neg = c < 0;
        if (neg) c = -c;
        std::string body = parts[i].second.empty() ? rat_str(c) : coef_str(c, parts[i].second);
        if (i == 0)
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

SymbolicConstant classical_product(int r, std::int64_t a, std::int64_t b, ProductKind kind) {
    if (a < 1 || b < 1) throw DomainError("classical product: a, b must be positive");
    if (kind == ProductKind::sawtooth) r = 1;
    if (r < 1 || r > 10) throw DomainError("classical product: requires 1 <= r <= 10");
    // standard polynomials: (-1)^{r-1} (r!)^2 B_{2r}/(2r)! (gcd/lcm)^r
    Rational ratio(gcd64(a, b), lcm64(a, b));
    BigInt rf = factorial(r);
    Rational v = bernoulli_number(2 * r) * Rational(rf * rf, factorial(2 * r)) * pow_rational(ratio, r);
    if (r % 2 == 0) v = -v;
    return SymbolicConstant(v);
}

Rational franel_printed_lcm(std::int64_t a, std::int64_t b) { return Rational(lcm64(a, b), 12 * a * b); }

EvalResult classical_product_quad(int r, std::int64_t a, std::int64_t b, double tol) {
    if (a < 1 || b < 1 || a > 1000 || b > 1000) throw DomainError("classical product quad: 1 <= a, b <= 1000");
    std::vector<double> br;
    for (std::int64_t j = 1; j < a; ++j) br.push_back(static_cast<double>(j) / a);
    for (std::int64_t j = 1; j < b; ++j) br.push_back(static_cast<double>(j) / b);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    Integrand f([r, a, b](double x) {
        double u = a * x, v = b * x;
        return bernoulli_poly(r, u - std::floor(u)) * bernoulli_poly(r, v - std::floor(v));
    });
    f.smoothness = Smoothness::piecewise;
    QuadratureSpec qs;
    qs.abs_tol = tol;
    qs.rel_tol = 1e-13;
    qs.breakpoints = br;
    return integrate(f, 0.0, 1.0, qs);
}

IdentityReport franel_disambiguation(std::int64_t a, std::int64_t b) {
    auto q = classical_product_quad(1, a, b, 1e-14);
    double gcd_form = classical_product(1, a, b, ProductKind::sawtooth).numeric();
    double printed = to_double(franel_printed_lcm(a, b));
    double bound = std::max(q.error_bound, 1e-15);
    double margin = std::abs(printed - q.value) / bound;
    auto rep = make_report("franel.classical.a" + std::to_string(a) + ".b" + std::to_string(b), "Franel formula",
                           q.value, gcd_form, std::max(1e-12, 10.0 * bound));
    rep.note("printed_lcm_form", fmt_num(printed));
    rep.note("printed_diff", fmt_num(std::abs(printed - q.value)));
    rep.note("margin_over_bound", fmt_num(margin));
    bool printed_ok = std::abs(printed - q.value) <= rep.tolerance;
    rep.note("verdict", rep.pass && !printed_ok ? "gcd^2/(12ab)" : (printed_ok && !rep.pass ? "lcm/(12ab)" : "undecided"));
    return rep;
}

IdentityReport hurwitz_product_check(double s, std::int64_t a, std::int64_t b) {
    if (!((s > 0.5 && s < 1.0) || (s > 1.0 && s < 3.0))) throw DomainError("hurwitz product: s in (1/2,1) or (1,3)");
    if (a < 1 || b < 1 || a > 50 || b > 50) throw DomainError("hurwitz product: 1 <= a, b <= 50");
    std::vector<double> br;
    for (std::int64_t j = 1; j < a; ++j) br.push_back(static_cast<double>(j) / a);
    for (std::int64_t j = 1; j < b; ++j) br.push_back(static_cast<double>(j) / b);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    double sigma = 1.0 - s;
    // floors pinned at each piece's midpoint: near a jump a*x can round onto the integer
    std::vector<double> pts{0.0};
    pts.insert(pts.end(), br.begin(), br.end());
    pts.push_back(1.0);
    EvalResult q{};
    KahanSum<double> qsum;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1], mid = 0.5 * (lo + hi);
        // {a x} = a (x - lo) + ca with ca exactly 0 when lo is a jump of {a x}; computing
        // a x - floor directly loses everything below one ulp of the jump
        auto offset = [lo, mid](std::int64_t c) {
            double r = c * lo - std::floor(c * mid);
            return std::abs(r) < 1e-12 ? 0.0 : r;
        };
        double ca = offset(a), cb = offset(b);
        // x = lo + w t^p: the Jacobian cancels the joint (x - lo)^{-2 sigma} blow-up at the left jump
        double w = hi - lo;
        double p = sigma > 0.0 ? 2.0 / (1.0 - 2.0 * sigma) : 1.0;
        Integrand f([=](double t) {
            if (t == 0.0) return 0.0;
            double d = w * std::pow(t, p);
            double u = a * d + ca, v = b * d + cb;
            if (!(u > 0.0) || !(v > 0.0)) return 0.0;  // d underflowed to 0
            return p * d / t * hurwitz_zeta(sigma, u).value * hurwitz_zeta(sigma, v).value;
        });
        f.smoothness = Smoothness::piecewise;
        QuadratureSpec qs;
        qs.abs_tol = 1e-8 / static_cast<double>(pts.size());
        qs.rel_tol = 1e-10;
        qs.max_subdivisions = 20000;
        auto part = integrate(f, 0.0, 1.0, qs);
        qsum.add(part.value);
        q.error_bound += part.error_bound;
    }
    q.value = qsum.value();
    double g = gamma_real(s).value;
    double ratio = static_cast<double>(gcd64(a, b)) / static_cast<double>(lcm64(a, b));
    double rhs = 2.0 * g * g * riemann_zeta(2.0 * s).value / std::pow(2.0 * kPi, 2.0 * s) * std::pow(ratio, s);
    auto rep = make_report("franel.hurwitz.s" + fmt_num(s) + ".a" + std::to_string(a) + ".b" + std::to_string(b),
                           "Mordell Hurwitz product", q.value, rhs, 1e-6);
    rep.note("quad_bound", fmt_num(q.error_bound));
    return rep;
}

EvalResult franel2_oracle(std::int64_t n, std::int64_t m, double tol) {
    if (n < 1 || m < 1 || n > 12 || m > 12) throw DomainError("franel2 oracle: requires 1 <= n, m <= 12");
    if (!(tol > 0.0)) throw DomainError("franel2 oracle: tolerance must be positive");
    // head on (0, m/K): {nx}{m/x} = nx ({m/x}) in [0, nx), midpoint estimate n xmin^2/4 +- n xmin^2/4
    auto K = static_cast<std::int64_t>(std::ceil(static_cast<double>(m) * std::sqrt(n / (2.0 * tol))));
    K = std::max(K, n * m + 1);
    if (K > 10'000'000) throw ConvergenceError("franel2 oracle: more than 1e7 pieces needed", 0.0, HUGE_VAL);
    struct Pt {
        std::int64_t p, q;
    };
    auto less = [](const Pt& x, const Pt& y) {
        return static_cast<__int128>(x.p) * y.q < static_cast<__int128>(y.p) * x.q;
    };
    // breakpoints m/k (k = K .. m+1) and j/n (j = 1 .. n-1), merged in increasing order
    std::int64_t k = K, j = 1;
    Pt cur{m, K};
    KahanSum<long double> acc;
    long double mag = 0.0L;
    auto piece = [&](Pt A, Pt B) {
        __int128 num_mid = static_cast<__int128>(A.p) * B.q + static_cast<__int128>(B.p) * A.q;
        __int128 den_mid = static_cast<__int128>(2) * A.q * B.q;
        auto jj = static_cast<long double>(static_cast<std::int64_t>((static_cast<__int128>(n) * num_mid) / den_mid));
        auto kk = static_cast<std::int64_t>((static_cast<__int128>(m) * den_mid) / num_mid);
        long double w = static_cast<long double>(static_cast<__int128>(B.p) * A.q - static_cast<__int128>(A.p) * B.q) /
                        (static_cast<long double>(A.q) * B.q);
        long double ca = static_cast<long double>(m * A.q - kk * A.p) / A.q;  // m - k A
        long double cb = static_cast<long double>(m * B.q - kk * B.p) / B.q;  // m - k B
        long double lo = static_cast<long double>(A.p) / A.q;
        long double t1 = n * w * (ca + cb) / 2.0L;
        long double t2 = jj * (kk * w - m * std::log1p(w / lo));
        acc.add(t1 + t2);
        mag += std::abs(t1) + std::abs(t2) + n * w * m;
    };
    while (true) {
        Pt nextk = k > m + 1 ? Pt{m, k - 1} : Pt{1, 1};
        Pt nextj = j < n ? Pt{j, n} : Pt{1, 1};
        Pt nxt;
        if (less(nextj, nextk)) {
            nxt = nextj;
            ++j;
        } else if (less(nextk, nextj)) {
            nxt = nextk;
            --k;
        } else {
            nxt = nextk;
            if (k > m + 1) --k;
            if (j < n) ++j;
        }
        if (!less(cur, nxt)) break;
        piece(cur, nxt);
        cur = nxt;
        if (cur.p == cur.q) break;
    }
    double xmin = static_cast<double>(m) / static_cast<double>(K);
    double head = n * xmin * xmin / 4.0;
    double value = static_cast<double>(acc.value()) + head;
    double err = head + 16.0 * 1.1e-19 * static_cast<double>(mag) + 2.0 * kEps * std::abs(value);
    return {value, err};
}

SymbolicConstant franel2_closed(std::int64_t n, std::int64_t m, bool certify) {
    if (n < 1 || m < 1 || n > 50 || m > 50) throw DomainError("franel2 closed form: requires 1 <= n, m <= 50");
    // mn - m(n-1) log n + m log (n-1)! - m/2 - (1/2n) sum_{k=m+1}^{nm} (floor(nm/k) + {nm/k}^2)
    //    - (nm^2/2)(zeta2 - sum_{k<=nm} k^-2)
    std::int64_t nm = n * m;
    Rational r = Rational(nm) - Rational(m, 2);
    Rational fl = 0;
    for (std::int64_t k = m + 1; k <= nm; ++k) {
        Rational fr(nm % k, k);
        fl += Rational(nm / k) + fr * fr;
    }
    r -= fl / (2 * n);
    Rational h2 = 0;
    for (std::int64_t k = 1; k <= nm; ++k) h2 += Rational(1, k * k);
    Rational half = Rational(n * m * m, 2);
    r += half * h2;
    SymbolicConstant out(r);
    out.add_zeta2(-half);
    out.add_log(n, Rational(-m * (n - 1)));
    for (std::int64_t i = 2; i < n; ++i) out.add_log(i, Rational(m));
    if (certify) {
        if (n > 12 || m > 12) throw DomainError("franel2 certification: oracle limited to n, m <= 12");
        auto o = franel2_oracle(n, m, 1e-10);
        double d = std::abs(out.numeric() - o.value);
        if (d > 1e-8)
            throw AssemblyError("franel2 closed form (" + std::to_string(n) + "," + std::to_string(m) +
                                ") disagrees with oracle by " + fmt_num(d));
    }
    return out;
}

const std::vector<Franel2Printed>& franel2_printed_table() {
    static const std::vector<Franel2Printed> table = [] {
        auto mk = [](std::int64_t n, std::int64_t m, Rational r, std::vector<std::pair<std::int64_t, int>> logs,
                     Rational z) {
            SymbolicConstant c(r);
            for (auto [p, k] : logs) c.add_log(p, Rational(k));
            c.add_zeta2(z);
            return Franel2Printed{n, m, c};
        };
        return std::vector<Franel2Printed>{
            mk(2, 1, Rational(5, 2), {{2, -1}}, Rational(-1)),
            mk(3, 1, Rational(25, 6), {{2, 1}, {3, -2}}, Rational(-3, 2)),
            mk(4, 1, Rational(35, 6), {{2, -5}, {3, 1}}, Rational(-2)),
            mk(5, 1, Rational(35, 6), {{2, -5}, {3, 1}}, Rational(-2)),
            mk(1, 2, Rational(7, 2), {}, Rational(-2)),
            mk(1, 3, Rational(61, 8), {}, Rational(-9, 2)),
            mk(1, 4, Rational(5989, 288), {}, Rational(-25, 2)),
            mk(2, 2, Rational(49, 6), {{2, -2}}, Rational(-4)),
            mk(2, 3, Rational(171, 10), {{2, -3}}, Rational(-9)),
            mk(2, 4, Rational(18469, 630), {{2, -4}}, Rational(-16)),
            mk(2, 5, Rational(15059, 336), {{2, -5}}, Rational(-25)),
            mk(3, 2, Rational(196, 15), {{2, 2}, {3, -4}}, Rational(-6)),
        };
    }();
    return table;
}

EvalResult franel_first_kind(double beta, double tol) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("franel first kind: requires beta in [0, 1]");
    if (!(tol > 0.0)) throw DomainError("franel first kind: tolerance must be positive");
    if (beta == 0.0) return {0.0, 0.0};
    // u = 1/x: int_1^inf {u}{beta u}/u^2 du; beyond U the integrand lies in [0, 1/u^2)
    double U = 1.0 / tol;
    if (U * (1.0 + beta) > 5e7) throw ConvergenceError("franel first kind: too many pieces", 0.0, HUGE_VAL);
    auto f = [beta](double u, double k, double l) { return (u - k) * (beta * u - l) / (u * u); };
    // 8-point Gauss-Legendre, exact to rounding once u >> piece width
    static constexpr double gx[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                     0.9602898564975363};
    static constexpr double gw[4] = {0.3626837833783620, 0.3137066959011945, 0.2223810344533745,
                                     0.1012285362903763};
    KahanSum<double> acc;
    double err = 0.0;
    double u = 1.0;
    double nk = 2.0;                          // next integer break
    double l_next = std::floor(beta) + 1.0;   // next multiple index of 1/beta
    QuadratureSpec qs;
    qs.abs_tol = 1e-14;
    qs.rel_tol = 1e-13;
    while (u < U) {
        double ub = l_next / beta;
        double v = std::min({nk, ub, U});
        double mid = 0.5 * (u + v);
        double k = std::floor(mid), l = std::floor(beta * mid);
        if (u < 64.0) {
            Integrand g([&f, k, l](double t) { return f(t, k, l); });
            auto r = integrate(g, u, v, qs);
            acc.add(r.value);
            err += r.error_bound;
        } else {
            double c = 0.5 * (u + v), h = 0.5 * (v - u), s = 0.0;
            for (int i = 0; i < 4; ++i) s += gw[i] * (f(c - h * gx[i], k, l) + f(c + h * gx[i], k, l));
            acc.add(h * s);
            err += 4.0 * kEps * h * 2.0;
        }
        if (v == nk) nk += 1.0;
        if (v == ub) l_next += 1.0;
        u = v;
    }
    double head = 0.5 / U;
    return {acc.value() + head, err + head};
}

CsvTable franel2_table(std::int64_t n_lo, std::int64_t n_hi, std::int64_t m_lo, std::int64_t m_hi, double tol) {
    if (n_lo < 1 || m_lo < 1 || n_hi < n_lo || m_hi < m_lo) throw DomainError("franel2 table: bad range");
    // the oracle walks about n*m*sqrt(n/tol) pieces
    if (n_hi > 24 || m_hi > 24) throw CapacityError("franel2 table: n and m are capped at 24");
    CsvTable t({"n", "m", "closed_form", "value", "oracle", "abs_diff"});
    for (std::int64_t n = n_lo; n <= n_hi; ++n)
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            auto c = franel2_closed(n, m);
            auto o = franel2_oracle(n, m, tol);
            double v = c.numeric();
            t.add({std::to_string(n), std::to_string(m), c.str(), fmt_num(v), fmt_num(o.value),
                   fmt_num(std::abs(v - o.value))});
        }
    return t;
}

CsvTable franel1_table(const std::vector<double>& betas, double tol) {
    if (betas.size() > 1000) throw CapacityError("franel1 table: at most 1000 points");
    CsvTable t({"beta", "value", "bound"});
    for (double b : betas) {
        auto r = franel_first_kind(b, tol);
        t.add({fmt_num(b), fmt_num(r.value), fmt_num(r.error_bound)});
    }
    return t;
}

}  // namespace hlzeta
