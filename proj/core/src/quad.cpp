#include "hlzeta/quad.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace hlzeta {

namespace {

// Kronrod 15 / Gauss 7 (QUADPACK qk15)
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a, b, val, err;
    bool frozen;
};

struct ByErr {
    bool operator()(const Piece& x, const Piece& y) const { return x.err < y.err; }
};

Piece gk15(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double resk = fc * wgk[7];
    double resg = fc * wg[3];
    double resabs = std::abs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 3; ++j) {
        int jt = 2 * j + 1;
        double dx = h * xgk[jt];
        double f1 = f(c - dx), f2 = f(c + dx);
        fv1[jt] = f1;
        fv2[jt] = f2;
        resg += wg[j] * (f1 + f2);
        resk += wgk[jt] * (f1 + f2);
        resabs += wgk[jt] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 4; ++j) {
        int jt = 2 * j;
        double dx = h * xgk[jt];
        double f1 = f(c - dx), f2 = f(c + dx);
        fv1[jt] = f1;
        fv2[jt] = f2;
        resk += wgk[jt] * (f1 + f2);
        resabs += wgk[jt] * (std::abs(f1) + std::abs(f2));
    }
    double reskh = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    double result = resk * h;
    resabs *= std::abs(h);
    resasc *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > 2.2250738585072014e-308 / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
    if (!std::isfinite(result) || !std::isfinite(err)) {
        result = std::isfinite(result) ? result : 0.0;
        err = HUGE_VAL;
    }
    return {a, b, result, err, false};
}

std::vector<double> cut_points(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    std::vector<double> pts{a};
    for (double p : spec.breakpoints) {
        if (!(p > a && p < b)) throw DomainError("quad: breakpoint outside the open integration interval");
        pts.push_back(p);
    }
    if (f.smoothness == Smoothness::oscillatory && f.half_period > 0.0) {
        double k0 = std::ceil((a - f.zero_offset) / f.half_period);
        double k1 = std::floor((b - f.zero_offset) / f.half_period);
        if (k1 - k0 > 1e6) throw DomainError("quad: too many oscillation zeros");
        for (double k = k0; k <= k1; k += 1.0) {
            double z = f.zero_offset + k * f.half_period;
            if (z > a && z < b) pts.push_back(z);
        }
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < spec.breakpoints.size(); ++i)
        if (!(spec.breakpoints[i] > spec.breakpoints[i - 1]))
            throw DomainError("quad: breakpoints must be strictly increasing");
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

EvalResult adaptive(const Integrand& f, double a, double b, const QuadratureSpec& spec, double abs_tol) {
    auto pts = cut_points(f, a, b, spec);
    std::priority_queue<Piece, std::vector<Piece>, ByErr> queue;
    std::vector<Piece> frozen;
    KahanSum<double> total;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Piece p = gk15(f.f, pts[i], pts[i + 1]);
        total.add(p.val);
        total_err += p.err;
        queue.push(p);
    }
    int splits = 0;
    auto target = [&] { return std::max(abs_tol, spec.rel_tol * std::abs(total.value())); };
    while (total_err > target() && !queue.empty()) {
        if (splits >= spec.max_subdivisions) break;
        Piece p = queue.top();
        queue.pop();
        double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b) || (p.b - p.a) < 4.0 * kEps * std::max(std::abs(p.a), std::abs(p.b))) {
            frozen.push_back(p);
            continue;
        }
        Piece l = gk15(f.f, p.a, mid);
        Piece r = gk15(f.f, mid, p.b);
        total.add(l.val + r.val - p.val);
        total_err += l.err + r.err - p.err;
        queue.push(l);
        queue.push(r);
        ++splits;
    }
    // recompute sums from the final partition to shed drift
    KahanSum<double> v;
    double e = 0.0;
    for (const auto& p : frozen) {
        v.add(p.val);
        e += p.err;
    }
    while (!queue.empty()) {
        v.add(queue.top().val);
        e += queue.top().err;
        queue.pop();
    }
    double value = v.value();
    double tol = std::max(abs_tol, spec.rel_tol * std::abs(value));
    if (e > tol)
        throw ConvergenceError("quad: tolerance not met on [" + fmt_num(a) + ", " + fmt_num(b) + "] after " +
                                   std::to_string(splits) + " subdivisions (estimate " + fmt_num(value) +
                                   ", bound " + fmt_num(e) + ")",
                               value, e);
    return {value, e};
}

double majorant(const DecayHint& d, double x) {
    switch (d.kind) {
        case DecayHint::Kind::exponential:
            return d.amp * std::pow(x, d.power) * std::exp(-d.rate * x);
        case DecayHint::Kind::gaussian:
            return d.amp * std::pow(x, d.power) * std::exp(-d.rate * x * x);
        case DecayHint::Kind::root_exponential:
            return d.amp * std::pow(x, d.power) * std::exp(-d.rate * std::sqrt(x));
        case DecayHint::Kind::algebraic:
            return d.amp * std::pow(x, -d.power);
        case DecayHint::Kind::none:
            break;
    }
    return HUGE_VAL;
}

}  // namespace

double decay_tail(const DecayHint& d, double T) {
    if (!(T > 0.0)) return HUGE_VAL;
    double m = majorant(d, T);
    switch (d.kind) {
        case DecayHint::Kind::exponential: {
            // log-derivative of x^p e^{-r x} is p/x - r
            double slope = d.rate - std::max(0.0, d.power) / T;
            return slope > 0.0 ? m / slope : HUGE_VAL;
        }
        case DecayHint::Kind::gaussian: {
            double slope = 2.0 * d.rate * T - std::max(0.0, d.power) / T;
            return slope > 0.0 ? m / slope : HUGE_VAL;
        }
        case DecayHint::Kind::root_exponential: {
            // x = u^2: 2 int_U^inf u^{2p+1} e^{-r u} du
            double U = std::sqrt(T);
            double q = 2.0 * d.power + 1.0;
            double slope = d.rate - std::max(0.0, q) / U;
            return slope > 0.0 ? 2.0 * U * m / slope : HUGE_VAL;
        }
        case DecayHint::Kind::algebraic:
            return d.power > 1.0 ? m * T / (d.power - 1.0) : HUGE_VAL;
        case DecayHint::Kind::none:
            break;
    }
    return HUGE_VAL;
}

EvalResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) throw DomainError("quad: tolerances must be positive");
    if (!f.f) throw DomainError("quad: empty integrand");
    if (!(a < b)) throw DomainError("quad: requires a < b");
    if (std::isfinite(b)) return adaptive(f, a, b, spec, spec.abs_tol);
    if (f.decay.kind == DecayHint::Kind::none)
        throw DomainError("quad: semi-infinite range needs a decay hint");
    double T = std::max({1.0, a + 1.0, spec.breakpoints.empty() ? 0.0 : spec.breakpoints.back() + 1.0});
    double budget = spec.abs_tol / 4.0;
    int guard = 0;
    while (decay_tail(f.decay, T) > budget) {
        T *= 1.25;
        if (++guard > 4000) throw ConvergenceError("quad: decay hint never meets the tail budget", 0.0, HUGE_VAL);
    }
    double tail = decay_tail(f.decay, T);
    auto body = adaptive(f, a, T, spec, 0.75 * spec.abs_tol);
    return {body.value, body.error_bound + tail};
}

EvalResult mellin_integral(const Integrand& g, double s, const QuadratureSpec& spec) {
    if (!(s > 0.0)) throw DomainError("mellin: requires s > 0");
    QuadratureSpec lo = spec, hi = spec;
    lo.breakpoints.clear();
    hi.breakpoints.clear();
    lo.abs_tol = hi.abs_tol = spec.abs_tol / 2.0;
    for (double p : spec.breakpoints) {
        if (p > 0.0 && p < 1.0) lo.breakpoints.push_back(s < 1.0 ? std::pow(p, s) : p);
        if (p > 1.0) hi.breakpoints.push_back(p);
    }
    EvalResult head;
    if (s < 1.0) {
        // t = u^{1/s}: t^{s-1} dt = du / s
        Integrand h([&g, s](double u) { return g.f(std::pow(u, 1.0 / s)) / s; });
        head = integrate(h, 0.0, 1.0, lo);
    } else {
        Integrand h([&g, s](double t) { return std::pow(t, s - 1.0) * g.f(t); });
        head = integrate(h, 0.0, 1.0, lo);
    }
    Integrand tailf([&g, s](double t) { return std::pow(t, s - 1.0) * g.f(t); });
    tailf.smoothness = g.smoothness;
    tailf.half_period = g.half_period;
    tailf.zero_offset = g.zero_offset;
    DecayHint d = g.decay;
    if (d.kind == DecayHint::Kind::algebraic)
        d.power -= (s - 1.0);
    else if (d.kind != DecayHint::Kind::none)
        d.power += (s - 1.0);
    tailf.decay = d;
    auto tail = integrate(tailf, 1.0, kInf, hi);
    return {head.value + tail.value, head.error_bound + tail.error_bound};
}

}  // namespace hlzeta
