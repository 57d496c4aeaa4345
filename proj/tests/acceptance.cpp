// one PASS/FAIL line per acceptance criterion; exit 1 if any criterion is red
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hlzeta/franel.hpp"
#include "hlzeta/hlseries.hpp"
#include "hlzeta/lattice.hpp"
#include "hlzeta/report.hpp"
#include "hlzeta/sawtooth.hpp"
#include "hlzeta/specfun.hpp"
#include "hlzeta/suite.hpp"
#include "hlzeta/summation.hpp"

using namespace hlzeta;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> log;  // extra lines printed under the verdict
};

struct Criterion {
    int id;
    double budget_s;
    std::function<Outcome()> run;
};

std::string num(double v) { return fmt_num(v); }

double worst(double a, double b) { return std::max(a, b); }

Outcome ac1() {
    Outcome o;
    int matched = 0, total = 0;
    double max_oracle = 0.0;
    for (const auto& e : franel2_printed_table()) {
        bool suspect = (e.n == 4 || e.n == 5) && e.m == 1;
        auto closed = franel2_closed(e.n, e.m);
        auto oracle = franel2_oracle(e.n, e.m);
        double od = std::abs(oracle.value - closed.numeric());
        if (suspect) {
            double pd = std::abs(oracle.value - e.value.numeric());
            std::string verdict = e.value == closed ? "printed entry confirmed" : "printed entry rejected";
            if (e.value != closed)
                for (std::int64_t n = 1; n <= 6; ++n)
                    for (std::int64_t m = 1; m <= 6; ++m)
                        if (e.value == franel2_closed(n, m))
                            verdict += ", it is the value at (" + std::to_string(n) + "," + std::to_string(m) + ")";
            o.log.push_back("suspect (" + std::to_string(e.n) + "," + std::to_string(e.m) + "): oracle " +
                            num(oracle.value) + ", printed " + e.value.str() + " off by " + num(pd) + "; " + verdict +
                            "; closed form " + closed.str());
            continue;
        }
        ++total;
        max_oracle = worst(max_oracle, od);
        if (od > 1e-8) o.pass = false;
        if (e.value == closed) {
            ++matched;
            continue;
        }
        o.pass = false;
        std::string where;
        for (std::int64_t n = 1; n <= 6; ++n)
            for (std::int64_t m = 1; m <= 6; ++m)
                if (e.value == franel2_closed(n, m)) where = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        o.log.push_back("mismatch (" + std::to_string(e.n) + "," + std::to_string(e.m) + "): printed " + e.value.str() +
                        " but closed form is " + closed.str() + "; oracle " + num(oracle.value) + " agrees with the "
                        "closed form to " + num(od) + " and misses the printed value by " +
                        num(std::abs(oracle.value - e.value.numeric())) +
                        (where.empty() ? "" : "; the printed expression is the closed form at " + where));
    }
    o.detail = std::to_string(matched) + "/" + std::to_string(total) + " symbolic matches, max |closed-oracle| " +
               num(max_oracle);
    return o;
}

Outcome ac2() {
    Outcome o;
    double mx = 0.0;
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t m = 1; m <= 6; ++m)
            mx = worst(mx, std::abs(franel2_closed(n, m).numeric() - franel2_oracle(n, m).value));
    o.pass = mx <= 1e-8;
    o.detail = "36 cases, max |closed-oracle| " + num(mx);
    return o;
}

std::string extra(const IdentityReport& r, const std::string& key) {
    for (auto& [k, v] : r.extras)
        if (k == key) return v;
    return "";
}

Outcome ac3() {
    Outcome o;
    auto r = franel_disambiguation(1, 2);
    double margin = std::stod(extra(r, "margin_over_bound"));
    o.pass = r.pass && margin >= 1e3 && extra(r, "verdict") == "gcd^2/(12ab)";
    o.detail = "quadrature " + num(r.lhs.real()) + ", verdict " + extra(r, "verdict") + ", margin " + num(margin) +
               "x bound";
    return o;
}

Outcome ac4() {
    Outcome o;
    double mx = 0.0;
    for (double th : {0.3, 0.5, 0.9})
        for (int n = 1; n <= 20; ++n) {
            auto c = fourier_coeff_an(th, n);
            mx = worst(mx, std::abs(c.closed.value - c.direct.value));
        }
    o.pass = mx <= 1e-8;
    o.detail = "60 cases, max two-path gap " + num(mx);
    return o;
}

Outcome ac5() {
    Outcome o;
    double mx = 0.0;
    for (double th : {0.25, 0.5, 1.0})
        for (double s : {1.5, 2.0, 3.0}) mx = worst(mx, beurling_mellin_check(th, s).abs_diff);
    o.pass = mx <= 1e-8;
    o.detail = "9 cases, max residual " + num(mx);
    return o;
}

Outcome ac6() {
    Outcome o;
    std::ostringstream d;
    for (double x : {1e3, 1e4, 1e5, 1e6}) {
        double v = eval_sin2_sum(x).value / x;
        double env = 2 / std::sqrt(x) + 10 / x;
        if (std::abs(v - kPi / 2) > env) o.pass = false;
        d << "x=" << num(x) << ":" << num(std::abs(v - kPi / 2)) << "/" << num(env) << " ";
    }
    o.detail = "|value/x - pi/2| vs envelope " + d.str();
    return o;
}

Outcome ac7() {
    Outcome o;
    std::ostringstream d;
    for (double t : {1.0, 4.0, 9.0, 16.0}) {
        auto a = chi_half_accel_tol(t, 1e-13);
        auto b = chi_direct(0.5, t, 1e-12);
        double diff = std::abs(a.result.value - b.result.value);
        if (diff > 1e-10 || a.terms >= 100 || b.terms <= 100000) o.pass = false;
        d << "t=" << num(t) << ": diff " << num(diff) << ", " << a.terms << " vs " << b.terms << " terms (x"
          << num(std::round(static_cast<double>(b.terms) / a.terms)) << "); ";
    }
    o.detail = d.str();
    return o;
}

Outcome ac8() {
    Outcome o;
    std::ostringstream d;
    for (cplx z : {cplx{1, 0}, cplx{2, 1}, cplx{0.5, 2}}) {
        auto r = hl_k0_identity_check(z);
        if (r.abs_diff > 1e-8) o.pass = false;
        d << "z=" << num(z.real()) << "+" << num(z.imag()) << "i:" << num(r.abs_diff) << " ";
    }
    o.detail = "residuals " + d.str();
    o.log.push_back("as printed (2 log z, K0 at half the argument) the relation is off by " +
                    extra(hl_k0_identity_check(1.0), "printed_residual") + " at z=1; the corrected form is verified");
    return o;
}

Outcome ac9() {
    Outcome o;
    double mx = 0.0;
    for (double z : {1e-3, 0.5, 1.0, 5.0}) mx = worst(mx, segal_identity_check(z).abs_diff);
    o.pass = mx <= 1e-6;
    o.detail = "4 points, max residual " + num(mx);
    return o;
}

Outcome ac10() {
    Outcome o;
    double p = 0, v = 0, k = 0;
    bool consistent = true;
    for (double c : {0.5, 1.0, 2.0}) p = worst(p, poisson_even_check(TestFunction::gaussian(c)).abs_diff);
    for (double c : {0.3, 1.0, 2.0}) {
        auto r = voronoi_check(TestFunction::gaussian(c));
        v = worst(v, r.report.abs_diff);
        consistent &= r.winner == VoronoiKernel::two_pi_y0;
    }
    for (double a : {0.5, 1.0, 1.7, 3.0}) k = worst(k, koshliakov_check(a).abs_diff);
    o.pass = p <= 1e-9 && v <= 1e-6 && k <= 1e-10 && consistent;
    o.detail = "Poisson " + num(p) + ", Voronoi " + num(v) + " (kernel 4K0-2piY0 on all three), Koshliakov " + num(k);
    if (!consistent) o.detail += ", kernel choice inconsistent";
    return o;
}

Outcome ac11() {
    Outcome o;
    auto r2 = crandall_relation_check(2.0), r3 = crandall_relation_check(3.0);
    auto di = double_integral_check();
    o.pass = r2.abs_diff <= 1e-5 && r3.abs_diff <= 1e-5 && di.abs_diff <= 1e-4;
    o.detail = "s=2 " + num(r2.abs_diff) + ", s=3 " + num(r3.abs_diff) + ", double integral " + num(di.abs_diff);
    return o;
}

Outcome ac12() {
    Outcome o;
    auto r3 = r3_table(200);
    int bad = 0;
    for (auto m : {ThetaMethod::direct_cube, ThetaMethod::andrews}) {
        auto c = theta4_cubed_coeffs(200, m);
        for (int n = 0; n <= 200; ++n)
            if (c[n] != ((n % 2) ? -1 : 1) * r3[n]) ++bad;
    }
    o.pass = bad == 0;
    o.detail = "n<=200, both expansions, " + std::to_string(bad) + " mismatches";
    return o;
}

Outcome ac13() {
    Outcome o;
    auto sel = select_identities({"hl.power"});
    double mx = 0.0;
    auto res = run_suite(sel, SuiteConfig{});
    for (auto& r : res.reports) mx = worst(mx, r.abs_diff);
    o.pass = sel.size() == 20 && mx <= 1e-10;
    o.detail = std::to_string(sel.size()) + " points with |z| <= 0.9, max gap " + num(mx);
    return o;
}

Outcome ac14() {
    Outcome o;
    auto sel = select_identities({"all"});
    SuiteConfig cfg;
    cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto res = run_suite(sel, cfg);
    int fails = 0;
    for (auto& r : res.reports)
        if (!r.pass) {
            ++fails;
            o.log.push_back("failed: " + r.id + " diff " + num(r.abs_diff) + " tol " + num(r.tolerance));
        }
    int code = suite_exit_code(res);
    o.pass = code == 0;
    o.detail = "verify all: " + std::to_string(res.reports.size()) + " identities, " + std::to_string(fails) +
               " failing, " + std::to_string(res.engine_errors.size()) + " engine errors, exit " +
               std::to_string(code) + " (property tests run as separate ctest entries)";
    return o;
}

Outcome ac15() {
    Outcome o;
    auto g = growth_scan(10.0, 1e6, 61, 0.01);
    double at3 = 0, at6 = 0;
    bool mono = true;
    double prev = -1;
    for (auto& row : g.data()) {
        double x = std::stod(row[0]), rm = std::stod(row[3]);
        if (rm < prev) mono = false;
        prev = rm;
        if (std::abs(std::log10(x) - 3) < 1e-9) at3 = rm;
        if (std::abs(std::log10(x) - 6) < 1e-9) at6 = rm;
    }
    auto dav = davenport_scan({0.1, 0.3, std::sqrt(2.0) - 1}, {100, 1000, 10000, 100000});
    auto saf = saffari_scan({100, 1000, 10000}, delange_sin());
    o.pass = mono && at6 > at3 && at3 > 0;
    o.detail = "running max " + num(at3) + " at 1e3, " + num(at6) + " at 1e6" + (mono ? "" : ", not monotone") +
               "; davenport " + std::to_string(dav.rows()) + " rows, saffari " + std::to_string(saf.rows()) +
               " rows (reported only)";
    for (auto& r : dav.data()) o.log.push_back("davenport x=" + r[0] + " N=" + r[1] + " |gap|=" + r[4]);
    for (auto& r : saf.data()) o.log.push_back("saffari x=" + r[0] + " lhs=" + r[1] + " scaled=" + r[5]);
    return o;
}

}  // namespace

int main() {
    std::vector<Criterion> all{
        {1, 60, ac1},    {2, 300, ac2},   {3, 60, ac3},   {4, 120, ac4},   {5, 60, ac5},
        {6, 30, ac6},    {7, 60, ac7},    {8, 60, ac8},   {9, 60, ac9},    {10, 120, ac10},
        {11, 600, ac11}, {12, 60, ac12},  {13, 60, ac13}, {14, 1800, ac14}, {15, 120, ac15},
    };
    int red = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("engine error: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = dt <= c.budget_s;
        bool ok = o.pass && in_time;
        if (!ok) ++red;
        std::printf("AC%-2d %s  %s  [%.2fs / %.0fs]\n", c.id, ok ? "PASS" : "FAIL", o.detail.c_str(), dt, c.budget_s);
        for (auto& l : o.log) std::printf("      %s\n", l.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(all.size()) - red, all.size());
    return red ? 1 : 0;
}
