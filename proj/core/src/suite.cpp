#include "hlzeta/suite.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "hlzeta/franel.hpp"
#include "hlzeta/hlseries.hpp"
#include "hlzeta/lattice.hpp"
#include "hlzeta/sawtooth.hpp"
#include "hlzeta/specfun.hpp"
#include "hlzeta/summation.hpp"

namespace hlzeta {

bool glob_match(const std::string& pattern, const std::string& text) {
    return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

namespace {

std::string num_id(std::int64_t n, std::int64_t m) { return std::to_string(n) + "_" + std::to_string(m); }

IdentityReport franel2_row(std::int64_t n, std::int64_t m, const SymbolicConstant* printed) {
    auto closed = franel2_closed(n, m);
    auto oracle = franel2_oracle(n, m, 1e-10);
    std::string id = (printed ? "franel2.table." : "franel2.closed.") + num_id(n, m);
    auto rep = make_report(id, printed ? "example table" : "extendedFranel", closed.numeric(), oracle.value, 1e-8);
    rep.note("closed_form", closed.str());
    rep.note("oracle_bound", fmt_num(oracle.error_bound));
    if (printed) {
        bool same = closed == *printed;
        rep.note("printed", printed->str());
        rep.note("printed_matches", same ? "true" : "false");
        if (!same) {
            rep.note("printed_oracle_diff", fmt_num(std::abs(printed->numeric() - oracle.value)));
            std::string hit;
            for (std::int64_t a = 1; a <= 6 && hit.empty(); ++a)
                for (std::int64_t b = 1; b <= 6 && hit.empty(); ++b)
                    if (franel2_closed(a, b) == *printed) hit = num_id(a, b);
            rep.note("verdict", hit.empty() ? "printed entry rejected by oracle" : "printed entry is the value at " + hit);
        }
    }
    return rep;
}

IdentityReport bool_report(std::string id, std::string anchor, std::int64_t mismatches) {
    auto rep = make_report(std::move(id), std::move(anchor), static_cast<double>(mismatches), 0.0, 0.0);
    rep.note("mismatches", std::to_string(mismatches));
    return rep;
}

void add(std::vector<SuiteEntry>& v, std::string id, std::function<IdentityReport()> fn) {
    v.push_back({std::move(id), std::move(fn)});
}

std::vector<SuiteEntry> build_registry() {
    std::vector<SuiteEntry> v;

    // sawtooth
    for (int m : {2, 3, 5, 7, 12})
        for (double x : {0.1, 0.37, 0.5, 0.9}) {
            add(v, "kubert.m" + std::to_string(m) + ".x" + fmt_num(x), [m, x] { return kubert_check(m, x); });
        }
    for (double x : {10.0, 100.5, 1000.0, 12345.6})
        add(v, "divisor.S1.x" + fmt_num(x), [x] { return divisor_sum_identity(x).report; });
    add(v, "divisor.exact.x10000", [] {
        return bool_report("divisor.exact.x10000", "hyperbola S_1", divisor_sum_exact_scan(10000) ? 0 : 1);
    });
    for (double th : {0.25, 0.5, 1.0})
        for (double s : {1.5, 2.0, 3.0})
            add(v, "beurling.mellin.theta" + fmt_num(th) + ".s" + fmt_num(s),
                [th, s] { return beurling_mellin_check(th, s); });
    for (double th : {0.3, 0.7, 1.0}) {
        add(v, "decomp.square.theta" + fmt_num(th), [th] {
            DecompFn fn{"square", [](double x) { return x * x; }, [](double x) { return x * x * x / 3.0; }, 1.0};
            return rho_decomposition_check(th, fn);
        });
        add(v, "decomp.sin.theta" + fmt_num(th), [th] {
            DecompFn fn{"sin", [](double x) { return std::sin(x); }, [](double x) { return 1.0 - std::cos(x); }, 1.0};
            return rho_decomposition_check(th, fn);
        });
    }
    for (double th : {0.3, 0.5, 0.9})
        for (int n = 1; n <= 20; ++n)
            add(v, "fourier.an.theta" + fmt_num(th) + ".n" + std::to_string(n),
                [th, n] { return fourier_coeff_check(th, n); });

    // hlseries
    for (double x : {-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9})
        add(v, "hl.power.sin.x" + fmt_num(x), [x] {
            auto p = eval_power_series(PowerForm::sin_form, x);
            auto d = eval_f(x);
            return make_report("hl.power.sin.x" + fmt_num(x), "sine expansion", p.value, d.value, 1e-10);
        });
    for (double x : {-0.9, -0.45, 0.2, 0.5, 0.75, 0.9})
        add(v, "hl.power.onemcos.x" + fmt_num(x), [x] {
            auto p = eval_power_series(PowerForm::onemcos_form, x);
            auto d = eval_onemcos_sum(x);
            return make_report("hl.power.onemcos.x" + fmt_num(x), "cosine expansion", p.value, d.value, 1e-10);
        });
    for (cplx z : {cplx(0.9, 0), cplx(0.5, 0), cplx(0, 0.9), cplx(0.3, 0.6), cplx(0.6, -0.6), cplx(0.1, 0.2),
                   cplx(0.8, 0.3)}) {
        std::string tag = fmt_num(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_num(z.imag()) + "i";
        add(v, "hl.power.exp.z" + tag, [z, tag] {
            auto p = eval_power_series(PowerForm::exp_form, z);
            auto d = eval_exp_sum(z);
            return make_report("hl.power.exp.z" + tag, "An immediate consequence of this expansion", p.value, d.value,
                               1e-10);
        });
    }
    for (double x : {1e3, 1e4, 1e5, 1e6})
        add(v, "hl.limit.x" + fmt_num(x), [x] {
            auto s = eval_sin2_sum(x);
            double env = 2.0 / std::sqrt(x) + 10.0 / x;
            auto rep = make_report("hl.limit.x" + fmt_num(x), "by considering Riemann sums", s.value / x, kPi / 2.0, env);
            rep.note("bound", fmt_num(s.error_bound / x));
            return rep;
        });
    for (std::int64_t n : {1, 6, 12})
        add(v, "hl.g_mean.n" + std::to_string(n) + ".K1000", [n] { return g_mean_check(n, 1000); });
    for (double x : {100.0, 1000.0}) {
        add(v, "hl.delange.sin.x" + fmt_num(x), [x] { return delange_check(x, delange_sin()).report; });
        add(v, "hl.delange.chi4_1.x" + fmt_num(x), [x] { return delange_check(x, delange_char(4, 1)).report; });
    }
    for (auto [nu, z] : {std::pair<double, cplx>{0.0, 0.5}, {-1.0, 0.5}, {0.0, cplx(0.3, 0.6)}, {-1.0, cplx(0.2, -0.7)}}) {
        std::string tag = fmt_num(z.real());
        if (z.imag() != 0.0) tag += (z.imag() > 0.0 ? "+" : "") + fmt_num(z.imag()) + "i";
        add(v, "gnu.nu" + fmt_num(nu) + ".z" + tag, [nu, z] { return g_nu_check(nu, z); });
    }

    // franel
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {2, 3}, {3, 4}, {2, 6}})
        add(v, "franel.classical.a" + std::to_string(a) + ".b" + std::to_string(b),
            [a, b] { return franel_disambiguation(a, b); });
    for (double s : {0.75, 1.5, 2.5})
        for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {2, 3}})
            add(v, "franel.hurwitz.s" + fmt_num(s) + ".a" + std::to_string(a) + ".b" + std::to_string(b),
                [s, a, b] { return hurwitz_product_check(s, a, b); });
    for (const auto& e : franel2_printed_table()) {
        const SymbolicConstant* p = &e.value;
        std::int64_t n = e.n, m = e.m;
        add(v, "franel2.table." + num_id(n, m), [n, m, p] { return franel2_row(n, m, p); });
    }
    for (std::int64_t n = 1; n <= 6; ++n)
        for (std::int64_t m = 1; m <= 6; ++m)
            add(v, "franel2.closed." + num_id(n, m), [n, m] { return franel2_row(n, m, nullptr); });
    add(v, "franel1.beta1", [] {
        auto j = franel_first_kind(1.0, 1e-7);
        double ref = std::log(2.0 * kPi) - kEulerGamma - 1.0;
        auto rep = make_report("franel1.beta1", "Franel integral of the first kind", j.value, ref,
                               std::max(1e-7, 2.0 * j.error_bound));
        rep.note("bound", fmt_num(j.error_bound));
        return rep;
    });

    // summation
    for (double c : {0.5, 1.0, 2.0}) {
        auto f = TestFunction::gaussian(c);
        add(v, "poisson." + f.name, [f] { return poisson_even_check(f); });
    }
    for (double c : {0.3, 1.0, 2.0}) {
        auto f = TestFunction::gaussian(c);
        add(v, "voronoi." + f.name, [f] { return voronoi_check(f).report; });
    }
    for (double a : {0.5, 1.0, 1.7, 3.0}) add(v, "koshliakov.a" + fmt_num(a), [a] { return koshliakov_check(a); });
    for (auto [kind, name] : {std::pair{MellinKernel::K0, "K0"}, {MellinKernel::Y0, "Y0"}, {MellinKernel::J0, "J0"}})
        for (double s : {0.25, 0.5, 0.75})
            add(v, std::string("voronoi.mellin.") + name + ".s" + fmt_num(s),
                [k = kind, s] { return voronoi_mellin_check(s, k); });

    // lattice
    for (double q : {0.1, 0.3, 0.5, 0.7})
        add(v, "theta.agree.q" + fmt_num(q), [q] {
            auto a = theta4_cubed(ThetaArg::from_q(q), ThetaMethod::direct_cube);
            auto b = theta4_cubed(ThetaArg::from_q(q), ThetaMethod::andrews);
            auto rep = make_report("theta.agree.q" + fmt_num(q), "due to Andrews", b.value, a.value, 1e-12);
            rep.note("bound", fmt_num(a.error_bound + b.error_bound));
            return rep;
        });
    add(v, "theta.coeffs.n200", [] {
        auto r3 = r3_table(200);
        std::int64_t bad = 0;
        for (auto method : {ThetaMethod::direct_cube, ThetaMethod::andrews}) {
            auto c = theta4_cubed_coeffs(200, method);
            for (std::size_t n = 0; n <= 200; ++n)
                if (c[n] != ((n % 2) ? -r3[n] : r3[n])) ++bad;
        }
        return bool_report("theta.coeffs.n200", "due to Andrews", bad);
    });
    for (double t : {1.0, 4.0, 9.0, 16.0})
        add(v, "chi.half.t" + fmt_num(t), [t] {
            auto a = chi_half_accel_tol(t, 1e-13);
            auto d = chi_direct(0.5, t, 2e-11);
            auto rep = make_report("chi.half.t" + fmt_num(t), "satisfies the following functional equation",
                                   a.result.value, d.result.value, 1e-10);
            rep.note("accel_terms", std::to_string(a.terms));
            rep.note("direct_terms", std::to_string(d.terms));
            rep.note("speedup", fmt_num(static_cast<double>(d.terms) / static_cast<double>(a.terms)));
            return rep;
        });
    for (auto [form, name] : {std::pair{TernaryForm::q1, "q1"}, {TernaryForm::q2, "q2"}})
        add(v, std::string("epstein.s3.") + name, [f = form, n = std::string(name)] {
            auto m = alt_epstein(3.0, f, EpsteinMethod::mellin);
            auto d = alt_epstein(3.0, f, EpsteinMethod::direct, f == TernaryForm::q1 ? 80 : 120);
            auto rep = make_report("epstein.s3." + n, "a more interesting result", m.value, d.value, 1e-6);
            rep.note("bound", fmt_num(m.error_bound + d.error_bound));
            return rep;
        });
    for (double s : {2.0, 3.0}) add(v, "crandall.relation.s" + fmt_num(s), [s] { return crandall_relation_check(s); });
    add(v, "crandall.double_integral", [] { return double_integral_check(6.0); });
    for (double t : {-4.0, 0.0, 1.0, 4.0, 10.0}) add(v, "ghat.t" + fmt_num(t), [t] { return ghat_check(t); });
    for (double z : {1e-3, 0.5, 1.0, 5.0}) add(v, "segal.z" + fmt_num(z), [z] { return segal_identity_check(z); });
    for (cplx z : {cplx(1, 0), cplx(2, 1), cplx(0.5, 2)}) {
        std::string tag = fmt_num(z.real());
        if (z.imag() != 0.0) tag += "+" + fmt_num(z.imag()) + "i";
        add(v, "hardy2.z" + tag, [z] { return hl_k0_identity_check(z); });
    }
    for (double p : {0.5, 1.0, 3.0}) add(v, "laplace.p" + fmt_num(p), [p] { return laplace_partial_fraction_check(p); });

    std::sort(v.begin(), v.end(), [](const SuiteEntry& a, const SuiteEntry& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i].id == v[i - 1].id) throw Error("suite registry: duplicate id " + v[i].id);
    return v;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_positive(const std::string& v, const std::string& what) {
    std::size_t pos = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(what + ": not a number: " + v);
    }
    if (pos != v.size() || !(d > 0.0) || !std::isfinite(d)) throw ConfigError(what + ": expected a positive number, got " + v);
    return d;
}

}  // namespace

const std::vector<SuiteEntry>& suite_registry() {
    static const std::vector<SuiteEntry> reg = build_registry();
    return reg;
}

std::vector<const SuiteEntry*> select_identities(const std::vector<std::string>& selectors) {
    const auto& reg = suite_registry();
    std::set<std::size_t> picked;
    std::vector<std::string> sel = selectors.empty() ? std::vector<std::string>{"all"} : selectors;
    for (const auto& s : sel) {
        bool any = false;
        for (std::size_t i = 0; i < reg.size(); ++i) {
            const auto& id = reg[i].id;
            bool hit = s == "all" || glob_match(s, id) || id.rfind(s + ".", 0) == 0;
            if (hit) {
                picked.insert(i);
                any = true;
            }
        }
        if (!any) throw UnknownIdentityError("no identity matches '" + s + "'");
    }
    std::vector<const SuiteEntry*> out;
    for (auto i : picked) out.push_back(&reg[i]);
    return out;
}

void add_tolerance_override(SuiteConfig& cfg, const std::string& spec) {
    auto eq = spec.rfind('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("tolerance override must be ID=VALUE: " + spec);
    std::string key = trim(spec.substr(0, eq));
    cfg.tolerance_overrides.emplace_back(key, parse_positive(trim(spec.substr(eq + 1)), "tolerance for " + key));
}

SuiteConfig parse_config_text(const std::string& text, const std::string& origin) {
    SuiteConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.rfind("tol.", 0) == 0) {
            cfg.tolerance_overrides.emplace_back(key.substr(4), parse_positive(val, where));
        } else if (key == "select") {
            for (auto& s : split_list(val)) cfg.selectors.push_back(s);
        } else if (key == "jobs") {
            double j = parse_positive(val, where);
            if (j != std::floor(j)) throw ConfigError(where + ": jobs must be an integer");
            cfg.jobs = static_cast<int>(j);
        } else if (key == "sieve_bound") {
            double b = parse_positive(val, where);
            if (b != std::floor(b)) throw ConfigError(where + ": sieve_bound must be an integer");
            cfg.sieve_bound = static_cast<std::int64_t>(b);
        } else if (key == "out") {
            cfg.output_path = val;
        } else if (key == "format") {
            if (val != "csv" && val != "jsonl") throw ConfigError(where + ": format must be csv or jsonl");
            cfg.format = val;
        } else {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

bool SuiteResult::all_pass() const {
    return engine_errors.empty() &&
           std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
}

int suite_exit_code(const SuiteResult& r) {
    if (!r.engine_errors.empty()) return 2;
    return r.all_pass() ? 0 : 1;
}

namespace {

void apply_override(IdentityReport& r, const SuiteConfig& cfg) {
    std::optional<double> tol;
    for (const auto& [pat, v] : cfg.tolerance_overrides)
        if (pat == r.id || glob_match(pat, r.id) || r.id.rfind(pat + ".", 0) == 0) tol = v;
    if (!tol) return;
    r.note("default_tolerance", fmt_num(r.tolerance));
    r.tolerance = *tol;
    r.pass = std::isfinite(r.abs_diff) && r.abs_diff <= r.tolerance;
}

IdentityReport failed_report(const std::string& id, const std::string& kind, const std::string& what) {
    IdentityReport r;
    r.id = id;
    r.anchor = "engine";
    r.abs_diff = std::nan("");
    r.pass = false;
    r.note("error", kind);
    r.note("message", what);
    return r;
}

}  // namespace

SuiteResult run_suite(const std::vector<const SuiteEntry*>& entries, const SuiteConfig& cfg,
                      const std::function<void(const IdentityReport&)>& on_report) {
    if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
    std::size_t n = entries.size();
    std::vector<std::optional<IdentityReport>> slots(n);
    std::vector<std::string> errors(n);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            IdentityReport r;
            std::string err;
            try {
                r = entries[i]->run();
                r.id = entries[i]->id;
                apply_override(r, cfg);
            } catch (const ConvergenceError& e) {
                err = e.what();
                r = failed_report(entries[i]->id, "ConvergenceError", e.what());
            } catch (const std::exception& e) {
                err = e.what();
                r = failed_report(entries[i]->id, "EngineError", e.what());
            }
            {
                std::lock_guard<std::mutex> lk(mu);
                slots[i] = std::move(r);
                errors[i] = std::move(err);
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), std::max<std::size_t>(n, 1)));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

    SuiteResult out;
    for (std::size_t i = 0; i < n; ++i) {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] { return slots[i].has_value(); });
        IdentityReport r = *slots[i];
        std::string err = errors[i];
        lk.unlock();
        if (!err.empty()) out.engine_errors.push_back(r.id + ": " + err);
        if (on_report) on_report(r);
        out.reports.push_back(std::move(r));
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace hlzeta
