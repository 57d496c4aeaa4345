// hlzeta: verify identities, materialize tables and scans, evaluate series
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hlzeta/franel.hpp"
#include "hlzeta/hlseries.hpp"
#include "hlzeta/lattice.hpp"
#include "hlzeta/report.hpp"
#include "hlzeta/sawtooth.hpp"
#include "hlzeta/specfun.hpp"
#include "hlzeta/suite.hpp"

using namespace hlzeta;

namespace {

struct Common {
    std::string config;
    std::string out;
    std::string format;
    std::vector<std::string> tols;
    int jobs = 0;
};

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double d = std::stod(item, &pos);
        if (pos != item.size()) throw ConfigError("not a number: " + item);
        v.push_back(d);
    }
    if (v.empty()) throw ConfigError("empty number list");
    return v;
}

std::vector<std::int64_t> parse_ints(const std::string& s) {
    std::vector<std::int64_t> v;
    for (double d : parse_doubles(s)) {
        if (d != std::floor(d)) throw ConfigError("expected an integer: " + fmt_num(d));
        v.push_back(static_cast<std::int64_t>(d));
    }
    return v;
}

// "lo:hi" inclusive integer range
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    auto c = s.find(':');
    if (c == std::string::npos) {
        auto v = std::stoll(s);
        return {v, v};
    }
    return {std::stoll(s.substr(0, c)), std::stoll(s.substr(c + 1))};
}

SuiteConfig resolve_config(const Common& c) {
    SuiteConfig cfg;
    if (!c.config.empty()) cfg = load_config(c.config);
    if (const char* env = std::getenv("HLZETA_SIEVE_BOUND")) {
        char* end = nullptr;
        long long b = std::strtoll(env, &end, 10);
        if (!end || *end != '\0' || b <= 0) throw ConfigError("HLZETA_SIEVE_BOUND must be a positive integer");
        cfg.sieve_bound = b;
    }
    if (!c.out.empty()) cfg.output_path = c.out;
    if (!c.format.empty()) cfg.format = c.format;
    if (c.jobs > 0) cfg.jobs = c.jobs;
    for (const auto& t : c.tols) add_tolerance_override(cfg, t);
    if (cfg.sieve_bound > 0) {
        if (cfg.sieve_bound > kSieveCapacity) throw CapacityError("sieve bound above capacity");
        set_sieve_bound(cfg.sieve_bound);
    }
    return cfg;
}

// stdout unless a path is given; files are opened binary so line endings stay LF
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) throw ConfigError("cannot write " + path);
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit_table(const CsvTable& t, const SuiteConfig& cfg) {
    Output out(cfg.output_path);
    if (cfg.format == "jsonl")
        t.write_jsonl(out.os());
    else
        t.write(out.os());
}

int cmd_verify(const std::vector<std::string>& selectors, const Common& c) {
    auto cfg = resolve_config(c);
    if (!selectors.empty()) cfg.selectors = selectors;
    auto entries = select_identities(cfg.selectors);
    Output out(cfg.output_path);
    bool csv = cfg.format == "csv";
    if (csv) out.os() << report_csv_header() << '\n';
    auto res = run_suite(entries, cfg, [&](const IdentityReport& r) {
        out.os() << (csv ? report_csv_row(r) : report_jsonl(r)) << '\n';
        out.os().flush();
    });
    std::size_t fails = 0;
    for (const auto& r : res.reports) fails += r.pass ? 0 : 1;
    std::cerr << res.reports.size() << " identities, " << res.reports.size() - fails << " pass, " << fails << " fail";
    if (!res.engine_errors.empty()) std::cerr << ", " << res.engine_errors.size() << " engine errors";
    std::cerr << '\n';
    for (const auto& e : res.engine_errors) std::cerr << "  " << e << '\n';
    return suite_exit_code(res);
}

struct TableArgs {
    std::string kind;
    std::string n = "1:4";
    std::string m = "1:4";
    double tol = 1e-10;
    double beta_lo = 0.0, beta_hi = 1.0;
    int points = 11;
    double theta = 0.5;
    int n_max = 20;
};

int cmd_table(const TableArgs& a, const Common& c) {
    auto cfg = resolve_config(c);
    if (a.kind == "franel2") {
        auto [nlo, nhi] = parse_range(a.n);
        auto [mlo, mhi] = parse_range(a.m);
        emit_table(franel2_table(nlo, nhi, mlo, mhi, a.tol), cfg);
    } else if (a.kind == "franel1") {
        if (a.points < 1) throw ConfigError("points must be >= 1");
        std::vector<double> betas;
        for (int i = 0; i < a.points; ++i)
            betas.push_back(a.points == 1 ? a.beta_lo : a.beta_lo + (a.beta_hi - a.beta_lo) * i / (a.points - 1));
        emit_table(franel1_table(betas, std::max(a.tol, 1e-7)), cfg);
    } else {
        emit_table(fourier_coeff_table(a.theta, a.n_max), cfg);
    }
    return 0;
}

struct ScanArgs {
    std::string kind;
    double x_lo = 10.0, x_hi = 1e6;
    int points = 100;
    double eps = 0.1;
    std::string xs = "100,1000,10000";
    std::string ns = "100,1000,10000";
    std::string fn = "sin";
};

DelangeFn scan_function(const std::string& name) {
    if (name == "sin") return delange_sin();
    if (name == "zero") return delange_zero();
    if (name.rfind("chi", 0) == 0 && name.size() >= 6) {
        // chi<modulus>_<index>, e.g. chi4_1
        auto us = name.find('_');
        if (us != std::string::npos)
            return delange_char(std::stoi(name.substr(3, us - 3)), std::stoi(name.substr(us + 1)));
    }
    if (name.rfind("table:", 0) == 0) {
        std::vector<int> vals;
        for (auto v : parse_ints(name.substr(6))) vals.push_back(static_cast<int>(v));
        return delange_char_table(vals);
    }
    throw ConfigError("unknown scan function " + name);
}

int cmd_scan(const ScanArgs& a, const Common& c) {
    auto cfg = resolve_config(c);
    if (a.kind == "growth_f") {
        if (a.points > 1'000'000) throw CapacityError("growth scan: at most 1e6 points");
        emit_table(growth_scan(a.x_lo, a.x_hi, a.points, a.eps), cfg);
    } else if (a.kind == "davenport") {
        emit_table(davenport_scan(parse_doubles(a.xs), parse_ints(a.ns)), cfg);
    } else {
        emit_table(saffari_scan(parse_doubles(a.xs), scan_function(a.fn)), cfg);
    }
    return 0;
}

struct EvalArgs {
    std::string kind;
    std::string at;
    double im = 0.0;
    double s = 0.5;
    double nu = 0.0;
};

int cmd_eval(const EvalArgs& a, const Common& c) {
    auto cfg = resolve_config(c);
    CsvTable t({"kind", "arg_re", "arg_im", "s", "nu", "value_re", "value_im", "error_bound"});
    for (double x : parse_doubles(a.at)) {
        cplx z(x, a.im);
        EvalResultC r;
        if (a.kind == "f") r = eval_series(SeriesKind::f_hl, z);
        else if (a.kind == "F_cos") r = eval_series(SeriesKind::F_cos, z);
        else if (a.kind == "sin2") r = eval_series(SeriesKind::sin2_sum, z);
        else if (a.kind == "G") r = eval_series(SeriesKind::G_tenenbaum, z);
        else if (a.kind == "chi") r = eval_series(SeriesKind::chi, z, a.s);
        else if (a.kind == "chi_tilde") r = eval_series(SeriesKind::chi_tilde, z, a.s);
        else if (a.kind == "G_nu") r = eval_series(SeriesKind::G_nu, z, 0.0, a.nu);
        else if (a.kind == "exp_sum") r = eval_exp_sum(z);
        else if (a.kind == "onemcos") {
            auto e = eval_onemcos_sum(x);
            r = {e.value, e.error_bound};
        } else if (a.kind == "theta4_cubed") {
            auto e = theta4_cubed(ThetaArg::from_q(x), ThetaMethod::andrews);
            r = {e.value, e.error_bound};
        } else {  // chi_half
            auto e = chi_half_accel_tol(x, 1e-15).result;
            r = {e.value, e.error_bound};
        }
        t.add({a.kind, fmt_num(z.real()), fmt_num(z.imag()), fmt_num(a.s), fmt_num(a.nu), fmt_num(r.value.real()),
               fmt_num(r.value.imag()), fmt_num(r.error_bound)});
    }
    emit_table(t, cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hlzeta: numerical identity workbench for the Hardy-Littlewood series"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&common](CLI::App* sub) {
        sub->add_option("--config", common.config, "flat key=value config file");
        sub->add_option("--out", common.out, "output path (default stdout)");
        sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv", "jsonl"}));
        sub->add_option("--tol", common.tols, "tolerance override ID=VALUE, repeatable")->allow_extra_args(false);
        sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    std::vector<std::string> selectors;
    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("selectors", selectors, "ids, globs or prefixes (default all)");
    add_common(verify);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "emit a table");
    table->add_option("kind", ta.kind)->required()->check(CLI::IsMember({"franel2", "franel1", "an_coeffs"}));
    table->add_option("--n", ta.n, "franel2 n range lo:hi");
    table->add_option("--m", ta.m, "franel2 m range lo:hi");
    table->add_option("--oracle-tol", ta.tol, "oracle tolerance");
    table->add_option("--beta-lo", ta.beta_lo);
    table->add_option("--beta-hi", ta.beta_hi);
    table->add_option("--points", ta.points);
    table->add_option("--theta", ta.theta, "an_coeffs theta");
    table->add_option("--n-max", ta.n_max, "an_coeffs largest n");
    add_common(table);

    ScanArgs sa;
    auto* scan = app.add_subcommand("scan", "emit a scan");
    scan->add_option("kind", sa.kind)->required()->check(CLI::IsMember({"growth_f", "davenport", "saffari"}));
    scan->add_option("--x-lo", sa.x_lo);
    scan->add_option("--x-hi", sa.x_hi);
    scan->add_option("--points", sa.points);
    scan->add_option("--eps", sa.eps, "envelope exponent slack");
    scan->add_option("--x", sa.xs, "comma separated x grid");
    scan->add_option("--N", sa.ns, "comma separated truncation grid (davenport)");
    scan->add_option("--fn", sa.fn, "sin, zero, chiM_I or table:v0,v1,...");
    add_common(scan);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate a series");
    eval->add_option("kind", ea.kind)
        ->required()
        ->check(CLI::IsMember({"f", "F_cos", "sin2", "G", "chi", "chi_tilde", "G_nu", "exp_sum", "onemcos",
                               "theta4_cubed", "chi_half"}));
    eval->add_option("at", ea.at, "comma separated real parts")->required();
    eval->add_option("--im", ea.im, "imaginary part");
    eval->add_option("--s", ea.s, "weight exponent for chi / chi_tilde");
    eval->add_option("--nu", ea.nu, "nu for G_nu");
    add_common(eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify(selectors, common);
        if (*table) return cmd_table(ta, common);
        if (*scan) return cmd_scan(sa, common);
        return cmd_eval(ea, common);
    } catch (const Error& e) {
        std::cerr << "hlzeta: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hlzeta: " << e.what() << '\n';
        return 2;
    }
}
