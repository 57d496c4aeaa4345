#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hlzeta/common.hpp"
#include "hlzeta/report.hpp"

namespace hlzeta {

enum class SeriesKind { f_hl, F_cos, sin2_sum, G_tenenbaum, chi, chi_tilde, G_nu };

// sum_n sin(x/n)/n
EvalResult eval_f(double x, const TruncationPolicy& policy = {});
// sum_n sin^2(x/n)
EvalResult eval_sin2_sum(double x, const TruncationPolicy& policy = {});
// sum_n cos(x/n)/n^2
EvalResult eval_F_cos(double x, const TruncationPolicy& policy = {});
// sum_n e^{z/n}/n^2, Re z <= 0
EvalResultC eval_G(cplx z, const TruncationPolicy& policy = {});
// sum_n e^{-t/n}/n^s, s > 1
EvalResult eval_chi_tilde(double s, double t, const TruncationPolicy& policy = {});
// sum_n (1 - e^{-z/n})/n, Re z >= 0
EvalResultC eval_exp_sum(cplx z, const TruncationPolicy& policy = {});
// sum_n (1 - cos(x/n))/n
EvalResult eval_onemcos_sum(double x, const TruncationPolicy& policy = {});
// sum_n (e^{-z/n} - 1 + z/n), Re z >= 0
EvalResultC eval_exp_rem_sum(cplx z, const TruncationPolicy& policy = {});

struct ChiDirect {
    EvalResult result;
    std::int64_t terms = 0;
};
// sum_n (-1)^n e^{-t/n}/n^s summed in pairs with an Euler end correction
ChiDirect chi_direct(double s, double t, double tol = 1e-12, std::int64_t max_terms = 400'000'000);
// -sum_j (-t)^j/j! eta(s+j), useful for small t
EvalResult chi_taylor(double s, double t);

EvalResultC eval_series(SeriesKind kind, cplx arg, double s = 0.0, double nu = 0.0,
                        const TruncationPolicy& policy = {});

enum class PowerForm { sin_form, onemcos_form, exp_form };
EvalResultC eval_power_series(PowerForm form, cplx z);

// sum_{n>nu+1} zeta(n-nu) (-z)^n / n!
EvalResultC g_nu_series(double nu, cplx z);

double davenport_sum(double x, std::int64_t N);

IdentityReport g_mean_check(std::int64_t n, std::int64_t K);

struct DelangeFn {
    std::string name;
    std::function<double(double)> f;       // 2 pi periodic, f(0) = 0
    std::function<double(double)> fprime;  // derivative of f
    std::vector<int> character;            // empty: weight 1; else chi(n mod N)
};
DelangeFn delange_sin();
DelangeFn delange_zero();
// builtin real characters: N in {3, 4, 5}, index 1 (nonprincipal)
DelangeFn delange_char(int modulus, int index);
DelangeFn delange_char_table(std::vector<int> values);

struct DelangeOut {
    IdentityReport report;
    double theta_sup_dev = 0.0;  // sup_u |theta_{x,x}(u) - u|
};
DelangeOut delange_check(double x, const DelangeFn& fn);

CsvTable mobius_exp_scan(const std::vector<std::int64_t>& y_grid, const std::vector<double>& x_grid);
CsvTable growth_scan(double x_lo, double x_hi, int points, double eps);
CsvTable davenport_scan(const std::vector<double>& x_grid, const std::vector<std::int64_t>& n_grid);
CsvTable saffari_scan(const std::vector<double>& x_grid, const DelangeFn& fn);

}  // namespace hlzeta
