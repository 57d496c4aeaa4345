#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "hlzeta/common.hpp"
#include "hlzeta/quad.hpp"
#include "hlzeta/report.hpp"

namespace hlzeta {

enum class SawtoothConvention { fractional, centered };

inline double frac_part(double x) { return x - std::floor(x); }

// centered: x - floor(x) - 1/2, exactly 0 at integers
inline double sawtooth(double x, SawtoothConvention conv) {
    double f = x - std::floor(x);
    if (conv == SawtoothConvention::fractional) return f;
    return f == 0.0 ? 0.0 : f - 0.5;
}

IdentityReport kubert_check(int m, double x);

// sum_{n<=x} (1/n)(x/n - floor(x/n) - 1/2), the literal formula (value -1/2 at integer ratios)
double rho_sum(double x);

struct DivisorSumOut {
    IdentityReport report;
    double s1_remainder;  // S1(x) - zeta(2) x + log(x)/2
    double s_upper_scaled;  // (S^1(x) - pi^2 x^2/12 + x rho_sum(x)) / x
};
DivisorSumOut divisor_sum_identity(double x);
// exact integer check of the hyperbola count for every integer x <= limit
bool divisor_sum_exact_scan(std::int64_t limit);

// int_0^1 g(x) rho(theta/x) dx with breakpoints at theta/k and an analytic head
EvalResult integrate_rho_theta(const std::function<double(double)>& g, double theta, SawtoothConvention conv,
                               double tol);

IdentityReport beurling_mellin_check(double theta, double s);

struct DecompFn {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> F;  // antiderivative with F(0) = 0
    double lipschitz;                 // |f(x)| <= L x on [0, 1]
};
IdentityReport rho_decomposition_check(double theta, const DecompFn& fn);

struct FourierCoeff {
    EvalResult closed;   // sine integral plus sin^2 sum
    EvalResult direct;   // quadrature of rho(theta/x) sin(n pi x)
    double printed_variant;  // the (1/n pi) sum sin^2(n pi theta / k) reading
};
FourierCoeff fourier_coeff_an(double theta, int n);
IdentityReport fourier_coeff_check(double theta, int n);
// columns theta, n, closed, direct, abs_diff, printed_variant for n = 1..n_max
CsvTable fourier_coeff_table(double theta, int n_max);

// sum_{n<=N} mu(n)(rho(theta/(n x)) - rho(theta/x)/n) against -1_{(0,theta]}(x)
CsvTable bod_pointwise_scan(double theta, double x, const std::vector<std::int64_t>& n_grid);

}  // namespace hlzeta
