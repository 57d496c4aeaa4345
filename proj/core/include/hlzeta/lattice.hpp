#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hlzeta/common.hpp"

namespace hlzeta {

// q in (0,1); from_t gives q = e^{-t} and keeps t for the small-t transforms
struct ThetaArg {
    double q = 0.0;
    double t = 0.0;

    static ThetaArg from_q(double q);
    static ThetaArg from_t(double t);
};

enum class ThetaMethod { direct_cube, andrews };
enum class TernaryForm { q1, q2 };  // u^2+v^2+w^2 and uv+vw+wu
enum class EpsteinMethod { mellin, direct };

EvalResult theta4_cubed(const ThetaArg& q, ThetaMethod method, double tol = 1e-15);

// exact integer coefficients of theta4^3 up to q^degree, by either expansion
std::vector<std::int64_t> theta4_cubed_coeffs(int degree, ThetaMethod method);

struct ChiAccel {
    EvalResult result;
    std::int64_t terms = 0;  // positive odd d used; each pairs with -d
};
// chi(1/2, t) from the odd-d exponential sum, first n_odd positive odd d
ChiAccel chi_half_accel(double t, std::int64_t n_odd);
// same with n_odd picked so the tail bound is below tol
ChiAccel chi_half_accel_tol(double t, double tol = 1e-15);

// chi(s,t) = sum (-1)^n e^{-t/n} n^{-s}, fastest available path
EvalResult chi_value(double s, double t);

// sum' (-1)^{p+q+r} / Q(p,q,r)^s; q2 sums over p,q,r >= 1
// direct: cutoff is the half-width of the outer box (q1) or of the outer (p,q) range (q2)
EvalResult alt_epstein(double s, TernaryForm form, EpsteinMethod method, int cutoff = 120);

IdentityReport crandall_relation_check(double s);

struct DoubleIntegralParts {
    EvalResult full;  // over [-L,L]^2
    EvalResult half;  // over y <= z inside the square
    double tail_bound = 0.0;
};
DoubleIntegralParts crandall_double_integral(double L);
IdentityReport double_integral_check(double L = 6.0);

IdentityReport ghat_check(double t);
IdentityReport segal_identity_check(double z);
IdentityReport hl_k0_identity_check(cplx z);
IdentityReport laplace_partial_fraction_check(double p);

// G_nu power series against a direct Dirichlet sum, nu in {-1, 0}
IdentityReport g_nu_check(double nu, cplx z);

}  // namespace hlzeta
