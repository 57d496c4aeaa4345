#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "hlzeta/common.hpp"

namespace hlzeta {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

EvalResultC gamma_complex(cplx z);
EvalResult gamma_real(double x);

enum class ZetaKind { riemann, eta, hurwitz };

// hurwitz uses x; riemann and eta ignore it
EvalResult zeta_family(ZetaKind kind, double s, double x = 1.0);
inline EvalResult riemann_zeta(double s) { return zeta_family(ZetaKind::riemann, s); }
inline EvalResult hurwitz_zeta(double s, double x) { return zeta_family(ZetaKind::hurwitz, s, x); }
inline EvalResult dirichlet_eta(double s) { return zeta_family(ZetaKind::eta, s); }

// standard convention: t e^{xt}/(e^t-1) = sum B_r(x) t^r / r!
const Rational& bernoulli_number(int r);
double bernoulli_poly(int r, double x);
Rational bernoulli_poly_exact(int r, const Rational& x);

enum class BesselKind { J0, J1, Y0, K0 };

EvalResult bessel_real(BesselKind kind, double x);
// nu must be 0 or 0.5
EvalResultC bessel_k_complex(double nu, cplx z);

enum class ArithKind {
    mobius,
    mangoldt,
    liouville,
    omega_distinct,
    divisor_count,
    sigma_s,
    r3,
    chebyshev_psi,
    lcm_upto
};

void set_sieve_bound(std::int64_t bound);  // effective only before first use
std::int64_t sieve_bound();
inline constexpr std::int64_t kSieveCapacity = 10'000'000;

// integer kinds return exact integers as double; sigma_s takes s
double arithmetic(ArithKind kind, std::int64_t n, double s = 0.0);

int mobius(std::int64_t n);
int divisor_count(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t r3_enumerate(std::int64_t n);
// r3(n) for all n <= limit by lattice enumeration
std::vector<std::int64_t> r3_table(std::int64_t limit);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace hlzeta
