#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hlzeta/common.hpp"
#include "hlzeta/report.hpp"
#include "hlzeta/specfun.hpp"

namespace hlzeta {

// element of span_Q{1, log p, zeta(2)}; logs are always stored over primes
class SymbolicConstant {
public:
    SymbolicConstant() = default;
    explicit SymbolicConstant(Rational r) : rational_(std::move(r)) {}

    // adds c * log(n), n >= 1, split into prime logs
    SymbolicConstant& add_log(std::int64_t n, const Rational& c);
    SymbolicConstant& add_zeta2(const Rational& c);
    SymbolicConstant& add_rational(const Rational& c);

    const Rational& rational_part() const { return rational_; }
    const std::map<std::int64_t, Rational>& log_coeffs() const { return logs_; }
    const Rational& zeta2_coeff() const { return zeta2_; }

    SymbolicConstant operator+(const SymbolicConstant& o) const;
    SymbolicConstant operator-(const SymbolicConstant& o) const;
    SymbolicConstant operator*(const Rational& c) const;
    bool operator==(const SymbolicConstant& o) const;
    bool operator!=(const SymbolicConstant& o) const { return !(*this == o); }

    double numeric() const;
    // e.g. "5/2 - log(2) - zeta2"
    std::string str() const;

private:
    Rational rational_{0};
    std::map<std::int64_t, Rational> logs_;
    Rational zeta2_{0};
};

enum class ProductKind { bernoulli, sawtooth };

// int_0^1 B_r({ax}) B_r({bx}) dx, standard Bernoulli polynomials
SymbolicConstant classical_product(int r, std::int64_t a, std::int64_t b, ProductKind kind = ProductKind::bernoulli);
// lcm(a,b)/(12ab), the form printed next to Franel's formula
Rational franel_printed_lcm(std::int64_t a, std::int64_t b);
// piecewise quadrature of the same product with breakpoints j/a, j/b
EvalResult classical_product_quad(int r, std::int64_t a, std::int64_t b, double tol = 1e-13);
// quadrature decides between gcd^2/(12ab) and lcm/(12ab)
IdentityReport franel_disambiguation(std::int64_t a, std::int64_t b);

IdentityReport hurwitz_product_check(double s, std::int64_t a, std::int64_t b);

// I_{n,m} = int_0^1 {nx}{m/x} dx, {.} the plain fractional part
EvalResult franel2_oracle(std::int64_t n, std::int64_t m, double tol = 1e-10);
// exact closed form; certify = true compares against the oracle and throws AssemblyError
SymbolicConstant franel2_closed(std::int64_t n, std::int64_t m, bool certify = false);

struct Franel2Printed {
    std::int64_t n, m;
    SymbolicConstant value;
};
// the example table as printed
const std::vector<Franel2Printed>& franel2_printed_table();

// J(beta) = int_0^1 rho(1/x) rho(beta/x) dx, rho the fractional part
EvalResult franel_first_kind(double beta, double tol = 1e-7);

CsvTable franel2_table(std::int64_t n_lo, std::int64_t n_hi, std::int64_t m_lo, std::int64_t m_hi,
                       double tol = 1e-10);
CsvTable franel1_table(const std::vector<double>& betas, double tol = 1e-7);

}  // namespace hlzeta
