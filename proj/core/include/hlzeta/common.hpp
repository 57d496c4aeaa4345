#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hlzeta {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kEps = 2.220446049250313e-16;
inline constexpr double kZeta2 = kPi * kPi / 6.0;

// value plus an absolute error bound from the producing algorithm
template <class T>
struct Eval {
    T value{};
    double error_bound = 0.0;
};
using EvalResult = Eval<double>;
using EvalResultC = Eval<cplx>;

struct TruncationPolicy {
    std::int64_t max_terms = 200'000'000;
    double tail_tolerance = 1e-13;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class PoleError : public Error {
public:
    using Error::Error;
};
class DomainError : public Error {
public:
    using Error::Error;
};
class BranchError : public Error {
public:
    using Error::Error;
};
class CapacityError : public Error {
public:
    using Error::Error;
};
class AssemblyError : public Error {
public:
    using Error::Error;
};
class UnknownIdentityError : public Error {
public:
    using Error::Error;
};
class ConfigError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double estimate, double bound)
        : Error(what), estimate_(estimate), bound_(bound) {}
    double estimate() const { return estimate_; }
    double bound() const { return bound_; }

private:
    double estimate_;
    double bound_;
};

// an Abel/Richardson limit whose tail model did not settle
class RegularizationError : public ConvergenceError {
public:
    using ConvergenceError::ConvergenceError;
};

struct IdentityReport {
    std::string id;
    cplx lhs{};
    cplx rhs{};
    double abs_diff = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> extras;

    void note(std::string key, std::string value) { extras.emplace_back(std::move(key), std::move(value)); }
};

IdentityReport make_report(std::string id, std::string anchor, cplx lhs, cplx rhs, double tolerance);

// 15 significant digits, scientific fallback chosen by %.15g
std::string fmt_num(double v);

// Neumaier compensated summation
template <class T>
class KahanSum {
public:
    void add(T x) {
        T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            c_ += (sum_ - t) + x;
        else
            c_ += (x - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + c_; }

private:
    T sum_{};
    T c_{};
};

template <>
class KahanSum<cplx> {
public:
    void add(cplx x) {
        re_.add(x.real());
        im_.add(x.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum<double> re_, im_;
};

}  // namespace hlzeta
