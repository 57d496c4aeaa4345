#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "hlzeta/common.hpp"

namespace hlzeta {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    std::vector<double> breakpoints;  // strictly inside (a, b), strictly increasing
};

enum class Smoothness { smooth, piecewise, oscillatory };

// majorant |f(x)| <= amp * g(x) valid for x >= the truncation point
struct DecayHint {
    enum class Kind { none, exponential, algebraic, gaussian, root_exponential };
    Kind kind = Kind::none;
    double rate = 0.0;   // exponential: e^{-rate x}; gaussian: e^{-rate x^2}; root_exponential: e^{-rate sqrt x}
    double power = 0.0;  // algebraic: x^{-power} with power > 1; other kinds: extra factor x^power
    double amp = 1.0;

    static DecayHint exponential(double rate, double amp = 1.0, double power = 0.0) {
        return {Kind::exponential, rate, power, amp};
    }
    static DecayHint algebraic(double power, double amp = 1.0) { return {Kind::algebraic, 0.0, power, amp}; }
    static DecayHint gaussian(double rate, double amp = 1.0, double power = 0.0) {
        return {Kind::gaussian, rate, power, amp};
    }
    static DecayHint root_exponential(double rate, double amp = 1.0, double power = 0.0) {
        return {Kind::root_exponential, rate, power, amp};
    }
};

struct Integrand {
    std::function<double(double)> f;
    Smoothness smoothness = Smoothness::smooth;
    DecayHint decay{};
    // oscillatory: zeros at offset + k * half_period
    double half_period = 0.0;
    double zero_offset = 0.0;

    Integrand() = default;
    Integrand(std::function<double(double)> fn) : f(std::move(fn)) {}  // NOLINT
    Integrand& with_decay(DecayHint d) {
        decay = d;
        return *this;
    }
    Integrand& oscillating(double half, double offset = 0.0) {
        smoothness = Smoothness::oscillatory;
        half_period = half;
        zero_offset = offset;
        return *this;
    }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

EvalResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

// int_0^inf t^{s-1} g(t) dt; g's decay hint describes g alone
EvalResult mellin_integral(const Integrand& g, double s, const QuadratureSpec& spec = {});

// analytic tail int_T^inf of the majorant
double decay_tail(const DecayHint& d, double T);

}  // namespace hlzeta
