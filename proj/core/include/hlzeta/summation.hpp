#pragma once

#include <functional>
#include <string>

#include "hlzeta/common.hpp"

namespace hlzeta {

// f(x) = amp * e^{-c x^2}; the Gaussian class is all the formulas here are run on
struct TestFunction {
    std::string name;
    double c = 1.0;
    double amp = 1.0;

    double operator()(double x) const;
    static TestFunction gaussian(double c, double amp = 1.0);
};

IdentityReport poisson_even_check(const TestFunction& f);

enum class VoronoiKernel { two_pi_y0, four_y0 };

struct VoronoiOut {
    IdentityReport report;         // run with the kernel that matches
    double residual_two_pi = 0.0;  // 4K0 - 2 pi Y0
    double residual_four = 0.0;    // 4K0 - 4 Y0
    VoronoiKernel winner = VoronoiKernel::two_pi_y0;
};
VoronoiOut voronoi_check(const TestFunction& f);

IdentityReport koshliakov_check(double a);

enum class MellinKernel { K0, Y0, J0 };
IdentityReport voronoi_mellin_check(double s, MellinKernel kind);

}  // namespace hlzeta
