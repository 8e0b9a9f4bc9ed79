#pragma once

#include <functional>

#include "certzeta/numeric_core.hpp"

namespace certzeta::quad {

struct Result {
    Complex value;
    double error;    // estimated absolute error
    long evaluations;
    bool converged;
};

struct Options {
    double rel_tol = 1e-13;
    double abs_tol = 0.0;
    int max_intervals = 4000;
};

using Integrand = std::function<Complex(double)>;

/// 15-point Gauss-Kronrod rule on [a, b]; error = |K15 - G7|.
Result gauss_kronrod(const Integrand& f, double a, double b);

/// Globally adaptive bisection on [a, b] driven by the G7/K15 difference.
Result integrate(const Integrand& f, double a, double b, const Options& opt = {});

}  // namespace certzeta::quad
