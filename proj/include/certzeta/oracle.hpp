#pragma once

#include <cstdint>
#include <functional>

#include "certzeta/numeric_core.hpp"

// Brute-force references. Nothing here calls the asymptotic evaluators.
namespace certzeta::oracle {

struct Result {
    Complex value;
    double tail_bound;    // rigorous bound on |value - exact|
    std::int64_t effort;  // terms summed
};

/// sum_{n>=0} (n + a)^{-s}, Re(s) > 1 + 1e-3. The first `terms` terms are
/// summed smallest first; the rest is replaced by the midpoint integral
/// int_{terms-1/2}^inf (x + a)^{-s} dx whose error is bounded through the
/// second derivative. terms = 0 picks the count for a truncation error of
/// 1e-16 |a^{-s}|; roundoff of the sum is included in tail_bound.
Result zeta_direct(Complex s, Complex a, std::int64_t terms = 0);

/// Bare partial sum and the integral-comparison bound on the omitted terms.
Result zeta_partial_sum(Complex s, Complex a, std::int64_t terms);

/// Central difference in s, Richardson-extrapolated once over (h, h/2).
Complex finite_difference_s(const std::function<Complex(Complex)>& f, Complex s0, double h);

/// Euler's constant from the harmonic sum with the n^{-2}, n^{-4} corrections.
Result euler_gamma();

}  // namespace certzeta::oracle
