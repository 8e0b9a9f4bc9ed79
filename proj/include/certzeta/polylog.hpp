#pragma once

#include <cstdint>

#include "certzeta/numeric_core.hpp"

namespace certzeta {

struct PolylogResult {
    Complex value;
    double tail_bound;  // rigorous bound on the neglected part of the series
    std::int64_t terms;
};

/// Li_order(e^{log_argument}) = sum_{n>=1} e^{n x} / n^order by direct
/// summation. Requires Re(log_argument) <= -1e-3; closer to the unit circle
/// the series is refused rather than summed slowly.
PolylogResult polylog_exp(Complex order, Complex log_argument);

inline constexpr double kPolylogMinDecay = 1e-3;

}  // namespace certzeta
