#pragma once

namespace certzeta::bernoulli {

inline constexpr int kMaxHalfIndex = 64;  // B_0 .. B_128

/// Even-index Bernoulli number B_{n2}; n2 even, 0 <= n2 <= 128.
double number(int n2);

/// Any-index Bernoulli number B_n, 0 <= n <= 128 (B_1 = -1/2).
double number_any(int n);

/// B_{n2}(t - floor(t)) for even n2 >= 2.
double poly_periodic(int n2, double t);

/// B_{n2} - B_{n2}(x) for x in [0, 1], evaluated without forming the
/// constant term so that it stays accurate near x = 0 and x = 1.
double poly_gap(int n2, double x);

/// 1/(e^u - 1) - 1/u + 1/2 - sum_{n=1}^{N-1} B_{2n} u^{2n-1} / (2n)!
double kernel_difference(double u, int N);

}  // namespace certzeta::bernoulli
