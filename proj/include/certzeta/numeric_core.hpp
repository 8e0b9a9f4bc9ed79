#pragma once

#include <complex>
#include <cstdint>

namespace certzeta {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Principal argument in (-pi, pi]. Throws DomainError for z == 0.
double principal_arg(Complex z);

/// z^w on the principal branch; 0^w is 0 for Re(w) > 0.
Complex principal_pow(Complex z, Complex w);

/// Rising factorial s(s+1)...(s+n-1) as an explicit product.
Complex pochhammer(Complex s, unsigned n);

/// sqrt(pi) Gamma(p/2 + 1) / Gamma(p/2 + 1/2) for real p > 0.
double chi(double p);

/// Principal log Gamma(z) together with the truncation bound of the Stirling
/// series used to produce it.
struct LogGammaResult {
    Complex value;
    double radius;
};

// Shifts Re(z) to at least 10 by the recurrence, then sums the Stirling
// series through B_16 and bounds the remainder by the sec^{2N}(arg z / 2)
// weighted first neglected term. Poles at nonpositive integers throw.
LogGammaResult log_gamma_certified(Complex z);

inline Complex log_gamma(Complex z) { return log_gamma_certified(z).value; }

/// Gamma(Re p) / |Gamma(p)| for Re(p) > 0, exactly 1 for real p.
double gamma_ratio_bound(Complex p);

/// 1 / Gamma(z), exactly 0 at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

bool is_nonpositive_integer(Complex z);

// Upper bound on summation effort for series and oracles, read from
// CERTZETA_MAX_TERMS (default 10^7).
std::int64_t max_terms();

}  // namespace certzeta

namespace certzeta {

/// Principal logarithm; a negative-zero imaginary part is treated as +0 so
/// that the negative real axis always maps to arg = +pi.
Complex principal_log(Complex z);

}  // namespace certzeta
