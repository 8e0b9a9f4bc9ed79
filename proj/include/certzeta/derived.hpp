#pragma once

#include "certzeta/remainder.hpp"
#include "certzeta/zeta_eval.hpp"

namespace certzeta::derived {

enum class Function {
    digamma,
    polygamma,
    log_gamma,
    log_barnes_g_v1,  // expansion carrying z log Gamma(z + 1)
    log_barnes_g_v2,  // expansion in powers of z only
    dzeta_minus1,     // d/ds zeta(s, a) at s = -1
    dzeta_minus2,     // d/ds zeta(s, a) at s = -2
};

/// Glaisher-Kinkelin constant, log A.
inline constexpr double kLogGlaisher = 0.2487544770337842625;

/// Largest |arg z| accepted: pi - 1e-6.
inline constexpr double kSectorLimit = kPi - 1e-6;

struct Request {
    Function function = Function::digamma;
    Complex z;
    int N = 0;  // 0: shift to |z| >= 10 and choose N
    int k = 1;  // polygamma order
    double target_radius = 1e-15;
};

/// Expansion value with a certified truncation radius. With a fixed N the
/// expansion is applied at z itself; N = 0 shifts by recurrence first.
CertifiedValue evaluate(const Request& req);

CertifiedValue digamma(Complex z, int N = 0);
CertifiedValue polygamma(int k, Complex z, int N = 0);
CertifiedValue log_gamma_asym(Complex z, int N = 0);
CertifiedValue log_barnes_g(Complex z, int N = 0, bool second_form = false);
CertifiedValue dzeta_deriv(int at, Complex a, int N = 0);

/// The remainder of the fixed-N expansion at z, computed from the periodic
/// Bernoulli integral with the limits in s already taken.
remainder::Estimate true_remainder(Function f, Complex z, int N, int k = 1);

/// The rigorous bound used for the fixed-N radius, without rounding terms.
double remainder_bound(Function f, Complex z, int N, int k = 1);

}  // namespace certzeta::derived
