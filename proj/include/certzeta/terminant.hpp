#pragma once

#include <string_view>

#include "certzeta/numeric_core.hpp"

namespace certzeta::terminant {

// Position of arg w relative to the Stokes lines at +-pi/2.
enum class Sector { core, mid, boundary, upper };

/// core: |arg| <= pi/4, mid: pi/4 < |arg| < pi/2, boundary: |arg| = pi/2,
/// upper: pi/2 < |arg| < pi. Throws DomainError for |arg| >= pi.
Sector classify(double arg_w);

enum class Route {
    automatic,
    laplace,           // (1/Gamma(p)) int t^{p-1} e^{-t} / (1 + (t/w)^2), |arg w| < pi/2
    split,             // half-sum of int e^{-t} (1 -+ it/w)^{-p}, |arg w| < pi/2
    rotated_split,     // 1/2 - p/(2w) int e^{-it}(1+t/w)^{-p-1} + ..., pi/4 < |arg w| <= pi/2
    functional,        // reduction of pi/2 < |arg w| < pi to w e^{-+pi i}
    rotated_ray,       // laplace integral along arg t = arg(w)/2, |arg w| < pi
    large_argument,    // inverse-power series with a terminant-bounded remainder
};

std::string_view route_name(Route r);

struct Value {
    Complex value;
    double error;  // quadrature estimate plus rigorous tail bounds
    Route route;
};

/// The basic terminant Pi_p(w) for Re(p) > 0, |arg w| < pi.
Value value(Complex p, Complex w, Route route = Route::automatic);

// ---- bounds on |Pi_p(w)| depending only on p and arg w ----

/// Gamma(Re p)/|Gamma(p)| times 1 (|arg| <= pi/4) or |csc 2 arg| (< pi/2).
double bound_sector(Complex p, double arg_w);

enum class SecondTerm { exponential, gamma_ratio };

/// Half-secant bounds valid for |arg w| < pi/2; SecondTerm::gamma_ratio
/// swaps the second exponential for Gamma(Re p)/(2|Gamma(p)|).
double bound_secant(Complex p, double arg_w, SecondTerm second);

struct PhiBound {
    double value;
    double phi;
    double bracket_lo;
    double bracket_hi;
};

/// Real-order bound |csc(2(arg - phi))| / cos^p(phi), pi/4 < |arg w| < pi,
/// with phi the root of (p+2)cos(2arg - 3phi) = (p-2)cos(2arg - phi) in the
/// sector-dependent bracket. Throws NumericError if the bracket fails.
PhiBound bound_phi(double p, double arg_w);

enum class BoundaryFactor { hypergeometric, chi };

/// Bounds for pi/4 < |arg w| <= pi/2 through the rotated representation.
double bound_boundary(Complex p, double arg_w, SecondTerm second, BoundaryFactor factor);

enum class UpperForm { sqrt_form, chi_form };

/// pi/2 < |arg w| < pi: exponential-term bound plus a caller-supplied bound
/// for |Pi_p(w e^{-+pi i})|.
double bound_upper(Complex p, double arg_w, double inner_bound, UpperForm form = UpperForm::chi_form);

/// sqrt(e (p + 3/2) / 4) for real p > 0 and pi/4 < |arg w| <= pi/2. Not used
/// by sup_bound.
double bound_real_boundary_sharp(double p, double arg_w);

/// Upper bound for 2F1(1/2, b; b + 1; x), 0 <= x <= 1: partial sum plus a
/// geometric tail, capped by the value at x = 1.
double hyp2f1_upper(double b, double x);

/// sup over r >= 1 of |Pi_p(r w)|: the least applicable bound above.
double sup_bound(Complex p, double arg_w);

}  // namespace certzeta::terminant
