#pragma once

#include <cstdint>
#include <optional>

#include "certzeta/numeric_core.hpp"

namespace certzeta::remainder {

/// s, a and the truncation index N of the large-a expansion.
struct Context {
    Complex s;
    Complex a;
    int N;
};

/// Throws DomainError unless |s - 1| >= 1e-8, Re(s) > 1 - 2N, a != 0,
/// |arg a| < pi and 1 <= N <= 64.
void validate(const Context& ctx);

struct Estimate {
    Complex value;
    double error;  // quadrature estimate plus rigorous truncation bounds
};

/// B_{2N} (s)_{2N-1} / ((2N)! a^{2N}).
Complex first_omitted_term(const Context& ctx);

/// Sum over k of terminants Pi_{s+2N-1}(2 pi a k) / k^{2N}. k_max = 0 picks
/// the cut automatically. Past the cut the sum is either bounded crudely or,
/// when the inverse-power expansion of the terminant is effective there,
/// evaluated through it with integer-order Hurwitz tails.
Estimate via_terminants(const Context& ctx, std::int64_t k_max = 0);

/// Integral over t of t^{s+2N-2} Li_{1-s}(e^{-t}) / (1 + (t/2 pi a)^2),
/// |arg a| < pi/2. Validation path only.
Estimate via_polylog_integral(const Context& ctx);

/// Integral of (B_{2N} - B_{2N}(frac t)) / (t + a)^{s+2N}, |arg a| < pi.
Estimate via_bernoulli_integral(const Context& ctx);

/// int_0^inf (B_{2N} - B_{2N}(frac t)) / (t + b)^{sigma} dt for Re(sigma) > 1,
/// |arg b| < pi.
Estimate bernoulli_weight_integral(int N, Complex sigma, Complex b);

/// zeta(n, b) for integer n >= 2 and real b >= 1.
Estimate integer_order_zeta(int n, double b);

// ---- bounds on |R_N(s, a)| ----

/// Prefactor times the sup of |Pi_{s+2N-1}| along the ray of a.
double bound_terminant_sup(const Context& ctx);
/// Prefactor times the half-angle secant factor; valid on |arg a| < pi.
double bound_secant(const Context& ctx);
/// chi-based form, |arg a| <= pi/2.
std::optional<double> bound_chi(const Context& ctx);

struct RealOrderBound {
    double value;
    int sector_case;  // 1: |arg| <= pi/4, 2: <= pi/2, 3: < pi
};
/// Piecewise bound for real s.
std::optional<RealOrderBound> bound_real_order(const Context& ctx);
/// Gamma-ratio form, |arg a| < pi/2.
std::optional<double> bound_gamma_ratio(const Context& ctx);
/// Near-Stokes-line form, pi/4 < |arg a| <= pi/2.
std::optional<double> bound_near_boundary(const Context& ctx);

struct BoundReport {
    double terminant_sup;
    double secant;
    std::optional<double> chi_form;
    std::optional<RealOrderBound> real_order;
    std::optional<double> gamma_ratio;
    std::optional<double> near_boundary;
    std::optional<Estimate> true_remainder;
    Complex first_omitted_term;

    /// Least of the bounds present.
    double best() const;
};

/// All applicable bounds; with_truth adds true_remainder(ctx).
BoundReport report(const Context& ctx, bool with_truth);

/// The remainder from the terminant sum with automatic cut.
Estimate true_remainder(const Context& ctx);

struct Envelope {
    double value;  // R_N
    double theta;  // R_N / first omitted term
};
/// Real s, a > 0: R_N and its ratio to the first omitted term.
Envelope first_term_envelope(const Context& ctx);

/// R_N(s, a) = R_N(s, a e^{pi i d}) + e^{pi i d s / 2} (2 pi)^s / Gamma(s)
///             * a^{s-1} Li_{1-s}(e^{-2 pi i d a}),  d = direction = +-1.
Estimate continue_across_pi(const Context& ctx, int direction);

}  // namespace certzeta::remainder
