#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "certzeta/errors.hpp"
#include "certzeta/polylog.hpp"
#include "certzeta/quadrature.hpp"
#include "certzeta/remainder.hpp"
#include "certzeta/zeta_eval.hpp"

namespace certzeta::remainder {
namespace {

constexpr double kSplit = 1.0;  // [0, kSplit] by the expansion of Li at t = 0

// int_0^T t^{sigma-1} e^{-t} dt upper tail bound, T > sigma - 1.
double incomplete_gamma_tail(double sigma, double T) {
    double lg = (sigma - 1.0) * std::log(T) - T;
    if (sigma > 1.0) {
        if (!(T > sigma - 1.0)) return std::numeric_limits<double>::infinity();
        lg -= std::log1p(-(sigma - 1.0) / T);
    }
    return std::exp(lg);
}

// int_0^{kSplit} t^{s+2N-2} Li_{1-s}(e^{-t}) / (1 + (t/c)^2) dt times 2/Gamma(s),
// using Li_{1-s}(e^{-t}) = Gamma(s) t^{-s} + sum_k zeta(1-s-k) (-t)^k / k!
// and the geometric expansion of 1/(1 + (t/c)^2).
Estimate near_zero(Complex s, int N, Complex c) {
    const Complex rg = reciprocal_gamma(s);
    const Complex c2inv = 1.0 / (c * c);
    const double ratio = kSplit * kSplit / std::norm(c);
    int J = 1;
    while (std::pow(ratio, J) > 1e-19 && J < 200) ++J;

    auto geometric = [&](Complex alpha) {
        // sum_j (-1)^j c^{-2j} kSplit^{alpha+2j+1} / (alpha+2j+1)
        Complex total = 0.0, cj = 1.0;
        for (int j = 0; j < J; ++j) {
            const Complex e = alpha + (2.0 * j + 1.0);
            total += cj * std::exp(e * std::log(kSplit)) / e;
            cj *= -c2inv;
        }
        return total;
    };

    Complex value = 2.0 * geometric(2.0 * N - 2.0);
    double err = 2.0 * std::pow(ratio, J);
    Complex series = 0.0;
    double last = std::numeric_limits<double>::infinity();
    int small = 0;
    double kfact_log = 0.0;
    for (int k = 0; k < 400; ++k) {
        if (k > 0) kfact_log += std::log(static_cast<double>(k));
        const CertifiedValue z = riemann_zeta(1.0 - s - static_cast<double>(k));
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        const Complex term = sign * z.value * std::exp(-kfact_log) *
                             geometric(s + (2.0 * N - 2.0) + static_cast<double>(k));
        series += term;
        err += std::abs(rg) * 2.0 * z.radius * std::exp(-kfact_log);
        last = std::abs(term);
        small = last <= 1e-19 * std::abs(series) ? small + 1 : 0;
        if (small >= 3) break;
    }
    // terms decay like (kSplit / 2 pi)^k; bound the rest geometrically
    err += 2.0 * std::abs(rg) * last * (kSplit / kTwoPi) / (1.0 - kSplit / kTwoPi);
    value += 2.0 * rg * series;
    return {value, err};
}

}  // namespace

Estimate via_polylog_integral(const Context& ctx) {
    validate(ctx);
    const double theta = principal_arg(ctx.a);
    if (!(std::abs(theta) < 0.5 * kPi)) throw DomainError("polylog integral needs |arg a| < pi/2");
    if (is_nonpositive_integer(ctx.s))
        throw DomainError("polylog integral is singular at nonpositive integer s (Gamma pole); use the terminant sum");
    const Complex c = kTwoPi * ctx.a;
    if (!(std::abs(c) > 2.0 * kSplit)) throw DomainError("polylog integral needs |a| > 1/pi");
    const int N = ctx.N;
    const Complex s = ctx.s;

    const Estimate head = near_zero(s, N, c);

    const Complex rg2 = 2.0 * reciprocal_gamma(s);
    const Complex cinv = 1.0 / c;
    auto integrand = [&](double t) -> Complex {
        const PolylogResult li = polylog_exp(1.0 - s, Complex(-t, 0.0));
        const Complex tc = t * cinv;
        return rg2 * std::exp((s + (2.0 * N - 2.0)) * std::log(t)) * li.value / (1.0 + tc * tc);
    };

    // Tail: |Li_{1-s}(e^{-t})| <= e^{-t} sum_n n^{Re s - 1} e^{-(n-1) T} for t >= T.
    const double sr = s.real();
    const double sigma = sr + 2.0 * N - 1.0;
    const double floor = std::abs(theta) <= 0.25 * kPi ? 1.0 : std::abs(std::sin(2.0 * theta));
    auto tail_bound = [&](double T) {
        double S = 0.0;
        for (int n = 1; n < 10000; ++n) {
            const double t = std::pow(n, sr - 1.0) * std::exp(-(n - 1.0) * T);
            S += t;
            if (n > 1 && t < 1e-20 * S) break;
        }
        return std::abs(rg2) * S * incomplete_gamma_tail(sigma, T) / floor;
    };
    const double scale = std::max(std::abs(head.value), 1e-300);
    double T = std::max(40.0, 2.0 * sigma + 40.0);
    while (tail_bound(T) > 1e-18 * scale && T < 1e4) T += 20.0;

    quad::Options opt;
    opt.rel_tol = 1e-13;
    opt.abs_tol = 1e-19 * scale;
    opt.max_intervals = 4000;
    Complex body = 0.0;
    double body_err = 0.0;
    for (double lo = kSplit; lo < T; lo *= 2.0) {
        const double hi = std::min(T, 2.0 * lo);
        const quad::Result r = quad::integrate(integrand, lo, hi, opt);
        if (!r.converged) {
            std::ostringstream msg;
            msg << "polylog integral quadrature on [" << lo << ", " << hi << "] did not converge";
            throw NumericError(msg.str());
        }
        body += r.value;
        body_err += r.error;
    }

    const double sign = N % 2 == 1 ? 1.0 : -1.0;
    const Complex outer = sign * std::exp(-2.0 * N * principal_log(c));
    const Complex total = head.value + body;
    return {outer * total, std::abs(outer) * (head.error + body_err + tail_bound(T))};
}

}  // namespace certzeta::remainder
