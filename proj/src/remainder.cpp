#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "certzeta/bernoulli.hpp"
#include "certzeta/errors.hpp"
#include "certzeta/polylog.hpp"
#include "certzeta/quadrature.hpp"
#include "certzeta/remainder.hpp"
#include "certzeta/terminant.hpp"

namespace certzeta::remainder {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(int n) { return std::exp(std::lgamma(n + 1.0)); }

double sec_factor(Complex s, int n, double theta) {
    const Complex p = s + (2.0 * n - 1.0);
    return std::abs(p) / p.real() * std::pow(1.0 / std::cos(0.5 * theta), s.real() + 2.0 * n) *
           std::max(1.0, std::exp(-s.imag() * theta));
}

// I_sigma(c) for large |c| from the expansion of R_N(s, c), s = sigma - 2N,
// with the terms divided through by (s)_{2N}.
Estimate weight_integral_expansion(int N, Complex sigma, Complex c) {
    const Complex s = sigma - 2.0 * N;
    const double theta = principal_arg(c);
    const Complex c2inv = 1.0 / (c * c);
    Complex cpow = std::exp(-2.0 * N * principal_log(c));  // c^{-2n}
    Complex sum = bernoulli::number(2 * N) / factorial(2 * N) / (sigma - 1.0) * cpow;
    Complex poch = 1.0;  // (sigma)_{2n-1-2N}
    Complex best_sum = sum;
    double best_err = kInf;
    for (int n = N + 1; n <= bernoulli::kMaxHalfIndex; ++n) {
        poch = n == N + 1 ? sigma : poch * (sigma + (2.0 * n - 3 - 2 * N)) * (sigma + (2.0 * n - 2 - 2 * N));
        cpow *= c2inv;
        const Complex term = bernoulli::number(2 * n) / factorial(2 * n) * poch * cpow;
        // bound on the remainder left after the terms below n
        const double bound = std::abs(term) * sec_factor(s, n, theta);
        if (!std::isfinite(bound)) break;
        if (bound < best_err) {
            best_err = bound;
            best_sum = sum;
        }
        if (bound <= 1e-18 * std::abs(sum) || bound > 1e3 * best_err) break;
        sum += term;
    }
    sum = best_sum;
    const double err = best_err;
    const Complex outer = factorial(2 * N) * std::exp((1.0 - s) * principal_log(c));
    return {outer * sum, std::abs(outer) * err};
}

void require_finite(const Estimate& e, const char* what) {
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()) || !std::isfinite(e.error)) {
        std::ostringstream msg;
        msg << what << ": non-finite result " << e.value << " (error " << e.error << ")";
        throw NumericError(msg.str());
    }
}

}  // namespace

Estimate bernoulli_weight_integral(int N, Complex sigma, Complex b) {
    if (N < 1 || N > bernoulli::kMaxHalfIndex) throw DomainError("N must lie in 1..64");
    if (!(sigma.real() > 1.0)) throw DomainError("weight integral needs Re(sigma) > 1");
    if (b == Complex(0.0, 0.0) || !(std::abs(principal_arg(b)) < kPi))
        throw DomainError("weight integral needs |arg b| < pi");

    const int n2 = 2 * N;
    const long panels = std::max(64L, static_cast<long>(std::ceil(20.0 * std::abs(b))));
    quad::Options opt;
    opt.rel_tol = 1e-14;
    opt.max_intervals = 200;

    Complex sum = 0.0;
    double err = 0.0;
    for (long m = 0; m < panels; ++m) {
        const double md = static_cast<double>(m);
        const Complex shift = b + md;
        auto f = [&](double x) -> Complex {
            return bernoulli::poly_gap(n2, x) * std::exp(-sigma * principal_log(shift + x));
        };
        const quad::Result r = quad::integrate(f, 0.0, 1.0, opt);
        if (!r.converged) {
            std::ostringstream msg;
            msg << "weight integral panel " << m << " did not converge (error " << r.error << ")";
            throw NumericError(msg.str());
        }
        sum += r.value;
        err += r.error;
    }
    const Estimate tail = weight_integral_expansion(N, sigma, b + static_cast<double>(panels));
    Estimate out{sum + tail.value, err + tail.error + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(sum)};
    require_finite(out, "weight integral");
    return out;
}

Estimate via_bernoulli_integral(const Context& ctx) {
    validate(ctx);
    const int n2 = 2 * ctx.N;
    const Complex poch = pochhammer(ctx.s, n2);
    if (poch == Complex(0.0, 0.0)) return {0.0, 0.0};
    const Complex scale = poch / factorial(n2) * std::exp((ctx.s - 1.0) * principal_log(ctx.a));
    const Estimate w = bernoulli_weight_integral(ctx.N, ctx.s + static_cast<double>(n2), ctx.a);
    return {scale * w.value, std::abs(scale) * w.error};
}

namespace {

// sum_{k > K} Pi_p(w k) / k^{2N} through the inverse-power expansion of the
// terminant; infinite error when the expansion is not effective.
Estimate asymptotic_terminant_tail(Complex p, Complex w, int N, std::int64_t K) {
    const double theta = principal_arg(w);
    const double b = static_cast<double>(K + 1);
    if (std::abs(w) * b < 2.0 * std::abs(p) + 20.0) return {0.0, kInf};
    const Complex w2inv = 1.0 / (w * w);
    Complex coef = 1.0;  // (-1)^m (p)_{2m} / w^{2m}
    Complex sum = 0.0;
    double err = 0.0;
    for (int m = 0; m < 60; ++m) {
        const Estimate z = integer_order_zeta(2 * N + 2 * m, b);
        sum += coef * z.value;
        err += std::abs(coef) * z.error;
        coef *= -(p + 2.0 * m) * (p + 2.0 * m + 1.0) * w2inv;
        const double next = std::abs(coef) * integer_order_zeta(2 * N + 2 * m + 2, b).value.real();
        if (next <= 1e-18 * std::abs(sum)) {
            const double trunc = next * terminant::sup_bound(p + 2.0 * (m + 1), theta);
            if (std::isfinite(trunc)) return {sum, err + trunc};
        }
    }
    return {0.0, kInf};
}

}  // namespace

// zeta(n, b) for integer n >= 2 and real b >= 1: direct terms up to b >= 16,
// then the truncated expansion whose remainder for real order and argument
// lies between 0 and the first omitted term.
Estimate integer_order_zeta(int n, double b) {
    if (n < 2 || !(b >= 1.0)) throw DomainError("integer-order zeta needs n >= 2 and b >= 1");
    double head = 0.0;
    while (b < 16.0) {
        head += std::pow(b, -n);
        b += 1.0;
    }
    const double nd = n;
    double sum = std::pow(b, 1.0 - nd) / (nd - 1.0) + 0.5 * std::pow(b, -nd);
    double poch = nd;                    // (n)_{2j-1}
    double bpow = std::pow(b, -nd - 1.0);  // b^{-n-2j+1}
    double err = kInf;
    for (int j = 1; j <= bernoulli::kMaxHalfIndex; ++j) {
        const double term = bernoulli::number(2 * j) / factorial(2 * j) * poch * bpow;
        err = std::abs(term);
        if (err <= 1e-18 * sum) break;
        sum += term;
        poch *= (nd + 2.0 * j - 1.0) * (nd + 2.0 * j);
        bpow /= b * b;
    }
    return {head + sum, err + 2.0 * std::numeric_limits<double>::epsilon() * (head + sum)};
}

Estimate via_terminants(const Context& ctx, std::int64_t k_max) {
    validate(ctx);
    const int n2 = 2 * ctx.N;
    const Complex poch = pochhammer(ctx.s, n2 - 1);
    if (poch == Complex(0.0, 0.0)) return {0.0, 0.0};
    const Complex p = ctx.s + static_cast<double>(n2 - 1);
    const Complex w = kTwoPi * ctx.a;
    const double theta = principal_arg(ctx.a);
    const double sign = ctx.N % 2 == 1 ? 1.0 : -1.0;  // (-1)^{N+1}
    const Complex outer = sign * 2.0 * poch * std::exp(-static_cast<double>(n2) * principal_log(w));

    const double sup = terminant::sup_bound(p, theta);
    auto crude_tail = [&](std::int64_t K) {
        return sup * std::pow(static_cast<double>(K), 1.0 - n2) / (n2 - 1.0);
    };

    const std::int64_t cap = k_max > 0 ? k_max : 100000;
    Complex sum = 0.0;
    double err = 0.0;
    Estimate tail{0.0, kInf};
    std::int64_t k = 1;
    for (; k <= cap; ++k) {
        const double kd = static_cast<double>(k);
        const terminant::Value v = terminant::value(p, w * kd);
        const double weight = std::pow(kd, -n2);
        sum += v.value * weight;
        err += v.error * weight;
        if (k_max > 0 && k < k_max) continue;
        if (k_max == 0 && crude_tail(k) >= 1e-16 * std::abs(sum)) {
            // a cheap exit once the inverse-power tail is both available and tight
            if (std::abs(w) * (kd + 1.0) < 2.0 * std::abs(p) + 20.0) continue;
            tail = asymptotic_terminant_tail(p, w, ctx.N, k);
            if (tail.error <= 1e-16 * std::abs(sum)) break;
            continue;
        }
        tail = asymptotic_terminant_tail(p, w, ctx.N, k);
        const double crude = crude_tail(k);
        if (!(tail.error < crude)) tail = {0.0, crude};
        break;
    }
    if (k > cap) {
        tail = asymptotic_terminant_tail(p, w, ctx.N, cap);
        const double crude = crude_tail(cap);
        if (!(tail.error < crude)) tail = {0.0, crude};
    }
    Estimate out{outer * (sum + tail.value), std::abs(outer) * (err + tail.error)};
    require_finite(out, "terminant sum");
    return out;
}

Estimate true_remainder(const Context& ctx) { return via_terminants(ctx, 0); }

Envelope first_term_envelope(const Context& ctx) {
    validate(ctx);
    if (ctx.s.imag() != 0.0 || ctx.a.imag() != 0.0 || !(ctx.a.real() > 0.0))
        throw DomainError("first-term envelope needs real s and a > 0");
    const Complex term = first_omitted_term(ctx);
    if (term == Complex(0.0, 0.0)) throw DomainError("first omitted term vanishes; ratio undefined");
    const Estimate r = via_bernoulli_integral(ctx);
    return {r.value.real(), r.value.real() / term.real()};
}

Estimate continue_across_pi(const Context& ctx, int direction) {
    validate(ctx);
    if (direction != 1 && direction != -1) throw DomainError("direction must be +1 or -1");
    const double theta = principal_arg(ctx.a);
    // a e^{pi i d} must stay on the principal sheet
    if (direction == -1 && !(theta > 0.0)) throw DomainError("direction -1 needs Im(a) > 0");
    if (direction == 1 && !(theta < 0.0)) throw DomainError("direction +1 needs Im(a) < 0");
    const double d = direction;
    const Complex rotated = -ctx.a;
    const Estimate inner = via_terminants({ctx.s, rotated, ctx.N});
    const Complex rg = reciprocal_gamma(ctx.s);
    if (rg == Complex(0.0, 0.0)) return inner;
    const Complex i(0.0, 1.0);
    const PolylogResult li = polylog_exp(1.0 - ctx.s, -d * kTwoPi * i * ctx.a);
    const Complex factor = std::exp(d * 0.5 * kPi * i * ctx.s + ctx.s * std::log(kTwoPi) +
                                    (ctx.s - 1.0) * principal_log(ctx.a)) *
                           rg;
    Estimate out{inner.value + factor * li.value, inner.error + std::abs(factor) * li.tail_bound};
    require_finite(out, "continuation");
    return out;
}

}  // namespace certzeta::remainder
