#include <algorithm>
#include <cmath>
#include <limits>

#include "certzeta/bernoulli.hpp"
#include "certzeta/errors.hpp"
#include "certzeta/remainder.hpp"
#include "certzeta/terminant.hpp"

namespace certzeta::remainder {
namespace {

constexpr double kQuarterPi = 0.25 * kPi;
constexpr double kHalfPi = 0.5 * kPi;


// |B_{2N}| / (2N)! * |(s)_{2N-1}| / |a|^{2N}, formed in logs.
// |B_{2N}| / (2N)! by an explicit product, so that it carries only a few ulp.
double bernoulli_coefficient(int n2) {
    double c = std::abs(bernoulli::number(n2));
    for (int k = 2; k <= n2; ++k) c /= k;
    return c;
}

double prefactor(const Context& ctx) {
    const Complex poch = pochhammer(ctx.s, 2 * ctx.N - 1);
    if (poch == Complex(0.0, 0.0)) return 0.0;
    const int n2 = 2 * ctx.N;
    const double direct = bernoulli_coefficient(n2) * std::abs(poch) * std::pow(std::abs(ctx.a), -n2);
    if (std::isfinite(direct) && direct > 0.0) return direct;
    const double log_p = std::log(bernoulli_coefficient(n2)) + std::log(std::abs(poch)) -
                         n2 * std::log(std::abs(ctx.a));
    return std::exp(log_p);
}

double exp_factor(const Context& ctx) {
    return std::max(1.0, std::exp(-ctx.s.imag() * principal_arg(ctx.a)));
}

}  // namespace

void validate(const Context& ctx) {
    if (ctx.N < 1 || ctx.N > bernoulli::kMaxHalfIndex)
        throw DomainError("N must lie in 1..64");
    if (!std::isfinite(ctx.s.real()) || !std::isfinite(ctx.s.imag()) || !std::isfinite(ctx.a.real()) ||
        !std::isfinite(ctx.a.imag()))
        throw DomainError("s and a must be finite");
    if (std::abs(ctx.s - 1.0) < 1e-8) throw DomainError("s is too close to the pole at s = 1");
    if (!(ctx.s.real() > 1.0 - 2.0 * ctx.N)) throw DomainError("requires Re(s) > 1 - 2N");
    if (ctx.a == Complex(0.0, 0.0)) throw DomainError("requires a != 0");
    if (!(std::abs(principal_arg(ctx.a)) < kPi)) throw DomainError("requires |arg a| < pi");
}

Complex first_omitted_term(const Context& ctx) {
    validate(ctx);
    const int n2 = 2 * ctx.N;
    const Complex poch = pochhammer(ctx.s, n2 - 1);
    if (poch == Complex(0.0, 0.0)) return 0.0;
    const double c = (bernoulli::number(n2) > 0.0 ? 1.0 : -1.0) * bernoulli_coefficient(n2);
    const Complex apow = std::polar(std::pow(std::abs(ctx.a), -n2), -n2 * principal_arg(ctx.a));
    return c * poch * apow;
}

double bound_terminant_sup(const Context& ctx) {
    validate(ctx);
    const double pre = prefactor(ctx);
    if (pre == 0.0) return 0.0;
    const Complex p = ctx.s + (2.0 * ctx.N - 1.0);
    return pre * terminant::sup_bound(p, principal_arg(ctx.a));
}

double bound_secant(const Context& ctx) {
    validate(ctx);
    const double pre = prefactor(ctx);
    if (pre == 0.0) return 0.0;
    const Complex p = ctx.s + (2.0 * ctx.N - 1.0);
    const double theta = principal_arg(ctx.a);
    const double sec_pow = std::pow(1.0 / std::cos(0.5 * theta), ctx.s.real() + 2.0 * ctx.N);
    return pre * std::abs(p) / p.real() * sec_pow * exp_factor(ctx);
}

std::optional<double> bound_chi(const Context& ctx) {
    validate(ctx);
    if (std::abs(principal_arg(ctx.a)) > kHalfPi) return std::nullopt;
    const double pre = prefactor(ctx);
    if (pre == 0.0) return 0.0;
    const Complex p = ctx.s + (2.0 * ctx.N - 1.0);
    return pre * (1.0 + std::abs(p) / p.real() * chi(p.real()) * exp_factor(ctx));
}

std::optional<RealOrderBound> bound_real_order(const Context& ctx) {
    validate(ctx);
    if (ctx.s.imag() != 0.0) return std::nullopt;
    const double pre = prefactor(ctx);
    const double p = ctx.s.real() + 2.0 * ctx.N - 1.0;
    const double theta = std::abs(principal_arg(ctx.a));
    if (theta <= kQuarterPi) return RealOrderBound{pre, 1};
    const double boundary = 1.0 + 0.5 * chi(p);
    if (theta <= kHalfPi) {
        const double csc = 1.0 / std::abs(std::sin(2.0 * theta));
        return RealOrderBound{pre * std::min(csc, boundary), 2};
    }
    const double lead = std::sqrt(2.0 * kPi * p) / (2.0 * std::pow(std::abs(std::sin(theta)), p));
    return RealOrderBound{pre * (lead + boundary), 3};
}

std::optional<double> bound_gamma_ratio(const Context& ctx) {
    validate(ctx);
    const double theta = std::abs(principal_arg(ctx.a));
    if (!(theta < kHalfPi)) return std::nullopt;
    const double pre = prefactor(ctx);
    if (pre == 0.0) return 0.0;
    const Complex p = ctx.s + (2.0 * ctx.N - 1.0);
    const double sector = theta <= kQuarterPi ? 1.0 : 1.0 / std::abs(std::sin(2.0 * theta));
    return pre * gamma_ratio_bound(p) * sector;
}

std::optional<double> bound_near_boundary(const Context& ctx) {
    validate(ctx);
    const double theta = std::abs(principal_arg(ctx.a));
    if (!(theta > kQuarterPi && theta <= kHalfPi)) return std::nullopt;
    const double pre = prefactor(ctx);
    if (pre == 0.0) return 0.0;
    const Complex p = ctx.s + (2.0 * ctx.N - 1.0);
    const double middle = std::abs(p) / (2.0 * p.real()) * chi(p.real()) * exp_factor(ctx);
    return pre * (0.5 + middle + 0.5 * gamma_ratio_bound(p));
}

double BoundReport::best() const {
    double b = std::min(terminant_sup, secant);
    if (chi_form) b = std::min(b, *chi_form);
    if (real_order) b = std::min(b, real_order->value);
    if (gamma_ratio) b = std::min(b, *gamma_ratio);
    if (near_boundary) b = std::min(b, *near_boundary);
    return b;
}

BoundReport report(const Context& ctx, bool with_truth) {
    BoundReport r{};
    r.terminant_sup = bound_terminant_sup(ctx);
    r.secant = bound_secant(ctx);
    r.chi_form = bound_chi(ctx);
    r.real_order = bound_real_order(ctx);
    r.gamma_ratio = bound_gamma_ratio(ctx);
    r.near_boundary = bound_near_boundary(ctx);
    r.first_omitted_term = first_omitted_term(ctx);
    if (with_truth) r.true_remainder = true_remainder(ctx);
    return r;
}

}  // namespace certzeta::remainder
