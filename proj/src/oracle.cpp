#include <algorithm>
#include <cmath>
#include <limits>

#include "certzeta/errors.hpp"
#include "certzeta/oracle.hpp"

namespace certzeta::oracle {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_args(Complex s, Complex a) {
    if (!(s.real() > 1.0 + 1e-3)) throw DomainError("direct summation needs Re(s) > 1 + 1e-3");
    if (a == Complex(0.0, 0.0) || is_nonpositive_integer(a)) throw DomainError("a is a pole of the series");
    if (!(std::abs(principal_arg(a)) < kPi)) throw DomainError("direct summation needs |arg a| < pi");
}

// Neumaier summation of (n + a)^{-s}, n from count-1 down to 0.
struct Partial {
    Complex sum;
    double abs_sum;
};
Partial partial(Complex s, Complex a, std::int64_t count) {
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0, abs_sum = 0.0;
    auto add = [](double& acc, double& comp, double x) {
        const double t = acc + x;
        comp += std::abs(acc) >= std::abs(x) ? (acc - t) + x : (x - t) + acc;
        acc = t;
    };
    for (std::int64_t n = count - 1; n >= 0; --n) {
        const Complex term = std::exp(-s * principal_log(a + static_cast<double>(n)));
        add(re, cre, term.real());
        add(im, cim, term.imag());
        abs_sum += std::abs(term);
    }
    return {Complex(re + cre, im + cim), abs_sum};
}

// sum_{n>=K} h(n - 1/2) for h(x) = ((x + |a|) cos(arg a / 2))^{-q}, q > 1.
double decreasing_sum(double q, double abs_a, double half_cos, double K) {
    const double x0 = K - 0.5 + abs_a;
    return std::pow(x0 * half_cos, -q) + std::pow(half_cos, -q) * std::pow(x0, 1.0 - q) / (q - 1.0);
}

double midpoint_error(Complex s, Complex a, std::int64_t K) {
    const double theta = principal_arg(a);
    const double half_cos = std::cos(0.5 * theta);
    const double angle = std::max(1.0, std::exp(s.imag() * theta));
    return std::abs(s * (s + 1.0)) / 24.0 * angle *
           decreasing_sum(s.real() + 2.0, std::abs(a), half_cos, static_cast<double>(K));
}

}  // namespace

Result zeta_partial_sum(Complex s, Complex a, std::int64_t terms) {
    check_args(s, a);
    if (terms < 1) throw DomainError("terms must be positive");
    const Partial p = partial(s, a, terms);
    const double theta = principal_arg(a);
    const double half_cos = std::cos(0.5 * theta);
    const double angle = std::max(1.0, std::exp(s.imag() * theta));
    // sum_{n>=K} |(n+a)^{-s}| <= angle * (|a+K|^{1-Re s}/(Re s - 1) + |a+K|^{-Re s}), with |n+a| >= (n+|a|) cos(theta/2)
    const double x0 = (static_cast<double>(terms) + std::abs(a)) * half_cos;
    const double sr = s.real();
    const double tail = angle * (std::pow(x0, 1.0 - sr) / ((sr - 1.0) * half_cos) + std::pow(x0, -sr));
    return {p.sum, tail + 4.0 * kEps * p.abs_sum, terms};
}

Result zeta_direct(Complex s, Complex a, std::int64_t terms) {
    check_args(s, a);
    const std::int64_t cap = max_terms();
    if (terms <= 0) {
        // smallest power of two with the midpoint error below 1e-16 |a^{-s}|; the
        // reported bound adds the summation roundoff on top
        const double scale = std::max(std::abs(std::exp(-s * principal_log(a))), 1e-300);
        terms = 16;
        while (terms < cap && midpoint_error(s, a, terms) > 1e-16 * scale) terms *= 2;
        terms = std::min(terms, cap);
    }
    if (terms > cap) throw DomainError("term count exceeds CERTZETA_MAX_TERMS");
    const Partial p = partial(s, a, terms);
    const Complex x = a + (static_cast<double>(terms) - 0.5);
    const Complex tail = std::exp((1.0 - s) * principal_log(x)) / (s - 1.0);
    const double err = midpoint_error(s, a, terms) + 4.0 * kEps * (p.abs_sum + std::abs(tail));
    return {p.sum + tail, err, terms};
}

Complex finite_difference_s(const std::function<Complex(Complex)>& f, Complex s0, double h) {
    if (!(h > 0.0)) throw DomainError("step must be positive");
    auto central = [&](double step) { return (f(s0 + step) - f(s0 - step)) / (2.0 * step); };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

Result euler_gamma() {
    const std::int64_t n = 1000000;
    double sum = 0.0, comp = 0.0;
    for (std::int64_t k = n; k >= 1; --k) {
        const double x = 1.0 / static_cast<double>(k);
        const double t = sum + x;
        comp += (sum - t) + x;
        sum = t;
    }
    const double nd = static_cast<double>(n);
    // H_n - log n - 1/(2n) + 1/(12 n^2) - gamma lies in (0, 1/(120 n^4))
    const double value = (sum + comp) - std::log(nd) - 0.5 / nd + 1.0 / (12.0 * nd * nd);
    return {value, 1.0 / (120.0 * nd * nd * nd * nd) + 8.0 * kEps * 15.0, n};
}

}  // namespace certzeta::oracle
