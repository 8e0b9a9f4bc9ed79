#include "certzeta/numeric_core.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "certzeta/bernoulli.hpp"
#include "certzeta/errors.hpp"

namespace certzeta {

namespace {

Complex normalize_zero_imag(Complex z) {
    if (z.imag() == 0.0) return {z.real(), 0.0};
    return z;
}

}  // namespace

double principal_arg(Complex z) {
    if (z == Complex(0.0, 0.0)) throw DomainError("argument of zero is undefined");
    z = normalize_zero_imag(z);
    return std::atan2(z.imag(), z.real());
}

Complex principal_log(Complex z) {
    if (z == Complex(0.0, 0.0)) throw DomainError("logarithm of zero");
    return std::log(normalize_zero_imag(z));
}

Complex principal_pow(Complex z, Complex w) {
    if (z == Complex(0.0, 0.0)) {
        if (w == Complex(0.0, 0.0)) return 1.0;
        if (w.real() > 0.0) return 0.0;
        throw DomainError("0^w with Re(w) <= 0");
    }
    if (w.imag() == 0.0 && z.imag() == 0.0 && z.real() > 0.0)
        return std::pow(z.real(), w.real());
    return std::exp(w * principal_log(z));
}

Complex pochhammer(Complex s, unsigned n) {
    Complex acc = 1.0;
    for (unsigned k = 0; k < n; ++k) acc *= s + static_cast<double>(k);
    return acc;
}

double chi(double p) {
    if (!(p > 0.0)) throw DomainError("chi(p) requires p > 0");
    return std::sqrt(kPi) * std::exp(std::lgamma(0.5 * p + 1.0) - std::lgamma(0.5 * p + 0.5));
}

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

LogGammaResult log_gamma_certified(Complex z) {
    if (is_nonpositive_integer(z))
        throw DomainError("log Gamma has a pole at the nonpositive integer z = " +
                          std::to_string(z.real()));
    constexpr int kTerms = 8;  // Stirling series through B_14, remainder R_8
    constexpr double kThreshold = 10.0;

    std::int64_t shift = 0;
    if (z.real() < kThreshold) shift = static_cast<std::int64_t>(std::ceil(kThreshold - z.real()));
    if (shift > max_terms()) throw NumericError("log_gamma: recurrence shift exceeds term budget");

    const double half_log_two_pi = 0.91893853320467274178032973640562;
    for (;;) {
        const Complex w = z + static_cast<double>(shift);
        const Complex logw = principal_log(w);
        Complex value = (w - 0.5) * logw - w + half_log_two_pi;
        const Complex winv2 = 1.0 / (w * w);
        Complex wpow = 1.0 / w;
        for (int n = 1; n < kTerms; ++n) {
            value += bernoulli::number(2 * n) / (2.0 * n * (2.0 * n - 1.0)) * wpow;
            wpow *= winv2;
        }
        // |R_N| <= |B_2N| / (2N (2N-1) |w|^{2N-1}) sec^{2N}(arg w / 2).
        const double sec_half = 1.0 / std::cos(0.5 * principal_arg(w));
        const double radius = std::abs(bernoulli::number(2 * kTerms)) /
                              (2.0 * kTerms * (2.0 * kTerms - 1.0)) * std::abs(wpow) *
                              std::pow(sec_half, 2 * kTerms);
        if (radius > 1e-15 * std::abs(value) && radius > 1e-300) {
            shift += 8;
            continue;
        }
        Complex correction = 0.0;
        for (std::int64_t k = shift - 1; k >= 0; --k)
            correction += principal_log(z + static_cast<double>(k));
        return {value - correction, radius};
    }
}

Complex reciprocal_gamma(Complex z) {
    if (is_nonpositive_integer(z)) return 0.0;
    return std::exp(-log_gamma(z));
}

double gamma_ratio_bound(Complex p) {
    if (!(p.real() > 0.0)) throw DomainError("gamma ratio bound requires Re(p) > 0");
    if (p.imag() == 0.0) return 1.0;
    return std::exp(std::lgamma(p.real()) - log_gamma(p).real());
}

std::int64_t max_terms() {
    if (const char* env = std::getenv("CERTZETA_MAX_TERMS")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v >= 1.0) return static_cast<std::int64_t>(v);
    }
    return 10'000'000;
}

}  // namespace certzeta
