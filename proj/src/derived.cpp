#include <algorithm>
#include <cmath>
#include <limits>

#include "certzeta/bernoulli.hpp"
#include "certzeta/derived.hpp"
#include "certzeta/errors.hpp"
#include "certzeta/terminant.hpp"

namespace certzeta::derived {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using remainder::bernoulli_weight_integral;
using remainder::Estimate;

bool uses_shifted_bernoulli(Function f) {
    return f == Function::log_barnes_g_v1 || f == Function::log_barnes_g_v2 || f == Function::dzeta_minus1 ||
           f == Function::dzeta_minus2;
}

void check(Function f, Complex z, int N) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("argument must be finite");
    if (z == Complex(0.0, 0.0)) throw DomainError("argument must be nonzero");
    if (!(std::abs(principal_arg(z)) <= kSectorLimit))
        throw DomainError("argument must satisfy |arg z| <= pi - 1e-6");
    const int cap = uses_shifted_bernoulli(f) ? bernoulli::kMaxHalfIndex - 1 : bernoulli::kMaxHalfIndex;
    if (N < 1 || N > cap) throw DomainError("N out of range");
    if (f == Function::dzeta_minus2 && N < 2) throw DomainError("the s = -2 expansion needs N >= 2");
}

// min of the terminant sup at order p and the half-angle secant power q
double angle_factor(int p, int q, double theta) {
    const double sup = terminant::sup_bound(Complex(p, 0.0), theta);
    const double sec = std::pow(1.0 / std::cos(0.5 * theta), q);
    return std::min(sup, sec);
}

struct Series {
    Complex value;
    double magnitude;  // sum of the absolute values of the pieces, for rounding
    double extra = 0.0;  // radius inherited from certified inputs
};

Series expansion(Function f, Complex z, int N) {
    const Complex lz = principal_log(z);
    const Complex zinv = 1.0 / z;
    const Complex z2inv = zinv * zinv;
    Complex sum = 0.0;
    double mag = 0.0;
    double extra = 0.0;
    auto add = [&](Complex t) {
        sum += t;
        mag += std::abs(t);
    };
    switch (f) {
        case Function::digamma: {
            add(lz);
            add(-0.5 * zinv);
            Complex zp = z2inv;
            for (int n = 1; n < N; ++n, zp *= z2inv) add(-bernoulli::number(2 * n) / (2.0 * n) * zp);
            break;
        }
        case Function::log_gamma: {
            add((z - 0.5) * lz);
            add(-z);
            add(0.5 * std::log(kTwoPi));
            Complex zp = zinv;
            for (int n = 1; n < N; ++n, zp *= z2inv)
                add(bernoulli::number(2 * n) / (2.0 * n * (2.0 * n - 1.0)) * zp);
            break;
        }
        case Function::log_barnes_g_v1: {
            const LogGammaResult lg = log_gamma_certified(z + 1.0);
            add(0.25 * z * z);
            add(z * lg.value);
            add(-(0.5 * z * z + 0.5 * z + 1.0 / 12.0) * lz);
            add(-kLogGlaisher);
            extra = std::abs(z) * lg.radius;
            Complex zp = z2inv;
            for (int n = 1; n < N; ++n, zp *= z2inv)
                add(bernoulli::number(2 * n + 2) / (2.0 * n * (2.0 * n + 1.0) * (2.0 * n + 2.0)) * zp);
            break;
        }
        case Function::log_barnes_g_v2: {
            add(-0.75 * z * z);
            add(0.5 * z * std::log(kTwoPi));
            add((0.5 * z * z - 1.0 / 12.0) * lz);
            add(1.0 / 12.0 - kLogGlaisher);
            Complex zp = z2inv;
            for (int n = 1; n < N; ++n, zp *= z2inv)
                add(bernoulli::number(2 * n + 2) / (2.0 * n * (2.0 * n + 2.0)) * zp);
            break;
        }
        case Function::dzeta_minus1: {
            add(-0.25 * z * z);
            add((0.5 * z * z - 0.5 * z + 1.0 / 12.0) * lz);
            add(1.0 / 12.0);
            Complex zp = z2inv;
            for (int n = 1; n < N; ++n, zp *= z2inv)
                add(-bernoulli::number(2 * n + 2) / (2.0 * n * (2.0 * n + 1.0) * (2.0 * n + 2.0)) * zp);
            break;
        }
        case Function::dzeta_minus2: {
            add(-z * z * z / 9.0 + z / 12.0);
            add((z * z * z / 3.0 - 0.5 * z * z + z / 6.0) * lz);
            Complex zp = zinv;
            for (int n = 1; n < N; ++n, zp *= z2inv) {
                const double d = (2.0 * n - 1.0) * (2.0 * n) * (2.0 * n + 1.0) * (2.0 * n + 2.0);
                add(2.0 * bernoulli::number(2 * n + 2) / d * zp);
            }
            break;
        }
        case Function::polygamma: break;
    }
    return {sum, mag, extra};
}

CertifiedValue fixed_N(Function f, Complex z, int N) {
    check(f, z, N);
    const Series s = expansion(f, z, N);
    CertifiedValue out;
    out.value = s.value;
    out.radius = remainder_bound(f, z, N) + s.extra + 8.0 * kEps * s.magnitude;
    out.method = Method::truncated;
    out.bound_used = f == Function::log_barnes_g_v2 ? "triangle(G1+Gamma)" : "eq12|eq111";
    out.N = N;
    return out;
}

// Shift so that |z + M| >= 10 and Re(z + M) >= 0.
std::int64_t shift_for(Complex z) {
    std::int64_t M = 0;
    while (std::abs(z + static_cast<double>(M)) < 10.0 || z.real() + static_cast<double>(M) < 0.0) {
        ++M;
        if (M > max_terms()) throw DomainError("shift exceeds CERTZETA_MAX_TERMS");
    }
    return M;
}

CertifiedValue best_N(Function f, Complex z, double target) {
    const int lo = f == Function::dzeta_minus2 ? 2 : 1;
    const int cap = uses_shifted_bernoulli(f) ? bernoulli::kMaxHalfIndex - 1 : bernoulli::kMaxHalfIndex;
    const int hi = std::min(cap, std::max(lo, static_cast<int>(std::ceil(kPi * std::abs(z))) + 2));
    CertifiedValue best;
    best.radius = std::numeric_limits<double>::infinity();
    for (int N = lo; N <= hi; ++N) {
        const double b = remainder_bound(f, z, N);
        if (b < best.radius) best = fixed_N(f, z, N);
        if (b <= target) break;
    }
    return best;
}

// Value of the recurrence correction: f(z) = f(z + M) + correction.
Series shift_correction(Function f, Complex z, std::int64_t M, double& radius) {
    Complex sum = 0.0;
    double mag = 0.0;
    radius = 0.0;
    for (std::int64_t n = M - 1; n >= 0; --n) {
        const Complex x = z + static_cast<double>(n);
        Complex t = 0.0;
        switch (f) {
            case Function::digamma: t = -1.0 / x; break;
            case Function::log_gamma: t = -principal_log(x); break;
            case Function::log_barnes_g_v1:
            case Function::log_barnes_g_v2: {
                // log G(z+1) = log G(z+M+1) - sum_{k=1}^{M} log Gamma(z+k)
                const LogGammaResult g = log_gamma_certified(x + 1.0);
                t = -g.value;
                radius += g.radius;
                break;
            }
            case Function::dzeta_minus1: t = -x * principal_log(x); break;
            case Function::dzeta_minus2: t = -x * x * principal_log(x); break;
            case Function::polygamma: break;
        }
        sum += t;
        mag += std::abs(t);
    }
    return {sum, mag};
}

}  // namespace

double remainder_bound(Function f, Complex z, int N, int k) {
    check(f, z, N);
    const double theta = principal_arg(z);
    const double r = std::abs(z);
    auto bern = [](int n2) { return std::abs(bernoulli::number(n2)); };
    const double n2 = 2.0 * N;
    switch (f) {
        case Function::digamma:
            return bern(2 * N) / (n2 * std::pow(r, n2)) * angle_factor(2 * N, 2 * N + 1, theta);
        case Function::log_gamma:
            return bern(2 * N) / (n2 * (n2 - 1.0) * std::pow(r, n2 - 1.0)) * angle_factor(2 * N - 1, 2 * N, theta);
        case Function::log_barnes_g_v1:
        case Function::dzeta_minus1:
            return bern(2 * N + 2) / (n2 * (n2 + 1.0) * (n2 + 2.0) * std::pow(r, n2)) *
                   angle_factor(2 * N, 2 * N + 1, theta);
        case Function::log_barnes_g_v2:
            return remainder_bound(Function::log_barnes_g_v1, z, N) + r * remainder_bound(Function::log_gamma, z, N + 1);
        case Function::dzeta_minus2:
            return 2.0 * bern(2 * N + 2) / ((n2 - 1.0) * n2 * (n2 + 1.0) * (n2 + 2.0) * std::pow(r, n2 - 1.0)) *
                   angle_factor(2 * N - 1, 2 * N, theta);
        case Function::polygamma: {
            if (k < 1) throw DomainError("polygamma order must be positive");
            const remainder::Context ctx{static_cast<double>(k + 1), z, N};
            return std::exp(std::lgamma(k + 1.0)) * std::pow(r, -k) *
                   std::min(remainder::bound_terminant_sup(ctx), remainder::bound_secant(ctx));
        }
    }
    return std::numeric_limits<double>::infinity();
}

Estimate true_remainder(Function f, Complex z, int N, int k) {
    check(f, z, N);
    const double n2 = 2.0 * N;
    auto scaled = [](Estimate e, Complex c) { return Estimate{c * e.value, std::abs(c) * e.error}; };
    switch (f) {
        case Function::digamma: return scaled(bernoulli_weight_integral(N, n2 + 1.0, z), -1.0);
        case Function::log_gamma: return scaled(bernoulli_weight_integral(N, n2, z), 1.0 / n2);
        case Function::log_barnes_g_v1:
            return scaled(bernoulli_weight_integral(N + 1, n2 + 1.0, z), 1.0 / ((n2 + 1.0) * (n2 + 2.0)));
        case Function::dzeta_minus1:
            return scaled(bernoulli_weight_integral(N + 1, n2 + 1.0, z), -1.0 / ((n2 + 1.0) * (n2 + 2.0)));
        case Function::log_barnes_g_v2: {
            const Estimate g1 = true_remainder(Function::log_barnes_g_v1, z, N);
            const Estimate lg = scaled(bernoulli_weight_integral(N + 1, n2 + 2.0, z), z / (n2 + 2.0));
            return {g1.value + lg.value, g1.error + lg.error};
        }
        case Function::dzeta_minus2:
            return scaled(bernoulli_weight_integral(N + 1, n2, z), 2.0 / (n2 * (n2 + 1.0) * (n2 + 2.0)));
        case Function::polygamma: {
            if (k < 1) throw DomainError("polygamma order must be positive");
            const Estimate r = remainder::via_bernoulli_integral({static_cast<double>(k + 1), z, N});
            const Complex c = std::exp(std::lgamma(k + 1.0) - static_cast<double>(k) * principal_log(z));
            return scaled(r, c);
        }
    }
    return {0.0, std::numeric_limits<double>::infinity()};
}

CertifiedValue evaluate(const Request& req) {
    if (req.N < 0) throw DomainError("N must be positive, or 0 for automatic choice");
    if (req.function == Function::polygamma) {
        if (req.k < 1) throw DomainError("polygamma order must be positive");
        check(req.function, req.z, std::max(req.N, 1));
        const double sign = req.k % 2 == 1 ? 1.0 : -1.0;  // (-1)^{k+1}
        const double kfact = std::exp(std::lgamma(req.k + 1.0));
        const Complex s(req.k + 1.0, 0.0);
        CertifiedValue v = req.N > 0 ? hurwitz_zeta_truncated(s, req.z, req.N)
                                     : hurwitz_zeta({s, req.z, req.target_radius / kfact, Method::automatic});
        v.value *= sign * kfact;
        v.radius *= kfact;
        return v;
    }
    if (!(req.target_radius > 0.0)) throw DomainError("target radius must be positive");
    if (req.N > 0) return fixed_N(req.function, req.z, req.N);
    check(req.function, req.z, req.function == Function::dzeta_minus2 ? 2 : 1);
    const std::int64_t M = shift_for(req.z);
    const Complex zs = req.z + static_cast<double>(M);
    CertifiedValue v = best_N(req.function, zs, req.target_radius);
    if (M > 0) {
        double extra = 0.0;
        const Series c = shift_correction(req.function, req.z, M, extra);
        v.value += c.value;
        v.radius += extra + 8.0 * kEps * c.magnitude;
        v.method = Method::shift_truncated;
        v.shift = M;
    }
    return v;
}

CertifiedValue digamma(Complex z, int N) { return evaluate({Function::digamma, z, N}); }

CertifiedValue polygamma(int k, Complex z, int N) {
    Request r{Function::polygamma, z, N};
    r.k = k;
    return evaluate(r);
}

CertifiedValue log_gamma_asym(Complex z, int N) { return evaluate({Function::log_gamma, z, N}); }

CertifiedValue log_barnes_g(Complex z, int N, bool second_form) {
    return evaluate({second_form ? Function::log_barnes_g_v2 : Function::log_barnes_g_v1, z, N});
}

CertifiedValue dzeta_deriv(int at, Complex a, int N) {
    if (at == -1) return evaluate({Function::dzeta_minus1, a, N});
    if (at == -2) return evaluate({Function::dzeta_minus2, a, N});
    throw DomainError("dzeta_deriv supports s = -1 and s = -2 only");
}

}  // namespace certzeta::derived
