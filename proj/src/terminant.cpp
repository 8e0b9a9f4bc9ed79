#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "certzeta/errors.hpp"
#include "certzeta/quadrature.hpp"
#include "certzeta/terminant.hpp"

namespace certzeta::terminant {
namespace {

constexpr double kQuarterPi = 0.25 * kPi;
constexpr double kHalfPi = 0.5 * kPi;
constexpr double kQuadTol = 1e-13;
const Complex kI(0.0, 1.0);

// Non-convergence at the requested tolerance is tolerated when the error
// estimate is still small; the estimate is carried into the reported error.
void check_quad(const quad::Result& r, const char* what) {
    const bool finite = std::isfinite(r.value.real()) && std::isfinite(r.value.imag()) && std::isfinite(r.error);
    if (!finite || (!r.converged && !(r.error <= 1e-10 * std::abs(r.value) + 1e-16))) {
        std::ostringstream msg;
        msg << "terminant quadrature (" << what << ") did not converge: estimate " << r.value
            << ", error " << r.error << ", evaluations " << r.evaluations;
        throw NumericError(msg.str());
    }
}

// Adaptive integration over [a, b] split at the given interior points, each
// widened by +-width so that near-singular peaks get their own panels.
quad::Result integrate_split(const quad::Integrand& f, double a, double b,
                             std::vector<std::pair<double, double>> peaks, const quad::Options& opt) {
    std::vector<double> cuts = {a, b};
    for (auto [at, width] : peaks) {
        for (double c : {at - width, at, at + width})
            if (c > a && c < b) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    quad::Result total{0.0, 0.0, 0, true};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const quad::Result r = quad::integrate(f, cuts[i], cuts[i + 1], opt);
        total.value += r.value;
        total.error += r.error;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
    }
    return total;
}

// Lower bound of |1 + x^2| for arg x = alpha, |alpha| < pi/2.
double one_plus_square_floor(double alpha) {
    const double t = std::abs(alpha);
    return t <= kQuarterPi ? 1.0 : std::abs(std::sin(2.0 * alpha));
}

// log of a bound for int_T^inf r^{sigma-1} e^{-c r} dr.
double log_gamma_tail(double sigma, double c, double T) {
    const double x = c * T;
    double log_upper = (sigma - 1.0) * std::log(x) - x;
    if (sigma > 1.0) {
        if (x <= sigma - 1.0) return std::numeric_limits<double>::infinity();
        log_upper -= std::log1p(-(sigma - 1.0) / x);
    }
    return log_upper - sigma * std::log(c);
}

// (1/Gamma(p)) int_0^{inf e^{i phi}} t^{p-1} e^{-t} / (1 + (t/w)^2) dt.
Value laplace_along_ray(Complex p, Complex w, double phi) {
    const double theta = principal_arg(w);
    if (!(std::abs(phi) < kHalfPi) || !(std::abs(theta - phi) < kHalfPi))
        throw DomainError("laplace representation needs |arg w - ray| < pi/2");
    const Complex lgp = log_gamma(p);
    const Complex dir = std::polar(1.0, phi);
    const Complex phase_log = kI * phi * p;  // log of e^{i phi p}, t^{p-1} dt = e^{i phi p} r^{p-1} dr
    const Complex winv = 1.0 / w;

    auto integrand_r = [&](double r) -> Complex {
        if (r == 0.0) return 0.0;
        const Complex t = r * dir;
        const Complex tw = t * winv;
        return std::exp(phase_log + (p - 1.0) * std::log(r) - t - lgp) / (1.0 + tw * tw);
    };

    const double sigma = p.real();
    quad::Options opt;
    opt.rel_tol = kQuadTol;
    opt.max_intervals = 20000;

    // [0, 1]: substitute r = u^m so that the integrand is smooth at 0.
    const int m = sigma < 1.0 ? std::min(2000, static_cast<int>(std::ceil(2.0 / sigma))) : 1;
    auto near_zero = [&](double u) -> Complex {
        if (u == 0.0) return 0.0;
        if (m == 1) return integrand_r(u);
        const double r = std::pow(u, m);
        const Complex t = r * dir;
        const Complex tw = t * winv;
        return static_cast<double>(m) *
               std::exp(phase_log + (p * static_cast<double>(m) - 1.0) * std::log(u) - t - lgp) /
               (1.0 + tw * tw);
    };

    // Tail beyond T: |integrand| <= e^{-Im p phi} r^{sigma-1} e^{-r cos phi} / (|Gamma(p)| floor).
    const double c = std::cos(phi);
    const double floor = one_plus_square_floor(phi - theta);
    const double log_pref = -p.imag() * phi - lgp.real() - std::log(floor);
    double T = std::max(sigma, 1.0) / c + 40.0 / c + 6.0 * std::sqrt(std::abs(p));
    double tail = 0.0;
    for (int it = 0; it < 400; ++it, T += 10.0 / c) {
        tail = std::exp(log_pref + log_gamma_tail(sigma, c, T));
        if (tail < 1e-18) break;
    }

    const quad::Result head = quad::integrate(near_zero, 0.0, 1.0, opt);
    check_quad(head, "laplace, near zero");
    quad::Options body_opt = opt;
    body_opt.abs_tol = 1e-17;
    // Split the body at the saddle of t^{p-1} e^{-t} and where the ray passes
    // closest to the poles t = +-iw.
    std::vector<std::pair<double, double>> peaks = {{std::abs(p - 1.0), 0.0}};
    for (double sg : {1.0, -1.0}) {
        const Complex pole = sg * kI * w * std::conj(dir);
        if (pole.real() > 0.0) peaks.emplace_back(pole.real(), std::abs(pole.imag()));
    }
    const quad::Result body = integrate_split(integrand_r, 1.0, T, peaks, body_opt);
    check_quad(body, "laplace, body");
    const Complex value = head.value + body.value;
    return {value, head.error + body.error + tail, phi == 0.0 ? Route::laplace : Route::rotated_ray};
}

// Ray angle in (theta - pi/2, theta + pi/2) with |phi| < pi/2 minimising the
// peak size of the integrand, e^{-Im p phi} cos(phi)^{-Re p} / floor.
double best_ray(Complex p, double theta) {
    const double lo = std::max(theta - kHalfPi, -kHalfPi);
    const double hi = std::min(theta + kHalfPi, kHalfPi);
    double best = 0.5 * theta;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int i = 1; i < 256; ++i) {
        const double phi = lo + (hi - lo) * i / 256.0;
        const double cost = -p.imag() * phi - std::max(p.real(), 1.0) * std::log(std::cos(phi)) -
                            std::log(one_plus_square_floor(phi - theta));
        if (cost < best_cost) {
            best_cost = cost;
            best = phi;
        }
    }
    return best;
}

// Upper-bound integration length for int_0^inf e^{-t} h(t) dt with |h| <= bound.
double exp_cutoff(double log_bound) { return std::max(40.0, 40.0 + log_bound); }

Value split_sum(Complex p, Complex w) {
    const double theta = principal_arg(w);
    if (!(std::abs(theta) < kHalfPi)) throw DomainError("split representation needs |arg w| < pi/2");
    const Complex winv = 1.0 / w;
    auto integrand = [&](double t) -> Complex {
        const Complex a = std::exp(-t - p * std::log(1.0 - kI * t * winv));
        const Complex b = std::exp(-t - p * std::log(1.0 + kI * t * winv));
        return 0.5 * (a + b);
    };
    // |1 -+ it/w| >= cos(arg w), |arg(1 -+ it/w)| < pi.
    const double log_h = -p.real() * std::log(std::cos(theta)) + std::abs(p.imag()) * kPi;
    const double T = exp_cutoff(log_h);
    quad::Options opt;
    opt.rel_tol = kQuadTol;
    opt.abs_tol = 1e-17;
    opt.max_intervals = 20000;
    // the two factors are singular at t = +-iw
    const quad::Result r =
        integrate_split(integrand, 0.0, T, {{std::abs(w.imag()), std::abs(w.real())}}, opt);
    check_quad(r, "split");
    // the integrand reaches e^{log_h}; cancellation costs that much roundoff
    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * std::exp(log_h);
    return {r.value, r.error + std::exp(log_h - T) + roundoff, Route::split};
}

// Pi_p(w) = 1/2 - p/(2w) int e^{-it} (1+t/w)^{-p-1} dt + 1/2 int e^{-t} (1+it/w)^{-p} dt
// for pi/4 < arg w <= pi/2.
Value rotated_split_upper_half(Complex p, Complex w) {
    const double theta = principal_arg(w);
    if (!(theta > kQuarterPi && theta <= kHalfPi))
        throw DomainError("rotated split representation needs pi/4 < arg w <= pi/2");
    const Complex winv = 1.0 / w;
    const Complex q = p + 1.0;
    const double wabs = std::abs(w);

    quad::Options opt;
    opt.rel_tol = kQuadTol;
    opt.abs_tol = 1e-18;
    opt.max_intervals = 20000;

    // Exponentially damped leg; |1 + it/w| >= 1 and |arg(1 + it/w)| <= pi/2.
    auto damped = [&](double t) { return std::exp(-t - p * std::log(1.0 + kI * t * winv)); };
    const double log_h2 = std::abs(p.imag()) * kHalfPi;
    const double T2 = exp_cutoff(log_h2);
    const quad::Result i2 = quad::integrate(damped, 0.0, T2, opt);
    check_quad(i2, "rotated split, damped leg");

    // Oscillatory leg: quadrature on [0, T] in panels of length pi/4, then
    // the integrated-by-parts expansion at T with an explicit remainder bound.
    auto log_kernel = [&](double t) { return -q * std::log(1.0 + t * winv); };
    const double log_qk_phase = std::abs(q.imag()) * kHalfPi;

    struct TailPlan {
        double T;
        int K;
        double bound;
    };
    auto plan_for = [&](double T) {
        TailPlan best{T, 0, std::numeric_limits<double>::infinity()};
        double log_poch = 0.0;  // log|(q)_K|
        for (int K = 1; K <= 80; ++K) {
            log_poch += std::log(std::abs(q + static_cast<double>(K - 1)));
            const double mexp = q.real() + K;
            // int_T^inf (1 + t^2/|w|^2)^{-m/2} dt
            double log_j = std::log(wabs) + 0.5 * std::log(kPi) + std::lgamma(0.5 * (mexp - 1.0)) -
                           std::log(2.0) - std::lgamma(0.5 * mexp);
            if (T > 0.0)
                log_j = std::min(log_j, mexp * std::log(wabs) + (1.0 - mexp) * std::log(T) - std::log(mexp - 1.0));
            const double log_bound = log_poch - K * std::log(wabs) + log_qk_phase + log_j;
            const double b = std::exp(log_bound);
            if (b < best.bound) best = {T, K, b};
        }
        return best;
    };
    const double scale = std::abs(p) / (2.0 * wabs);
    TailPlan plan{0.0, 0, std::numeric_limits<double>::infinity()};
    for (double T = 0.0; T <= 1e6; T = T == 0.0 ? 8.0 : 2.0 * T) {
        plan = plan_for(T);
        if (plan.bound * scale < 1e-18) break;
    }
    if (!(plan.bound * scale < 1e-12)) throw NumericError("rotated split: oscillatory tail bound too large");

    auto oscillatory = [&](double t) { return std::exp(-kI * t + log_kernel(t)); };
    Complex i1 = 0.0;
    double i1_err = 0.0;
    const double panel = kQuarterPi;
    for (double a = 0.0; a < plan.T; a += panel) {
        const double b = std::min(plan.T, a + panel);
        const quad::Result r = quad::integrate(oscillatory, a, b, opt);
        check_quad(r, "rotated split, oscillatory leg");
        i1 += r.value;
        i1_err += r.error;
    }
    // sum_{k<K} (-i)^{k+1} e^{-iT} g^{(k)}(T), g^{(k)} = (-1)^k (q)_k w^{-k} (1+T/w)^{-q-k}
    {
        const Complex base = 1.0 + plan.T * winv;
        Complex gk = std::exp(log_kernel(plan.T));
        Complex phase = -kI * std::exp(-kI * plan.T);
        Complex s = 0.0;
        for (int k = 0; k < plan.K; ++k) {
            s += phase * gk;
            gk *= -(q + static_cast<double>(k)) * winv / base;
            phase *= -kI;
        }
        i1 += s;
        i1_err += plan.bound;
    }

    const Complex value = 0.5 - p / (2.0 * w) * i1 + 0.5 * i2.value;
    const double err = scale * i1_err + 0.5 * (i2.error + std::exp(log_h2 - T2));
    return {value, err, Route::rotated_split};
}

Value conj(Value v) {
    v.value = std::conj(v.value);
    return v;
}

Value large_argument(Complex p, Complex w, bool required) {
    const double theta = principal_arg(w);
    const Complex winv2 = 1.0 / (w * w);
    Complex sum = 0.0;
    Complex term = 1.0;  // (-1)^m (p)_{2m} / w^{2m}
    double last = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 60; ++m) {
        sum += term;
        const Complex next = -term * (p + 2.0 * m) * (p + 2.0 * m + 1.0) * winv2;
        const double mag = std::abs(next);
        if (mag > last) break;  // series started to diverge
        last = mag;
        if (mag <= 1e-17 * std::abs(sum)) {
            const double factor = sup_bound(p + 2.0 * (m + 1), theta);
            const double err = mag * factor;
            if (err <= 1e-16 * std::abs(sum)) return {sum, err, Route::large_argument};
        }
        term = next;
    }
    if (required) throw NumericError("large-argument expansion of the terminant does not reach 1e-16");
    return {0.0, std::numeric_limits<double>::infinity(), Route::large_argument};
}

Value upper_half_plane(Complex p, Complex w) {
    // arg w >= 0 here; lower half plane is handled by conjugation.
    const double theta = principal_arg(w);
    if (theta <= 0.4 * kPi) return laplace_along_ray(p, w, 0.0);
    if (theta <= kHalfPi) return rotated_split_upper_half(p, w);
    return {};  // unreachable: callers reduce the upper sector first
}

}  // namespace

std::string_view route_name(Route r) {
    switch (r) {
        case Route::automatic: return "automatic";
        case Route::laplace: return "laplace";
        case Route::split: return "split";
        case Route::rotated_split: return "rotated_split";
        case Route::functional: return "functional";
        case Route::rotated_ray: return "rotated_ray";
        case Route::large_argument: return "large_argument";
    }
    return "unknown";
}

Value value(Complex p, Complex w, Route route) {
    if (!(p.real() > 0.0)) throw DomainError("terminant requires Re(p) > 0");
    if (w == Complex(0.0, 0.0)) throw DomainError("terminant requires w != 0");
    const double theta = principal_arg(w);
    if (!(std::abs(theta) < kPi)) throw DomainError("terminant requires |arg w| < pi");

    switch (route) {
        case Route::laplace: return laplace_along_ray(p, w, 0.0);
        case Route::rotated_ray: {
            Value v = laplace_along_ray(p, w, best_ray(p, theta));
            v.route = Route::rotated_ray;
            return v;
        }
        case Route::split: return split_sum(p, w);
        case Route::large_argument: return large_argument(p, w, true);
        case Route::rotated_split:
            if (theta < 0.0) return conj(rotated_split_upper_half(std::conj(p), std::conj(w)));
            return rotated_split_upper_half(p, w);
        case Route::functional: {
            if (!(std::abs(theta) > kHalfPi)) throw DomainError("functional relation needs |arg w| > pi/2");
            if (theta < 0.0) return conj(value(std::conj(p), std::conj(w), Route::functional));
            // Pi_p(w) = pi i e^{-pi i p / 2} w^p e^{iw} / Gamma(p) + Pi_p(w e^{-pi i})
            const Complex expl =
                kPi * kI * std::exp(-0.5 * kPi * kI * p + p * principal_log(w) + kI * w - log_gamma(p));
            Value inner = value(p, -w, Route::automatic);
            inner.value += expl;
            inner.route = Route::functional;
            return inner;
        }
        case Route::automatic: break;
    }

    if (std::abs(w) > 2.0 * std::abs(p) + 20.0) {
        const Value v = large_argument(p, w, false);
        if (std::isfinite(v.error)) return v;
    }
    if (std::abs(theta) > kHalfPi) return value(p, w, Route::functional);
    if (theta < 0.0) return conj(upper_half_plane(std::conj(p), std::conj(w)));
    return upper_half_plane(p, w);
}

}  // namespace certzeta::terminant
