#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "certzeta/bernoulli.hpp"
#include "certzeta/errors.hpp"
#include "certzeta/oracle.hpp"
#include "certzeta/polylog.hpp"
#include "certzeta/remainder.hpp"
#include "certzeta/terminant.hpp"
#include "certzeta/zeta_eval.hpp"

namespace certzeta {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = 0.5 * kPi;

double factorial(int n) { return std::exp(std::lgamma(n + 1.0)); }

struct Partial {
    Complex value;
    double roundoff;
};

// 1/2 a^{-s} + a^{1-s}/(s-1) + a^{1-s} sum_{n<N} B_{2n} (s)_{2n-1} / ((2n)! a^{2n})
Partial truncated_sum(Complex s, Complex a, int N) {
    const Complex loga = principal_log(a);
    const Complex a1s = std::exp((1.0 - s) * loga);
    const Complex a2inv = std::exp(-2.0 * loga);
    Complex series = 0.0;
    double abs_series = 0.0;
    Complex poch = s;  // (s)_{2n-1}
    Complex apow = a2inv;
    for (int n = 1; n < N; ++n) {
        const Complex term = bernoulli::number(2 * n) / factorial(2 * n) * poch * apow;
        series += term;
        abs_series += std::abs(term);
        poch *= (s + (2.0 * n - 1.0)) * (s + 2.0 * n);
        apow *= a2inv;
    }
    const Complex half = 0.5 * std::exp(-s * loga);
    const Complex pole = a1s / (s - 1.0);
    const Complex value = half + pole + a1s * series;
    const double mag = std::abs(half) + std::abs(pole) + std::abs(a1s) * (1.0 + abs_series);
    return {value, 8.0 * kEps * mag * (1.0 + N * 0.05)};
}

struct Bound {
    double value;
    std::string name;
};

// Least of the terminant-sup, chi and real-order bounds for R_N.
Bound best_bound(const remainder::Context& ctx) {
    Bound b{remainder::bound_terminant_sup(ctx), "eq12"};
    if (const auto c = remainder::bound_chi(ctx); c && *c < b.value) b = {*c, "eq113"};
    if (const auto r = remainder::bound_real_order(ctx); r && r->value < b.value) b = {r->value, "eq892"};
    return b;
}

int minimal_N(Complex s) {
    // Re(s) > 1 - 2N
    const int n = static_cast<int>(std::floor((1.0 - s.real()) / 2.0)) + 1;
    return std::max(1, n);
}

// Truncated value whose radius splits into truncation and roundoff parts.
struct Candidate {
    CertifiedValue value;
    double truncation;
};

Candidate truncated_candidate(Complex s, Complex a, int N) {
    const remainder::Context ctx{s, a, N};
    remainder::validate(ctx);
    const Partial part = truncated_sum(s, a, N);
    const double a1s = std::abs(std::exp((1.0 - s) * principal_log(a)));
    const double theta = principal_arg(a);
    CertifiedValue out;
    out.method = Method::truncated;
    out.N = N;
    if (s == Complex(0.0, 0.0)) {
        // every series term and the remainder carry a factor (0)_k = 0
        out.value = 0.5 - a;
        out.bound_used = "eq12";
        return {out, 0.0};
    }

    if (std::abs(theta) > kHalfPi && std::abs(kTwoPi * a.imag()) >= kPolylogMinDecay) {
        // continue the remainder across the negative axis
        const double d = theta > 0.0 ? -1.0 : 1.0;
        const remainder::Context turned{s, -a, N};
        const Bound b = best_bound(turned);
        const Complex rg = reciprocal_gamma(s);
        Complex correction = 0.0;
        double corr_err = 0.0;
        if (rg != Complex(0.0, 0.0)) {
            const Complex i(0.0, 1.0);
            const PolylogResult li = polylog_exp(1.0 - s, -d * kTwoPi * i * a);
            // a^{1-s} times e^{pi i d s/2} (2 pi)^s / Gamma(s) a^{s-1} Li
            const Complex f = std::exp(d * 0.5 * kPi * i * s + s * std::log(kTwoPi)) * rg;
            correction = f * li.value;
            corr_err = std::abs(f) * li.tail_bound + 4.0 * kEps * std::abs(correction);
        }
        const double trunc = a1s * b.value;
        out.value = part.value + correction;
        out.radius = trunc + corr_err + part.roundoff;
        out.bound_used = b.name + "+continuation";
        return {out, trunc};
    }
    const Bound b = best_bound(ctx);
    const double trunc = a1s * b.value;
    out.value = part.value;
    out.radius = trunc + part.roundoff;
    out.bound_used = b.name;
    return {out, trunc};
}

// Scan N upward; stop at the first N meeting the target, else keep the best.
Candidate scan_truncated(Complex s, Complex a, double target) {
    const int lo = minimal_N(s);
    const int hi = std::min(bernoulli::kMaxHalfIndex, std::max(lo, static_cast<int>(std::ceil(kPi * std::abs(a))) + 2));
    Candidate best{{}, kInf};
    best.value.radius = kInf;
    for (int N = lo; N <= hi; ++N) {
        const Candidate c = truncated_candidate(s, a, N);
        if (c.truncation < best.truncation ||
            (c.truncation == best.truncation && c.value.radius < best.value.radius))
            best = c;
        if (c.truncation <= target) return c;
        // past the least term the bounds only grow
        if (c.truncation > 1e6 * best.truncation && N > lo + 2) break;
    }
    if (!std::isfinite(best.value.radius)) throw NumericError("no finite truncation bound for this (s, a)");
    return best;
}

std::int64_t shift_rule(Complex s, Complex a, double reach) {
    const double want = std::max({10.0, std::abs(s.imag()), reach});
    std::int64_t M = 0;
    while (std::abs(a + static_cast<double>(M)) < want) {
        ++M;
        if (M > max_terms()) throw DomainError("shift exceeds CERTZETA_MAX_TERMS");
    }
    return M;
}

Partial shift_sum(Complex s, Complex a, std::int64_t M) {
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0, mag = 0.0;
    auto add = [](double& acc, double& comp, double x) {
        const double t = acc + x;
        comp += std::abs(acc) >= std::abs(x) ? (acc - t) + x : (x - t) + acc;
        acc = t;
    };
    for (std::int64_t n = M - 1; n >= 0; --n) {
        const Complex term = std::exp(-s * principal_log(a + static_cast<double>(n)));
        add(re, cre, term.real());
        add(im, cim, term.imag());
        mag += std::abs(term);
    }
    return {Complex(re + cre, im + cim), 4.0 * kEps * mag};
}

Candidate shifted(const EvalRequest& req, std::int64_t M) {
    const Partial head = shift_sum(req.s, req.a, M);
    Candidate tail = scan_truncated(req.s, req.a + static_cast<double>(M), req.target_radius);
    tail.value.value += head.value;
    tail.value.radius += head.roundoff;
    tail.value.method = Method::shift_truncated;
    tail.value.shift = M;
    return tail;
}

CertifiedValue shift_auto(const EvalRequest& req) {
    std::int64_t M = shift_rule(req.s, req.a, 0.0);
    Candidate best = shifted(req, std::max<std::int64_t>(M, 1));
    double reach = std::abs(req.a + static_cast<double>(M));
    for (int it = 0; it < 12 && best.truncation > req.target_radius; ++it) {
        reach = 2.0 * std::max(reach, 10.0);
        M = shift_rule(req.s, req.a, reach);
        const Candidate c = shifted(req, M);
        if (c.truncation < best.truncation) best = c;
    }
    return best.value;
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::automatic: return "auto";
        case Method::truncated: return "truncated";
        case Method::exact_expansion: return "exact_expansion";
        case Method::shift_truncated: return "shift+truncated";
        case Method::direct_sum: return "direct_sum";
    }
    return "unknown";
}

void validate_request(const EvalRequest& req) {
    if (!std::isfinite(req.s.real()) || !std::isfinite(req.s.imag()) || !std::isfinite(req.a.real()) ||
        !std::isfinite(req.a.imag()))
        throw DomainError("s and a must be finite");
    if (std::abs(req.s - 1.0) < 1e-8) throw DomainError("s = 1 is the pole of zeta(s, a)");
    if (req.a == Complex(0.0, 0.0)) throw DomainError("a = 0 is a branch point");
    if (is_nonpositive_integer(req.a)) throw DomainError("a is a nonpositive integer");
    if (req.a.imag() == 0.0 && req.a.real() < 0.0) throw DomainError("a lies on the negative real axis");
    if (!(req.target_radius > 0.0)) throw DomainError("target radius must be positive");
}

CertifiedValue hurwitz_zeta_truncated(Complex s, Complex a, int N) {
    validate_request({s, a, 1.0, Method::truncated});
    return truncated_candidate(s, a, N).value;
}

CertifiedValue hurwitz_zeta(const EvalRequest& req) {
    validate_request(req);
    switch (req.method) {
        case Method::truncated: return scan_truncated(req.s, req.a, req.target_radius).value;
        case Method::shift_truncated: return shift_auto(req);
        case Method::exact_expansion: return hurwitz_zeta_exact_expansion(req, 3).value;
        case Method::direct_sum: {
            const oracle::Result r = oracle::zeta_direct(req.s, req.a);
            CertifiedValue out;
            out.value = r.value;
            out.radius = r.tail_bound;
            out.method = Method::direct_sum;
            out.bound_used = "direct_tail";
            return out;
        }
        case Method::automatic: break;
    }
    const Candidate c = scan_truncated(req.s, req.a, req.target_radius);
    if (c.truncation <= req.target_radius) return c.value;
    const CertifiedValue s = shift_auto(req);
    return s.radius < c.value.radius ? s : c.value;
}

CertifiedValue shift_then_eval(const EvalRequest& req, std::int64_t M) {
    validate_request(req);
    if (M < 0) throw DomainError("shift must be nonnegative");
    if (M == 0) return hurwitz_zeta(req);
    return shifted(req, M).value;
}

CertifiedValue shift_then_eval(const EvalRequest& req) {
    validate_request(req);
    return shifted(req, shift_rule(req.s, req.a, 0.0)).value;
}

namespace {

// log of (s)_m, or nullopt-like flag when the product vanishes.
struct LogPoch {
    Complex value;
    bool zero;
};
LogPoch log_pochhammer(Complex s, int m) {
    if (m <= 150) {
        const Complex p = pochhammer(s, m);
        if (p == Complex(0.0, 0.0)) return {0.0, true};
        if (std::isfinite(std::abs(p))) return {std::log(p), false};
    }
    if (is_nonpositive_integer(s)) {
        if (static_cast<double>(m) > -s.real()) return {0.0, true};
    }
    return {log_gamma(s + static_cast<double>(m)) - log_gamma(s), false};
}

// k^{2n} sum_{j >= k} j^{-2n} for k > 1, n large relative to k.
double scaled_tail_sum(int n, std::int64_t k) {
    const double kd = static_cast<double>(k);
    double sum = 1.0;
    for (std::int64_t j = 1; j < 100000; ++j) {
        const double t = std::exp(-2.0 * n * std::log1p(static_cast<double>(j) / kd));
        sum += t;
        const double rest = kd / (2.0 * n - 1.0) * std::exp((1.0 - 2.0 * n) * std::log1p(static_cast<double>(j) / kd));
        if (rest < 1e-19 * sum) break;
    }
    return sum;
}

}  // namespace

ExactExpansion hurwitz_zeta_exact_expansion(const EvalRequest& req, int k_max) {
    validate_request(req);
    if (k_max < 1) throw DomainError("k_max must be positive");
    const Complex s = req.s, a = req.a;
    const double theta = principal_arg(a);
    if (std::abs(theta) > kHalfPi) throw DomainError("exact expansion needs |arg a| <= pi/2");
    const double abs_a = std::abs(a);

    auto schedule = [&](std::int64_t k) {
        return std::max<std::int64_t>(1, std::llround(kPi * abs_a * static_cast<double>(k)));
    };
    ExactExpansion out;
    for (int k = 1; k <= k_max; ++k) {
        const std::int64_t Nk = schedule(k);
        if (Nk > 100000) throw DomainError("N_k too large for the exact expansion");
        out.schedule.push_back(static_cast<int>(Nk));
    }
    if (!(s.real() > 1.0 - 2.0 * out.schedule.front()))
        throw DomainError("exact expansion needs Re(s) > 1 - 2 N_1");

    const Complex loga = principal_log(a);
    const Complex log2pia = std::log(kTwoPi) + loga;

    // finite part: sum_n (-1)^{n+1} 2 (s)_{2n-1} / (2 pi a)^{2n} sum_{k: N_k > n} k^{-2n}
    Complex finite = 0.0;
    double finite_abs = 0.0;
    const std::int64_t N1 = out.schedule.front();
    std::int64_t kn = 1;
    int quiet = 0;
    for (int n = 1; n < 200000; ++n) {
        while (schedule(kn) <= n) ++kn;
        const LogPoch lp = log_pochhammer(s, 2 * n - 1);
        Complex term = 0.0;
        if (!lp.zero) {
            const double sign = n % 2 == 1 ? 1.0 : -1.0;
            const double zeta_part = kn == 1 ? remainder::integer_order_zeta(2 * n, 1.0).value.real() : scaled_tail_sum(n, kn);
            const Complex logk = std::log(static_cast<double>(kn));
            term = sign * 2.0 * zeta_part * std::exp(lp.value - 2.0 * n * (log2pia + logk));
        }
        finite += term;
        finite_abs += std::abs(term);
        if (n >= N1) {
            quiet = std::abs(term) <= 1e-20 * std::abs(finite) ? quiet + 1 : 0;
            if (quiet >= 5 || lp.zero) break;
        }
    }

    // terminant part, k <= k_max
    Complex terminants = 0.0;
    double term_err = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const int Nk = out.schedule[k - 1];
        const LogPoch lp = log_pochhammer(s, 2 * Nk - 1);
        if (lp.zero) {
            out.k_terms.push_back(0.0);
            continue;
        }
        const double kd = k;
        const Complex w = kTwoPi * kd * a;
        const terminant::Value pi_val = terminant::value(s + (2.0 * Nk - 1.0), w);
        const double sign = Nk % 2 == 1 ? 1.0 : -1.0;
        const Complex pref = sign * 2.0 * std::exp(lp.value - 2.0 * Nk * (log2pia + std::log(kd)));
        const Complex t = pref * pi_val.value;
        out.k_terms.push_back(t);
        terminants += t;
        term_err += std::abs(pref) * pi_val.error;
    }

    const Complex a1s = std::exp((1.0 - s) * loga);
    const Complex half = 0.5 * std::exp(-s * loga);
    const Complex pole = a1s / (s - 1.0);
    out.value.value = half + pole + a1s * (finite + terminants);

    // heuristic tail from the observed decay of the k-terms
    const double last = std::abs(out.k_terms.back());
    double ratio = std::exp(-kTwoPi * abs_a);
    if (k_max >= 2 && std::abs(out.k_terms[k_max - 2]) > 0.0)
        ratio = std::max(ratio, last / std::abs(out.k_terms[k_max - 2]));
    ratio = std::min(ratio, 0.5);
    const double tail = std::abs(a1s) * last * ratio / (1.0 - ratio);
    const double roundoff = 8.0 * kEps * (std::abs(half) + std::abs(pole) + std::abs(a1s) * (1.0 + finite_abs));
    out.value.radius = tail + std::abs(a1s) * term_err + roundoff;
    out.value.method = Method::exact_expansion;
    out.value.bound_used = "heuristic_k_tail";
    out.value.N = static_cast<int>(N1);
    out.value.heuristic = true;
    return out;
}

CertifiedValue riemann_zeta(Complex z) {
    if (std::abs(z - 1.0) < 1e-8) throw DomainError("z = 1 is the pole of zeta");
    if (z.imag() == 0.0 && z.real() == 0.0) return {Complex(-0.5, 0.0), 0.0, Method::truncated, "exact", 0, 0, false};
    if (z.real() >= -0.5) return hurwitz_zeta({z, 1.0, 1e-17, Method::automatic});
    if (z.imag() == 0.0 && std::fmod(z.real(), 2.0) == 0.0)  // trivial zeros
        return {Complex(0.0, 0.0), 0.0, Method::truncated, "exact", 0, 0, false};
    // zeta(z) = 2^z pi^{z-1} sin(pi z / 2) Gamma(1 - z) zeta(1 - z)
    CertifiedValue inner = hurwitz_zeta({1.0 - z, 1.0, 1e-17, Method::automatic});
    const Complex f = std::exp(z * std::log(2.0) + (z - 1.0) * std::log(kPi) + log_gamma(1.0 - z)) *
                      std::sin(0.5 * kPi * z);
    inner.value *= f;
    inner.radius = std::abs(f) * inner.radius + 16.0 * kEps * (1.0 + std::abs(z)) * std::abs(inner.value);
    return inner;
}

double dirichlet_tail_identity_check(Complex s, std::int64_t n) {
    if (!(s.real() > 1.0)) throw DomainError("tail identity check needs Re(s) > 1");
    if (n < 1) throw DomainError("n must be positive");
    const CertifiedValue z = hurwitz_zeta({s, static_cast<double>(n), 1e-17, Method::automatic});
    const oracle::Result direct = oracle::zeta_direct(s, 1.0);
    Complex head = 0.0;
    for (std::int64_t k = n - 1; k >= 1; --k) head += std::exp(-s * std::log(static_cast<double>(k)));
    return std::abs(z.value - (direct.value - head));
}

}  // namespace certzeta
