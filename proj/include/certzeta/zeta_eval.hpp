#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "certzeta/numeric_core.hpp"

namespace certzeta {

enum class Method { automatic, truncated, exact_expansion, shift_truncated, direct_sum };

/// "truncated", "exact_expansion", "shift+truncated", "direct_sum".
std::string_view method_name(Method m);

struct CertifiedValue {
    Complex value;
    double radius = 0.0;  // rigorous unless heuristic is set
    Method method = Method::truncated;
    std::string bound_used;  // e.g. "eq12", "eq113", "eq892", "direct_tail"
    int N = 0;
    std::int64_t shift = 0;
    bool heuristic = false;
};

struct EvalRequest {
    Complex s;
    Complex a;
    double target_radius = 1e-15;
    Method method = Method::automatic;
};

/// Throws DomainError for s = 1, a = 0, a on the negative real axis or at a
/// nonpositive integer, or a non-positive target radius.
void validate_request(const EvalRequest& req);

/// Certified zeta(s, a).
CertifiedValue hurwitz_zeta(const EvalRequest& req);

/// The truncated expansion at a fixed N with the least applicable bound.
/// For pi/2 < |arg a| < pi the remainder is continued across the negative
/// axis when the polylogarithm there converges.
CertifiedValue hurwitz_zeta_truncated(Complex s, Complex a, int N);

struct ExactExpansion {
    CertifiedValue value;            // radius tagged heuristic
    std::vector<Complex> k_terms;    // terminant contribution of each k
    std::vector<int> schedule;       // N_k
};

/// Exponentially improved expansion with N_k = max(1, round(pi |a| k)),
/// |arg a| <= pi/2.
ExactExpansion hurwitz_zeta_exact_expansion(const EvalRequest& req, int k_max);

/// sum_{n<M} (n + a)^{-s} + zeta(s, a + M).
CertifiedValue shift_then_eval(const EvalRequest& req, std::int64_t M);
/// Shift by the smallest M with |a + M| >= max(10, |Im s|).
CertifiedValue shift_then_eval(const EvalRequest& req);

/// Riemann zeta(z), z != 1; reflection for Re(z) < 1/2.
CertifiedValue riemann_zeta(Complex z);

/// |zeta(s, n) - (zeta_direct(s) - sum_{k<n} k^{-s})|, Re(s) > 1.
double dirichlet_tail_identity_check(Complex s, std::int64_t n);

}  // namespace certzeta
