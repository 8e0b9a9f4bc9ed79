#include <doctest.h>

#include "certzeta/errors.hpp"
#include "certzeta/oracle.hpp"
#include "certzeta/zeta_eval.hpp"
#include "hp_oracle.hpp"
#include "test_support.hpp"

using namespace certzeta;
using testing::rel_diff;

namespace {

bool encloses(const CertifiedValue& v, Complex ref, double rel = 1e-12) {
    return std::abs(v.value - ref) <= v.radius + rel * std::abs(ref);
}

}  // namespace

TEST_CASE("request validation") {
    CHECK_THROWS_AS(hurwitz_zeta({1.0, 5.0}), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta({2.0, -3.0}), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta({2.0, -2.5}), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 3.0, 0.0}), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 3.0, -1.0}), DomainError);
    try {
        hurwitz_zeta({1.0, 5.0});
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("pole") != std::string::npos);
    }
}

TEST_CASE("hurwitz zeta examples") {
    const CertifiedValue z21 = hurwitz_zeta({2.0, 1.0});
    CHECK(encloses(z21, kPi * kPi / 6, 0.0));
    CHECK(z21.radius < 1e-13);
    CHECK(z21.method == Method::shift_truncated);

    const CertifiedValue z0 = hurwitz_zeta({0.0, 3.7});
    CHECK(z0.value == Complex(0.5 - 3.7));
    CHECK(z0.radius == 0.0);

    const CertifiedValue half = hurwitz_zeta({2.0, 0.5});
    CHECK(encloses(half, kPi * kPi / 2, 1e-15));
}

TEST_CASE("method names") {
    CHECK(method_name(Method::truncated) == "truncated");
    CHECK(method_name(Method::exact_expansion) == "exact_expansion");
    CHECK(method_name(Method::shift_truncated) == "shift+truncated");
    CHECK(method_name(Method::direct_sum) == "direct_sum");
}

TEST_CASE("truncated evaluation picks N up to pi|a| and reports the bound") {
    const CertifiedValue v = hurwitz_zeta({2.5, 30.0, 1e-15});
    CHECK(v.method == Method::truncated);
    CHECK(v.N >= 1);
    CHECK(v.N <= static_cast<int>(std::ceil(kPi * 30.0)));
    CHECK_FALSE(v.bound_used.empty());
    const testing::HpOracle o = testing::hp_zeta(2.5, 30.0);
    CHECK(encloses(v, o.value));
    const CertifiedValue forced = hurwitz_zeta({2.5, 30.0, 1e-15, Method::truncated});
    CHECK(forced.method == Method::truncated);
}

TEST_CASE("exact expansion examples") {
    const EvalRequest req{2.5, 3.0};
    const ExactExpansion e = hurwitz_zeta_exact_expansion(req, 3);
    CHECK(e.value.heuristic);
    CHECK(e.value.method == Method::exact_expansion);
    REQUIRE(e.schedule.size() == 3);
    CHECK(e.schedule[0] == 9);
    CHECK(e.schedule[1] == 19);
    CHECK(e.schedule[2] == 28);
    const CertifiedValue ref = shift_then_eval(req, 47);
    CHECK(std::abs(e.value.value - ref.value) < 1e-12);

    const ExactExpansion neg = hurwitz_zeta_exact_expansion({-0.5, 4.0}, 2);
    for (int Nk : neg.schedule) CHECK(-0.5 > 1.0 - 2.0 * Nk);
    CHECK(std::abs(neg.value.value - testing::hp_zeta(-0.5, 4.0).value) < 1e-12);

    const ExactExpansion bnd = hurwitz_zeta_exact_expansion({2.0, Complex(0.0, 2.0)}, 4);
    CHECK(std::abs(bnd.value.value - testing::hp_zeta(2.0, Complex(0.0, 2.0)).value) < 1e-12);
    for (std::size_t k = 0; k + 1 < bnd.k_terms.size(); ++k) {
        const double ratio = std::abs(bnd.k_terms[k + 1]) / std::abs(bnd.k_terms[k]);
        const double model = std::exp(-kTwoPi * 2.0);
        CHECK(ratio < 1e2 * model);
        CHECK(ratio > 1e-2 * model);
    }
    CHECK_THROWS_AS(hurwitz_zeta_exact_expansion({2.0, std::polar(3.0, 0.7 * kPi)}, 2), DomainError);
}

TEST_CASE("exact expansion beats the truncated expansion") {
    // a = 3: the least term e^{-6 pi} is far above roundoff
    const testing::HpOracle o3 = testing::hp_zeta(2.5, 3.0);
    const ExactExpansion e3 = hurwitz_zeta_exact_expansion({2.5, 3.0}, 3);
    double best = INFINITY;
    for (int N = 1; N <= 12; ++N) best = std::min(best, hurwitz_zeta_truncated(2.5, 3.0, N).radius);
    CHECK(std::abs(e3.value.value - o3.value) < best / 1e3);
    // a = 10: the least term is below double roundoff, so the exact value is
    // only checked to roundoff level
    const testing::HpOracle o10 = testing::hp_zeta(2.5, 10.0);
    const ExactExpansion e10 = hurwitz_zeta_exact_expansion({2.5, 10.0}, 3);
    CHECK(std::abs(e10.value.value - o10.value) < 1e-15 * std::abs(o10.value));
}

TEST_CASE("shift examples") {
    const CertifiedValue z3 = shift_then_eval({3.0, 1.0}, 9);
    CHECK(encloses(z3, 1.2020569031595942854, 1e-15));
    CHECK(z3.shift == 9);
    const oracle::Result direct = oracle::zeta_direct(2.0, 0.25, 1000000);
    const CertifiedValue q = shift_then_eval({2.0, 0.25}, 10);
    CHECK(std::abs(q.value - direct.value) <= q.radius + direct.tail_bound + 1e-15);
    const CertifiedValue same = shift_then_eval({2.5, 12.0}, 0);
    const CertifiedValue plain = hurwitz_zeta({2.5, 12.0});
    CHECK(same.value == plain.value);
    CHECK(same.radius == plain.radius);
}

TEST_CASE("Dirichlet tail identity") {
    CHECK(dirichlet_tail_identity_check(2.0, 10) < 1e-12);
    CHECK(dirichlet_tail_identity_check(3.0, 1) < 1e-15);
    CHECK(dirichlet_tail_identity_check(1.5, 50) < 1e-10);
    CHECK_THROWS_AS(dirichlet_tail_identity_check(0.5, 3), DomainError);
}

TEST_CASE("Riemann zeta values") {
    CHECK(encloses(riemann_zeta(2.0), kPi * kPi / 6, 1e-15));
    CHECK(encloses(riemann_zeta(-1.0), -1.0 / 12.0, 1e-14));
    CHECK(riemann_zeta(0.0).value == Complex(-0.5));
    CHECK(riemann_zeta(-2.0).value == Complex(0.0));
    CHECK(encloses(riemann_zeta(0.5), -1.4603545088095868129, 1e-14));
    CHECK(encloses(riemann_zeta(-3.0), 1.0 / 120.0, 1e-13));
}

TEST_CASE("reductions to the Riemann zeta function") {
    for (Complex s : {Complex(2.0), Complex(3.5), Complex(2.0, 4.0)}) {
        const CertifiedValue z = riemann_zeta(s);
        const CertifiedValue one = hurwitz_zeta({s, 1.0});
        const CertifiedValue half = hurwitz_zeta({s, 0.5});
        CHECK(std::abs(one.value - z.value) <= one.radius + z.radius + 1e-11);
        const Complex scale = std::pow(2.0, s) - 1.0;
        CHECK(std::abs(half.value - scale * z.value) <= half.radius + std::abs(scale) * z.radius + 1e-11);
    }
}

TEST_CASE("recurrence in a") {
    testing::Rng rng(83);
    for (int i = 0; i < 40; ++i) {
        const Complex s(rng.uniform(-3.0, 6.0), rng.uniform(-5.0, 5.0));
        if (std::abs(s - 1.0) < 1e-2) continue;
        const Complex a = std::polar(rng.uniform(2.0, 50.0), rng.uniform(-0.5, 0.5) * kPi);
        const CertifiedValue x = hurwitz_zeta({s, a});
        const CertifiedValue y = hurwitz_zeta({s, a + 1.0});
        const Complex step = std::exp(-s * principal_log(a));
        const double scale = std::max({std::abs(x.value), std::abs(y.value), std::abs(step)});
        CHECK(std::abs(x.value - y.value - step) <= x.radius + y.radius + 1e-12 * scale);
    }
}

TEST_CASE("certified enclosure against the extended-precision shift oracle") {
    testing::Rng rng(89);
    for (int i = 0; i < 100; ++i) {
        const Complex s(rng.uniform(-3.0, 6.0), rng.uniform(-5.0, 5.0));
        if (std::abs(s - 1.0) < 1e-3) continue;
        const Complex a = std::polar(rng.uniform(5.0, 100.0), rng.uniform(-0.5, 0.5) * kPi);
        const CertifiedValue v = hurwitz_zeta({s, a});
        const testing::HpOracle o = testing::hp_zeta(s, a);
        INFO("s=", s, " a=", a);
        CHECK(std::abs(v.value - o.value) <= v.radius + o.bound + 1e-12 * std::abs(v.value));
    }
}

TEST_CASE("upper-sector evaluation through the continuation") {
    for (double t : {0.6, 0.8, -0.75, 0.95}) {
        const Complex a = std::polar(6.0, t * kPi);
        const CertifiedValue v = hurwitz_zeta({2.5, a});
        const testing::HpOracle o = testing::hp_zeta(2.5, a);
        INFO("a=", a, " bound=", v.bound_used);
        CHECK(encloses(v, o.value));
    }
}

TEST_CASE("direct-sum method") {
    const CertifiedValue v = hurwitz_zeta({3.0, Complex(2.0, 1.0), 1e-15, Method::direct_sum});
    CHECK(v.method == Method::direct_sum);
    CHECK(encloses(v, testing::hp_zeta(3.0, Complex(2.0, 1.0)).value));
    CHECK_THROWS_AS(hurwitz_zeta({0.5, 2.0, 1e-15, Method::direct_sum}), DomainError);
}
