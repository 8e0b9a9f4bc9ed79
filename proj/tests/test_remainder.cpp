#include <doctest.h>

#include "certzeta/errors.hpp"
#include "certzeta/numeric_core.hpp"
#include "certzeta/remainder.hpp"
#include "certzeta/terminant.hpp"
#include "test_support.hpp"

using namespace certzeta;
using namespace certzeta::remainder;
using testing::rel_diff;

namespace {

// |x - y| within the combined error estimates plus a relative allowance.
bool agree(const Estimate& x, const Estimate& y, double rel) {
    return std::abs(x.value - y.value) <= x.error + y.error + rel * std::max(std::abs(x.value), std::abs(y.value));
}

double first_term_abs(const Context& c) { return std::abs(first_omitted_term(c)); }

}  // namespace

TEST_CASE("context validation") {
    CHECK_NOTHROW(validate({2.0, 3.0, 1}));
    CHECK_THROWS_AS(validate({1.0, 3.0, 1}), DomainError);
    CHECK_THROWS_AS(validate({1.0 + 1e-9, 3.0, 1}), DomainError);
    CHECK_THROWS_AS(validate({-1.0, 3.0, 1}), DomainError);  // Re s > 1 - 2N fails
    CHECK_NOTHROW(validate({-0.9, 3.0, 1}));
    CHECK_THROWS_AS(validate({2.0, 0.0, 1}), DomainError);
    CHECK_THROWS_AS(validate({2.0, -3.0, 1}), DomainError);
    CHECK_THROWS_AS(validate({2.0, 3.0, 0}), DomainError);
    CHECK_THROWS_AS(validate({2.0, 3.0, 65}), DomainError);
}

TEST_CASE("first omitted term") {
    // B_4 / 4! * (3)_3 / 10^4
    CHECK(first_omitted_term({3.0, 10.0, 2}).real() == doctest::Approx(-1.0 / 30.0 / 24.0 * 60.0 / 1e4).epsilon(1e-14));
    CHECK(first_omitted_term({0.0, 10.0, 2}) == Complex(0.0));
}

TEST_CASE("terminant-sum remainder examples") {
    const Estimate t = via_terminants({3.0, 10.0, 2}, 20);
    const Estimate b = via_bernoulli_integral({3.0, 10.0, 2});
    CHECK(agree(t, b, 1e-12));
    CHECK(via_terminants({0.0, 7.0, 1}).value == Complex(0.0));

    // zeta(2, 5) = pi^2/6 - (1 + 1/4 + 1/9 + 1/16); N = 1 leaves only the two leading terms
    const double z25 = kPi * kPi / 6.0 - (1.0 + 0.25 + 1.0 / 9.0 + 1.0 / 16.0);
    const double expected = (z25 - 0.5 / 25.0 - 1.0 / 5.0) * 5.0;
    const Estimate r = via_terminants({2.0, 5.0, 1}, 50);
    CHECK(std::abs(r.value - expected) <= r.error + 1e-14);
    CHECK(r.error < 1e-4 * std::abs(expected));
    const Estimate rauto = via_terminants({2.0, 5.0, 1});
    CHECK(std::abs(rauto.value - expected) <= rauto.error + 1e-15);
}

TEST_CASE("polylog-integral remainder examples") {
    CHECK(agree(via_polylog_integral({2.5, 8.0, 1}), via_terminants({2.5, 8.0, 1}), 1e-10));
    const Context c{2.0, Complex(4.0, 3.0), 2};
    CHECK(rel_diff(via_polylog_integral(c).value, via_bernoulli_integral(c).value) < 1e-9);
    const Estimate pos = via_polylog_integral({3.0, 10.0, 1});
    CHECK(pos.value.real() > 0.0);
    CHECK(pos.value.real() < first_omitted_term({3.0, 10.0, 1}).real());
    CHECK_THROWS_AS(via_polylog_integral({2.0, Complex(-1.0, 3.0), 1}), DomainError);
    CHECK_THROWS_AS(via_polylog_integral({-1.0, 5.0, 2}), DomainError);
}

TEST_CASE("Bernoulli-integral remainder examples") {
    const Estimate r = via_bernoulli_integral({2.0, 3.0, 1});
    CHECK(std::abs(r.value.imag()) < 1e-16);
    CHECK(r.value.real() > 0.0);
    CHECK(r.value.real() <= first_omitted_term({2.0, 3.0, 1}).real());
    CHECK(via_bernoulli_integral({0.0, 5.0, 3}).value == Complex(0.0));
    const Context c{1.5, std::polar(20.0, kPi / 3), 2};
    CHECK(rel_diff(via_bernoulli_integral(c).value, via_terminants(c).value) < 1e-9);
}

TEST_CASE("terminant-sup bound examples") {
    const double pref = 1.0 / 30.0 / 24.0 * 60.0 / 1e4;
    CHECK(bound_terminant_sup({3.0, 10.0, 2}) == doctest::Approx(pref).epsilon(1e-14));
    const double boundary = bound_terminant_sup({3.0, Complex(0.0, 10.0), 2});
    CHECK(boundary <= pref * (1.0 + 0.5 * chi(6.0)) * (1 + 1e-14));
    CHECK(boundary == doctest::Approx(pref * terminant::sup_bound(6.0, 0.5 * kPi)).epsilon(1e-14));
    const double upper = bound_terminant_sup({3.0, std::polar(10.0, 0.7 * kPi), 2});
    CHECK(upper == doctest::Approx(pref * terminant::sup_bound(6.0, 0.7 * kPi)).epsilon(1e-14));
}

TEST_CASE("real-order piecewise bound examples") {
    const double pref = 1.0 / 30.0 / 24.0 * 60.0 / 1e4;
    const auto c1 = bound_real_order({3.0, 10.0, 2});
    REQUIRE(c1);
    CHECK(c1->sector_case == 1);
    CHECK(c1->value == doctest::Approx(pref).epsilon(1e-14));
    const auto c2 = bound_real_order({3.0, Complex(0.0, 10.0), 2});
    REQUIRE(c2);
    CHECK(c2->sector_case == 2);
    CHECK(c2->value == doctest::Approx(pref * (1.0 + 0.5 * chi(6.0))).epsilon(1e-13));
    const double th = 0.7 * kPi;
    const auto c3 = bound_real_order({3.0, std::polar(10.0, th), 2});
    REQUIRE(c3);
    CHECK(c3->sector_case == 3);
    const double third = std::sqrt(kTwoPi * 6.0) / (2.0 * std::pow(std::sin(th), 6.0)) + 1.0 + 0.5 * chi(6.0);
    CHECK(c3->value == doctest::Approx(pref * third).epsilon(1e-13));
    CHECK_FALSE(bound_real_order({Complex(3.0, 1.0), 10.0, 2}));
}

TEST_CASE("secant bound examples") {
    const Context real{2.5, 7.0, 3};
    CHECK(bound_secant(real) == doctest::Approx(first_term_abs(real)).epsilon(1e-14));
    const Context bnd{3.0, Complex(0.0, 10.0), 2};
    CHECK(bound_secant(bnd) == doctest::Approx(first_term_abs(bnd) * std::pow(1.0 / std::cos(kPi / 4), 7)).epsilon(1e-13));
    const Context cplx{Complex(3.0, 4.0), std::polar(10.0, -kPi / 4), 1};
    const Complex p = cplx.s + 1.0;
    const double expect = first_term_abs(cplx) * std::abs(p) / p.real() * std::pow(1.0 / std::cos(kPi / 8), 5.0) *
                          std::exp(kPi);
    CHECK(bound_secant(cplx) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("chi-form bound examples") {
    const auto b = bound_chi({2.0, 6.0, 1});
    REQUIRE(b);
    CHECK(*b == doctest::Approx(1.0 / 12.0 * 2.0 / 36.0 * (1.0 + chi(3.0))).epsilon(1e-14));
    testing::Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        const Context c{rng.uniform(-0.9, 20.0), std::polar(rng.uniform(2.0, 50.0), rng.uniform(-0.5, 0.5) * kPi),
                        rng.integer(1, 6)};
        if (std::abs(c.s - 1.0) < 1e-3) continue;
        const auto chi_b = bound_chi(c);
        const auto real_b = bound_real_order(c);
        REQUIRE(chi_b);
        REQUIRE(real_b);
        CHECK(*chi_b > real_b->value);
    }
    const auto far = bound_chi({Complex(0.5, 10.0), 9.0, 1});
    REQUIRE(far);
    CHECK(std::isfinite(*far));
    CHECK_FALSE(bound_chi({2.0, std::polar(5.0, 0.6 * kPi), 1}));
}

TEST_CASE("theta lies strictly between 0 and 1") {
    for (auto c : {Context{2.0, 5.0, 1}, Context{2.0, 100.0, 1}, Context{-0.5, 3.0, 2}}) {
        const Envelope e = first_term_envelope(c);
        CHECK(e.theta > 0.0);
        CHECK(e.theta < 1.0);
    }
    testing::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const int N = rng.integer(1, 8);
        double s = rng.uniform(1.0 - 2 * N + 0.1, 30.0);
        if (std::abs(s - 1.0) < 1e-3) s += 0.01;
        const Envelope e = first_term_envelope({s, rng.uniform(2.0, 100.0), N});
        INFO("s=", s, " N=", N);
        CHECK(e.theta > 0.0);
        CHECK(e.theta < 1.0);
    }
    CHECK_THROWS_AS(first_term_envelope({Complex(2.0, 1.0), 5.0, 1}), DomainError);
}

TEST_CASE("continuation across the negative axis") {
    const Context c{2.5, std::polar(5.0, 0.8 * kPi), 1};
    CHECK(rel_diff(continue_across_pi(c, -1).value, via_bernoulli_integral(c).value) < 1e-8);
    const Context lower{2.5, std::polar(5.0, -0.8 * kPi), 1};
    CHECK(rel_diff(continue_across_pi(lower, 1).value, via_bernoulli_integral(lower).value) < 1e-8);
    CHECK_THROWS_AS(continue_across_pi(c, 1), DomainError);
    CHECK_THROWS_AS(continue_across_pi(lower, -1), DomainError);
    CHECK_THROWS_AS(continue_across_pi(c, 0), DomainError);

    const Context zero{0.0, std::polar(4.0, 0.9 * kPi), 2};
    CHECK(continue_across_pi(zero, -1).value == via_terminants({0.0, -zero.a, 2}).value);

    // correction = (2 pi)^2 a Li_{-1}(e^{-2 pi i a}) / Gamma(2), with Li_{-1}(x) = x / (1 - x)^2
    const Context two{2.0, std::polar(3.0, 0.9 * kPi), 2};
    const Estimate full = continue_across_pi(two, -1);
    CHECK(std::isfinite(std::abs(full.value)));
    const Complex x = std::exp(Complex(0.0, -kTwoPi) * two.a);
    const double correction = kTwoPi * kTwoPi * std::abs(two.a) * std::abs(x / ((1.0 - x) * (1.0 - x)));
    const Complex inner = via_terminants({2.0, -two.a, 2}).value;
    CHECK(std::abs(full.value - inner) == doctest::Approx(correction).epsilon(1e-10));
    CHECK(rel_diff(full.value, via_bernoulli_integral(two).value) < 1e-8);
}

TEST_CASE("weight integral and integer-order zeta helpers") {
    // zeta(2, 1) and zeta(4, 3)
    const Estimate z2 = integer_order_zeta(2, 1.0);
    CHECK(std::abs(z2.value.real() - kPi * kPi / 6) <= z2.error + 1e-15);
    const Estimate z4 = integer_order_zeta(4, 3.0);
    CHECK(std::abs(z4.value.real() - (std::pow(kPi, 4) / 90 - 1 - 1.0 / 16)) <= z4.error + 1e-15);
    CHECK_THROWS_AS(integer_order_zeta(1, 2.0), DomainError);
    CHECK_THROWS_AS(bernoulli_weight_integral(1, 1.0, 2.0), DomainError);
}

TEST_CASE("three representations agree on a grid") {
    testing::Rng rng(53);
    int checked = 0;
    for (int i = 0; i < 50; ++i) {
        const int N = rng.integer(1, 5);
        const Complex s(rng.uniform(1.5 - 2 * N, 8.0), i % 3 == 0 ? 0.0 : rng.uniform(-4.0, 4.0));
        if (std::abs(s - 1.0) < 0.05 || is_nonpositive_integer(s)) continue;
        const double arg = rng.uniform(-0.45, 0.45) * kPi;
        const Context c{s, std::polar(rng.uniform(2.0, 30.0), arg), N};
        const Estimate t = via_terminants(c);
        const Estimate b = via_bernoulli_integral(c);
        const Estimate p = via_polylog_integral(c);
        INFO("s=", c.s, " a=", c.a, " N=", N);
        CHECK(rel_diff(t.value, b.value) < 1e-9);
        CHECK(rel_diff(t.value, p.value) < 1e-9);
        CHECK(rel_diff(b.value, p.value) < 1e-9);
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("every reported bound dominates the true remainder") {
    testing::Rng rng(59);
    for (int i = 0; i < 150; ++i) {
        const int N = rng.integer(1, 8);
        const Complex s(rng.uniform(1.2 - 2 * N, 12.0), i % 2 ? 0.0 : rng.uniform(-5.0, 5.0));
        if (std::abs(s - 1.0) < 0.05) continue;
        const Context c{s, std::polar(rng.uniform(1.0, 40.0), rng.uniform(-0.97, 0.97) * kPi), N};
        const BoundReport r = report(c, true);
        REQUIRE(r.true_remainder);
        const double truth = std::abs(r.true_remainder->value);
        INFO("s=", c.s, " a=", c.a, " N=", N);
        CHECK(r.terminant_sup >= truth - 1e-12);
        CHECK(r.secant >= truth - 1e-12);
        if (r.chi_form) CHECK(*r.chi_form >= truth - 1e-12);
        if (r.real_order) CHECK(r.real_order->value >= truth - 1e-12);
        if (r.gamma_ratio) CHECK(*r.gamma_ratio >= truth - 1e-12);
        if (r.near_boundary) CHECK(*r.near_boundary >= truth - 1e-12);
        CHECK(r.best() >= truth - 1e-12);
    }
}

TEST_CASE("terminant-sup bound equals the first omitted term in the core sector") {
    testing::Rng rng(61);
    for (int i = 0; i < 50; ++i) {
        const int N = rng.integer(1, 10);
        const double s = rng.uniform(1.1 - 2 * N, 20.0);
        const Context c{s, std::polar(rng.uniform(1.0, 100.0), rng.uniform(-0.25, 0.25) * kPi), N};
        CHECK(rel_diff(bound_terminant_sup(c), first_term_abs(c)) < 1e-14);
    }
}

TEST_CASE("half-angle modulus inequality") {
    testing::Rng rng(67);
    for (int i = 0; i < 1000; ++i) {
        const double t = rng.uniform(0.0, 50.0);
        const Complex a = std::polar(rng.uniform(0.01, 50.0), rng.uniform(-0.999, 0.999) * kPi);
        const double lhs = std::norm(t + a);
        const double c = std::cos(0.5 * std::arg(a));
        const double rhs = (t + std::abs(a)) * (t + std::abs(a)) * c * c;
        CHECK(lhs >= rhs * (1 - 1e-14));
    }
}

TEST_CASE("complex power modulus inequality") {
    testing::Rng rng(71);
    for (int i = 0; i < 1000; ++i) {
        const double t = rng.uniform(0.0, 50.0);
        const Complex a = std::polar(rng.uniform(0.01, 50.0), rng.uniform(-0.999, 0.999) * kPi);
        const Complex s(rng.uniform(-5.0, 10.0), rng.uniform(-10.0, 10.0));
        const int N = rng.integer(1, 6);
        const Complex q = s + 2.0 * N;
        const double lhs = 1.0 / std::abs(std::exp(q * principal_log(t + a)));
        const double rhs = std::pow(std::abs(t + a), -q.real()) * std::max(1.0, std::exp(s.imag() * std::arg(a)));
        CHECK(lhs <= rhs * (1 + 1e-12));
    }
}
