#include <doctest.h>

#include "certzeta/errors.hpp"
#include "certzeta/oracle.hpp"
#include "certzeta/zeta_eval.hpp"
#include "test_support.hpp"

using namespace certzeta;

TEST_CASE("direct summation examples") {
    const oracle::Result z2 = oracle::zeta_direct(2.0, 1.0, 1000000);
    CHECK(std::abs(z2.value - kPi * kPi / 6) <= z2.tail_bound + 1e-15);
    CHECK(z2.tail_bound < 1e-6);
    CHECK(z2.effort == 1000000);
    const oracle::Result z4 = oracle::zeta_direct(4.0, 1.0, 10000);
    CHECK(std::abs(z4.value - std::pow(kPi, 4) / 90) <= z4.tail_bound + 1e-15);
    const oracle::Result z22 = oracle::zeta_direct(2.0, 2.0, 100000);
    CHECK(std::abs(z22.value - (kPi * kPi / 6 - 1.0)) <= z22.tail_bound + 1e-15);
    const oracle::Result automatic = oracle::zeta_direct(3.0, Complex(2.0, 5.0));
    CHECK(automatic.tail_bound < 1e-14 * std::abs(automatic.value));
}

TEST_CASE("direct summation refuses slowly convergent orders") {
    CHECK_THROWS_AS(oracle::zeta_direct(1.0005, 1.0, 100), DomainError);
    CHECK_THROWS_AS(oracle::zeta_direct(Complex(0.5, 3.0), 1.0, 100), DomainError);
}

TEST_CASE("partial sum bound is honest") {
    const oracle::Result p = oracle::zeta_partial_sum(2.0, 1.0, 1000);
    const double missing = kPi * kPi / 6 - p.value.real();
    CHECK(missing > 0.0);
    CHECK(missing <= p.tail_bound);
}

TEST_CASE("doubling the term count stays within the previous tail bound") {
    testing::Rng rng(113);
    for (int i = 0; i < 30; ++i) {
        const Complex s(rng.uniform(1.2, 6.0), rng.uniform(-10.0, 10.0));
        const Complex a = std::polar(rng.uniform(0.3, 20.0), rng.uniform(-0.9, 0.9) * kPi);
        const std::int64_t n = rng.integer(10, 2000);
        const oracle::Result x = oracle::zeta_direct(s, a, n);
        const oracle::Result y = oracle::zeta_direct(s, a, 2 * n);
        INFO("s=", s, " a=", a, " n=", n);
        CHECK(std::abs(x.value - y.value) <= x.tail_bound + 1e-14 * std::abs(x.value));
    }
}

TEST_CASE("finite difference examples") {
    const Complex d = oracle::finite_difference_s([](Complex s) { return s * s; }, 3.0, 1e-3);
    CHECK(std::abs(d - 6.0) < 1e-9);

    // -sum log(n + 10) / (n + 10)^2, with the integral of log x / x^2 from the midpoint as tail
    const int K = 2000000;
    double sum = 0.0;
    for (int n = K - 1; n >= 0; --n) sum += std::log(n + 10.0) / ((n + 10.0) * (n + 10.0));
    const double X = K + 10.0 - 0.5;
    sum += (std::log(X) + 1.0) / X;
    auto zeta10 = [](Complex s) { return hurwitz_zeta({s, 10.0}).value; };
    CHECK(std::abs(oracle::finite_difference_s(zeta10, 2.0, 1e-3) + sum) < 1e-7);
}

TEST_CASE("Euler constant") {
    const oracle::Result g = oracle::euler_gamma();
    CHECK(std::abs(g.value.real() - 0.57721566490153286061) <= g.tail_bound + 1e-16);
    CHECK(g.tail_bound < 1e-13);
}
