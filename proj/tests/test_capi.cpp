#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "certzeta/certzeta.h"

namespace {

struct Ctx {
    certzeta_context* ptr = certzeta_context_new();
    ~Ctx() { certzeta_context_free(ptr); }
};

certzeta_complex cz(double re, double im = 0.0) { return {re, im}; }

}  // namespace

TEST_CASE("context lifecycle") {
    certzeta_context* ctx = certzeta_context_new();
    REQUIRE(ctx != nullptr);
    CHECK(std::string(certzeta_last_error(ctx)).empty());
    certzeta_context_free(ctx);
    certzeta_context_free(nullptr);
}

TEST_CASE("evaluation and error codes") {
    Ctx c;
    certzeta_result r{};
    REQUIRE(certzeta_eval(c.ptr, cz(2.0), cz(1.0), 1e-15, CERTZETA_METHOD_AUTO, &r) == CERTZETA_OK);
    CHECK(std::abs(r.value.re - M_PI * M_PI / 6) <= r.radius);
    CHECK(std::string(certzeta_method_name(r.method)) == "shift+truncated");
    CHECK(r.shift > 0);

    CHECK(certzeta_eval(c.ptr, cz(0.0), cz(3.7), 1e-15, CERTZETA_METHOD_AUTO, &r) == CERTZETA_OK);
    CHECK(r.value.re == 0.5 - 3.7);
    CHECK(r.radius == 0.0);

    CHECK(certzeta_eval(c.ptr, cz(1.0), cz(5.0), 1e-15, CERTZETA_METHOD_AUTO, &r) == CERTZETA_ERR_DOMAIN);
    CHECK(std::string(certzeta_last_error(c.ptr)).find("pole") != std::string::npos);
    CHECK(certzeta_eval(c.ptr, cz(2.0), cz(5.0), 1e-15, CERTZETA_METHOD_AUTO, nullptr) == CERTZETA_ERR_ARGUMENT);
    CHECK(certzeta_eval(nullptr, cz(2.0), cz(5.0), 1e-15, CERTZETA_METHOD_AUTO, &r) == CERTZETA_ERR_ARGUMENT);
    CHECK(certzeta_eval(c.ptr, cz(2.0), cz(5.0), 1e-15, static_cast<certzeta_method>(42), &r) ==
          CERTZETA_ERR_ARGUMENT);

    REQUIRE(certzeta_eval(c.ptr, cz(2.5), cz(3.0), 1e-15, CERTZETA_METHOD_EXACT, &r) == CERTZETA_OK);
    CHECK(r.heuristic != 0);
    CHECK(r.method == CERTZETA_METHOD_EXACT);
}

TEST_CASE("complex parsing and formatting") {
    Ctx c;
    certzeta_complex z{};
    REQUIRE(certzeta_parse_complex(c.ptr, "-0.5-1i", &z) == CERTZETA_OK);
    CHECK(z.re == -0.5);
    CHECK(z.im == -1.0);
    CHECK(certzeta_parse_complex(c.ptr, "2+3j", &z) == CERTZETA_ERR_DOMAIN);
    CHECK(certzeta_parse_complex(c.ptr, nullptr, &z) == CERTZETA_ERR_ARGUMENT);
    char buf[64];
    REQUIRE(certzeta_format_complex(c.ptr, cz(2.0, 3.0), buf, sizeof buf) == CERTZETA_OK);
    CHECK(std::string(buf) == "2+3i");
    CHECK(certzeta_format_complex(c.ptr, cz(1.0 / 3.0, 1.0 / 7.0), buf, 4) == CERTZETA_ERR_ARGUMENT);
}

TEST_CASE("bound report") {
    Ctx c;
    certzeta_bounds b{};
    REQUIRE(certzeta_bounds_report(c.ptr, cz(3.0), cz(10.0), 2, 1, &b) == CERTZETA_OK);
    CHECK(b.has_truth);
    const double truth = std::hypot(b.truth.re, b.truth.im);
    CHECK(b.eq12 >= truth);
    CHECK(b.eq111 >= truth);
    CHECK(b.has_eq113);
    CHECK(b.eq113 >= truth);
    CHECK(b.has_eq892);
    CHECK(b.case892 == 1);
    CHECK(b.eq892 >= truth);
    CHECK(b.eq12 == doctest::Approx(1.0 / 30.0 / 24.0 * 60.0 / 1e4).epsilon(1e-14));

    REQUIRE(certzeta_bounds_report(c.ptr, cz(3.0), cz(-7.0, 3.0), 2, 0, &b) == CERTZETA_OK);
    CHECK_FALSE(b.has_truth);
    CHECK_FALSE(b.has_eq113);
    CHECK(b.case892 == 3);
    CHECK(certzeta_bounds_report(c.ptr, cz(-4.0), cz(10.0), 2, 0, &b) == CERTZETA_ERR_DOMAIN);
}

TEST_CASE("derived functions and terminants") {
    Ctx c;
    certzeta_result r{};
    REQUIRE(certzeta_derived(c.ptr, CERTZETA_LOG_BARNES_G_V1, cz(3.0), 0, 1, &r) == CERTZETA_OK);
    CHECK(std::abs(r.value.re - std::log(2.0)) <= r.radius + 1e-11);
    REQUIRE(certzeta_derived(c.ptr, CERTZETA_POLYGAMMA, cz(1.0), 0, 1, &r) == CERTZETA_OK);
    CHECK(std::abs(r.value.re - M_PI * M_PI / 6) <= r.radius + 1e-11);
    CHECK(certzeta_derived(c.ptr, CERTZETA_DZETA_MINUS2, cz(10.0), 1, 1, &r) == CERTZETA_ERR_DOMAIN);
    CHECK(certzeta_derived(c.ptr, static_cast<certzeta_function>(9), cz(10.0), 0, 1, &r) == CERTZETA_ERR_ARGUMENT);

    certzeta_complex v{};
    double err = 0.0;
    REQUIRE(certzeta_terminant(c.ptr, cz(3.0), cz(50.0), &v, &err) == CERTZETA_OK);
    CHECK(v.re > 0.0);
    CHECK(v.re < 1.0);
    CHECK(err < 1e-12);
    CHECK(certzeta_terminant(c.ptr, cz(0.0), cz(5.0), &v, &err) == CERTZETA_ERR_DOMAIN);
}

TEST_CASE("sweep to CSV") {
    Ctx c;
    const certzeta_complex s[] = {cz(2.0), cz(2.5, 1.0)};
    const int N[] = {1, 2};
    certzeta_sweep_spec spec{};
    spec.s_list = s;
    spec.s_count = 2;
    spec.mod_lo = 5.0;
    spec.mod_hi = 10.0;
    spec.mod_count = 2;
    spec.arg_lo = 0.0;
    spec.arg_hi = 1.0;
    spec.arg_count = 2;
    spec.N_list = N;
    spec.N_count = 2;
    spec.with_truth = 1;
    const std::string path = "capi_sweep_test.csv";
    REQUIRE(certzeta_sweep_csv(c.ptr, &spec, path.c_str()) == CERTZETA_OK);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1 + 16);
    std::remove(path.c_str());

    CHECK(certzeta_sweep_csv(c.ptr, &spec, "/nonexistent-dir/x.csv") == CERTZETA_ERR_IO);
    spec.N_count = 0;
    CHECK(certzeta_sweep_csv(c.ptr, &spec, path.c_str()) == CERTZETA_ERR_DOMAIN);
    CHECK(certzeta_sweep_csv(c.ptr, nullptr, path.c_str()) == CERTZETA_ERR_ARGUMENT);
}
