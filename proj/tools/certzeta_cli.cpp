#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "certzeta/certzeta.h"

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

const char* kComplexHelp = "complex literal [+-]float[+-]floati, e.g. 2, 2+3i, -0.5-1i, 10i";

using Context = std::unique_ptr<certzeta_context, decltype(&certzeta_context_free)>;

struct Failure {
    int code;
    std::string message;
};

int exit_code(certzeta_status st) {
    switch (st) {
        case CERTZETA_OK: return 0;
        case CERTZETA_ERR_DOMAIN:
        case CERTZETA_ERR_ARGUMENT: return kExitDomain;
        case CERTZETA_ERR_IO: return kExitIo;
        default: return kExitNumeric;
    }
}

void check(certzeta_context* ctx, certzeta_status st) {
    if (st != CERTZETA_OK) throw Failure{exit_code(st), certzeta_last_error(ctx)};
}

certzeta_complex parse(certzeta_context* ctx, const std::string& text, const char* flag) {
    certzeta_complex z{};
    const certzeta_status st = certzeta_parse_complex(ctx, text.c_str(), &z);
    if (st != CERTZETA_OK) throw Failure{kExitDomain, std::string(flag) + ": " + certzeta_last_error(ctx)};
    return z;
}

std::string fmt(certzeta_context* ctx, certzeta_complex z) {
    char buf[128];
    check(ctx, certzeta_format_complex(ctx, z, buf, sizeof buf));
    return buf;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

// lo:hi:count
void parse_range(const std::string& text, const char* flag, double& lo, double& hi, int& count) {
    const std::vector<std::string> parts = split(text, ':');
    try {
        if (parts.size() == 1) {
            lo = hi = std::stod(parts[0]);
            count = 1;
            return;
        }
        if (parts.size() == 3) {
            lo = std::stod(parts[0]);
            hi = std::stod(parts[1]);
            count = std::stoi(parts[2]);
            return;
        }
    } catch (const std::exception&) {
    }
    throw Failure{kExitDomain, std::string(flag) + ": expected lo:hi:count or a single value"};
}

struct EvalArgs {
    std::string s, a;
    double eps = 1e-15;
    std::string method = "auto";
    bool json = false;
};

int cmd_eval(certzeta_context* ctx, const EvalArgs& args) {
    const certzeta_complex s = parse(ctx, args.s, "--s");
    const certzeta_complex a = parse(ctx, args.a, "--a");
    certzeta_method m = CERTZETA_METHOD_AUTO;
    if (args.method == "truncated") m = CERTZETA_METHOD_TRUNCATED;
    else if (args.method == "exact") m = CERTZETA_METHOD_EXACT;
    else if (args.method == "shift") m = CERTZETA_METHOD_SHIFT;
    certzeta_result r{};
    check(ctx, certzeta_eval(ctx, s, a, args.eps, m, &r));
    if (args.json) {
        nlohmann::ordered_json j;
        j["re"] = r.value.re;
        j["im"] = r.value.im;
        j["radius"] = r.radius;
        j["method"] = certzeta_method_name(r.method);
        j["N"] = r.N;
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "value   " << fmt(ctx, r.value) << '\n'
              << "radius  " << fmt(r.radius) << (r.heuristic ? " (heuristic)" : "") << '\n'
              << "method  " << certzeta_method_name(r.method) << '\n'
              << "N       " << r.N << '\n'
              << "bound   " << r.bound_used << '\n';
    if (r.method == CERTZETA_METHOD_SHIFT) std::cout << "shift   " << r.shift << '\n';
    return 0;
}

struct BoundsArgs {
    std::string s, a;
    int N = 1;
    bool with_truth = false;
};

int cmd_bounds(certzeta_context* ctx, const BoundsArgs& args) {
    const certzeta_complex s = parse(ctx, args.s, "--s");
    const certzeta_complex a = parse(ctx, args.a, "--a");
    certzeta_bounds b{};
    check(ctx, certzeta_bounds_report(ctx, s, a, args.N, args.with_truth ? 1 : 0, &b));
    const double truth = b.has_truth ? std::hypot(b.truth.re, b.truth.im) : 0.0;
    std::cout << "s           " << fmt(ctx, s) << '\n'
              << "a           " << fmt(ctx, a) << '\n'
              << "N           " << args.N << '\n'
              << "first_term  " << fmt(ctx, b.first_omitted) << '\n';
    if (b.has_truth) std::cout << "truth       " << fmt(ctx, b.truth) << "  |truth| " << fmt(truth) << '\n';
    std::cout << "bound,value,ratio\n";
    auto row = [&](const char* name, double v, const std::string& note = "") {
        std::cout << name << ',' << fmt(v) << ',';
        if (b.has_truth && truth > 0.0) std::cout << fmt(v / truth);
        std::cout << note << '\n';
    };
    row("eq12", b.eq12);
    row("eq111", b.eq111);
    if (b.has_eq113) row("eq113", b.eq113);
    if (b.has_eq892) row("eq892", b.eq892, ",case " + std::to_string(b.case892));
    if (b.has_eq414) row("eq414", b.eq414);
    if (b.has_eq779) row("eq779", b.eq779);
    const double arg = std::atan2(a.im, a.re);
    if (std::abs(arg) > 0.5 * M_PI)
        std::cout << "warning: unrealistic sector (|arg a| > pi/2); prefer continuation across the negative axis\n";
    return 0;
}

struct SweepArgs {
    std::string s_list, mod, arg, N_list, output;
    bool no_truth = false;
};

int cmd_sweep(certzeta_context* ctx, const SweepArgs& args) {
    std::vector<certzeta_complex> s;
    for (const std::string& t : split(args.s_list, ',')) s.push_back(parse(ctx, t, "--s-list"));
    std::vector<int> N;
    for (const std::string& t : split(args.N_list, ',')) {
        try {
            std::size_t used = 0;
            N.push_back(std::stoi(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw Failure{kExitDomain, "--N-list: not an integer: " + t};
        }
    }
    certzeta_sweep_spec spec{};
    spec.s_list = s.data();
    spec.s_count = s.size();
    parse_range(args.mod, "--mod", spec.mod_lo, spec.mod_hi, spec.mod_count);
    parse_range(args.arg, "--arg", spec.arg_lo, spec.arg_hi, spec.arg_count);
    spec.N_list = N.data();
    spec.N_count = N.size();
    spec.with_truth = args.no_truth ? 0 : 1;
    check(ctx, certzeta_sweep_csv(ctx, &spec, args.output.c_str()));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified Hurwitz zeta evaluation and remainder bounds"};
    app.require_subcommand(1);

    EvalArgs ev;
    CLI::App* eval = app.add_subcommand("eval", "evaluate zeta(s, a) with a certified radius");
    eval->add_option("--s", ev.s, kComplexHelp)->required();
    eval->add_option("--a", ev.a, kComplexHelp)->required();
    eval->add_option("--eps", ev.eps, "target truncation radius")->check(CLI::PositiveNumber);
    eval->add_option("--method", ev.method, "auto, truncated, exact or shift")
        ->check(CLI::IsMember({"auto", "truncated", "exact", "shift"}));
    eval->add_flag("--json", ev.json, "print {re, im, radius, method, N} as JSON");

    BoundsArgs bo;
    CLI::App* bounds = app.add_subcommand("bounds", "print every applicable remainder bound");
    bounds->add_option("--s", bo.s, kComplexHelp)->required();
    bounds->add_option("--a", bo.a, kComplexHelp)->required();
    bounds->add_option("--N", bo.N, "truncation index")->required();
    bounds->add_flag("--with-truth", bo.with_truth, "also compute the remainder itself");

    SweepArgs sw;
    CLI::App* sweep = app.add_subcommand("sweep", "write a bound sharpness grid as CSV");
    sweep->add_option("--s-list", sw.s_list, "comma-separated complex literals")->required();
    sweep->add_option("--mod", sw.mod, "|a| range lo:hi:count")->required();
    sweep->add_option("--arg", sw.arg, "arg a range lo:hi:count, radians in (-pi, pi)")->required();
    sweep->add_option("--N-list", sw.N_list, "comma-separated truncation indices")->required();
    sweep->add_option("--output", sw.output, "CSV path")->required();
    sweep->add_flag("--no-truth", sw.no_truth, "leave true_abs and the ratios empty");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitDomain;
    }

    Context ctx(certzeta_context_new(), &certzeta_context_free);
    if (!ctx) {
        std::cerr << "error: out of memory\n";
        return kExitNumeric;
    }
    try {
        if (*eval) return cmd_eval(ctx.get(), ev);
        if (*bounds) return cmd_bounds(ctx.get(), bo);
        if (*sweep) return cmd_sweep(ctx.get(), sw);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return kExitNumeric;
}
