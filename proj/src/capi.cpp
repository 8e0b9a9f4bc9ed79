#include <cstring>
#include <fstream>
#include <new>
#include <stdexcept>
#include <string>

#include "certzeta/certzeta.h"
#include "certzeta/derived.hpp"
#include "certzeta/errors.hpp"
#include "certzeta/remainder.hpp"
#include "certzeta/report.hpp"
#include "certzeta/terminant.hpp"
#include "certzeta/zeta_eval.hpp"

struct certzeta_context {
    std::string last_error;
};

namespace {

using certzeta::Complex;

struct BadArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex to_cpp(certzeta_complex z) { return {z.re, z.im}; }
certzeta_complex to_c(Complex z) { return {z.real(), z.imag()}; }

certzeta::Method to_method(certzeta_method m) {
    switch (m) {
        case CERTZETA_METHOD_TRUNCATED: return certzeta::Method::truncated;
        case CERTZETA_METHOD_EXACT: return certzeta::Method::exact_expansion;
        case CERTZETA_METHOD_SHIFT: return certzeta::Method::shift_truncated;
        case CERTZETA_METHOD_DIRECT: return certzeta::Method::direct_sum;
        case CERTZETA_METHOD_AUTO: return certzeta::Method::automatic;
    }
    throw BadArgument("unknown method");
}

certzeta_method from_method(certzeta::Method m) {
    switch (m) {
        case certzeta::Method::truncated: return CERTZETA_METHOD_TRUNCATED;
        case certzeta::Method::exact_expansion: return CERTZETA_METHOD_EXACT;
        case certzeta::Method::shift_truncated: return CERTZETA_METHOD_SHIFT;
        case certzeta::Method::direct_sum: return CERTZETA_METHOD_DIRECT;
        case certzeta::Method::automatic: break;
    }
    return CERTZETA_METHOD_AUTO;
}

void fill(const certzeta::CertifiedValue& v, certzeta_result* out) {
    out->value = to_c(v.value);
    out->radius = v.radius;
    out->method = from_method(v.method);
    out->N = v.N;
    out->shift = v.shift;
    out->heuristic = v.heuristic ? 1 : 0;
    std::memset(out->bound_used, 0, sizeof out->bound_used);
    std::strncpy(out->bound_used, v.bound_used.c_str(), sizeof out->bound_used - 1);
}

template <class F>
certzeta_status guarded(certzeta_context* ctx, F&& body) {
    if (ctx == nullptr) return CERTZETA_ERR_ARGUMENT;
    ctx->last_error.clear();
    try {
        return body();
    } catch (const certzeta::DomainError& e) {
        ctx->last_error = e.what();
        return CERTZETA_ERR_DOMAIN;
    } catch (const BadArgument& e) {
        ctx->last_error = e.what();
        return CERTZETA_ERR_ARGUMENT;
    } catch (const certzeta::NumericError& e) {
        ctx->last_error = e.what();
        return CERTZETA_ERR_NUMERIC;
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return CERTZETA_ERR_INTERNAL;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return CERTZETA_ERR_INTERNAL;
    }
}

certzeta_status null_argument(certzeta_context* ctx, const char* what) {
    ctx->last_error = std::string("null argument: ") + what;
    return CERTZETA_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

certzeta_context* certzeta_context_new(void) { return new (std::nothrow) certzeta_context(); }

void certzeta_context_free(certzeta_context* ctx) { delete ctx; }

const char* certzeta_last_error(const certzeta_context* ctx) {
    return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

const char* certzeta_method_name(certzeta_method method) {
    try {
        return certzeta::method_name(to_method(method)).data();
    } catch (const BadArgument&) {
        return "unknown";
    }
}

certzeta_status certzeta_parse_complex(certzeta_context* ctx, const char* text, certzeta_complex* out) {
    return guarded(ctx, [&] {
        if (text == nullptr || out == nullptr) return null_argument(ctx, "text/out");
        *out = to_c(certzeta::report::parse_complex(text));
        return CERTZETA_OK;
    });
}

certzeta_status certzeta_format_complex(certzeta_context* ctx, certzeta_complex z, char* buf, size_t size) {
    return guarded(ctx, [&] {
        if (buf == nullptr) return null_argument(ctx, "buf");
        const std::string s = certzeta::report::format_complex(to_cpp(z));
        if (s.size() + 1 > size) {
            ctx->last_error = "buffer too small";
            return CERTZETA_ERR_ARGUMENT;
        }
        std::memcpy(buf, s.c_str(), s.size() + 1);
        return CERTZETA_OK;
    });
}

certzeta_status certzeta_eval(certzeta_context* ctx, certzeta_complex s, certzeta_complex a, double eps,
                              certzeta_method method, certzeta_result* out) {
    return guarded(ctx, [&] {
        if (out == nullptr) return null_argument(ctx, "out");
        const certzeta::EvalRequest req{to_cpp(s), to_cpp(a), eps, to_method(method)};
        fill(certzeta::hurwitz_zeta(req), out);
        return CERTZETA_OK;
    });
}

certzeta_status certzeta_bounds_report(certzeta_context* ctx, certzeta_complex s, certzeta_complex a, int N,
                                       int with_truth, certzeta_bounds* out) {
    return guarded(ctx, [&] {
        if (out == nullptr) return null_argument(ctx, "out");
        const certzeta::remainder::BoundReport r =
            certzeta::remainder::report({to_cpp(s), to_cpp(a), N}, with_truth != 0);
        *out = certzeta_bounds{};
        out->eq12 = r.terminant_sup;
        out->eq111 = r.secant;
        if (r.chi_form) {
            out->has_eq113 = 1;
            out->eq113 = *r.chi_form;
        }
        if (r.real_order) {
            out->has_eq892 = 1;
            out->eq892 = r.real_order->value;
            out->case892 = r.real_order->sector_case;
        }
        if (r.gamma_ratio) {
            out->has_eq414 = 1;
            out->eq414 = *r.gamma_ratio;
        }
        if (r.near_boundary) {
            out->has_eq779 = 1;
            out->eq779 = *r.near_boundary;
        }
        out->first_omitted = to_c(r.first_omitted_term);
        if (r.true_remainder) {
            out->has_truth = 1;
            out->truth = to_c(r.true_remainder->value);
            out->truth_error = r.true_remainder->error;
        }
        return CERTZETA_OK;
    });
}

certzeta_status certzeta_derived(certzeta_context* ctx, certzeta_function function, certzeta_complex z, int N, int k,
                                 certzeta_result* out) {
    return guarded(ctx, [&] {
        if (out == nullptr) return null_argument(ctx, "out");
        using certzeta::derived::Function;
        Function f;
        switch (function) {
            case CERTZETA_DIGAMMA: f = Function::digamma; break;
            case CERTZETA_POLYGAMMA: f = Function::polygamma; break;
            case CERTZETA_LOG_GAMMA: f = Function::log_gamma; break;
            case CERTZETA_LOG_BARNES_G_V1: f = Function::log_barnes_g_v1; break;
            case CERTZETA_LOG_BARNES_G_V2: f = Function::log_barnes_g_v2; break;
            case CERTZETA_DZETA_MINUS1: f = Function::dzeta_minus1; break;
            case CERTZETA_DZETA_MINUS2: f = Function::dzeta_minus2; break;
            default: ctx->last_error = "unknown function"; return CERTZETA_ERR_ARGUMENT;
        }
        certzeta::derived::Request req{f, to_cpp(z), N, k};
        fill(certzeta::derived::evaluate(req), out);
        return CERTZETA_OK;
    });
}

certzeta_status certzeta_terminant(certzeta_context* ctx, certzeta_complex p, certzeta_complex w,
                                   certzeta_complex* value, double* error) {
    return guarded(ctx, [&] {
        if (value == nullptr || error == nullptr) return null_argument(ctx, "value/error");
        const certzeta::terminant::Value v = certzeta::terminant::value(to_cpp(p), to_cpp(w));
        *value = to_c(v.value);
        *error = v.error;
        return CERTZETA_OK;
    });
}

certzeta_status certzeta_sweep_csv(certzeta_context* ctx, const certzeta_sweep_spec* spec, const char* path) {
    return guarded(ctx, [&] {
        if (spec == nullptr || path == nullptr) return null_argument(ctx, "spec/path");
        if ((spec->s_count > 0 && spec->s_list == nullptr) || (spec->N_count > 0 && spec->N_list == nullptr))
            return null_argument(ctx, "spec lists");
        certzeta::report::SweepSpec sw;
        for (size_t i = 0; i < spec->s_count; ++i) sw.s_list.push_back(to_cpp(spec->s_list[i]));
        sw.a_modulus = {spec->mod_lo, spec->mod_hi, spec->mod_count};
        sw.a_arg = {spec->arg_lo, spec->arg_hi, spec->arg_count};
        sw.N_list.assign(spec->N_list, spec->N_list + spec->N_count);
        sw.with_truth = spec->with_truth != 0;
        certzeta::report::validate(sw);
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            ctx->last_error = std::string("cannot open output file: ") + path;
            return CERTZETA_ERR_IO;
        }
        certzeta::report::write_csv(file, certzeta::report::run_sweep(sw));
        file.flush();
        if (!file) {
            ctx->last_error = std::string("write failed: ") + path;
            return CERTZETA_ERR_IO;
        }
        return CERTZETA_OK;
    });
}

}  // extern "C"
