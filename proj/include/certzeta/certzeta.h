#ifndef CERTZETA_H
#define CERTZETA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CERTZETA_API __declspec(dllexport)
#else
#define CERTZETA_API __attribute__((visibility("default")))
#endif

typedef struct certzeta_context certzeta_context;

typedef enum certzeta_status {
    CERTZETA_OK = 0,
    CERTZETA_ERR_DOMAIN = 1,   /* a hypothesis of the requested operation fails */
    CERTZETA_ERR_NUMERIC = 2,  /* quadrature or series did not reach its tolerance */
    CERTZETA_ERR_IO = 3,
    CERTZETA_ERR_ARGUMENT = 4, /* null pointer or malformed argument */
    CERTZETA_ERR_INTERNAL = 5
} certzeta_status;

typedef struct certzeta_complex {
    double re;
    double im;
} certzeta_complex;

typedef enum certzeta_method {
    CERTZETA_METHOD_AUTO = 0,
    CERTZETA_METHOD_TRUNCATED = 1,
    CERTZETA_METHOD_EXACT = 2,
    CERTZETA_METHOD_SHIFT = 3,
    CERTZETA_METHOD_DIRECT = 4
} certzeta_method;

typedef struct certzeta_result {
    certzeta_complex value;
    double radius;
    certzeta_method method;
    int N;
    long long shift;
    int heuristic; /* nonzero when the radius is an estimate rather than a bound */
    char bound_used[48];
} certzeta_result;

typedef struct certzeta_bounds {
    double eq12;
    double eq111;
    int has_eq113;
    double eq113;
    int has_eq892;
    double eq892;
    int case892;
    int has_eq414;
    double eq414;
    int has_eq779;
    double eq779;
    certzeta_complex first_omitted;
    int has_truth;
    certzeta_complex truth;
    double truth_error;
} certzeta_bounds;

typedef struct certzeta_sweep_spec {
    const certzeta_complex* s_list;
    size_t s_count;
    double mod_lo, mod_hi;
    int mod_count;
    double arg_lo, arg_hi;
    int arg_count;
    const int* N_list;
    size_t N_count;
    int with_truth;
} certzeta_sweep_spec;

typedef enum certzeta_function {
    CERTZETA_DIGAMMA = 0,
    CERTZETA_POLYGAMMA = 1,
    CERTZETA_LOG_GAMMA = 2,
    CERTZETA_LOG_BARNES_G_V1 = 3,
    CERTZETA_LOG_BARNES_G_V2 = 4,
    CERTZETA_DZETA_MINUS1 = 5,
    CERTZETA_DZETA_MINUS2 = 6
} certzeta_function;

CERTZETA_API certzeta_context* certzeta_context_new(void);
CERTZETA_API void certzeta_context_free(certzeta_context* ctx);
/* Message of the last failed call on ctx; "" after a success. */
CERTZETA_API const char* certzeta_last_error(const certzeta_context* ctx);
CERTZETA_API const char* certzeta_method_name(certzeta_method method);

CERTZETA_API certzeta_status certzeta_parse_complex(certzeta_context* ctx, const char* text, certzeta_complex* out);
/* Writes the shortest exact literal into buf (at least 64 bytes). */
CERTZETA_API certzeta_status certzeta_format_complex(certzeta_context* ctx, certzeta_complex z, char* buf, size_t size);

/* Certified zeta(s, a); eps is the target truncation radius. */
CERTZETA_API certzeta_status certzeta_eval(certzeta_context* ctx, certzeta_complex s, certzeta_complex a, double eps,
                                           certzeta_method method, certzeta_result* out);

CERTZETA_API certzeta_status certzeta_bounds_report(certzeta_context* ctx, certzeta_complex s, certzeta_complex a,
                                                    int N, int with_truth, certzeta_bounds* out);

/* N == 0 chooses N and shifts; k is the polygamma order. */
CERTZETA_API certzeta_status certzeta_derived(certzeta_context* ctx, certzeta_function function, certzeta_complex z,
                                              int N, int k, certzeta_result* out);

CERTZETA_API certzeta_status certzeta_terminant(certzeta_context* ctx, certzeta_complex p, certzeta_complex w,
                                                certzeta_complex* value, double* error);

/* Writes the sweep CSV to path; CERTZETA_ERR_IO when it cannot be opened. */
CERTZETA_API certzeta_status certzeta_sweep_csv(certzeta_context* ctx, const certzeta_sweep_spec* spec,
                                                const char* path);

#ifdef __cplusplus
}
#endif

#endif
