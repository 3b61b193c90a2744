/*
 * apurity: cohomology of line bundles on P^n x P^n, the SL(n+1) prediction for the
 * multiplication map on the special fiber V((sum x_i y_i)^k), a brute-force exact
 * rank oracle for the same map, and asymptotic cohomological functions.
 *
 * All handles are opaque. Every call that can fail returns an ap_status; on failure
 * ap_context_last_error() describes the problem. Big integers cross the boundary
 * as decimal strings inside the result document.
 */
#ifndef APURITY_H
#define APURITY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef APURITY_BUILDING_LIBRARY
#    define AP_API __declspec(dllexport)
#  else
#    define AP_API __declspec(dllimport)
#  endif
#else
#  define AP_API __attribute__((visibility("default")))
#endif

/* Values match the CLI exit codes. */
typedef enum ap_status {
  AP_OK = 0,
  AP_ERR_MISMATCH = 1,         /* a verification or purity check failed */
  AP_ERR_INVALID_ARGUMENT = 2,
  AP_ERR_SIZE_CAP = 3,         /* oracle matrix larger than the configured cap */
  AP_ERR_NOT_STABILIZED = 4,   /* finite differences did not settle */
  AP_ERR_IO = 5,
  AP_ERR_INTERNAL = 6
} ap_status;

typedef enum ap_format { AP_FORMAT_JSON = 0, AP_FORMAT_CSV = 1, AP_FORMAT_TABLE = 2 } ap_format;
typedef enum ap_engine { AP_ENGINE_REP = 0, AP_ENGINE_ORACLE = 1 } ap_engine;
typedef enum ap_suite { AP_SUITE_SMALL = 0, AP_SUITE_FULL = 1 } ap_suite;

typedef struct ap_context ap_context;
typedef struct ap_result ap_result;

AP_API const char* ap_version(void);
AP_API const char* ap_status_name(ap_status status);

AP_API ap_status ap_context_create(ap_context** out);
AP_API void ap_context_destroy(ap_context* ctx);
/* Seed for the rank oracle's prime selection; recorded in every result. */
AP_API ap_status ap_context_set_seed(ap_context* ctx, uint64_t seed);
AP_API ap_status ap_context_set_size_cap(ap_context* ctx, uint64_t cap);
/* Blocks up to this size are also ranked by exact elimination over Z. */
AP_API ap_status ap_context_set_exact_threshold(ap_context* ctx, uint64_t threshold);
/* JSON-lines result cache; loaded now, appended to on new results. NULL or "" disables. */
AP_API ap_status ap_context_set_cache(ap_context* ctx, const char* path);
AP_API const char* ap_context_last_error(const ap_context* ctx);

/* h^q(P^n, O(d)). */
AP_API ap_status ap_bott(ap_context* ctx, int32_t n, int64_t d, ap_result** out);
/* h^i(P^n x P^n, O(a1, a2)). */
AP_API ap_status ap_product(ap_context* ctx, int32_t n, int64_t a1, int64_t a2, ap_result** out);
/* Pieri decomposition of Sym^A (x) Sym^B for SL(n+1). */
AP_API ap_status ap_decompose(ap_context* ctx, int32_t n, int64_t A, int64_t B, ap_result** out);
/* Predicted kernel/cokernel of the special-fiber map Sym^A (x) Sym^B -> Sym^{A+k} (x) Sym^{B-k}. */
AP_API ap_status ap_predict(ap_context* ctx, int32_t n, int32_t k, int64_t A, int64_t B, ap_result** out);
/*
 * Exact rank of a contraction operator between the same spaces. operator_json NULL
 * selects the special-fiber operator for (n, k); otherwise n and k come from the
 * document and the arguments must be 0 or agree with it.
 */
AP_API ap_status ap_oracle(ap_context* ctx, int32_t n, int32_t k, const char* operator_json, int64_t A, int64_t B,
                           ap_result** out);
/* Kernel/cokernel for m in [m_lo, m_hi] with A = m*a1 - k, B = m*a2 + k - (n+1). */
AP_API ap_status ap_series(ap_context* ctx, ap_engine engine, int32_t n, int32_t k, const char* operator_json,
                           int64_t a1, int64_t a2, int64_t m_lo, int64_t m_hi, ap_result** out);
/* Asymptotic cohomology on the special fiber for D = a1*H1 - a2*H2, a1, a2 >= 0. */
AP_API ap_status ap_asymptotics(ap_context* ctx, int32_t n, int32_t k, int64_t a1, int64_t a2, ap_result** out);
/* Asymptotic cohomology on P^n x P^n for D = a1*H1 + a2*H2. */
AP_API ap_status ap_asymptotics_product(ap_context* ctx, int32_t n, int64_t a1, int64_t a2, ap_result** out);
/* Special-fiber purity grid. Returns AP_ERR_MISMATCH (with *out set) if any entry is impure. */
AP_API ap_status ap_scan(ap_context* ctx, int32_t n, int32_t k, int64_t a1_lo, int64_t a1_hi, int64_t a2_lo,
                         int64_t a2_hi, ap_result** out);
/* Engine cross-checks and closed forms. Returns AP_ERR_MISMATCH (with *out set) on failure. */
AP_API ap_status ap_verify(ap_context* ctx, ap_suite suite, ap_result** out);

/* Rendered result; the string lives as long as the result. */
AP_API const char* ap_result_text(ap_result* result, ap_format format);
/* Top-level scalar field of the JSON document as a string, or NULL if absent. */
AP_API const char* ap_result_field(ap_result* result, const char* key);
AP_API void ap_result_destroy(ap_result* result);

#ifdef __cplusplus
}
#endif

#endif /* APURITY_H */
