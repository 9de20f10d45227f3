/* C interface to the blaschke verification library. Every call returns a
 * bv_status; on failure bv_last_error_message() describes the problem for the
 * calling thread. Objects returned through out-pointers are owned by the
 * caller and released with the matching *_free function. */
#ifndef BLASCHKE_BLASCHKE_H
#define BLASCHKE_BLASCHKE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BLASCHKE_BUILDING)
#    define BV_API __declspec(dllexport)
#  else
#    define BV_API __declspec(dllimport)
#  endif
#else
#  define BV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bv_status {
  BV_OK = 0,
  BV_ERR_INVALID_ARGUMENT,
  BV_ERR_OFF_CIRCLE,
  BV_ERR_OUTSIDE_DISK,
  BV_ERR_OUTSIDE_DOMAIN,
  BV_ERR_NON_ATOMIC_MEASURE,
  BV_ERR_EMPTY_MEASURE,
  BV_ERR_NOT_NORMALIZED,
  BV_ERR_NO_CONVERGENCE,
  BV_ERR_NOT_HERMITIAN,
  BV_ERR_NOT_PSD,
  BV_ERR_SINGULAR_RESOLVENT,
  BV_ERR_NOT_A_CONTRACTION,
  BV_ERR_DIMENSION_MISMATCH,
  BV_ERR_CONTOUR_THROUGH_ZERO,
  BV_ERR_MAX_DEPTH_EXCEEDED,
  BV_ERR_ZERO_ON_BOUNDARY,
  BV_ERR_QUADRATURE_NO_CONVERGENCE,
  BV_ERR_PARSE,
  BV_ERR_INTERNAL
} bv_status;

typedef enum bv_mode { BV_MODE_DIRECT = 0, BV_MODE_SHIFTED = 1 } bv_mode;

typedef struct bv_measure bv_measure;
typedef struct bv_system bv_system;
typedef struct bv_report_set bv_report_set;
typedef struct bv_suite_config bv_suite_config;

/* One flattened report. name is owned by the report set. */
typedef struct bv_report_info {
  const char* name;
  double lhs;
  double rhs;
  double slack;
  double tol;
  int pass;
} bv_report_info;

BV_API const char* bv_version(void);
BV_API const char* bv_status_string(bv_status status);
/* Message of the last failed call on this thread; "" if none. */
BV_API const char* bv_last_error_message(void);

/* measures */
BV_API bv_status bv_measure_from_json(const char* json, bv_measure** out);
/* points and weights are interleaved (re, im) arrays of length 2n. */
BV_API bv_status bv_measure_create(size_t n, const double* points, const double* weights, double lebesgue_re,
                                   double lebesgue_im, bv_measure** out);
BV_API void bv_measure_free(bv_measure* m);
BV_API bv_status bv_measure_total_variation(const bv_measure* m, double* out);
BV_API bv_status bv_measure_eval_h(const bv_measure* m, bv_mode mode, double w_re, double w_im, double* h_re,
                                   double* h_im);

/* contraction systems */
BV_API bv_status bv_system_from_json(const char* json, bv_system** out);
/* a: row-major n x n, (re, im) interleaved; phi, psi: 2n doubles each. */
BV_API bv_status bv_system_create(size_t n, const double* a, const double* phi, const double* psi,
                                  bv_system** out);
BV_API void bv_system_free(bv_system* s);

/* checks */
BV_API bv_status bv_verify_measure(const bv_measure* m, bv_mode mode, bv_report_set** out);
BV_API bv_status bv_verify_system(const bv_system* s, bv_report_set** out);
BV_API bv_status bv_dilate(const bv_system* s, int order, bv_report_set** out);
BV_API bv_status bv_jensen(const char* json, bv_report_set** out);
BV_API bv_status bv_schur_chain(const char* json, bv_report_set** out);
BV_API bv_status bv_real_line(const char* json, bv_report_set** out);

/* randomized suites */
BV_API bv_status bv_suite_config_create(bv_suite_config** out);
BV_API void bv_suite_config_free(bv_suite_config* c);
BV_API bv_status bv_suite_config_set_seed(bv_suite_config* c, uint64_t seed);
BV_API bv_status bv_suite_config_set_instances(bv_suite_config* c, int instances);
BV_API bv_status bv_suite_config_set_max_atoms(bv_suite_config* c, int max_atoms);
BV_API bv_status bv_suite_config_set_max_dim(bv_suite_config* c, int max_dim);
BV_API bv_status bv_suite_config_set_threads(bv_suite_config* c, unsigned threads);
BV_API bv_status bv_suite_config_set_tolerance(bv_suite_config* c, const char* name, double value);
/* which: thm1, thm2, thm3, schur, dilation, realline or all */
BV_API bv_status bv_random_suite(const bv_suite_config* c, const char* which, bv_report_set** out);

/* report sets */
BV_API size_t bv_report_set_size(const bv_report_set* r);
BV_API int bv_report_set_all_passed(const bv_report_set* r);
BV_API bv_status bv_report_set_get(const bv_report_set* r, size_t index, bv_report_info* out);
/* {"reports": [...], "summary": {...}}, owned by the set */
BV_API const char* bv_report_set_json(const bv_report_set* r);
BV_API const char* bv_report_set_csv(const bv_report_set* r);
BV_API void bv_report_set_free(bv_report_set* r);

#ifdef __cplusplus
}
#endif

#endif
