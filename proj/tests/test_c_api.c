/* Exercises the C interface from plain C. */
#include <math.h>
#include <stdio.h>
#include <string.h>

#include "blaschke/blaschke.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static void test_measure(void) {
  const double points[] = {-1.0, 0.0};
  const double weights[] = {1.0, 0.0};
  bv_measure* m = NULL;
  EXPECT(bv_measure_create(1, points, weights, 0.0, 0.0, &m) == BV_OK);
  double tv = 0.0;
  EXPECT(bv_measure_total_variation(m, &tv) == BV_OK && tv == 1.0);
  double re = 1.0, im = 1.0;
  EXPECT(bv_measure_eval_h(m, BV_MODE_SHIFTED, -0.5, 0.0, &re, &im) == BV_OK);
  EXPECT(fabs(re) < 1e-15 && fabs(im) < 1e-15);
  EXPECT(bv_measure_eval_h(m, BV_MODE_SHIFTED, 1.0, 0.0, &re, &im) == BV_ERR_OUTSIDE_DISK);
  EXPECT(strlen(bv_last_error_message()) > 0);

  bv_report_set* set = NULL;
  EXPECT(bv_verify_measure(m, BV_MODE_SHIFTED, &set) == BV_OK);
  EXPECT(bv_report_set_all_passed(set) == 1);
  EXPECT(bv_report_set_size(set) >= 2);
  bv_report_info info;
  EXPECT(bv_report_set_get(set, 0, &info) == BV_OK);
  EXPECT(strcmp(info.name, "theorem2") == 0);
  EXPECT(fabs(info.lhs - 1.0) < 1e-12 && fabs(info.rhs - 1.0) < 1e-12 && info.pass == 1);
  EXPECT(bv_report_set_get(set, 1000, &info) == BV_ERR_INVALID_ARGUMENT);
  EXPECT(strstr(bv_report_set_json(set), "\"summary\"") != NULL);
  EXPECT(strncmp(bv_report_set_csv(set), "index,name,lhs,rhs,slack,tol,pass", 33) == 0);
  bv_report_set_free(set);

  EXPECT(bv_verify_measure(m, BV_MODE_DIRECT, &set) == BV_OK);
  bv_report_set_free(set);
  bv_measure_free(m);

  const double off[] = {0.5, 0.0};
  EXPECT(bv_measure_create(1, off, weights, 0.0, 0.0, &m) == BV_ERR_OFF_CIRCLE);
  EXPECT(bv_measure_from_json("{\"atoms\": [", &m) == BV_ERR_PARSE);
  EXPECT(bv_measure_from_json("{\"atoms\": [{\"point\": {\"re\": 1, \"im\": 0}, \"weight\": 2}]}", &m) == BV_OK);
  EXPECT(bv_verify_measure(m, BV_MODE_DIRECT, &set) == BV_ERR_NOT_NORMALIZED);
  bv_measure_free(m);
  EXPECT(bv_verify_measure(NULL, BV_MODE_DIRECT, &set) == BV_ERR_INVALID_ARGUMENT);
}

static void test_system(void) {
  const double a[] = {0.0, 0.0};
  const double one[] = {1.0, 0.0};
  bv_system* s = NULL;
  EXPECT(bv_system_create(1, a, one, one, &s) == BV_OK);
  bv_report_set* set = NULL;
  EXPECT(bv_verify_system(s, &set) == BV_OK);
  EXPECT(bv_report_set_all_passed(set) == 1);
  bv_report_set_free(set);
  EXPECT(bv_dilate(s, 1, &set) == BV_OK);
  EXPECT(bv_report_set_all_passed(set) == 1);
  bv_report_set_free(set);
  EXPECT(bv_dilate(s, 0, &set) == BV_ERR_INVALID_ARGUMENT);
  bv_system_free(s);

  const double big[] = {2.0, 0.0};
  EXPECT(bv_system_create(1, big, one, one, &s) == BV_ERR_NOT_A_CONTRACTION);
  EXPECT(bv_system_from_json("{\"A\": [[0.5]], \"phi\": [1, 2], \"psi\": [1]}", &s) == BV_ERR_DIMENSION_MISMATCH);
}

static void test_json_entry_points(void) {
  bv_report_set* set = NULL;
  EXPECT(bv_jensen("{\"coeffs\": [1, -2]}", &set) == BV_OK);
  EXPECT(bv_report_set_all_passed(set) == 1);
  bv_report_set_free(set);
  EXPECT(bv_jensen("{\"coeffs\": [1, -1]}", &set) == BV_ERR_ZERO_ON_BOUNDARY);
  EXPECT(bv_schur_chain("{\"A\": [[0, 0], [0, 0]], \"L\": [[3, 0], [0, [0, -4]]]}", &set) == BV_OK);
  bv_report_info info;
  EXPECT(bv_report_set_get(set, 0, &info) == BV_OK && fabs(info.lhs - 7.0) < 1e-12);
  bv_report_set_free(set);
  EXPECT(bv_real_line("{\"atoms\": [{\"s\": 0, \"weight\": 1}]}", &set) == BV_OK);
  bv_report_set_free(set);
}

static void test_suite(void) {
  bv_suite_config* c = NULL;
  EXPECT(bv_suite_config_create(&c) == BV_OK);
  EXPECT(bv_suite_config_set_seed(c, 7) == BV_OK);
  EXPECT(bv_suite_config_set_instances(c, 5) == BV_OK);
  EXPECT(bv_suite_config_set_instances(c, 0) == BV_ERR_INVALID_ARGUMENT);
  EXPECT(bv_suite_config_set_tolerance(c, "nonsense", 1.0) == BV_ERR_INVALID_ARGUMENT);
  EXPECT(bv_suite_config_set_tolerance(c, "blaschke", 1e-7) == BV_OK);
  bv_report_set* set = NULL;
  EXPECT(bv_random_suite(c, "thm1", &set) == BV_OK);
  EXPECT(bv_report_set_all_passed(set) == 1);
  bv_report_set_free(set);
  EXPECT(bv_random_suite(c, "bogus", &set) == BV_ERR_INVALID_ARGUMENT);
  bv_suite_config_free(c);
}

int main(void) {
  EXPECT(strcmp(bv_status_string(BV_ERR_NOT_A_CONTRACTION), "NotAContraction") == 0);
  EXPECT(strlen(bv_version()) > 0);
  test_measure();
  test_system();
  test_json_entry_points();
  test_suite();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
