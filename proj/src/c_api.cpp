#include "blaschke/blaschke.h"

#include <memory>
#include <new>
#include <string>
#include <vector>

#include "blaschke/bounds.hpp"
#include "blaschke/dilation.hpp"
#include "blaschke/error.hpp"
#include "blaschke/io.hpp"
#include "blaschke/suite.hpp"
#include "blaschke/transform.hpp"

struct bv_measure {
  blaschke::AtomicMeasure value;
};

struct bv_system {
  blaschke::ContractionSystem value;
};

struct bv_suite_config {
  blaschke::SuiteConfig value;
};

struct bv_report_set {
  std::vector<blaschke::BoundReport> reports;
  std::vector<blaschke::BoundReport> flat;
  std::string json;
  std::string csv;
};

namespace {

thread_local std::string g_last_error;

bv_status status_of(blaschke::ErrorCode code) {
  using blaschke::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return BV_ERR_INVALID_ARGUMENT;
    case ErrorCode::OffCircle: return BV_ERR_OFF_CIRCLE;
    case ErrorCode::OutsideDisk: return BV_ERR_OUTSIDE_DISK;
    case ErrorCode::OutsideDomain: return BV_ERR_OUTSIDE_DOMAIN;
    case ErrorCode::NonAtomicMeasure: return BV_ERR_NON_ATOMIC_MEASURE;
    case ErrorCode::EmptyMeasure: return BV_ERR_EMPTY_MEASURE;
    case ErrorCode::NotNormalized: return BV_ERR_NOT_NORMALIZED;
    case ErrorCode::NoConvergence: return BV_ERR_NO_CONVERGENCE;
    case ErrorCode::NotHermitian: return BV_ERR_NOT_HERMITIAN;
    case ErrorCode::NotPSD: return BV_ERR_NOT_PSD;
    case ErrorCode::SingularResolvent: return BV_ERR_SINGULAR_RESOLVENT;
    case ErrorCode::NotAContraction: return BV_ERR_NOT_A_CONTRACTION;
    case ErrorCode::DimensionMismatch: return BV_ERR_DIMENSION_MISMATCH;
    case ErrorCode::ContourThroughZero: return BV_ERR_CONTOUR_THROUGH_ZERO;
    case ErrorCode::MaxDepthExceeded: return BV_ERR_MAX_DEPTH_EXCEEDED;
    case ErrorCode::ZeroOnBoundary: return BV_ERR_ZERO_ON_BOUNDARY;
    case ErrorCode::QuadratureNoConvergence: return BV_ERR_QUADRATURE_NO_CONVERGENCE;
    case ErrorCode::ParseError: return BV_ERR_PARSE;
  }
  return BV_ERR_INTERNAL;
}

bv_status fail(bv_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <class F>
bv_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return BV_OK;
  } catch (const blaschke::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BV_ERR_INTERNAL, e.what());
  }
}

bv_report_set* make_set(std::vector<blaschke::BoundReport> reports) {
  auto set = std::make_unique<bv_report_set>();
  set->flat = blaschke::flatten(reports);
  set->json = blaschke::report_document(reports).dump(2);
  set->csv = blaschke::reports_to_csv(reports);
  set->reports = std::move(reports);
  return set.release();
}

blaschke::Complex at(const double* p, std::size_t i) { return {p[2 * i], p[2 * i + 1]}; }

}  // namespace

extern "C" {

const char* bv_version(void) { return "0.1.0"; }

const char* bv_status_string(bv_status status) {
  switch (status) {
    case BV_OK: return "Ok";
    case BV_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case BV_ERR_OFF_CIRCLE: return "OffCircle";
    case BV_ERR_OUTSIDE_DISK: return "OutsideDisk";
    case BV_ERR_OUTSIDE_DOMAIN: return "OutsideDomain";
    case BV_ERR_NON_ATOMIC_MEASURE: return "NonAtomicMeasure";
    case BV_ERR_EMPTY_MEASURE: return "EmptyMeasure";
    case BV_ERR_NOT_NORMALIZED: return "NotNormalized";
    case BV_ERR_NO_CONVERGENCE: return "NoConvergence";
    case BV_ERR_NOT_HERMITIAN: return "NotHermitian";
    case BV_ERR_NOT_PSD: return "NotPSD";
    case BV_ERR_SINGULAR_RESOLVENT: return "SingularResolvent";
    case BV_ERR_NOT_A_CONTRACTION: return "NotAContraction";
    case BV_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case BV_ERR_CONTOUR_THROUGH_ZERO: return "ContourThroughZero";
    case BV_ERR_MAX_DEPTH_EXCEEDED: return "MaxDepthExceeded";
    case BV_ERR_ZERO_ON_BOUNDARY: return "ZeroOnBoundary";
    case BV_ERR_QUADRATURE_NO_CONVERGENCE: return "QuadratureNoConvergence";
    case BV_ERR_PARSE: return "ParseError";
    case BV_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* bv_last_error_message(void) { return g_last_error.c_str(); }

bv_status bv_measure_from_json(const char* json, bv_measure** out) {
  if (!json || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new bv_measure{blaschke::io::measure_from_json(blaschke::io::parse_text(json))};
  });
}

bv_status bv_measure_create(size_t n, const double* points, const double* weights, double lebesgue_re,
                            double lebesgue_im, bv_measure** out) {
  if (!out || (n > 0 && (!points || !weights))) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<blaschke::Atom> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back({blaschke::UnitPoint(at(points, i)), at(weights, i)});
    *out = new bv_measure{blaschke::AtomicMeasure(std::move(atoms), {lebesgue_re, lebesgue_im})};
  });
}

void bv_measure_free(bv_measure* m) { delete m; }

bv_status bv_measure_total_variation(const bv_measure* m, double* out) {
  if (!m || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = blaschke::total_variation(m->value); });
}

bv_status bv_measure_eval_h(const bv_measure* m, bv_mode mode, double w_re, double w_im, double* h_re,
                            double* h_im) {
  if (!m || !h_re || !h_im) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const blaschke::CauchyFunction f{m->value, mode == BV_MODE_DIRECT ? blaschke::TransformMode::Direct
                                                                      : blaschke::TransformMode::Shifted};
    const blaschke::Complex h = blaschke::eval_h(f, {w_re, w_im});
    *h_re = h.real();
    *h_im = h.imag();
  });
}

bv_status bv_system_from_json(const char* json, bv_system** out) {
  if (!json || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new bv_system{blaschke::io::system_from_json(blaschke::io::parse_text(json))}; });
}

bv_status bv_system_create(size_t n, const double* a, const double* phi, const double* psi, bv_system** out) {
  if (!a || !phi || !psi || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto dim = static_cast<Eigen::Index>(n);
    blaschke::ComplexMatrix m(dim, dim);
    blaschke::ComplexVector f(dim);
    blaschke::ComplexVector g(dim);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = at(a, r * n + c);
      }
      f(static_cast<Eigen::Index>(r)) = at(phi, r);
      g(static_cast<Eigen::Index>(r)) = at(psi, r);
    }
    *out = new bv_system{blaschke::ContractionSystem(std::move(m), std::move(f), std::move(g))};
  });
}

void bv_system_free(bv_system* s) { delete s; }

bv_status bv_verify_measure(const bv_measure* m, bv_mode mode, bv_report_set** out) {
  if (!m || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<blaschke::BoundReport> reports;
    if (mode == BV_MODE_DIRECT) {
      reports.push_back(blaschke::check_corollary(m->value));
      reports.push_back(blaschke::check_zero_agreement({m->value, blaschke::TransformMode::Direct}));
    } else {
      reports.push_back(blaschke::check_theorem2(m->value));
      reports.push_back(blaschke::check_zero_agreement({m->value, blaschke::TransformMode::Shifted}));
    }
    *out = make_set(std::move(reports));
  });
}

bv_status bv_verify_system(const bv_system* s, bv_report_set** out) {
  if (!s || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const blaschke::ContractionSystem& sys = s->value;
    const blaschke::ComplexMatrix l = blaschke::build_L(sys).L;
    std::vector<blaschke::Complex> lambdas;
    for (int k = 0; k < 8; ++k) lambdas.push_back(std::polar(2.0, 0.3 + 0.785398163397448 * k));
    std::vector<blaschke::BoundReport> reports;
    reports.push_back(blaschke::check_theorem1(sys));
    reports.push_back(blaschke::check_theorem3(sys.A(), l));
    reports.push_back(blaschke::check_schur_chain(sys.A(), l));
    reports.push_back(blaschke::check_perturbation_determinant(sys, lambdas));
    *out = make_set(std::move(reports));
  });
}

bv_status bv_dilate(const bv_system* s, int order, bv_report_set** out) {
  if (!s || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = make_set({blaschke::roundtrip_check(s->value, order)}); });
}

bv_status bv_jensen(const char* json, bv_report_set** out) {
  if (!json || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto coeffs = blaschke::io::coefficients_from_json(blaschke::io::parse_text(json));
    *out = make_set({blaschke::check_jensen_h1(coeffs)});
  });
}

bv_status bv_schur_chain(const char* json, bv_report_set** out) {
  if (!json || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto [a, l] = blaschke::io::matrix_pair_from_json(blaschke::io::parse_text(json));
    *out = make_set({blaschke::check_schur_chain(a, l), blaschke::check_theorem3(a, l)});
  });
}

bv_status bv_real_line(const char* json, bv_report_set** out) {
  if (!json || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto atoms = blaschke::io::real_atoms_from_json(blaschke::io::parse_text(json));
    *out = make_set({blaschke::check_real_line_variant(atoms)});
  });
}

bv_status bv_suite_config_create(bv_suite_config** out) {
  if (!out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new bv_suite_config{}; });
}

void bv_suite_config_free(bv_suite_config* c) { delete c; }

bv_status bv_suite_config_set_seed(bv_suite_config* c, uint64_t seed) {
  if (!c) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  c->value.seed = seed;
  return BV_OK;
}

bv_status bv_suite_config_set_instances(bv_suite_config* c, int instances) {
  if (!c || instances < 1) return fail(BV_ERR_INVALID_ARGUMENT, "instances must be >= 1");
  c->value.instances = instances;
  return BV_OK;
}

bv_status bv_suite_config_set_max_atoms(bv_suite_config* c, int max_atoms) {
  if (!c || max_atoms < 1) return fail(BV_ERR_INVALID_ARGUMENT, "max_atoms must be >= 1");
  c->value.max_atoms = max_atoms;
  return BV_OK;
}

bv_status bv_suite_config_set_max_dim(bv_suite_config* c, int max_dim) {
  if (!c || max_dim < 1) return fail(BV_ERR_INVALID_ARGUMENT, "max_dim must be >= 1");
  c->value.max_dim = max_dim;
  return BV_OK;
}

bv_status bv_suite_config_set_threads(bv_suite_config* c, unsigned threads) {
  if (!c) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  c->value.threads = threads;
  return BV_OK;
}

bv_status bv_suite_config_set_tolerance(bv_suite_config* c, const char* name, double value) {
  if (!c || !name) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    blaschke::SuiteConfig copy = c->value;
    copy.tolerances[name] = value;
    copy.validate();
    c->value = std::move(copy);
  });
}

bv_status bv_random_suite(const bv_suite_config* c, const char* which, bv_report_set** out) {
  if (!c || !which || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = make_set(blaschke::run_suite(c->value, blaschke::parse_suite_kind(which))); });
}

size_t bv_report_set_size(const bv_report_set* r) { return r ? r->flat.size() : 0; }

int bv_report_set_all_passed(const bv_report_set* r) {
  if (!r) return 0;
  for (const auto& x : r->flat) {
    if (!x.pass) return 0;
  }
  return 1;
}

bv_status bv_report_set_get(const bv_report_set* r, size_t index, bv_report_info* out) {
  if (!r || !out) return fail(BV_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= r->flat.size()) return fail(BV_ERR_INVALID_ARGUMENT, "report index out of range");
  const blaschke::BoundReport& x = r->flat[index];
  *out = bv_report_info{x.name.c_str(), x.lhs, x.rhs, x.slack, x.tol, x.pass ? 1 : 0};
  return BV_OK;
}

const char* bv_report_set_json(const bv_report_set* r) { return r ? r->json.c_str() : ""; }

const char* bv_report_set_csv(const bv_report_set* r) { return r ? r->csv.c_str() : ""; }

void bv_report_set_free(bv_report_set* r) { delete r; }

}  // extern "C"
