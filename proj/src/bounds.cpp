#include "blaschke/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blaschke/error.hpp"
#include "blaschke/transform.hpp"
#include "blaschke/zeros.hpp"

namespace blaschke {

namespace {

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json zeros_json(const ZeroSet& z) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Zero& zero : z.zeros) {
    arr.push_back({{"location", complex_json(zero.location)}, {"multiplicity", zero.multiplicity}});
  }
  return arr;
}

void require_square_pair(const ComplexMatrix& a, const ComplexMatrix& l) {
  if (a.rows() != a.cols() || l.rows() != l.cols() || a.rows() != l.rows() || a.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "A and L must be nonempty square matrices of equal size");
  }
}

}  // namespace

BoundReport check_theorem1(const ContractionSystem& s, double tol) {
  const OutsideSpectrum spec = eigenvalues_outside_disk(build_L(s));
  const ZeroSet zeros = zeros_via_L(s);
  nlohmann::json d{{"lhs", "blaschke sum over reciprocal eigenvalues of L outside the closed disk"},
                   {"rhs", "||phi|| ||psi||"},
                   {"zeros", zeros_json(zeros)},
                   {"boundary_eigenvalues", spec.boundary.size()},
                   {"defective_warning", spec.defective_warning}};
  return BoundReport::make("theorem1", blaschke_sum(zeros), s.coupling(), tol, std::move(d));
}

BoundReport check_theorem2(const AtomicMeasure& sigma, double tol) {
  if (!sigma.is_atomic()) throw Error(ErrorCode::NonAtomicMeasure, "theorem2 check needs an atomic measure");
  nlohmann::json d{{"lhs", "blaschke sum of h = 1 + w K(sigma)"},
                   {"rhs", "TV(sigma), upper bound surrogate for ||Bh||_K"}};
  if (sigma.size() == 0) {
    d["zeros"] = nlohmann::json::array();
    return BoundReport::make("theorem2", 0.0, 0.0, tol, std::move(d));
  }
  const ZeroSet zeros = zeros_via_L(build_system_from_measure(sigma));
  d["zeros"] = zeros_json(zeros);
  return BoundReport::make("theorem2", blaschke_sum(zeros), total_variation(sigma), tol, std::move(d));
}

BoundReport check_corollary(const AtomicMeasure& mu, double tol) {
  if (std::abs(mu.mass() - 1.0) > 1e-12) {
    throw Error(ErrorCode::NotNormalized, "corollary check needs mu(T) = 1");
  }
  const ZeroSet zeros = zeros_via_numerator_roots({mu, TransformMode::Direct});
  const double tv = total_variation(mu);
  nlohmann::json d{{"lhs", "blaschke sum of h = K(mu) from numerator roots"},
                   {"rhs", "TV(mu), upper bound surrogate for ||h||_K"},
                   {"zeros", zeros_json(zeros)}};
  BoundReport r = BoundReport::make("corollary", blaschke_sum(zeros), tv, tol, std::move(d));

  const AtomicMeasure shifted = shift_measure(mu);
  BoundReport via_shift = check_theorem2(shifted, tol);
  via_shift.name = "via_shift";
  r.links.push_back(std::move(via_shift));
  r.links.push_back(BoundReport::make("shift_norm_monotone", total_variation(shifted), tv, 1e-12,
                                      {{"lhs", "TV(shift mu)"}, {"rhs", "TV(mu)"}}));
  return r;
}

BoundReport check_theorem3(const ComplexMatrix& a, const ComplexMatrix& l, double tol) {
  require_square_pair(a, l);
  const NumericalRange num(a);
  double lhs = 0.0;
  nlohmann::json eig = nlohmann::json::array();
  for (const EigenCluster& c : eigenvalues_clustered(l)) {
    const double dist = num.distance(c.center);
    lhs += c.multiplicity * dist;
    eig.push_back({{"lambda", complex_json(c.center)}, {"multiplicity", c.multiplicity}, {"dist", dist}});
  }
  nlohmann::json d{{"lhs", "sum of dist(lambda, Num(A)) over eigenvalues of L"},
                   {"rhs", "||L - A||_tr"},
                   {"eigenvalues", std::move(eig)}};
  return BoundReport::make("theorem3", lhs, trace_norm(l - a), tol, std::move(d));
}

BoundReport check_schur_chain(const ComplexMatrix& a, const ComplexMatrix& l, double tol) {
  require_square_pair(a, l);
  const SchurForm schur = schur_decompose(l);
  const NumericalRange num(a);
  const ComplexMatrix diff = l - a;

  double dist_sum = 0.0;
  double diag_sum = 0.0;
  double compressed_sum = 0.0;
  for (Eigen::Index n = 0; n < l.rows(); ++n) {
    const ComplexVector g = schur.Q.col(n);
    const Complex lambda = schur.T(n, n);
    const Complex a_nn = g.dot(a * g);
    dist_sum += num.distance(lambda);
    diag_sum += std::abs(lambda - a_nn);
    compressed_sum += std::abs(g.dot(diff * g));
  }
  const double tr = trace_norm(diff);

  BoundReport r = BoundReport::make("schur_chain", dist_sum, tr, tol,
                                    {{"lhs", "sum dist(lambda_n, Num(A)) over the Schur diagonal of L"},
                                     {"rhs", "||L - A||_tr"},
                                     {"diag_sum", diag_sum},
                                     {"compressed_sum", compressed_sum}});
  r.links.push_back(BoundReport::make("dist_le_diag", dist_sum, diag_sum, tol));
  r.links.push_back(BoundReport::make("diag_le_compressed", diag_sum, compressed_sum, tol));
  r.links.push_back(BoundReport::make("compressed_le_trace", compressed_sum, tr, tol));
  return r;
}

namespace {

struct BoundaryIntegrals {
  double mean_log_abs = 0.0;
  double mean_abs = 0.0;
  double mean_abs_minus_one = 0.0;
};

BoundaryIntegrals boundary_integrals(const std::vector<Complex>& coeffs, int m) {
  BoundaryIntegrals b;
  for (int k = 0; k < m; ++k) {
    const Complex h = eval_polynomial(coeffs, std::polar(1.0, 2.0 * std::numbers::pi * k / m));
    b.mean_log_abs += std::log(std::abs(h));
    b.mean_abs += std::abs(h);
    b.mean_abs_minus_one += std::abs(h - 1.0);
  }
  b.mean_log_abs /= m;
  b.mean_abs /= m;
  b.mean_abs_minus_one /= m;
  return b;
}

}  // namespace

BoundReport check_jensen_h1(const std::vector<Complex>& coeffs, double tol) {
  if (coeffs.empty() || std::abs(coeffs[0] - 1.0) > 1e-12) {
    throw Error(ErrorCode::NotNormalized, "polynomial must satisfy h(0) = 1");
  }
  constexpr int kProbe = 1 << 12;
  double min_abs = 1e300;
  for (int k = 0; k < kProbe; ++k) {
    min_abs = std::min(min_abs, std::abs(eval_polynomial(coeffs, std::polar(1.0, 2.0 * std::numbers::pi * k / kProbe))));
  }
  if (!(min_abs > 1e-8)) throw Error(ErrorCode::ZeroOnBoundary, "h vanishes on the unit circle");

  BoundaryIntegrals prev = boundary_integrals(coeffs, 1 << 12);
  BoundaryIntegrals cur{};
  bool converged = false;
  int points = 1 << 12;
  while (points < (1 << 22)) {
    points *= 2;
    cur = boundary_integrals(coeffs, points);
    if (std::abs(cur.mean_log_abs - prev.mean_log_abs) < 1e-9 && std::abs(cur.mean_abs - prev.mean_abs) < 1e-9 &&
        std::abs(cur.mean_abs_minus_one - prev.mean_abs_minus_one) < 1e-9) {
      converged = true;
      break;
    }
    prev = cur;
  }
  if (!converged) throw Error(ErrorCode::QuadratureNoConvergence, "boundary integrals did not settle");

  std::vector<Zero> inside;
  std::vector<Complex> roots_in;
  for (const Complex& r : polynomial_roots(coeffs)) {
    if (std::abs(r) < 1.0) roots_in.push_back(r);
  }
  ZeroSet zeros;
  for (const EigenCluster& c : cluster_points(roots_in, kZeroClusterRadius)) {
    zeros.zeros.push_back({c.center, c.multiplicity});
  }
  const double lhs = blaschke_sum(zeros);
  const double jensen = std::exp(cur.mean_log_abs) - 1.0;
  const double h1 = cur.mean_abs - 1.0;
  const double shift = cur.mean_abs_minus_one;

  BoundReport r = BoundReport::make("jensen_h1", lhs, shift, tol,
                                    {{"lhs", "blaschke sum of polynomial zeros in the disk"},
                                     {"rhs", "||h - 1||_H1"},
                                     {"jensen", jensen},
                                     {"h1_minus_one", h1},
                                     {"quadrature_points", points},
                                     {"zeros", zeros_json(zeros)}});
  r.links.push_back(BoundReport::make("blaschke_le_jensen", lhs, jensen, tol));
  r.links.push_back(BoundReport::make("jensen_le_h1", jensen, h1, tol));
  r.links.push_back(BoundReport::make("h1_le_shift", h1, shift, tol));
  return r;
}

BoundReport check_real_line_variant(const std::vector<RealAtom>& atoms, double tol) {
  Complex mass{};
  for (const RealAtom& a : atoms) mass += a.weight;
  if (std::abs(mass - 1.0) > 1e-12) throw Error(ErrorCode::NotNormalized, "real-line measure needs mu(R) = 1");

  // L = A - phi psi* with A = diag(s), phi_j psi_j-bar = s_j c_j: its non-real
  // eigenvalues are exactly the non-real zeros of h, and ||phi|| ||psi|| is
  // sum |s_j| |c_j|.
  const auto n = static_cast<Eigen::Index>(atoms.size());
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  ComplexVector phi = ComplexVector::Zero(n);
  ComplexVector psi = ComplexVector::Zero(n);
  double rhs = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const RealAtom& at = atoms[static_cast<std::size_t>(j)];
    a(j, j) = at.s;
    const Complex sc = at.s * at.weight;
    const double m = std::abs(sc);
    rhs += m;
    if (m > 0.0) {
      phi(j) = sc / std::sqrt(m);
      psi(j) = std::sqrt(m);
    }
  }
  const ComplexMatrix l = a - phi * psi.adjoint();

  auto h = [&](Complex lambda, double& scale) {
    Complex sum{};
    scale = 0.0;
    for (const RealAtom& at : atoms) {
      const Complex t = at.weight / (at.s - lambda);
      sum += t;
      scale += std::abs(t);
    }
    return sum;
  };

  double lhs = 0.0;
  double worst_residual = 0.0;
  nlohmann::json zeros = nlohmann::json::array();
  for (const EigenCluster& c : eigenvalues_clustered(l)) {
    if (!(c.center.imag() > tol)) continue;
    lhs += c.multiplicity * c.center.imag();
    double scale = 0.0;
    const double residual = std::abs(h(c.center, scale)) / std::max(scale, 1e-300);
    worst_residual = std::max(worst_residual, residual);
    zeros.push_back({{"location", complex_json(c.center)}, {"multiplicity", c.multiplicity}, {"residual", residual}});
  }
  BoundReport r = BoundReport::make("real_line", lhs, rhs, tol,
                                    {{"lhs", "sum of Im(lambda) over zeros of h in the upper half plane"},
                                     {"rhs", "sum |s_j| |c_j|"},
                                     {"zeros", std::move(zeros)}});
  r.links.push_back(BoundReport::make("zero_residual", worst_residual, tolerance::kZeroResidual, 0.0,
                                      {{"lhs", "max relative |h(lambda)| over the reported zeros"}}));
  return r;
}

BoundReport check_zero_agreement(const CauchyFunction& f) {
  const ZeroAgreement agreement = cross_validate_zeros(f);
  nlohmann::json d{{"agree", agreement.agree},
                   {"blaschke_difference", agreement.max_blaschke_difference},
                   {"argument_principle_radius", agreement.via_argument.search_radius},
                   {"reciprocal_eigenvalue", zeros_json(agreement.via_L)},
                   {"argument_principle", zeros_json(agreement.via_argument)},
                   {"numerator_roots", zeros_json(agreement.via_roots)}};
  // a count or multiplicity mismatch has no pairing distance; report 1 (the disk radius)
  const double lhs = agreement.agree ? agreement.max_pair_distance : std::max(1.0, agreement.max_pair_distance);
  BoundReport r = BoundReport::make("zero_agreement", lhs, kZeroPairTolerance, 0.0, std::move(d));
  r.links.push_back(BoundReport::make("blaschke_agreement", agreement.max_blaschke_difference,
                                      kBlaschkeAgreementTolerance, 0.0));
  return r;
}

BoundReport check_perturbation_determinant(const ContractionSystem& s, const std::vector<Complex>& lambdas,
                                           double rel_tol) {
  double worst = 0.0;
  for (const Complex& lambda : lambdas) {
    const PerturbationDeterminant pd = perturbation_determinant(s, lambda);
    const Complex h = eval_h_resolvent(s, 1.0 / lambda);
    auto rel = [](Complex x, Complex y) {
      const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
      return std::abs(x - y) / scale;
    };
    worst = std::max({worst, rel(pd.rank_one, pd.full_det), rel(pd.rank_one, h), rel(pd.full_det, h)});
  }
  return BoundReport::make("perturbation_determinant", worst, rel_tol, 0.0,
                           {{"lhs", "max relative disagreement of rank-one formula, LU determinant and h(1/lambda)"},
                            {"points", lambdas.size()}});
}

}  // namespace blaschke
