#include "blaschke/operator_model.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <string>

#include "blaschke/error.hpp"

namespace blaschke {

ContractionSystem::ContractionSystem(ComplexMatrix a, ComplexVector phi, ComplexVector psi)
    : a_(std::move(a)), phi_(std::move(phi)), psi_(std::move(psi)) {
  if (a_.rows() != a_.cols() || a_.rows() != phi_.size() || a_.rows() != psi_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "A must be square and match phi, psi");
  }
  if (a_.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "system dimension must be >= 1");
  if (!a_.allFinite() || !phi_.allFinite() || !psi_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "system entries must be finite");
  }
  a_norm_ = operator_norm(a_);
  if (a_norm_ > 1.0 + kContractionSlack) {
    throw Error(ErrorCode::NotAContraction, "||A|| = " + std::to_string(a_norm_) + " exceeds 1");
  }
}

ContractionSystem build_system_from_measure(const AtomicMeasure& sigma) {
  if (!sigma.is_atomic()) {
    throw Error(ErrorCode::NonAtomicMeasure, "operator model needs a purely atomic measure");
  }
  if (sigma.size() == 0) throw Error(ErrorCode::EmptyMeasure, "operator model needs at least one atom");
  const auto n = static_cast<Eigen::Index>(sigma.size());
  const PolarDecomposition pd = polar_decompose(sigma);
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  ComplexVector phi(n);
  ComplexVector psi(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto k = static_cast<std::size_t>(j);
    const double root = std::sqrt(pd.modulus_weights[k]);
    a(j, j) = sigma.atoms()[k].point.conj();
    phi(j) = root;
    psi(j) = std::conj(pd.phases[k]) * root;
  }
  return ContractionSystem(std::move(a), std::move(phi), std::move(psi));
}

Complex eval_h_resolvent(const ContractionSystem& s, Complex w) {
  if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::OutsideDisk, "|w| must be < 1");
  const Eigen::Index n = s.dim();
  const ComplexMatrix m = ComplexMatrix::Identity(n, n) - w * s.A();
  Eigen::PartialPivLU<ComplexMatrix> lu(m);
  const auto& packed = lu.matrixLU();
  double max_pivot = 0.0;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    max_pivot = std::max(max_pivot, std::abs(packed(i, i)));
    min_pivot = std::min(min_pivot, std::abs(packed(i, i)));
  }
  if (std::abs(w) * s.a_norm() >= 1.0 - 1e-12 &&
      !(min_pivot > static_cast<double>(n) * std::numeric_limits<double>::epsilon() * max_pivot)) {
    throw Error(ErrorCode::SingularResolvent, "I - wA is numerically singular");
  }
  const ComplexVector x = lu.solve(s.phi());
  return 1.0 + w * s.psi().dot(x);
}

PerturbedOperator build_L(const ContractionSystem& s) {
  return {s.A() - s.phi() * s.psi().adjoint()};
}

PerturbationDeterminant perturbation_determinant(const ContractionSystem& s, Complex lambda) {
  if (!(std::abs(lambda) > 1.0)) throw Error(ErrorCode::OutsideDomain, "|lambda| must be > 1");
  const Eigen::Index n = s.dim();
  const ComplexMatrix shifted = lambda * ComplexMatrix::Identity(n, n) - s.A();
  Eigen::PartialPivLU<ComplexMatrix> lu(shifted);

  PerturbationDeterminant out;
  out.rank_one = 1.0 + s.psi().dot(lu.solve(s.phi()));

  // I - M R = I + phi psi* R with R = (lambda - A)^{-1}; psi* R = (R* psi)*.
  const ComplexVector row = lu.adjoint().solve(s.psi());
  const ComplexMatrix full = ComplexMatrix::Identity(n, n) + s.phi() * row.adjoint();
  out.full_det = Eigen::PartialPivLU<ComplexMatrix>(full).determinant();
  return out;
}

OutsideSpectrum eigenvalues_outside_disk(const PerturbedOperator& p, double tol, double cluster_tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  OutsideSpectrum out;
  for (const EigenCluster& c : eigenvalues_clustered(p.L, cluster_tol)) {
    const double r = std::abs(c.center);
    if (r > 1.0 + tol) {
      out.outside.push_back(c);
      if (c.spread > 10.0 * tol) out.defective_warning = true;
    } else if (r >= 1.0 - tol) {
      out.boundary.push_back(c);
    }
  }
  return out;
}

std::vector<Complex> neumann_coefficients(const ContractionSystem& s, int max_order) {
  std::vector<Complex> coeffs{1.0};
  ComplexVector v = s.phi();
  for (int k = 1; k <= max_order; ++k) {
    coeffs.push_back(s.psi().dot(v));
    v = s.A() * v;
  }
  return coeffs;
}

}  // namespace blaschke
