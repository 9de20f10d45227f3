#include "blaschke/dilation.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "blaschke/error.hpp"
#include "blaschke/transform.hpp"

namespace blaschke {

ComplexVector DilationResult::embed(const ComplexVector& v) const {
  ComplexVector out = ComplexVector::Zero(U.rows());
  out.head(n) = v;
  return out;
}

DilationResult dilate(const ComplexMatrix& a, int order) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "dilation needs a nonempty square matrix");
  }
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "dilation order must be >= 1");
  const Eigen::Index n = a.rows();

  // One SVD A = W S V* gives both defects, D_A = V (1 - S^2)^{1/2} V* and
  // D_{A*} = W (1 - S^2)^{1/2} W*, so A D_A = D_{A*} A holds to rounding.
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  if (sigma(0) > 1.0 + kContractionSlack) throw Error(ErrorCode::NotAContraction, "||A|| exceeds 1");
  Eigen::VectorXd defect_values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = std::min(sigma(i), 1.0);
    defect_values(i) = std::sqrt((1.0 - s) * (1.0 + s));
  }

  DilationResult d;
  d.n = n;
  d.order = order;
  d.defect = svd.matrixV() * defect_values.asDiagonal() * svd.matrixV().adjoint();
  d.defect_adjoint = svd.matrixU() * defect_values.asDiagonal() * svd.matrixU().adjoint();
  const double intertwining = (a * d.defect - d.defect_adjoint * a).norm();
  if (intertwining > 1e-10) {
    throw Error(ErrorCode::NotPSD, "defect operators fail A D_A = D_{A*} A");
  }

  const Eigen::Index blocks = order + 1;
  d.U = ComplexMatrix::Zero(blocks * n, blocks * n);
  d.U.block(0, 0, n, n) = a;
  d.U.block(0, order * n, n, n) = d.defect_adjoint;
  d.U.block(n, 0, n, n) = d.defect;
  d.U.block(n, order * n, n, n) = -a.adjoint();
  for (Eigen::Index b = 2; b < blocks; ++b) {
    d.U.block(b * n, (b - 1) * n, n, n) = ComplexMatrix::Identity(n, n);
  }
  return d;
}

SpectralMeasureExtract extract_spectral_measure(const DilationResult& d, const ComplexVector& phi,
                                                const ComplexVector& psi) {
  if (phi.size() != d.n || psi.size() != d.n) {
    throw Error(ErrorCode::DimensionMismatch, "phi and psi must live in the original space");
  }
  const SchurForm schur = schur_decompose(d.U);
  SpectralMeasureExtract out;
  out.schur_off_diagonal = schur.T.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().norm();

  const ComplexVector x = schur.Q.adjoint() * d.embed(phi);
  const ComplexVector y = schur.Q.adjoint() * d.embed(psi);
  std::vector<Complex> eig(static_cast<std::size_t>(d.U.rows()));
  for (Eigen::Index k = 0; k < d.U.rows(); ++k) {
    const Complex lambda = schur.T(k, k);
    if (std::abs(std::abs(lambda) - 1.0) > kCircleRenormalizeTolerance) {
      throw Error(ErrorCode::InvalidArgument, "dilation eigenvalue is off the unit circle");
    }
    eig[static_cast<std::size_t>(k)] = lambda;
  }

  std::vector<Atom> atoms;
  for (const EigenCluster& c : cluster_points(eig, kUnitaryClusterTolerance)) {
    Complex weight{};
    for (std::size_t m : c.members) {
      const auto k = static_cast<Eigen::Index>(m);
      weight += x(k) * std::conj(y(k));
    }
    atoms.push_back({UnitPoint(c.center), weight});
  }
  out.measure = AtomicMeasure(std::move(atoms));
  return out;
}

BoundReport roundtrip_check(const ContractionSystem& s, int order, const DilationTolerances& tol) {
  const DilationResult d = dilate(s.A(), order);
  const Eigen::Index dim = d.U.rows();
  const double unitarity = (d.U.adjoint() * d.U - ComplexMatrix::Identity(dim, dim)).norm();

  // compression and moments, k = 0..N
  const ComplexVector phi_e = d.embed(s.phi());
  const ComplexVector psi_e = d.embed(s.psi());
  ComplexMatrix u_pow = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix a_pow = ComplexMatrix::Identity(d.n, d.n);
  double compression = 0.0;
  double moments = 0.0;
  double a_norm_pow = 1.0;
  for (int k = 0; k <= order; ++k) {
    const double err = (d.compress(u_pow) - a_pow).norm();
    if (err > 0.0) compression = std::max(compression, err / a_norm_pow);
    moments = std::max(moments, std::abs(psi_e.dot(u_pow * phi_e) - s.psi().dot(a_pow * s.phi())));
    u_pow = d.U * u_pow;
    a_pow = s.A() * a_pow;
    a_norm_pow *= s.a_norm();
  }

  const SpectralMeasureExtract ex = extract_spectral_measure(d, s.phi(), s.psi());
  const AtomicMeasure reflected = reflect_measure(ex.measure);

  // h: Neumann series; reconstruction: 1 + w K(reflected), coefficient n is the
  // (n-1)-th moment of the reflected measure.
  const std::vector<Complex> h_coeffs = neumann_coefficients(s, order + 1);
  double taylor = 0.0;
  for (int k = 1; k <= order + 1; ++k) {
    taylor = std::max(taylor, std::abs(h_coeffs[static_cast<std::size_t>(k)] - taylor_moment(reflected, k - 1)));
  }

  // reflected measure represents B h-tilde pointwise
  double reflection = 0.0;
  for (int j = 0; j < 12; ++j) {
    const Complex w = std::polar(0.15 + 0.06 * j, 0.7 + 1.9 * j);
    Complex bh{};
    for (const Atom& at : ex.measure.atoms()) bh += at.weight / (1.0 - w * at.point.value());
    reflection = std::max(reflection, std::abs(eval_K(reflected, w) - bh) / std::max(1.0, std::abs(bh)));
  }

  const double spectral_mass = std::abs(ex.measure.mass() - s.psi().dot(s.phi()));
  const double tv = total_variation(ex.measure);

  nlohmann::json details{{"lhs", "TV of the extracted spectral measure"},
                         {"rhs", "||phi|| ||psi||"},
                         {"order", order},
                         {"dimension", dim},
                         {"atoms", ex.measure.size()}};
  BoundReport r = BoundReport::make("dilation_roundtrip", tv, s.coupling(), tol.total_variation, std::move(details));
  r.links.push_back(BoundReport::make("unitarity", unitarity, tol.unitarity * static_cast<double>(dim), 0.0));
  r.links.push_back(BoundReport::make("compression", compression, tol.compression, 0.0,
                                      {{"lhs", "max_k ||block00(U^k) - A^k|| / ||A||^k"}}));
  r.links.push_back(BoundReport::make("moments", moments, tol.moments, 0.0));
  r.links.push_back(BoundReport::make("taylor", taylor, tol.taylor, 0.0,
                                      {{"lhs", "max coefficient error, orders 0..N+1"}}));
  r.links.push_back(BoundReport::make("spectral_mass", spectral_mass, tol.moments, 0.0));
  r.links.push_back(BoundReport::make("reflection", reflection, tol.moments, 0.0));
  r.links.push_back(BoundReport::make("schur_off_diagonal", ex.schur_off_diagonal, tol.schur_off_diagonal, 0.0));
  return r;
}

}  // namespace blaschke
