#pragma once

// Dense complex kernels: Schur form, clustered eigenvalues, singular values,
// PSD square roots, numerical-range distances and polynomial roots.

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace blaschke {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// input = Q T Q*, Q unitary, T upper triangular.
struct SchurForm {
  ComplexMatrix Q;
  ComplexMatrix T;

  ComplexVector eigenvalues() const { return T.diagonal(); }
};

struct EigenCluster {
  Complex center;
  int multiplicity = 0;
  double spread = 0.0;  // max distance of a member from the center
  std::vector<std::size_t> members;  // indices into the clustered input
};

inline constexpr double kDefaultClusterTolerance = 1e-6;

/// Hessenberg reduction + shifted QR. Throws NoConvergence after 100 n sweeps.
SchurForm schur_decompose(const ComplexMatrix& a);

/// Single-linkage grouping of points closer than `radius`; centers are the
/// member means. Sorted by (Re, Im) of the center.
std::vector<EigenCluster> cluster_points(std::span<const Complex> points, double radius);

/// Eigenvalues (from the Schur diagonal) grouped with radius tol * max(1, ||A||).
std::vector<EigenCluster> eigenvalues_clustered(const ComplexMatrix& a,
                                                double tol = kDefaultClusterTolerance);

/// Nonincreasing.
Eigen::VectorXd singular_values(const ComplexMatrix& a);
double trace_norm(const ComplexMatrix& a);
double operator_norm(const ComplexMatrix& a);

/// Hermitian PSD square root; eigenvalues in [-1e-10 ||H||, 0) are clamped.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// Largest eigenvalue of a Hermitian matrix.
double hermitian_max_eigenvalue(const ComplexMatrix& h);

/// Distance from points to Num(A) = {<Af, f> : ||f|| = 1} via its support
/// function. The support values on the angle grid are computed once; each
/// query maximizes Re(e^{-i t} lambda) - s(t) over the grid and then refines
/// around the best angle by golden-section search. Grid values can only
/// under-estimate the true distance.
class NumericalRange {
 public:
  static constexpr int kDefaultAngles = 720;

  explicit NumericalRange(ComplexMatrix a, int angles = kDefaultAngles);

  /// s(t) = max Re(e^{-i t} z) over z in Num(A).
  double support(double theta) const;
  double distance(Complex lambda, bool refine = true) const;
  int angles() const noexcept { return static_cast<int>(grid_support_.size()); }

 private:
  ComplexMatrix a_;
  std::vector<double> grid_support_;
};

double dist_to_numerical_range(const ComplexMatrix& a, Complex lambda,
                               int angles = NumericalRange::kDefaultAngles);

/// Roots of sum_k coeffs[k] x^k via companion-matrix eigenvalues, each
/// polished by Newton steps that are kept only if they reduce |p|.
/// Negligible leading coefficients are trimmed first.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

}  // namespace blaschke
