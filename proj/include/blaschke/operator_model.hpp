#pragma once

// The rank-one perturbation model: a contraction A, vectors phi and psi,
// h(w) = 1 + w <(I - wA)^{-1} phi, psi>, and L = A - phi psi*.
// Inner products are linear in the first slot: <x, y> = y* x.

#include <vector>

#include "blaschke/linalg.hpp"
#include "blaschke/measure.hpp"

namespace blaschke {

inline constexpr double kContractionSlack = 1e-10;
inline constexpr double kBoundaryTolerance = 1e-8;

class ContractionSystem {
 public:
  /// Throws DimensionMismatch or NotAContraction (||A|| > 1 + 1e-10).
  ContractionSystem(ComplexMatrix a, ComplexVector phi, ComplexVector psi);

  const ComplexMatrix& A() const noexcept { return a_; }
  const ComplexVector& phi() const noexcept { return phi_; }
  const ComplexVector& psi() const noexcept { return psi_; }
  Eigen::Index dim() const noexcept { return a_.rows(); }
  double a_norm() const noexcept { return a_norm_; }

  /// ||phi|| ||psi||, which is also the trace norm of phi psi*.
  double coupling() const { return phi_.norm() * psi_.norm(); }

 private:
  ComplexMatrix a_;
  ComplexVector phi_;
  ComplexVector psi_;
  double a_norm_ = 0.0;
};

struct PerturbedOperator {
  ComplexMatrix L;
};

struct PerturbationDeterminant {
  Complex rank_one;   // 1 + psi* (lambda - A)^{-1} phi
  Complex full_det;   // det(I - M (lambda - A)^{-1}) by LU, M = -phi psi*
};

struct OutsideSpectrum {
  std::vector<EigenCluster> outside;   // |center| > 1 + tol
  std::vector<EigenCluster> boundary;  // within tol of the unit circle, excluded from sums
  bool defective_warning = false;      // some outside cluster spread > 10 tol
};

/// L^2(T, d|sigma|) model: A = diag(conj(zeta_j)), phi_j = sqrt|c_j|,
/// psi_j = conj(nu_j) sqrt|c_j| where c_j = nu_j |c_j|.
/// Throws NonAtomicMeasure or EmptyMeasure.
ContractionSystem build_system_from_measure(const AtomicMeasure& sigma);

Complex eval_h_resolvent(const ContractionSystem& s, Complex w);

PerturbedOperator build_L(const ContractionSystem& s);

/// Requires |lambda| > 1, else OutsideDomain.
PerturbationDeterminant perturbation_determinant(const ContractionSystem& s, Complex lambda);

OutsideSpectrum eigenvalues_outside_disk(const PerturbedOperator& p, double tol = kBoundaryTolerance,
                                         double cluster_tol = kDefaultClusterTolerance);

/// k-th Taylor coefficient of h: 1 at k = 0, <A^{k-1} phi, psi> for k >= 1.
std::vector<Complex> neumann_coefficients(const ContractionSystem& s, int max_order);

}  // namespace blaschke
