#pragma once

// Finite unitary dilations of a contraction and the spectral measures they
// carry. The (N+1) x (N+1) block unitary
//
//   [ A    0 ... 0  D_{A*} ]
//   [ D_A  0 ... 0  -A*    ]
//   [ 0    I ... 0  0      ]
//   [ ...      ...         ]
//   [ 0    0 ... I  0      ]
//
// satisfies block_00(U^k) = A^k for 0 <= k <= N.

#include <vector>

#include "blaschke/linalg.hpp"
#include "blaschke/measure.hpp"
#include "blaschke/operator_model.hpp"
#include "blaschke/report.hpp"

namespace blaschke {

struct DilationResult {
  ComplexMatrix U;
  Eigen::Index n = 0;  // dimension of the original space
  int order = 0;       // N
  ComplexMatrix defect;          // D_A = (I - A*A)^{1/2}
  ComplexMatrix defect_adjoint;  // D_{A*} = (I - AA*)^{1/2}

  /// Isometric embedding of the original space into block 0.
  ComplexVector embed(const ComplexVector& v) const;
  /// block_00 of M.
  ComplexMatrix compress(const ComplexMatrix& m) const { return m.topLeftCorner(n, n); }
};

/// Throws NotAContraction if ||A|| > 1 + 1e-10, InvalidArgument if N < 1.
DilationResult dilate(const ComplexMatrix& a, int order);

inline constexpr double kUnitaryClusterTolerance = 1e-8;

struct SpectralMeasureExtract {
  /// Atoms at eigenvalues of U with weights <P_k phi, psi>; eigenvalues within
  /// 1e-8 of each other share one atom.
  AtomicMeasure measure;
  double schur_off_diagonal = 0.0;
};

/// phi, psi live in the original space and are embedded into block 0.
SpectralMeasureExtract extract_spectral_measure(const DilationResult& d, const ComplexVector& phi,
                                                const ComplexVector& psi);

struct DilationTolerances {
  double unitarity = 1e-10;   // times dim
  double compression = 1e-10; // times ||A||^k
  double moments = 1e-10;
  double taylor = 1e-9;
  double total_variation = 1e-10;
  double schur_off_diagonal = 1e-8;
};

/// Contraction -> dilation -> spectral measure -> Cauchy representation.
/// Main report: TV(extracted mu) <= ||phi|| ||psi||. Links cover unitarity,
/// compression, moment matching, Taylor coefficients of h and of the
/// reconstruction through order N+1, the spectral mass, and the reflected
/// measure representing the backward shift of the reconstruction.
BoundReport roundtrip_check(const ContractionSystem& s, int order, const DilationTolerances& tol = {});

}  // namespace blaschke
