#pragma once

// Zeros of h in the open unit disk, located three independent ways:
// reciprocal eigenvalues of L, argument-principle subdivision, and roots of
// the numerator of the rational form.

#include <vector>

#include "blaschke/operator_model.hpp"
#include "blaschke/transform.hpp"

namespace blaschke {

enum class ZeroMethod { ReciprocalEigenvalue, ArgumentPrinciple, NumeratorRoots };

const char* to_string(ZeroMethod m) noexcept;

struct Zero {
  Complex location;
  int multiplicity = 1;
};

struct ZeroSet {
  std::vector<Zero> zeros;  // sorted by (Re, Im)
  ZeroMethod method = ZeroMethod::NumeratorRoots;
  /// Zeros are complete inside |w| < search_radius.
  double search_radius = 1.0;

  int count() const;
};

inline constexpr double kZeroClusterRadius = 1e-6;
inline constexpr double kSearchRadiusCap = 0.999;

struct ArgumentPrincipleOptions {
  double radius = kSearchRadiusCap;
  int max_depth = 64;
  double terminal_diameter = 1e-8;
  int base_points = 1 << 10;
  int max_points = 1 << 16;
};

/// Zeros of h(w) = 1 + w <(I - wA)^{-1} phi, psi> from eigenvalues of L with
/// |lambda| > 1 + boundary_tol. Cluster sizes give multiplicities.
ZeroSet zeros_via_L(const ContractionSystem& s, double boundary_tol = kBoundaryTolerance);

/// Same, for a Cauchy function: shifted mode uses the L^2(T, d|sigma|) model
/// of sigma, direct mode the model of shift(mu) / mu(T).
ZeroSet zeros_via_L(const CauchyFunction& f, double boundary_tol = kBoundaryTolerance);

/// Winding numbers of h'/h by trapezoid quadrature on |w| = radius (capped at
/// 0.999), then recursive quadrisection into annular sectors until each
/// zero-bearing cell is smaller than the terminal diameter. A terminal cell
/// reports its winding number as multiplicity and the contour centroid
/// (1 / 2 pi i k) \oint w h'/h dw as location.
ZeroSet zeros_via_argument_principle(const CauchyFunction& f, const ArgumentPrincipleOptions& opts = {});

ZeroSet zeros_via_numerator_roots(const CauchyFunction& f);

/// sum multiplicity * (1/|z| - 1)
double blaschke_sum(const ZeroSet& z);

struct ZeroComparison {
  bool match = true;
  double max_distance = 0.0;
  double blaschke_difference = 0.0;
};

/// Pairs zeros of equal multiplicity within pair_tol, considering only zeros
/// with |z| < radius_limit - guard in either set.
ZeroComparison compare_zero_sets(const ZeroSet& a, const ZeroSet& b, double pair_tol, double radius_limit,
                                 double guard = 1e-6);

struct ZeroAgreement {
  ZeroSet via_L;
  ZeroSet via_argument;
  ZeroSet via_roots;
  bool agree = true;
  double max_pair_distance = 0.0;
  double max_blaschke_difference = 0.0;
};

inline constexpr double kZeroPairTolerance = 1e-7;
inline constexpr double kBlaschkeAgreementTolerance = 1e-8;

ZeroAgreement cross_validate_zeros(const CauchyFunction& f, double pair_tol = kZeroPairTolerance);

}  // namespace blaschke
