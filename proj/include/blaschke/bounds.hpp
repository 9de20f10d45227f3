#pragma once

// Every inequality of the zero-bound chain as a BoundReport. Norms of
// Cauchy transforms are replaced by total variations of explicit
// representing measures, which bound them from above.

#include <utility>
#include <vector>

#include "blaschke/measure.hpp"
#include "blaschke/operator_model.hpp"
#include "blaschke/report.hpp"
#include "blaschke/transform.hpp"

namespace blaschke {

namespace tolerance {
inline constexpr double kBlaschke = 1e-7;
inline constexpr double kTraceNorm = 1e-7;
inline constexpr double kSchurChain = 1e-9;
inline constexpr double kJensen = 1e-8;
inline constexpr double kRealLine = 1e-8;
inline constexpr double kZeroResidual = 1e-8;
}  // namespace tolerance

/// Blaschke sum of h = 1 + w<(I - wA)^{-1} phi, psi> against ||phi|| ||psi||.
BoundReport check_theorem1(const ContractionSystem& s, double tol = tolerance::kBlaschke);

/// Shifted mode: sigma represents Bh. Blaschke sum against TV(sigma).
BoundReport check_theorem2(const AtomicMeasure& sigma, double tol = tolerance::kBlaschke);

/// Direct mode, mu(T) = 1: Blaschke sum of K mu against TV(mu), with links
/// for the bound through shift(mu) and TV(shift mu) <= TV(mu).
BoundReport check_corollary(const AtomicMeasure& mu, double tol = tolerance::kBlaschke);

/// sum over eigenvalues of L of dist(lambda, Num(A)) against ||L - A||_tr.
BoundReport check_theorem3(const ComplexMatrix& a, const ComplexMatrix& l, double tol = tolerance::kTraceNorm);

/// The same bound through a Schur basis g_n of L:
///   sum dist(lambda_n, Num A) <= sum |lambda_n - <A g_n, g_n>|
///                             <= sum |<(L - A) g_n, g_n>| <= ||L - A||_tr
BoundReport check_schur_chain(const ComplexMatrix& a, const ComplexMatrix& l, double tol = tolerance::kSchurChain);

/// Polynomial h with h(0) = 1 and no zeros on the circle:
///   Blaschke sum <= exp(\int log|h| dm) - 1 <= ||h||_1 - 1 <= ||h - 1||_1
BoundReport check_jensen_h1(const std::vector<Complex>& coeffs, double tol = tolerance::kJensen);

struct RealAtom {
  double s;
  Complex weight;
};

/// h(lambda) = sum c_j / (s_j - lambda), sum c_j = 1: sum of Im over zeros
/// in the upper half plane against sum |s_j| |c_j|.
BoundReport check_real_line_variant(const std::vector<RealAtom>& atoms, double tol = tolerance::kRealLine);

/// Three-way agreement of the zero finders as a report: lhs is the largest
/// pairing distance, rhs the pairing tolerance.
BoundReport check_zero_agreement(const CauchyFunction& f);

/// The two perturbation-determinant routes against h(1/lambda) at each lambda.
BoundReport check_perturbation_determinant(const ContractionSystem& s, const std::vector<Complex>& lambdas,
                                           double rel_tol = 1e-11);

}  // namespace blaschke
