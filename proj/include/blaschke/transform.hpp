#pragma once

// Cauchy transforms of atomic measures and the holomorphic functions built
// from them on the open unit disk.

#include <vector>

#include "blaschke/measure.hpp"

namespace blaschke {

enum class TransformMode {
  Direct,   // h = K mu
  Shifted,  // h = 1 + w (K sigma)(w)
};

struct CauchyFunction {
  AtomicMeasure source;
  TransformMode mode = TransformMode::Shifted;
};

/// h = P(w) / prod_j (1 - w conj(zeta_j)), coefficients in ascending order.
struct RationalForm {
  std::vector<Complex> numerator;
  std::vector<UnitPoint> poles;

  Complex eval(Complex w) const;
};

/// (K mu)(w) = sum_j c_j / (1 - w conj(zeta_j)) + lebesgue, |w| < 1.
Complex eval_K(const AtomicMeasure& mu, Complex w);

Complex eval_h(const CauchyFunction& f, Complex w);
Complex eval_h_derivative(const CauchyFunction& f, Complex w);

/// Sum of the moduli of the terms making up h(w); rounding error in eval_h
/// is a small multiple of machine epsilon times this.
double eval_h_scale(const CauchyFunction& f, Complex w);

/// n-th Taylor coefficient of K mu: sum_j c_j conj(zeta_j)^n (+ lebesgue at n = 0).
Complex taylor_moment(const AtomicMeasure& mu, int n);

RationalForm rational_form(const CauchyFunction& f);

/// Horner evaluation of an ascending-order polynomial.
Complex eval_polynomial(const std::vector<Complex>& coeffs, Complex w);

}  // namespace blaschke
