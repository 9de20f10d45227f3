#pragma once

// Finite complex measures on the unit circle: finitely many atoms plus a
// scalar multiple of normalized Lebesgue measure m.

#include <complex>
#include <vector>

namespace blaschke {

using Complex = std::complex<double>;

/// A point of the unit circle. Inputs within 1e-9 of the circle are
/// renormalized; anything farther away is rejected with OffCircle.
class UnitPoint {
 public:
  explicit UnitPoint(Complex z);
  static UnitPoint from_angle_deg(double degrees);

  Complex value() const noexcept { return value_; }
  Complex conj() const noexcept { return std::conj(value_); }

 private:
  Complex value_;
};

struct Atom {
  UnitPoint point;
  Complex weight;
};

/// Atoms (pairwise distinct, nonzero weights) plus lebesgue * m.
///
/// Construction merges atoms whose points lie within 1e-12 of each other by
/// adding weights, then drops atoms whose weight is exactly zero. Insertion
/// order of the surviving atoms is preserved.
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms, Complex lebesgue = {});

  static AtomicMeasure dirac(Complex point, Complex weight = 1.0);
  static AtomicMeasure lebesgue_only(Complex coefficient);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  Complex lebesgue() const noexcept { return lebesgue_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool is_atomic() const noexcept { return lebesgue_ == Complex{}; }
  bool is_zero() const noexcept { return atoms_.empty() && is_atomic(); }

  /// mu(T) = sum of weights + lebesgue.
  Complex mass() const noexcept;

 private:
  std::vector<Atom> atoms_;
  Complex lebesgue_{};
};

struct PolarDecomposition {
  std::vector<double> modulus_weights;
  std::vector<Complex> phases;
};

inline constexpr double kAtomMergeTolerance = 1e-12;
inline constexpr double kCircleRenormalizeTolerance = 1e-9;

double total_variation(const AtomicMeasure& mu);

/// zeta-bar * mu with the Lebesgue part dropped; K of the result is B(K mu).
AtomicMeasure shift_measure(const AtomicMeasure& mu);

/// zeta * sigma + (h0 - c_sigma) m with c_sigma = sum c_j zeta_j; its Cauchy
/// transform is h0 + w (K sigma)(w). sigma must be purely atomic, since
/// zeta * m is not representable in this class (throws NonAtomicMeasure).
AtomicMeasure inverse_shift(const AtomicMeasure& sigma, Complex h0);

/// mu-bar(Omega) = mu(Omega*): atoms moved to conjugate points.
AtomicMeasure reflect_measure(const AtomicMeasure& mu);

/// Conjugate weights at conjugate points; conjugates the Cauchy transform.
AtomicMeasure conjugate_measure(const AtomicMeasure& mu);

PolarDecomposition polar_decompose(const AtomicMeasure& mu);

}  // namespace blaschke
