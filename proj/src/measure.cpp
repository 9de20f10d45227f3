#include "blaschke/measure.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "blaschke/error.hpp"

namespace blaschke {

UnitPoint::UnitPoint(Complex z) {
  const double r = std::abs(z);
  if (!std::isfinite(r) || std::abs(r - 1.0) > kCircleRenormalizeTolerance) {
    throw Error(ErrorCode::OffCircle,
                "point has modulus " + std::to_string(r) + ", expected 1");
  }
  value_ = z / r;
}

UnitPoint UnitPoint::from_angle_deg(double degrees) {
  // Exact values at multiples of 90 degrees keep e.g. i and -1 bit-exact.
  const double turns = degrees / 90.0;
  if (std::isfinite(turns) && turns == std::round(turns)) {
    static constexpr Complex kQuarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const auto k = static_cast<long long>(std::round(turns));
    return UnitPoint(kQuarter[((k % 4) + 4) % 4]);
  }
  return UnitPoint(std::polar(1.0, degrees * std::numbers::pi / 180.0));
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, Complex lebesgue) : lebesgue_(lebesgue) {
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom& a : atoms) {
    bool absorbed = false;
    for (Atom& m : merged) {
      if (std::abs(m.point.value() - a.point.value()) <= kAtomMergeTolerance) {
        m.weight += a.weight;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(a);
  }
  for (const Atom& m : merged) {
    if (m.weight != Complex{}) atoms_.push_back(m);
  }
}

AtomicMeasure AtomicMeasure::dirac(Complex point, Complex weight) {
  return AtomicMeasure({Atom{UnitPoint(point), weight}});
}

AtomicMeasure AtomicMeasure::lebesgue_only(Complex coefficient) {
  return AtomicMeasure({}, coefficient);
}

Complex AtomicMeasure::mass() const noexcept {
  Complex total = lebesgue_;
  for (const Atom& a : atoms_) total += a.weight;
  return total;
}

double total_variation(const AtomicMeasure& mu) {
  double tv = std::abs(mu.lebesgue());
  for (const Atom& a : mu.atoms()) tv += std::abs(a.weight);
  return tv;
}

AtomicMeasure shift_measure(const AtomicMeasure& mu) {
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms()) atoms.push_back({a.point, a.weight * a.point.conj()});
  return AtomicMeasure(std::move(atoms));
}

AtomicMeasure inverse_shift(const AtomicMeasure& sigma, Complex h0) {
  if (!sigma.is_atomic()) {
    throw Error(ErrorCode::NonAtomicMeasure,
                "inverse shift of a measure with a Lebesgue part leaves the atomic class");
  }
  std::vector<Atom> atoms;
  atoms.reserve(sigma.size());
  Complex first_moment{};
  for (const Atom& a : sigma.atoms()) {
    const Complex cz = a.weight * a.point.value();
    first_moment += cz;
    atoms.push_back({a.point, cz});
  }
  return AtomicMeasure(std::move(atoms), h0 - first_moment);
}

AtomicMeasure reflect_measure(const AtomicMeasure& mu) {
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms()) atoms.push_back({UnitPoint(a.point.conj()), a.weight});
  return AtomicMeasure(std::move(atoms), mu.lebesgue());
}

AtomicMeasure conjugate_measure(const AtomicMeasure& mu) {
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const Atom& a : mu.atoms()) atoms.push_back({UnitPoint(a.point.conj()), std::conj(a.weight)});
  return AtomicMeasure(std::move(atoms), std::conj(mu.lebesgue()));
}

PolarDecomposition polar_decompose(const AtomicMeasure& mu) {
  if (!mu.is_atomic()) {
    throw Error(ErrorCode::NonAtomicMeasure, "polar decomposition needs a purely atomic measure");
  }
  PolarDecomposition pd;
  pd.modulus_weights.reserve(mu.size());
  pd.phases.reserve(mu.size());
  for (const Atom& a : mu.atoms()) {
    const double r = std::abs(a.weight);
    pd.modulus_weights.push_back(r);
    pd.phases.push_back(a.weight / r);
  }
  return pd;
}

}  // namespace blaschke
