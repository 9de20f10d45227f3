#include "blaschke/transform.hpp"

#include <cmath>

#include "blaschke/error.hpp"

namespace blaschke {

namespace {

void require_in_disk(Complex w) {
  if (!(std::abs(w) < 1.0)) {
    throw Error(ErrorCode::OutsideDisk, "|w| must be < 1");
  }
}

// ascending-order product with (1 - w*a)
std::vector<Complex> times_linear(const std::vector<Complex>& p, Complex a) {
  std::vector<Complex> out(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] += p[k];
    out[k + 1] -= p[k] * a;
  }
  return out;
}

void add_into(std::vector<Complex>& acc, const std::vector<Complex>& p, Complex scale,
              std::size_t offset = 0) {
  if (acc.size() < p.size() + offset) acc.resize(p.size() + offset);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + offset] += scale * p[k];
}

}  // namespace

Complex eval_K(const AtomicMeasure& mu, Complex w) {
  require_in_disk(w);
  Complex sum = mu.lebesgue();
  for (const Atom& a : mu.atoms()) sum += a.weight / (1.0 - w * a.point.conj());
  return sum;
}

Complex eval_h(const CauchyFunction& f, Complex w) {
  const Complex k = eval_K(f.source, w);
  return f.mode == TransformMode::Direct ? k : 1.0 + w * k;
}

Complex eval_h_derivative(const CauchyFunction& f, Complex w) {
  require_in_disk(w);
  Complex k = f.source.lebesgue();
  Complex dk{};
  for (const Atom& a : f.source.atoms()) {
    const Complex zb = a.point.conj();
    const Complex t = 1.0 / (1.0 - w * zb);
    k += a.weight * t;
    dk += a.weight * zb * t * t;
  }
  return f.mode == TransformMode::Direct ? dk : k + w * dk;
}

double eval_h_scale(const CauchyFunction& f, Complex w) {
  double s = std::abs(f.source.lebesgue());
  for (const Atom& a : f.source.atoms()) s += std::abs(a.weight / (1.0 - w * a.point.conj()));
  return f.mode == TransformMode::Direct ? s : 1.0 + std::abs(w) * s;
}

Complex taylor_moment(const AtomicMeasure& mu, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "moment order must be >= 0");
  Complex sum = n == 0 ? mu.lebesgue() : Complex{};
  for (const Atom& a : mu.atoms()) sum += a.weight * std::pow(a.point.conj(), n);
  return sum;
}

Complex eval_polynomial(const std::vector<Complex>& coeffs, Complex w) {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
  return acc;
}

Complex RationalForm::eval(Complex w) const {
  Complex den = 1.0;
  for (const UnitPoint& p : poles) den *= 1.0 - w * p.conj();
  return eval_polynomial(numerator, w) / den;
}

RationalForm rational_form(const CauchyFunction& f) {
  const auto& atoms = f.source.atoms();
  RationalForm rf;
  for (const Atom& a : atoms) rf.poles.push_back(a.point);

  std::vector<Complex> denominator{1.0};
  for (const Atom& a : atoms) denominator = times_linear(denominator, a.point.conj());

  // K mu = S(w) / Q(w) with S = lebesgue * Q + sum_j c_j prod_{k != j} (1 - w conj(zeta_k))
  std::vector<Complex> s;
  add_into(s, denominator, f.source.lebesgue());
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    std::vector<Complex> partial{1.0};
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      if (k != j) partial = times_linear(partial, atoms[k].point.conj());
    }
    add_into(s, partial, atoms[j].weight);
  }

  if (f.mode == TransformMode::Direct) {
    rf.numerator = std::move(s);
  } else {
    rf.numerator = denominator;
    add_into(rf.numerator, s, 1.0, 1);
  }
  return rf;
}

}  // namespace blaschke
