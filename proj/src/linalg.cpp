#include "blaschke/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "blaschke/error.hpp"

namespace blaschke {

SchurForm schur_decompose(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "Schur form needs a square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return {ComplexMatrix(0, 0), ComplexMatrix(0, 0)};

  Eigen::ComplexSchur<ComplexMatrix> schur(n);
  schur.setMaxIterations(100 * n);
  schur.compute(a, true);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "QR iteration exceeded 100 n sweeps");
  }
  SchurForm out{schur.matrixU(), schur.matrixT()};
  out.T.triangularView<Eigen::StrictlyLower>().setZero();
  return out;
}

std::vector<EigenCluster> cluster_points(std::span<const Complex> points, double radius) {
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(points[i] - points[j]) <= radius) parent[find(i)] = find(j);
    }
  }

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  std::vector<EigenCluster> clusters;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    Complex sum{};
    for (std::size_t i : g) sum += points[i];
    EigenCluster c;
    c.center = sum / static_cast<double>(g.size());
    c.multiplicity = static_cast<int>(g.size());
    for (std::size_t i : g) c.spread = std::max(c.spread, std::abs(points[i] - c.center));
    c.members = g;
    clusters.push_back(c);
  }
  std::sort(clusters.begin(), clusters.end(), [](const EigenCluster& x, const EigenCluster& y) {
    if (x.center.real() != y.center.real()) return x.center.real() < y.center.real();
    return x.center.imag() < y.center.imag();
  });
  return clusters;
}

std::vector<EigenCluster> eigenvalues_clustered(const ComplexMatrix& a, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "cluster tolerance must be positive");
  const ComplexVector ev = schur_decompose(a).eigenvalues();
  const std::vector<Complex> pts(ev.data(), ev.data() + ev.size());
  return cluster_points(pts, tol * std::max(1.0, operator_norm(a)));
}

Eigen::VectorXd singular_values(const ComplexMatrix& a) {
  if (a.size() == 0) return Eigen::VectorXd(0);
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

double trace_norm(const ComplexMatrix& a) { return singular_values(a).sum(); }

double operator_norm(const ComplexMatrix& a) {
  const Eigen::VectorXd s = singular_values(a);
  return s.size() == 0 ? 0.0 : s(0);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::DimensionMismatch, "psd_sqrt needs a square matrix");
  const double norm = h.norm();
  if ((h - h.adjoint()).norm() > 1e-10 * norm) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within 1e-10 relative");
  }
  const ComplexMatrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
  Eigen::VectorXd lambda = eig.eigenvalues();
  if (lambda.size() > 0 && lambda.minCoeff() < -1e-10 * norm) {
    throw Error(ErrorCode::NotPSD, "matrix has a negative eigenvalue beyond 1e-10 relative");
  }
  lambda = lambda.cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * lambda.asDiagonal() * eig.eigenvectors().adjoint();
}

double hermitian_max_eigenvalue(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().maxCoeff();
}

NumericalRange::NumericalRange(ComplexMatrix a, int angles) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "numerical range needs a nonempty square matrix");
  }
  if (angles < 16) throw Error(ErrorCode::InvalidArgument, "numerical range grid needs >= 16 angles");
  grid_support_.resize(static_cast<std::size_t>(angles));
  for (int k = 0; k < angles; ++k) {
    grid_support_[static_cast<std::size_t>(k)] = support(2.0 * std::numbers::pi * k / angles);
  }
}

double NumericalRange::support(double theta) const {
  const Complex rot = std::polar(1.0, -theta);
  const ComplexMatrix herm = (rot * a_ + std::conj(rot) * a_.adjoint()) / 2.0;
  return hermitian_max_eigenvalue(herm);
}

double NumericalRange::distance(Complex lambda, bool refine) const {
  const int m = angles();
  const double step = 2.0 * std::numbers::pi / m;
  auto gap = [&](double theta, double s) { return (std::polar(1.0, -theta) * lambda).real() - s; };

  int best_k = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    const double g = gap(k * step, grid_support_[static_cast<std::size_t>(k)]);
    if (g > best) {
      best = g;
      best_k = k;
    }
  }
  if (refine && best > 0.0) {
    // golden-section search on [t* - step, t* + step]
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = (best_k - 1) * step;
    double hi = (best_k + 1) * step;
    auto f = [&](double t) { return gap(t, support(t)); };
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 40; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = f(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = f(x1);
      }
      best = std::max({best, f1, f2});
    }
  }
  return std::max(best, 0.0);
}

double dist_to_numerical_range(const ComplexMatrix& a, Complex lambda, int angles) {
  return NumericalRange(a, angles).distance(lambda);
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::size_t deg = coeffs.size();
  double max_abs = 0.0;
  for (const Complex& c : coeffs) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) return {};
  while (deg > 0 && std::abs(coeffs[deg - 1]) <= 1e-14 * max_abs) --deg;
  if (deg <= 1) return {};
  const std::size_t d = deg - 1;
  const Complex lead = coeffs[d];

  ComplexMatrix companion = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -coeffs[i] / lead;
  }
  const ComplexVector ev = schur_decompose(companion).eigenvalues();

  auto eval = [&](Complex x, Complex& deriv) {
    Complex p{};
    deriv = {};
    for (std::size_t k = deg; k-- > 0;) {
      deriv = deriv * x + p;
      p = p * x + coeffs[k];
    }
    return p;
  };

  std::vector<Complex> roots(ev.data(), ev.data() + ev.size());
  for (Complex& r : roots) {
    for (int it = 0; it < 3; ++it) {
      Complex dp;
      const Complex p = eval(r, dp);
      if (dp == Complex{}) break;
      const Complex cand = r - p / dp;
      Complex unused;
      if (std::abs(eval(cand, unused)) < std::abs(p)) {
        r = cand;
      } else {
        break;
      }
    }
  }
  return roots;
}

}  // namespace blaschke
