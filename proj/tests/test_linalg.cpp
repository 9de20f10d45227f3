#include <doctest.h>

#include "blaschke/error.hpp"
#include "blaschke/linalg.hpp"
#include "oracles.hpp"

using namespace blaschke;

namespace {

std::vector<Complex> diag_of(const ComplexMatrix& t) {
  std::vector<Complex> d;
  for (Eigen::Index i = 0; i < t.rows(); ++i) d.push_back(t(i, i));
  return d;
}

}  // namespace

TEST_CASE("schur examples") {
  ComplexMatrix a(2, 2);
  a << 2.0, 1.0, 0.0, 3.0;
  CHECK(oracle::same_multiset(diag_of(schur_decompose(a).T), {2.0, 3.0}, 1e-14));

  const SchurForm id = schur_decompose(ComplexMatrix::Identity(4, 4));
  CHECK((id.T - ComplexMatrix::Identity(4, 4)).norm() <= 1e-15);
}

TEST_CASE("schur eigenvalues match the characteristic polynomial") {
  oracle::Rng rng(31);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = rng.matrix(6);
    const auto roots = oracle::durand_kerner(oracle::charpoly(a));
    CHECK(oracle::same_multiset(diag_of(schur_decompose(a).T), roots, 1e-7));
  }
}

TEST_CASE("schur invariants over random matrices") {
  oracle::Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    const Eigen::Index n = rng.integer(1, 12);
    const ComplexMatrix a = rng.matrix(n) * std::exp(rng.normal());
    const SchurForm s = schur_decompose(a);
    const double scale = a.norm();
    CHECK((s.Q.adjoint() * s.Q - ComplexMatrix::Identity(n, n)).norm() <= 1e-10 * n);
    CHECK((s.Q * s.T * s.Q.adjoint() - a).norm() <= 1e-9 * scale);
    CHECK(s.T.triangularView<Eigen::StrictlyLower>().toDenseMatrix().norm() <= 1e-10 * scale);
  }
}

TEST_CASE("eigenvalue clustering") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = 2.0 + 1e-9;
  d(2, 2) = 5.0;
  const auto c = eigenvalues_clustered(d, 1e-6);
  REQUIRE(c.size() == 2);
  CHECK(std::abs(c[0].center - 2.0) <= 1e-9);
  CHECK(c[0].multiplicity == 2);
  CHECK(c[1].multiplicity == 1);

  ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
  nil(0, 1) = 1.0;
  const auto cn = eigenvalues_clustered(nil);
  REQUIRE(cn.size() == 1);
  CHECK(cn[0].multiplicity == 2);

  ComplexMatrix j = 3.0 * ComplexMatrix::Identity(3, 3);
  j(0, 1) = j(1, 2) = 1.0;
  const auto cj = eigenvalues_clustered(j);
  REQUIRE(cj.size() == 1);
  CHECK(cj[0].multiplicity == 3);
  CHECK(std::abs(cj[0].center - 3.0) <= 1e-6);
  CHECK(cj[0].spread <= 1e-6 * 3.0);
}

TEST_CASE("singular values and norms") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = Complex(0, -4);
  const Eigen::VectorXd s = singular_values(d);
  CHECK(s(0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(s(1) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(trace_norm(d) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(trace_norm(ComplexMatrix::Zero(3, 3)) == 0.0);

  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(0, 0) = 0.5;
  e(1, 1) = -0.8;
  CHECK(operator_norm(e) == doctest::Approx(0.8).epsilon(1e-15));

  oracle::Rng rng(33);
  for (int k = 0; k < 50; ++k) {
    const Eigen::Index n = rng.integer(1, 10);
    const Eigen::VectorXcd phi = rng.vec(n);
    const Eigen::VectorXcd psi = rng.vec(n);
    const ComplexMatrix m = phi * psi.adjoint();
    const double expect = phi.norm() * psi.norm();
    const Eigen::VectorXd sv = singular_values(m);
    CHECK(std::abs(sv(0) - expect) <= 1e-12 * expect);
    CHECK(std::abs(trace_norm(m) - expect) <= 1e-12 * expect);

    const ComplexMatrix a = rng.matrix(n);
    const Eigen::VectorXd sa = singular_values(a);
    CHECK(std::abs(sa.squaredNorm() - a.squaredNorm()) <= 1e-10 * a.squaredNorm());
    double radius = 0.0;
    for (const EigenCluster& c : eigenvalues_clustered(a)) radius = std::max(radius, std::abs(c.center));
    CHECK(trace_norm(a) >= operator_norm(a));
    CHECK(operator_norm(a) >= radius * (1.0 - 1e-12));
  }
}

TEST_CASE("psd_sqrt") {
  CHECK((psd_sqrt(ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(3, 3)).norm() <= 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const ComplexMatrix r = psd_sqrt(d);
  CHECK(std::abs(r(0, 0) - 2.0) <= 1e-15);
  CHECK(std::abs(r(1, 1) - 3.0) <= 1e-15);

  oracle::Rng rng(34);
  for (int k = 0; k < 50; ++k) {
    const Eigen::Index n = rng.integer(1, 10);
    const ComplexMatrix g = rng.matrix(n);
    const ComplexMatrix h = g * g.adjoint();
    const ComplexMatrix s = psd_sqrt(h);
    CHECK((s * s - h).norm() <= 1e-9 * h.norm());
    CHECK((s - s.adjoint()).norm() <= 1e-12 * s.norm());
  }

  ComplexMatrix nh = ComplexMatrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  try {
    psd_sqrt(nh);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  try {
    psd_sqrt(-ComplexMatrix::Identity(2, 2));
    FAIL("expected NotPSD");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPSD);
  }
}

TEST_CASE("distance to the numerical range") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  CHECK(dist_to_numerical_range(d, 2.0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(dist_to_numerical_range(ComplexMatrix::Zero(3, 3), Complex(3, 4)) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK_THROWS_AS(NumericalRange(d, 8), Error);

  oracle::Rng rng(35);
  for (int k = 0; k < 30; ++k) {
    const Eigen::Index n = rng.integer(1, 6);
    const ComplexMatrix a = rng.matrix(n);
    const NumericalRange nr(a);
    // a point of Num(A)
    CHECK(nr.distance(a(0, 0)) <= 1e-12);
    const Complex lambda = 4.0 * rng.cnormal();
    const double dist = nr.distance(lambda);
    CHECK(dist <= std::abs(lambda) + operator_norm(a) + 1e-12);
    CHECK(dist <= oracle::numerical_range_distance_sampled(a, lambda, 4000, rng.engine) + 1e-12);
    // grid refinement never lowers the estimate
    CHECK(NumericalRange(a, 64).distance(lambda, false) <= NumericalRange(a, 128).distance(lambda, false) + 1e-12);
  }

  // convex combinations of the diagonal of a normal matrix are inside
  for (int k = 0; k < 20; ++k) {
    const Eigen::Index n = rng.integer(2, 6);
    Eigen::VectorXcd ev(n);
    for (Eigen::Index i = 0; i < n; ++i) ev(i) = rng.cnormal();
    const Eigen::HouseholderQR<ComplexMatrix> qr(rng.matrix(n));
    const ComplexMatrix q = qr.householderQ();
    const ComplexMatrix a = q * ev.asDiagonal() * q.adjoint();
    Eigen::VectorXd t(n);
    for (Eigen::Index i = 0; i < n; ++i) t(i) = rng.uniform();
    t /= t.sum();
    Complex inside{};
    for (Eigen::Index i = 0; i < n; ++i) inside += t(i) * ev(i);
    CHECK(dist_to_numerical_range(a, inside) <= 1e-12);
  }
}

TEST_CASE("polynomial roots") {
  const std::vector<Complex> roots{Complex(0.3, 0.1), Complex(-0.7, 0.2), Complex(0.0, -0.9), 2.0};
  const auto found = polynomial_roots(oracle::from_roots(roots));
  CHECK(oracle::same_multiset(found, roots, 1e-12));
  // trailing zero leading coefficients are trimmed
  std::vector<Complex> padded{1.0, 2.0, 0.0, 0.0};
  const auto r = polynomial_roots(padded);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0] + 0.5) <= 1e-15);
  CHECK(polynomial_roots(std::vector<Complex>{3.0}).empty());
}
