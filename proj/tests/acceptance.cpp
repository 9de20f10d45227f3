// Acceptance run: one PASS/FAIL line per criterion with its measured runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "blaschke/bounds.hpp"
#include "blaschke/dilation.hpp"
#include "blaschke/suite.hpp"
#include "blaschke/transform.hpp"
#include "blaschke/zeros.hpp"

using namespace blaschke;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;
  std::function<Outcome()> run;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.note = what;
  }
}

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

AtomicMeasure double_zero_measure() {
  return AtomicMeasure({{UnitPoint(Complex(1, 0)), Complex(-3.402, 0.414)},
                        {UnitPoint(Complex(-1, 0)), Complex(8.926, -4.782)},
                        {UnitPoint(Complex(0, 1)), Complex(-4.524, 4.368)}});
}

Outcome sharp_example() {
  Outcome o;
  const BoundReport r = check_theorem2(AtomicMeasure::dirac(-1.0));
  const auto& zeros = r.details["zeros"];
  require(o, zeros.size() == 1, "expected one zero");
  if (zeros.size() == 1) {
    const Complex z(zeros[0]["location"]["re"].get<double>(), zeros[0]["location"]["im"].get<double>());
    require(o, std::abs(z + 0.5) <= 1e-10, "zero not at -1/2");
  }
  require(o, std::abs(r.lhs - 1.0) <= 1e-10 && std::abs(r.rhs - 1.0) <= 1e-10, "lhs/rhs not 1");
  require(o, std::abs(r.slack) <= 1e-10, "slack");
  if (o.pass) o.note = fmt("lhs=rhs=1, |slack|=%.1e", std::abs(r.slack));
  return o;
}

Outcome equality_family() {
  Outcome o;
  double worst = 0.0;
  for (double c : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const AtomicMeasure sigma = AtomicMeasure::dirac(-1.0, c);
    const BoundReport t1 = check_theorem1(build_system_from_measure(sigma));
    const BoundReport t2 = check_theorem2(sigma);
    const ZeroSet z = zeros_via_L(CauchyFunction{sigma});
    require(o, z.zeros.size() == 1 && std::abs(z.zeros[0].location + 1.0 / (1.0 + c)) <= 1e-10,
            "zero location for c=" + std::to_string(c));
    for (const BoundReport* r : {&t1, &t2}) {
      worst = std::max({worst, std::abs(r->lhs - c), std::abs(r->rhs - c), std::abs(r->slack)});
    }
  }
  require(o, worst <= 1e-10, fmt("deviation %.2e", worst));
  if (o.pass) o.note = fmt("max |lhs-c|,|rhs-c|,|slack| = %.1e", worst);
  return o;
}

Outcome zero_equivalence() {
  Outcome o;
  const ZeroAgreement fixture = cross_validate_zeros(CauchyFunction{double_zero_measure()});
  require(o, fixture.agree, "double-zero fixture: methods disagree");
  for (const ZeroSet* s : {&fixture.via_L, &fixture.via_argument, &fixture.via_roots}) {
    bool has_double = false;
    for (const Zero& z : s->zeros) {
      has_double = has_double || (z.multiplicity == 2 && std::abs(z.location - Complex(0.4, 0.3)) <= 1e-7);
    }
    require(o, has_double, std::string("no double zero from ") + to_string(s->method));
  }
  double worst = fixture.max_pair_distance;
  double worst_blaschke = fixture.max_blaschke_difference;
  int zeros = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    SplitMix64 rng = instance_stream(2024, SuiteKind::Thm2, i);
    const ZeroAgreement ag = cross_validate_zeros(CauchyFunction{random_measure(rng, 8)});
    require(o, ag.agree, "instance " + std::to_string(i) + " disagrees");
    worst = std::max(worst, ag.max_pair_distance);
    worst_blaschke = std::max(worst_blaschke, ag.max_blaschke_difference);
    zeros += ag.via_roots.count();
  }
  if (o.pass) {
    o.note = "200 systems + double-zero fixture, " + std::to_string(zeros) + " zeros; max pair dist " +
             fmt("%.1e", worst) + ", max Blaschke diff " + fmt("%.1e", worst_blaschke);
  }
  return o;
}

Outcome determinant_identity() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    SplitMix64 rng = instance_stream(2024, SuiteKind::Thm1, i);
    const ContractionSystem s = random_system(rng, 10);
    for (int k = 0; k < 10; ++k) {
      const Complex lambda = std::polar(2.0, 2.0 * std::numbers::pi * rng.uniform());
      const PerturbationDeterminant d = perturbation_determinant(s, lambda);
      const Complex h = eval_h_resolvent(s, 1.0 / lambda);
      const double scale = std::max({std::abs(d.rank_one), std::abs(d.full_det), std::abs(h)});
      const double rel = std::max(std::abs(d.rank_one - d.full_det), std::abs(d.rank_one - h)) / scale;
      worst = std::max(worst, rel);
    }
  }
  require(o, worst <= 1e-11, fmt("max relative deviation %.2e", worst));
  if (o.pass) o.note = fmt("2000 points, max relative deviation %.1e", worst);
  return o;
}

Outcome numerical_range_suite() {
  Outcome o;
  double min_main = 1e300;
  double min_link = 1e300;
  for (std::size_t i = 0; i < 500; ++i) {
    SplitMix64 rng = instance_stream(2024, SuiteKind::Thm3, i);
    const int n = rng.integer(1, 10);
    const ComplexMatrix a = random_matrix(rng, n, n) * std::exp2(4.0 * rng.uniform() - 2.0);
    ComplexMatrix l = a;
    for (int r = rng.integer(1, std::min(3, n)); r > 0; --r) l += random_vector(rng, n) * random_vector(rng, n).adjoint();
    const BoundReport t = check_theorem3(a, l, 1e-7);
    require(o, t.pass, "trace-norm bound fails at instance " + std::to_string(i));
    min_main = std::min(min_main, t.slack);
    const BoundReport chain = check_schur_chain(a, l, 1e-9);
    for (const BoundReport& link : chain.links) {
      require(o, link.slack >= -1e-9, link.name + " fails at instance " + std::to_string(i));
      min_link = std::min(min_link, link.slack);
    }
  }
  if (o.pass) o.note = fmt("min slack %.1e", min_main) + fmt(", min chain-link slack %.1e", min_link);
  return o;
}

Outcome dilation_roundtrip() {
  Outcome o;
  double tv_slack = 1e300;
  for (std::size_t i = 0; i < 100; ++i) {
    SplitMix64 rng = instance_stream(2024, SuiteKind::Dilation, i);
    const ContractionSystem s = random_system(rng, 5);
    const int order = rng.integer(1, 10);
    const BoundReport r = roundtrip_check(s, order);
    require(o, r.all_pass(), "instance " + std::to_string(i) + " fails");
    require(o, r.lhs <= r.rhs + 1e-10, "TV exceeds coupling");
    tv_slack = std::min(tv_slack, r.slack);
  }
  if (o.pass) o.note = fmt("unitarity, moments, Taylor 0..N+1, TV all within tolerance; min TV slack %.1e", tv_slack);
  return o;
}

Outcome jensen_chain() {
  Outcome o;
  const BoundReport lin = check_jensen_h1({1.0, -2.0});
  require(o, lin.all_pass(), "h = 1 - 2w chain fails");
  require(o, std::abs(lin.rhs - 2.0) <= 1e-12, fmt("||h-1||_H1 = %.17g", lin.rhs));
  SplitMix64 rng(77);
  int checked = 0;
  while (checked < 20) {
    const int degree = rng.integer(1, 6);
    std::vector<Complex> roots;
    bool near_circle = false;
    for (int k = 0; k < degree; ++k) {
      const double r = 0.2 + 2.8 * rng.uniform();
      near_circle = near_circle || std::abs(r - 1.0) < 0.02;
      roots.push_back(std::polar(r, 2.0 * std::numbers::pi * rng.uniform()));
    }
    if (near_circle) continue;
    // h(w) = prod (1 - w / r_k)
    std::vector<Complex> c{1.0};
    for (const Complex& r : roots) {
      std::vector<Complex> next(c.size() + 1);
      for (std::size_t j = 0; j < c.size(); ++j) {
        next[j] += c[j];
        next[j + 1] -= c[j] / r;
      }
      c = std::move(next);
    }
    const BoundReport rep = check_jensen_h1(c, 1e-8);
    require(o, rep.all_pass(), "random polynomial " + std::to_string(checked) + " fails");
    ++checked;
  }
  if (o.pass) o.note = "h = 1 - 2w gives ||h-1||_H1 = 2; 20 random polynomials pass";
  return o;
}

Outcome real_line() {
  Outcome o;
  const BoundReport frozen = check_real_line_variant({{-1.0, Complex(0.5, 1.0)}, {1.0, Complex(0.5, -1.0)}}, 1e-8);
  require(o, frozen.all_pass() && frozen.lhs > 0.0, "frozen non-real fixture");
  SuiteConfig cfg;
  cfg.seed = 2024;
  cfg.instances = 200;
  int nonreal = 0;
  for (const BoundReport& r : run_suite(cfg, SuiteKind::RealLine)) {
    require(o, r.all_pass(), r.name + " fails");
    nonreal += r.lhs > 0.0 ? 1 : 0;
  }
  if (o.pass) {
    o.note = fmt("frozen fixture lhs %.3f", frozen.lhs) + fmt(" <= rhs %.3f", frozen.rhs) + "; 200 random, " +
             std::to_string(nonreal) + " with non-real zeros";
  }
  return o;
}

Outcome measure_calculus() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    SplitMix64 rng = instance_stream(2024, SuiteKind::All, i);
    const AtomicMeasure atoms = random_measure(rng, 8);
    const AtomicMeasure mu(atoms.atoms(), i % 2 == 0 ? rng.complex_normal() : Complex{});
    const AtomicMeasure shifted = shift_measure(mu);
    const AtomicMeasure back = inverse_shift(shifted, eval_K(mu, 0.0));
    const AtomicMeasure refl = reflect_measure(mu);
    require(o, total_variation(shifted) <= total_variation(mu) * (1.0 + 1e-14), "TV increased under shift");
    require(o, std::abs(total_variation(refl) - total_variation(mu)) <= 1e-14 * total_variation(mu), "reflection changed TV");
    const AtomicMeasure rr = reflect_measure(refl);
    for (std::size_t j = 0; j < mu.size(); ++j) {
      require(o, rr.atoms()[j].point.value() == mu.atoms()[j].point.value(), "reflection is not an involution");
    }
    for (int k = 0; k < 50; ++k) {
      const Complex w = std::polar(0.999 * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
      const Complex kw = eval_K(mu, w);
      const double scale = std::max(1.0, std::abs(kw));
      // B(K mu) = K(shift mu)
      const Complex bk = (kw - eval_K(mu, 0.0)) / w;
      worst = std::max(worst, std::abs(eval_K(shifted, w) - bk) / std::max(1.0, std::abs(bk)));
      // K(inverse_shift(shift mu, h(0))) = K mu
      worst = std::max(worst, std::abs(eval_K(back, w) - kw) / scale);
      // K(reflect mu)(w) = sum c / (1 - w zeta) + lebesgue
      Complex direct = mu.lebesgue();
      for (const Atom& a : mu.atoms()) direct += a.weight / (1.0 - w * a.point.value());
      worst = std::max(worst, std::abs(eval_K(refl, w) - direct) / std::max(1.0, std::abs(direct)));
    }
  }
  require(o, worst <= 1e-10, fmt("max relative deviation %.2e", worst));
  if (o.pass) o.note = fmt("10000 points per identity, max relative deviation %.1e", worst);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sharp example", 1.0, sharp_example},
      {2, "equality family", 10.0, equality_family},
      {3, "eigenvalue-zero equivalence", 30000.0, zero_equivalence},
      {4, "perturbation determinant", 10000.0, determinant_identity},
      {5, "numerical range suite", 60000.0, numerical_range_suite},
      {6, "dilation round trip", 60000.0, dilation_roundtrip},
      {7, "Jensen / H1 chain", 10000.0, jensen_chain},
      {8, "real-line variant", 10000.0, real_line},
      {9, "measure calculus", 5000.0, measure_calculus},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = ms < c.limit_ms;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %d %-28s %10.3f ms (limit %.0f ms)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, ms,
                c.limit_ms, o.note.c_str(), in_time ? "" : "  [over time limit]");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
