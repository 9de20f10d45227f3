#include "blaschke/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "blaschke/error.hpp"

namespace blaschke {

const char* to_string(ZeroMethod m) noexcept {
  switch (m) {
    case ZeroMethod::ReciprocalEigenvalue: return "reciprocal-eigenvalue";
    case ZeroMethod::ArgumentPrinciple: return "argument-principle";
    case ZeroMethod::NumeratorRoots: return "numerator-roots";
  }
  return "unknown";
}

int ZeroSet::count() const {
  int n = 0;
  for (const Zero& z : zeros) n += z.multiplicity;
  return n;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void sort_zeros(std::vector<Zero>& zs) {
  std::sort(zs.begin(), zs.end(), [](const Zero& a, const Zero& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
}

// Merges zeros closer than `radius`, summing multiplicities.
std::vector<Zero> merge_close(const std::vector<Zero>& zs, double radius) {
  std::vector<Complex> pts;
  for (const Zero& z : zs) pts.insert(pts.end(), static_cast<std::size_t>(z.multiplicity), z.location);
  std::vector<Zero> out;
  for (const EigenCluster& c : cluster_points(pts, radius)) out.push_back({c.center, c.multiplicity});
  return out;
}

// Operator model for f with h(0) normalized to 1. A Lebesgue part of the
// shifted measure becomes an extra coordinate on which A acts as 0.
std::optional<ContractionSystem> system_for(const CauchyFunction& f) {
  AtomicMeasure sigma = f.source;
  Complex scale = 1.0;
  if (f.mode == TransformMode::Direct) {
    const Complex mass = f.source.mass();
    if (mass == Complex{}) throw Error(ErrorCode::NotNormalized, "h(0) = 0; cannot normalize");
    sigma = shift_measure(f.source);
    scale = 1.0 / mass;
  }
  const std::size_t n_atoms = sigma.size();
  const bool has_leb = !sigma.is_atomic();
  const auto n = static_cast<Eigen::Index>(n_atoms + (has_leb ? 1 : 0));
  if (n == 0) return std::nullopt;

  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  ComplexVector phi(n);
  ComplexVector psi(n);
  auto put = [&](Eigen::Index j, Complex weight) {
    const double r = std::abs(weight);
    phi(j) = std::sqrt(r);
    psi(j) = std::conj(weight / r) * std::sqrt(r);
  };
  for (std::size_t j = 0; j < n_atoms; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    a(jj, jj) = sigma.atoms()[j].point.conj();
    put(jj, sigma.atoms()[j].weight * scale);
  }
  if (has_leb) {
    const Complex w = sigma.lebesgue() * scale;
    if (w == Complex{}) {
      phi(n - 1) = psi(n - 1) = 0.0;
    } else {
      put(n - 1, w);
    }
  }
  return ContractionSystem(std::move(a), std::move(phi), std::move(psi));
}

// ---- argument principle -------------------------------------------------

struct Cell {
  double r0 = 0.0;
  double r1 = 0.0;
  double t0 = 0.0;
  double t1 = kTwoPi;
  bool disk = true;
  int depth = 0;

  double diameter() const { return disk ? 2.0 * r1 : (r1 - r0) + r1 * (t1 - t0); }
  Complex center() const {
    return disk ? Complex{} : std::polar(0.5 * (r0 + r1), 0.5 * (t0 + t1));
  }
};

struct Winding {
  bool converged = false;
  int count = 0;
  Complex moment;            // (1 / 2 pi i) \oint w h'/h dw
  double min_ratio = 1e300;  // min |h| / scale over the nodes
};

struct Sums {
  Complex full;
  Complex half;
  Complex moment;
  double min_ratio = 1e300;
  bool finite = true;
};

class ContourIntegrator {
 public:
  explicit ContourIntegrator(const CauchyFunction& f) : f_(f) {}

  // h, h' and the size of the summed terms at w
  void eval(Complex w, Complex& h, Complex& dh, double& scale) const {
    Complex k = f_.source.lebesgue();
    Complex dk{};
    scale = std::abs(k);
    for (const Atom& a : f_.source.atoms()) {
      const Complex zb = a.point.conj();
      const Complex t = 1.0 / (1.0 - w * zb);
      const Complex ct = a.weight * t;
      k += ct;
      dk += ct * zb * t;
      scale += std::abs(ct);
    }
    h = k;
    dh = dk;
    if (f_.mode == TransformMode::Shifted) {
      h = 1.0 + w * k;
      dh = k + w * dk;
      scale = 1.0 + std::abs(w) * scale;
    }
  }

  void sample(Complex w, Complex dz, double weight, bool on_half, Sums& s) const {
    Complex h;
    Complex dh;
    double scale = 0.0;
    eval(w, h, dh, scale);
    const double ratio = std::abs(h) / scale;
    s.min_ratio = std::min(s.min_ratio, ratio);
    if (h == Complex{}) {
      s.finite = false;
      return;
    }
    const Complex g = dh / h * dz * weight;
    s.full += g;
    s.moment += w * g;
    if (on_half) s.half += 2.0 * g;
  }

  Sums sums(const Cell& c, int m) const {
    Sums s;
    if (c.disk) {
      const double step = kTwoPi / m;
      for (int k = 0; k < m; ++k) {
        const Complex w = std::polar(c.r1, k * step);
        sample(w, Complex(0, 1) * w, step, k % 2 == 0, s);
      }
      return s;
    }
    struct Piece {
      bool arc;
      double fixed;
      double from;
      double to;
      double length;
    };
    const std::array<Piece, 4> pieces{{
        {true, c.r1, c.t0, c.t1, c.r1 * (c.t1 - c.t0)},
        {false, c.t1, c.r1, c.r0, c.r1 - c.r0},
        {true, c.r0, c.t1, c.t0, c.r0 * (c.t1 - c.t0)},
        {false, c.t0, c.r0, c.r1, c.r1 - c.r0},
    }};
    double total = 0.0;
    for (const Piece& p : pieces) total += p.length;
    for (const Piece& p : pieces) {
      int intervals = 2 * static_cast<int>(std::ceil(0.5 * m * p.length / total));
      intervals = std::max(intervals, 16);
      const double h = (p.to - p.from) / intervals;
      for (int k = 0; k <= intervals; ++k) {
        const double t = p.from + k * h;
        const double endpoint = (k == 0 || k == intervals) ? 0.5 : 1.0;
        Complex w;
        Complex dz;
        if (p.arc) {
          w = std::polar(p.fixed, t);
          dz = Complex(0, 1) * w;
        } else {
          dz = std::polar(1.0, p.fixed);
          w = t * dz;
        }
        sample(w, dz, h * endpoint, k % 2 == 0, s);
      }
    }
    return s;
  }

  Winding wind(const Cell& c, int base, int max_points) const {
    Winding out;
    const Complex to_count = 1.0 / Complex(0, kTwoPi);
    for (int m = base; m <= max_points; m *= 2) {
      const Sums s = sums(c, m);
      out.min_ratio = s.min_ratio;
      if (!s.finite) continue;
      const Complex full = s.full * to_count;
      const Complex half = s.half * to_count;
      const double k = std::round(full.real());
      if (std::abs(full - k) <= 1e-3 && std::abs(half - k) < 0.25) {
        out.converged = true;
        out.count = static_cast<int>(k);
        out.moment = s.moment * to_count;
        return out;
      }
    }
    return out;
  }

  // Zeros inside the circle |w - c| < rho, expected to number k, from the
  // power sums (1 / 2 pi i) \oint ((w - c) / rho)^p h'/h dw and Newton's
  // identities. Empty if the count disagrees or the sums do not settle.
  std::optional<std::vector<Complex>> local_roots(Complex c, double rho, int k) const {
    std::vector<Complex> prev;
    for (int m = 128; m <= 65536; m *= 2) {
      std::vector<Complex> sums(static_cast<std::size_t>(k) + 1);
      for (int j = 0; j < m; ++j) {
        const Complex u = std::polar(1.0, kTwoPi * j / m);
        Complex h;
        Complex dh;
        double scale = 0.0;
        eval(c + rho * u, h, dh, scale);
        if (h == Complex{}) return std::nullopt;
        // dw / (2 pi i) = rho u dtheta / (2 pi)
        Complex g = dh / h * rho * u / static_cast<double>(m);
        for (int p = 0; p <= k; ++p) {
          sums[static_cast<std::size_t>(p)] += g;
          g *= u;
        }
      }
      if (std::abs(sums[0] - static_cast<double>(k)) > 1e-6) {
        if (std::abs(sums[0] - std::round(sums[0].real())) <= 1e-6) return std::nullopt;
        prev.clear();
        continue;
      }
      bool settled = !prev.empty();
      for (std::size_t p = 0; p < prev.size() && settled; ++p) {
        settled = std::abs(sums[p] - prev[p]) <= 1e-11;
      }
      if (!settled) {
        prev = std::move(sums);
        continue;
      }
      // elementary symmetric polynomials e_j of the scaled roots
      std::vector<Complex> e(static_cast<std::size_t>(k) + 1);
      e[0] = 1.0;
      for (int j = 1; j <= k; ++j) {
        Complex acc{};
        for (int i = 1; i <= j; ++i) {
          const double sign = (i % 2 == 1) ? 1.0 : -1.0;
          acc += sign * e[static_cast<std::size_t>(j - i)] * sums[static_cast<std::size_t>(i)];
        }
        e[static_cast<std::size_t>(j)] = acc / static_cast<double>(j);
      }
      std::vector<Complex> poly(static_cast<std::size_t>(k) + 1);
      for (int j = 0; j <= k; ++j) {
        poly[static_cast<std::size_t>(k - j)] = ((j % 2 == 0) ? 1.0 : -1.0) * e[static_cast<std::size_t>(j)];
      }
      std::vector<Complex> out;
      for (const Complex& u : polynomial_roots(poly)) {
        if (std::abs(u) >= 1.0) return std::nullopt;
        out.push_back(c + rho * u);
      }
      if (static_cast<int>(out.size()) != k) return std::nullopt;
      return out;
    }
    return std::nullopt;
  }

 private:
  const CauchyFunction& f_;
};

constexpr std::array<double, 8> kNudges{0.0, 0.0137, -0.0219, 0.0331, -0.0457, 0.0613, -0.0797, 0.0949};
constexpr double kNoiseRatio = 1e-9;
constexpr double kPrecisionLimitedDiameter = 1e-4;
constexpr int kMaxLocalCount = 4;
constexpr double kLocalDiameter = 0.05;

std::vector<Cell> split(const Cell& c, double nudge) {
  std::vector<Cell> kids;
  if (c.disk) {
    const double r_mid = c.r1 * (0.5 + nudge);
    kids.push_back(Cell{0.0, r_mid, 0.0, kTwoPi, true, c.depth + 1});
    const double rot = nudge * kTwoPi;
    for (int q = 0; q < 4; ++q) {
      const double a = rot + q * kTwoPi / 4.0;
      kids.push_back(Cell{r_mid, c.r1, a, a + kTwoPi / 4.0, false, c.depth + 1});
    }
    return kids;
  }
  const double r_mid = c.r0 + (0.5 + nudge) * (c.r1 - c.r0);
  const double t_mid = c.t0 + (0.5 - nudge) * (c.t1 - c.t0);
  for (const auto& [ra, rb] : {std::pair{c.r0, r_mid}, std::pair{r_mid, c.r1}}) {
    for (const auto& [ta, tb] : {std::pair{c.t0, t_mid}, std::pair{t_mid, c.t1}}) {
      kids.push_back(Cell{ra, rb, ta, tb, false, c.depth + 1});
    }
  }
  return kids;
}

}  // namespace

ZeroSet zeros_via_L(const ContractionSystem& s, double boundary_tol) {
  ZeroSet out;
  out.method = ZeroMethod::ReciprocalEigenvalue;
  out.search_radius = 1.0 / (1.0 + boundary_tol);
  for (const EigenCluster& c : eigenvalues_outside_disk(build_L(s), boundary_tol).outside) {
    out.zeros.push_back({1.0 / c.center, c.multiplicity});
  }
  sort_zeros(out.zeros);
  return out;
}

ZeroSet zeros_via_L(const CauchyFunction& f, double boundary_tol) {
  const auto sys = system_for(f);
  if (!sys) {
    ZeroSet out;
    out.method = ZeroMethod::ReciprocalEigenvalue;
    out.search_radius = 1.0 / (1.0 + boundary_tol);
    return out;
  }
  return zeros_via_L(*sys, boundary_tol);
}

ZeroSet zeros_via_argument_principle(const CauchyFunction& f, const ArgumentPrincipleOptions& opts) {
  if (!(opts.radius > 0.0 && opts.radius < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "search radius must lie in (0, 1)");
  }
  const ContourIntegrator integ(f);
  const double base_radius = std::min(opts.radius, kSearchRadiusCap);

  // Top-level circle, nudged by multiples of 1e-4 if it passes near a zero.
  std::optional<std::pair<Cell, Winding>> root;
  for (int attempt = 0; attempt <= 8 && !root; ++attempt) {
    const int k = (attempt + 1) / 2;
    const double sign = (attempt % 2 == 1) ? -1.0 : 1.0;
    const double r = base_radius + sign * 1e-4 * k;
    if (!(r > 0.0 && r < 1.0)) continue;
    const Cell top{0.0, r, 0.0, kTwoPi, true, 0};
    double min_abs = 1e300;
    constexpr int kProbe = 1 << 12;
    for (int j = 0; j < kProbe; ++j) {
      min_abs = std::min(min_abs, std::abs(eval_h(f, std::polar(r, kTwoPi * j / kProbe))));
    }
    if (min_abs < 1e-8) continue;
    const Winding w = integ.wind(top, opts.base_points, opts.max_points);
    if (w.converged) root.emplace(top, w);
  }
  if (!root) throw Error(ErrorCode::ContourThroughZero, "no clear search circle after 8 nudges");

  ZeroSet out;
  out.method = ZeroMethod::ArgumentPrinciple;
  out.search_radius = root->first.r1;

  std::vector<std::pair<Cell, Winding>> stack{*root};
  auto emit = [&](const Cell& c, const Winding& w) {
    Complex loc = w.moment / static_cast<double>(w.count);
    if (!(std::abs(loc - c.center()) <= c.diameter())) loc = c.center();
    out.zeros.push_back({loc, w.count});
  };

  while (!stack.empty()) {
    auto [cell, wind] = stack.back();
    stack.pop_back();
    if (wind.count == 0) continue;
    const double diam = cell.diameter();
    if (wind.count <= kMaxLocalCount && diam <= kLocalDiameter) {
      const Complex c = cell.center();
      const double rho = 0.75 * diam;
      if (std::abs(c) + rho <= 0.9995) {
        if (const auto roots = integ.local_roots(c, rho, wind.count)) {
          for (const Complex& z : *roots) out.zeros.push_back({z, 1});
          continue;
        }
      }
    }
    if (diam <= opts.terminal_diameter || (wind.min_ratio < kNoiseRatio && diam <= kPrecisionLimitedDiameter)) {
      emit(cell, wind);
      continue;
    }
    if (cell.depth >= opts.max_depth) {
      throw Error(ErrorCode::MaxDepthExceeded, "quadrisection depth limit reached");
    }
    bool done = false;
    for (double nudge : kNudges) {
      std::vector<std::pair<Cell, Winding>> kids;
      int total = 0;
      bool ok = true;
      for (const Cell& kid : split(cell, nudge)) {
        const Winding w = integ.wind(kid, opts.base_points, opts.max_points);
        if (!w.converged || w.count < 0) {
          ok = false;
          break;
        }
        total += w.count;
        kids.emplace_back(kid, w);
      }
      if (ok && total == wind.count) {
        for (auto& k : kids) stack.push_back(std::move(k));
        done = true;
        break;
      }
    }
    if (!done) {
      if (diam <= kPrecisionLimitedDiameter) {
        emit(cell, wind);
      } else {
        throw Error(ErrorCode::ContourThroughZero, "subdivision contours kept hitting zeros");
      }
    }
  }
  out.zeros = merge_close(out.zeros, kZeroClusterRadius);
  sort_zeros(out.zeros);
  return out;
}

ZeroSet zeros_via_numerator_roots(const CauchyFunction& f) {
  const RationalForm rf = rational_form(f);
  ZeroSet out;
  out.method = ZeroMethod::NumeratorRoots;
  out.search_radius = 1.0;
  std::vector<Zero> all;
  for (const Complex& r : polynomial_roots(rf.numerator)) all.push_back({r, 1});
  for (const Zero& z : merge_close(all, kZeroClusterRadius)) {
    if (std::abs(z.location) < 1.0) out.zeros.push_back(z);
  }
  sort_zeros(out.zeros);
  return out;
}

double blaschke_sum(const ZeroSet& z) {
  double sum = 0.0;
  for (const Zero& zero : z.zeros) sum += zero.multiplicity * (1.0 / std::abs(zero.location) - 1.0);
  return sum;
}

ZeroComparison compare_zero_sets(const ZeroSet& a, const ZeroSet& b, double pair_tol, double radius_limit,
                                 double guard) {
  auto restrict = [&](const ZeroSet& s) {
    std::vector<Zero> out;
    for (const Zero& z : s.zeros) {
      if (std::abs(z.location) < radius_limit - guard) out.push_back(z);
    }
    return out;
  };
  // zeros inside the guard band of one set may sit just outside it in the other
  auto in_band = [&](Complex z) {
    const double r = std::abs(z);
    return r >= radius_limit - 2.0 * guard && r < radius_limit + guard;
  };
  std::vector<Zero> za = restrict(a);
  std::vector<Zero> zb = restrict(b);

  ZeroComparison cmp;
  double sum_a = 0.0;
  double sum_b = 0.0;
  std::vector<bool> used(zb.size(), false);
  auto blaschke_term = [&](const Zero& z) {
    return in_band(z.location) ? 0.0 : z.multiplicity * (1.0 / std::abs(z.location) - 1.0);
  };
  for (const Zero& x : za) {
    sum_a += blaschke_term(x);
    std::size_t best = zb.size();
    double best_d = 1e300;
    for (std::size_t j = 0; j < zb.size(); ++j) {
      const double d = std::abs(zb[j].location - x.location);
      if (!used[j] && d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best == zb.size() || best_d > pair_tol || zb[best].multiplicity != x.multiplicity) {
      if (!in_band(x.location)) {
        cmp.match = false;
        if (best != zb.size()) cmp.max_distance = std::max(cmp.max_distance, best_d);
      }
      continue;
    }
    used[best] = true;
    cmp.max_distance = std::max(cmp.max_distance, best_d);
  }
  for (std::size_t j = 0; j < zb.size(); ++j) {
    sum_b += blaschke_term(zb[j]);
    if (!used[j] && !in_band(zb[j].location)) cmp.match = false;
  }
  cmp.blaschke_difference = std::abs(sum_a - sum_b);
  return cmp;
}

ZeroAgreement cross_validate_zeros(const CauchyFunction& f, double pair_tol) {
  ZeroAgreement out;
  out.via_roots = zeros_via_numerator_roots(f);
  out.via_L = zeros_via_L(f);
  out.via_argument = zeros_via_argument_principle(f);

  const double r_l = out.via_L.search_radius;
  const double r_ap = out.via_argument.search_radius;
  const std::array<ZeroComparison, 3> cmps{
      compare_zero_sets(out.via_roots, out.via_L, pair_tol, r_l),
      compare_zero_sets(out.via_roots, out.via_argument, pair_tol, r_ap),
      compare_zero_sets(out.via_L, out.via_argument, pair_tol, std::min(r_l, r_ap)),
  };
  for (const ZeroComparison& c : cmps) {
    out.agree = out.agree && c.match;
    out.max_pair_distance = std::max(out.max_pair_distance, c.max_distance);
    out.max_blaschke_difference = std::max(out.max_blaschke_difference, c.blaschke_difference);
  }
  out.agree = out.agree && out.max_blaschke_difference <= kBlaschkeAgreementTolerance;
  return out;
}

}  // namespace blaschke
