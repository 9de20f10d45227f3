#include "blaschke/suite.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "blaschke/dilation.hpp"
#include "blaschke/error.hpp"
#include "blaschke/io.hpp"
#include "blaschke/transform.hpp"

namespace blaschke {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  const double u1 = uniform_positive();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SplitMix64::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

int SplitMix64::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

const char* to_string(SuiteKind k) noexcept {
  switch (k) {
    case SuiteKind::Thm1: return "thm1";
    case SuiteKind::Thm2: return "thm2";
    case SuiteKind::Thm3: return "thm3";
    case SuiteKind::Schur: return "schur";
    case SuiteKind::Dilation: return "dilation";
    case SuiteKind::RealLine: return "realline";
    case SuiteKind::All: return "all";
  }
  return "unknown";
}

SuiteKind parse_suite_kind(const std::string& name) {
  for (SuiteKind k : {SuiteKind::Thm1, SuiteKind::Thm2, SuiteKind::Thm3, SuiteKind::Schur, SuiteKind::Dilation,
                      SuiteKind::RealLine, SuiteKind::All}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
}

namespace {
const std::vector<std::string> kToleranceNames{"blaschke", "trace_norm", "schur_chain",
                                               "real_line", "determinant", "dilation"};
}

void SuiteConfig::validate() const {
  if (instances < 1) throw Error(ErrorCode::InvalidArgument, "instances must be >= 1");
  if (max_atoms < 1) throw Error(ErrorCode::InvalidArgument, "max_atoms must be >= 1");
  if (max_dim < 1) throw Error(ErrorCode::InvalidArgument, "max_dim must be >= 1");
  for (const auto& [name, value] : tolerances) {
    if (std::find(kToleranceNames.begin(), kToleranceNames.end(), name) == kToleranceNames.end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown tolerance '" + name + "'");
    }
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw Error(ErrorCode::InvalidArgument, "tolerance '" + name + "' must be finite and >= 0");
    }
  }
}

double SuiteConfig::tolerance(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

unsigned worker_count(const SuiteConfig& cfg) {
  unsigned n = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BLASCHKE_VERIFY_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

SplitMix64 instance_stream(std::uint64_t seed, SuiteKind kind, std::size_t index) {
  SplitMix64 mix(seed);
  const std::uint64_t a = mix.next();
  SplitMix64 mix2(a ^ (static_cast<std::uint64_t>(kind) + 1) * 0xD1B54A32D192ED03ULL);
  const std::uint64_t b = mix2.next();
  SplitMix64 mix3(b + static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ULL);
  return SplitMix64(mix3.next());
}

ComplexMatrix random_matrix(SplitMix64& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.complex_normal();
  }
  return m;
}

ComplexVector random_vector(SplitMix64& rng, Eigen::Index n) {
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v;
}

ComplexMatrix random_contraction(SplitMix64& rng, Eigen::Index n) {
  ComplexMatrix g = random_matrix(rng, n, n);
  const double u = rng.uniform_positive();
  const double norm = operator_norm(g);
  if (norm == 0.0) return ComplexMatrix::Zero(n, n);
  g *= u / norm;
  // rounding can leave the norm a hair above u
  const double after = operator_norm(g);
  if (after > 1.0) g /= after;
  return g;
}

ContractionSystem random_system(SplitMix64& rng, int max_dim) {
  const int n = rng.integer(1, max_dim);
  ComplexMatrix a = random_contraction(rng, n);
  ComplexVector phi = random_vector(rng, n);
  ComplexVector psi = random_vector(rng, n);
  return ContractionSystem(std::move(a), std::move(phi), std::move(psi));
}

AtomicMeasure random_measure(SplitMix64& rng, int max_atoms) {
  const int n = rng.integer(1, max_atoms);
  std::vector<Atom> atoms;
  for (int j = 0; j < n; ++j) {
    const UnitPoint p(std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform()));
    Complex w = rng.complex_normal();
    if (std::abs(w) > 5.0) w *= 5.0 / std::abs(w);
    atoms.push_back({p, w});
  }
  return AtomicMeasure(std::move(atoms));
}

std::vector<RealAtom> random_real_atoms(SplitMix64& rng, int max_atoms) {
  const int n = rng.integer(1, max_atoms);
  std::vector<RealAtom> atoms;
  Complex total{};
  for (int j = 0; j < n; ++j) {
    const double s = 2.0 * rng.normal();
    Complex w = j + 1 < n ? rng.complex_normal() : Complex{};
    if (std::abs(w) > 5.0) w *= 5.0 / std::abs(w);
    total += w;
    atoms.push_back({s, w});
  }
  atoms.back().weight = 1.0 - (total - atoms.back().weight);
  return atoms;
}

namespace {

struct Instance {
  std::vector<BoundReport> reports;
  nlohmann::json data;
};

ComplexMatrix low_rank_perturbation(SplitMix64& rng, Eigen::Index n) {
  const int rank = rng.integer(1, 3);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int r = 0; r < rank; ++r) m += random_vector(rng, n) * random_vector(rng, n).adjoint();
  return m;
}

Instance run_instance(const SuiteConfig& cfg, SuiteKind kind, std::size_t index) {
  SplitMix64 rng = instance_stream(cfg.seed, kind, index);
  Instance out;
  switch (kind) {
    case SuiteKind::Thm1: {
      const ContractionSystem s = random_system(rng, cfg.max_dim);
      std::vector<Complex> lambdas;
      for (int k = 0; k < 10; ++k) lambdas.push_back(std::polar(2.0, 2.0 * std::numbers::pi * rng.uniform()));
      out.data = {{"system", io::to_json(s)}};
      out.reports.push_back(check_theorem1(s, cfg.tolerance("blaschke", tolerance::kBlaschke)));
      out.reports.push_back(check_perturbation_determinant(s, lambdas, cfg.tolerance("determinant", 1e-11)));
      break;
    }
    case SuiteKind::Thm2: {
      const AtomicMeasure sigma = random_measure(rng, cfg.max_atoms);
      out.data = {{"measure", io::to_json(sigma)}};
      out.reports.push_back(check_theorem2(sigma, cfg.tolerance("blaschke", tolerance::kBlaschke)));
      out.reports.push_back(check_zero_agreement(CauchyFunction{sigma, TransformMode::Shifted}));
      break;
    }
    case SuiteKind::Thm3:
    case SuiteKind::Schur: {
      const int n = rng.integer(1, cfg.max_dim);
      const ComplexMatrix a = random_matrix(rng, n, n) * std::exp2(4.0 * rng.uniform() - 2.0);
      const ComplexMatrix l = a + low_rank_perturbation(rng, n);
      out.data = {{"A", io::to_json(a)}, {"L", io::to_json(l)}};
      if (kind == SuiteKind::Thm3) {
        out.reports.push_back(check_theorem3(a, l, cfg.tolerance("trace_norm", tolerance::kTraceNorm)));
      } else {
        out.reports.push_back(check_schur_chain(a, l, cfg.tolerance("schur_chain", tolerance::kSchurChain)));
      }
      break;
    }
    case SuiteKind::Dilation: {
      const ContractionSystem s = random_system(rng, std::min(cfg.max_dim, 5));
      const int order = rng.integer(1, 10);
      out.data = {{"system", io::to_json(s)}, {"order", order}};
      DilationTolerances tol;
      tol.total_variation = cfg.tolerance("dilation", tol.total_variation);
      out.reports.push_back(roundtrip_check(s, order, tol));
      break;
    }
    case SuiteKind::RealLine: {
      const std::vector<RealAtom> atoms = random_real_atoms(rng, cfg.max_atoms);
      out.data = io::to_json(atoms);
      out.reports.push_back(check_real_line_variant(atoms, cfg.tolerance("real_line", tolerance::kRealLine)));
      break;
    }
    case SuiteKind::All:
      break;
  }
  return out;
}

std::vector<BoundReport> run_single(const SuiteConfig& cfg, SuiteKind kind) {
  const auto n = static_cast<std::size_t>(cfg.instances);
  std::vector<std::vector<BoundReport>> results(n);
  std::atomic<std::size_t> next{0};
  const std::string prefix = to_string(kind);

  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      std::vector<BoundReport> reports;
      nlohmann::json data;
      try {
        Instance inst = run_instance(cfg, kind, i);
        reports = std::move(inst.reports);
        data = std::move(inst.data);
      } catch (const Error& e) {
        BoundReport r = BoundReport::make("error", 1.0, 0.0, 0.0,
                                          {{"code", to_string(e.code())}, {"message", e.what()}});
        r.pass = false;
        reports = {r};
      } catch (const std::exception& e) {
        BoundReport r = BoundReport::make("error", 1.0, 0.0, 0.0, {{"code", "Internal"}, {"message", e.what()}});
        r.pass = false;
        reports = {r};
      }
      for (BoundReport& r : reports) {
        r.name = prefix + "/" + std::to_string(i) + "/" + r.name;
        r.details["instance"] = i;
        if (!r.all_pass()) {
          r.details["seed"] = cfg.seed;
          if (!data.is_null()) r.details["instance_data"] = data;
        }
      }
      results[i] = std::move(reports);
    }
  };

  const unsigned workers = std::min<unsigned>(worker_count(cfg), static_cast<unsigned>(n));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  std::vector<BoundReport> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<BoundReport> run_suite(const SuiteConfig& cfg, SuiteKind kind) {
  cfg.validate();
  if (kind != SuiteKind::All) return run_single(cfg, kind);
  std::vector<BoundReport> out;
  for (SuiteKind k : {SuiteKind::Thm1, SuiteKind::Thm2, SuiteKind::Thm3, SuiteKind::Schur, SuiteKind::Dilation,
                      SuiteKind::RealLine}) {
    std::vector<BoundReport> part = run_single(cfg, k);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace blaschke
