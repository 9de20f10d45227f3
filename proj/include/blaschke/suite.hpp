#pragma once

// Randomized verification suites. Every instance draws from its own
// SplitMix64 stream seeded by (seed, suite, index), so the output does not
// depend on the number of workers.
//
// Distributions:
//   contraction  i.i.d. complex Gaussian matrix scaled to operator norm u,
//                u uniform in (0, 1]
//   measure      1..max_atoms atoms uniform on the circle, complex Gaussian
//                weights clipped to modulus <= 5
//   thm3/schur   A complex Gaussian times 2^t, t uniform in [-2, 2]; L - A a
//                sum of 1..3 Gaussian rank-one terms
//   realline     1..max_atoms Gaussian positions, complex Gaussian weights
//                with the last weight fixing the total mass to 1

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blaschke/bounds.hpp"
#include "blaschke/linalg.hpp"
#include "blaschke/measure.hpp"
#include "blaschke/operator_model.hpp"
#include "blaschke/report.hpp"

namespace blaschke {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// [0, 1) with 53 random bits.
  double uniform();
  /// (0, 1]
  double uniform_positive() { return 1.0 - uniform(); }
  /// Box-Muller, one draw per call.
  double normal();
  /// Real and imaginary parts N(0, 1/2).
  Complex complex_normal();
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

 private:
  std::uint64_t state_;
};

enum class SuiteKind { Thm1, Thm2, Thm3, Schur, Dilation, RealLine, All };

const char* to_string(SuiteKind k) noexcept;
/// Throws InvalidArgument on unknown names.
SuiteKind parse_suite_kind(const std::string& name);

struct SuiteConfig {
  std::uint64_t seed = 42;
  int instances = 100;
  int max_atoms = 8;
  int max_dim = 10;
  /// Names: blaschke, trace_norm, schur_chain, real_line, determinant, dilation.
  std::map<std::string, double> tolerances;
  /// 0 means hardware concurrency. BLASCHKE_VERIFY_THREADS caps it either way.
  unsigned threads = 0;

  /// Throws InvalidArgument on bad counts or unknown tolerance names.
  void validate() const;
  double tolerance(const std::string& name, double fallback) const;
};

unsigned worker_count(const SuiteConfig& cfg);

SplitMix64 instance_stream(std::uint64_t seed, SuiteKind kind, std::size_t index);

ComplexMatrix random_matrix(SplitMix64& rng, Eigen::Index rows, Eigen::Index cols);
ComplexMatrix random_contraction(SplitMix64& rng, Eigen::Index n);
ComplexVector random_vector(SplitMix64& rng, Eigen::Index n);
ContractionSystem random_system(SplitMix64& rng, int max_dim);
AtomicMeasure random_measure(SplitMix64& rng, int max_atoms);
std::vector<RealAtom> random_real_atoms(SplitMix64& rng, int max_atoms);

/// Reports ordered by instance. Each report is named
/// "<suite>/<index>/<check>"; failures carry the instance data under
/// details.instance_data.
std::vector<BoundReport> run_suite(const SuiteConfig& cfg, SuiteKind kind);

}  // namespace blaschke
