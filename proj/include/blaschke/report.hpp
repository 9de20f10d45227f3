#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace blaschke {

/// One checked inequality lhs <= rhs. pass is exactly slack >= -tol.
/// Chained inequalities carry their intermediate steps as `links`, each a
/// report of its own.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool pass = true;
  nlohmann::json details = nlohmann::json::object();
  std::vector<BoundReport> links;

  static BoundReport make(std::string name, double lhs, double rhs, double tol,
                          nlohmann::json details = nlohmann::json::object());

  /// pass for this report and every link.
  bool all_pass() const;
  /// Minimum slack over the report and its links.
  double min_slack() const;
};

nlohmann::json to_json(const BoundReport& r);

/// Report followed by its links (named "<name>/<link>"), links dropped.
std::vector<BoundReport> flatten(const std::vector<BoundReport>& reports);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t failed = 0;
  double min_slack = 0.0;
};

/// Over already-flattened reports.
SuiteSummary summarize(const std::vector<BoundReport>& flat);

/// {"reports": [...], "summary": {"total", "failed", "min_slack"}}
nlohmann::json report_document(const std::vector<BoundReport>& reports);

/// Header plus one row per flattened report.
std::string reports_to_csv(const std::vector<BoundReport>& reports);

}  // namespace blaschke
