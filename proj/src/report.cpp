#include "blaschke/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace blaschke {

BoundReport BoundReport::make(std::string name, double lhs, double rhs, double tol, nlohmann::json details) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tol = tol;
  r.pass = r.slack >= -tol;
  r.details = std::move(details);
  return r;
}

bool BoundReport::all_pass() const {
  return pass && std::all_of(links.begin(), links.end(), [](const BoundReport& l) { return l.all_pass(); });
}

double BoundReport::min_slack() const {
  double m = slack;
  for (const BoundReport& l : links) m = std::min(m, l.min_slack());
  return m;
}

nlohmann::json to_json(const BoundReport& r) {
  return nlohmann::json{{"name", r.name}, {"lhs", r.lhs},   {"rhs", r.rhs},         {"slack", r.slack},
                        {"tol", r.tol},   {"pass", r.pass}, {"details", r.details}};
}

namespace {
void flatten_into(const BoundReport& r, const std::string& prefix, std::vector<BoundReport>& out) {
  BoundReport copy = r;
  copy.name = prefix.empty() ? r.name : prefix + "/" + r.name;
  copy.links.clear();
  out.push_back(copy);
  for (const BoundReport& l : r.links) flatten_into(l, copy.name, out);
}
}  // namespace

std::vector<BoundReport> flatten(const std::vector<BoundReport>& reports) {
  std::vector<BoundReport> out;
  for (const BoundReport& r : reports) flatten_into(r, "", out);
  return out;
}

SuiteSummary summarize(const std::vector<BoundReport>& flat) {
  SuiteSummary s;
  s.total = flat.size();
  s.min_slack = flat.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (const BoundReport& r : flat) {
    if (!r.pass) ++s.failed;
    s.min_slack = std::min(s.min_slack, r.slack);
  }
  return s;
}

nlohmann::json report_document(const std::vector<BoundReport>& reports) {
  const std::vector<BoundReport> flat = flatten(reports);
  nlohmann::json arr = nlohmann::json::array();
  for (const BoundReport& r : flat) arr.push_back(to_json(r));
  const SuiteSummary s = summarize(flat);
  return nlohmann::json{{"reports", std::move(arr)},
                        {"summary", {{"total", s.total}, {"failed", s.failed}, {"min_slack", s.min_slack}}}};
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "index,name,lhs,rhs,slack,tol,pass\n";
  std::size_t i = 0;
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const BoundReport& r : flatten(reports)) {
    os << i++ << ',' << r.name << ',' << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.slack) << ','
       << num(r.tol) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace blaschke
