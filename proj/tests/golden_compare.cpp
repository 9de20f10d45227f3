// golden_compare GOT WANT [REL_TOL]: same report names, pass flags, and lhs/rhs within tolerance.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: golden_compare GOT WANT [REL_TOL]\n");
    return 2;
  }
  const double tol = argc > 3 ? std::atof(argv[3]) : 1e-9;
  std::ifstream a(argv[1]);
  std::ifstream b(argv[2]);
  const auto got = nlohmann::json::parse(a)["reports"];
  const auto want = nlohmann::json::parse(b)["reports"];
  if (got.size() != want.size()) {
    std::fprintf(stderr, "report count %zu vs %zu\n", got.size(), want.size());
    return 1;
  }
  int bad = 0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const std::string name = got[i]["name"];
    if (name != want[i]["name"].get<std::string>() || got[i]["pass"] != want[i]["pass"]) {
      std::fprintf(stderr, "%s: name or pass flag differs\n", name.c_str());
      ++bad;
      continue;
    }
    for (const char* key : {"lhs", "rhs"}) {
      const double x = got[i][key];
      const double y = want[i][key];
      // absolute floor for residual-type quantities near zero
      if (std::abs(x - y) > tol * std::max(1.0, std::abs(y))) {
        std::fprintf(stderr, "%s.%s: %.17g vs %.17g\n", name.c_str(), key, x, y);
        ++bad;
      }
    }
  }
  std::printf("%zu reports compared, %d mismatches\n", got.size(), bad);
  return bad == 0 ? 0 : 1;
}
