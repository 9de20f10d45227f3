#pragma once

// JSON formats.
//   complex:  number | [re, im] | {"re": x, "im": y}
//   point:    complex on the circle | {"angle_deg": t}
//   measure:  {"atoms": [{"point": ..., "weight": complex}], "lebesgue": complex?}
//   system:   {"A": [[complex]], "phi": [complex], "psi": [complex]}
//   pair:     {"A": [[complex]], "L": [[complex]]}
//   jensen:   {"coeffs": [complex]}  (ascending, coeffs[0] = 1)
//   realline: {"atoms": [{"s": real, "weight": complex}]}
// Malformed input raises ParseError.

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "blaschke/bounds.hpp"
#include "blaschke/linalg.hpp"
#include "blaschke/measure.hpp"
#include "blaschke/operator_model.hpp"

namespace blaschke::io {

nlohmann::json parse_text(const std::string& text);
nlohmann::json read_file(const std::string& path);

Complex complex_from_json(const nlohmann::json& j);
ComplexVector vector_from_json(const nlohmann::json& j);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
AtomicMeasure measure_from_json(const nlohmann::json& j);
ContractionSystem system_from_json(const nlohmann::json& j);
std::pair<ComplexMatrix, ComplexMatrix> matrix_pair_from_json(const nlohmann::json& j);
std::vector<Complex> coefficients_from_json(const nlohmann::json& j);
std::vector<RealAtom> real_atoms_from_json(const nlohmann::json& j);

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const ComplexVector& v);
nlohmann::json to_json(const ComplexMatrix& m);
nlohmann::json to_json(const AtomicMeasure& mu);
nlohmann::json to_json(const ContractionSystem& s);
nlohmann::json to_json(const std::vector<RealAtom>& atoms);

}  // namespace blaschke::io
