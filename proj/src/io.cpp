#include "blaschke/io.hpp"

#include <fstream>
#include <sstream>

#include "blaschke/error.hpp"

namespace blaschke::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array()) {
    if (j.size() != 2) fail("complex array must be [re, im]");
    return {number(j[0], "re"), number(j[1], "im")};
  }
  if (j.is_object()) {
    const double re = j.contains("re") ? number(j.at("re"), "re") : 0.0;
    const double im = j.contains("im") ? number(j.at("im"), "im") : 0.0;
    if (!j.contains("re") && !j.contains("im")) fail("complex object needs re or im");
    return {re, im};
  }
  fail("not a complex number");
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array()) fail("vector must be an array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

AtomicMeasure measure_from_json(const json& j) {
  if (!j.is_object()) fail("measure must be an object");
  std::vector<Atom> atoms;
  if (j.contains("atoms")) {
    const json& arr = j.at("atoms");
    if (!arr.is_array()) fail("atoms must be an array");
    for (const json& a : arr) {
      const json& p = field(a, "point");
      const UnitPoint point = (p.is_object() && p.contains("angle_deg"))
                                  ? UnitPoint::from_angle_deg(number(p.at("angle_deg"), "angle_deg"))
                                  : UnitPoint(complex_from_json(p));
      atoms.push_back({point, complex_from_json(field(a, "weight"))});
    }
  }
  const Complex leb = j.contains("lebesgue") ? complex_from_json(j.at("lebesgue")) : Complex{};
  return AtomicMeasure(std::move(atoms), leb);
}

ContractionSystem system_from_json(const json& j) {
  return ContractionSystem(matrix_from_json(field(j, "A")), vector_from_json(field(j, "phi")),
                           vector_from_json(field(j, "psi")));
}

std::pair<ComplexMatrix, ComplexMatrix> matrix_pair_from_json(const json& j) {
  return {matrix_from_json(field(j, "A")), matrix_from_json(field(j, "L"))};
}

std::vector<Complex> coefficients_from_json(const json& j) {
  const json& arr = j.is_array() ? j : field(j, "coeffs");
  if (!arr.is_array()) fail("coeffs must be an array");
  std::vector<Complex> out;
  for (const json& c : arr) out.push_back(complex_from_json(c));
  return out;
}

std::vector<RealAtom> real_atoms_from_json(const json& j) {
  const json& arr = field(j, "atoms");
  if (!arr.is_array()) fail("atoms must be an array");
  std::vector<RealAtom> out;
  for (const json& a : arr) out.push_back({number(field(a, "s"), "s"), complex_from_json(field(a, "weight"))});
  return out;
}

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const ComplexVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_json(Complex(v(i))));
  return arr;
}

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(Complex(m(r, c))));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const Atom& a : mu.atoms()) atoms.push_back({{"point", to_json(a.point.value())}, {"weight", to_json(a.weight)}});
  return json{{"atoms", std::move(atoms)}, {"lebesgue", to_json(mu.lebesgue())}};
}

json to_json(const ContractionSystem& s) {
  return json{{"A", to_json(s.A())}, {"phi", to_json(s.phi())}, {"psi", to_json(s.psi())}};
}

json to_json(const std::vector<RealAtom>& atoms) {
  json arr = json::array();
  for (const RealAtom& a : atoms) arr.push_back({{"s", a.s}, {"weight", to_json(a.weight)}});
  return json{{"atoms", std::move(arr)}};
}

}  // namespace blaschke::io
