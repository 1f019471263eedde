#include "io.hpp"

#include <fstream>
#include <sstream>

#include "rbl/cybe/cybe.hpp"
#include "rbl/scalar/error.hpp"
#include "rbl/scalar/text.hpp"

namespace rbl::io {

namespace {

Error malformed(const std::string& what) { return Error(ErrorKind::ParseError, what); }

Binding binding_of(const Scalar& s) {
  if (!s.is_exact()) return s.numeric_value();
  const RatFun& f = s.exact();
  if (!f.num().is_constant() || !f.den().is_constant()) throw malformed("binding must be a constant: " + s.str());
  return f.num().constant_value() / f.den().constant_value();
}

}  // namespace

std::string scalar_text(const Scalar& s) { return format_scalar(s); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_text(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw malformed("matrix must be a non-empty array of rows");
  std::size_t cols = rows[0].size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != cols) throw malformed("ragged matrix row " + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j) {
      const json& c = rows[i][j];
      m(i, j) = c.is_string() ? parse_scalar(c.get<std::string>())
                : c.is_number_integer() ? Scalar(c.get<long>())
                                        : throw malformed("matrix entries must be strings or integers");
    }
  }
  return m;
}

json formal_json(const FormalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str(m.labels));
    rows.push_back(row);
  }
  return {{"labels", m.labels}, {"rows", rows}};
}

AlgebraPtr algebra_by_name(const std::string& name) {
  if (name == "sl2") return sl2();
  if (name == "sl2-semidirect") return sl2_semidirect();
  throw Error(ErrorKind::UnknownId, "unknown algebra " + name);
}

std::string algebra_name(const AlgebraPtr& g) {
  if (same_algebra(*g, *sl2())) return "sl2";
  if (same_algebra(*g, *sl2_semidirect())) return "sl2-semidirect";
  return g->name();
}

json tensor_json(const Tensor2& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.coeffs) terms.push_back({{"i", k.first}, {"j", k.second}, {"c", scalar_text(c)}});
  return {{"algebra", algebra_name(t.algebra)}, {"terms", terms}, {"text", t.str()}};
}

Tensor2 tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("terms")) {
    throw malformed("tensor needs \"algebra\" and \"terms\"");
  }
  Tensor2 t(algebra_by_name(j.at("algebra").get<std::string>()));
  const std::size_t n = t.algebra->dim();
  for (const auto& term : j.at("terms")) {
    auto i = term.at("i").get<std::size_t>(), k = term.at("j").get<std::size_t>();
    if (i >= n || k >= n) throw malformed("tensor index out of range");
    t.add(i, k, parse_scalar(term.at("c").get<std::string>()));
  }
  return t;
}

json tensor3_json(const Tensor3& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.coeffs) {
    terms.push_back({{"i", k[0]}, {"j", k[1]}, {"k", k[2]}, {"c", scalar_text(c)}});
  }
  return {{"algebra", algebra_name(t.algebra)}, {"terms", terms}};
}

json entry_json(const CatalogEntry& e) {
  json rows = json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(e.matrix(i, j).exact().str());
    rows.push_back(row);
  }
  return {{"id", e.id}, {"params", e.params}, {"rows", rows}};
}

CatalogEntry entry_from_json(const json& j) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : j.at("rows")) rows.push_back(r.get<std::vector<std::string>>());
  if (rows.size() != 3) throw malformed("catalog entry needs 3 rows");
  for (const auto& r : rows) {
    if (r.size() != 3) throw malformed("catalog entry rows need 3 entries");
  }
  auto params = j.value("params", std::vector<std::string>{});
  return make_entry(j.at("id").get<std::string>(), params, rows);
}

json fp_matrix_json(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return rows;
}

json fp_report_json(const FpReport& r) {
  json orphans = json::array();
  for (const auto& m : r.orphans) {
    orphans.push_back({{"rows", fp_matrix_json(m)}, {"region", orphan_region(m)}, {"rational_lift", lifts_to_rational(m, r.p)}});
  }
  return {{"p", r.p},
          {"enumerated", r.enumerated},
          {"specialized", r.specialized},
          {"orphans", orphans},
          {"orphan_regions", r.orphan_regions},
          {"rational_lifts", r.rational_lifts},
          {"per_entry", r.per_entry},
          {"shared", r.shared},
          {"elapsed_ms", r.elapsed_ms}};
}

Bindings parse_bindings(const std::string& text) {
  Bindings b;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw malformed("binding \"" + item + "\" is not name=value");
    std::string name = item.substr(0, eq);
    if (!is_valid_variable_name(name)) throw malformed("bad parameter name " + name);
    b[variable(name)] = binding_of(parse_scalar(item.substr(eq + 1)));
  }
  return b;
}

Vector parse_sl2_vector(const std::string& text) {
  std::vector<Scalar> coords;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) coords.push_back(parse_scalar(item));
  if (coords.size() != 3) throw malformed("expected 3 comma-separated coordinates, got \"" + text + "\"");
  return Vector(sl2(), coords);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw malformed(path + ": " + e.what());
  }
}

bool Report::ok() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

json Report::to_json() const {
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back({{"check", v.check}, {"pass", v.pass}, {"witness", v.witness}});
  json out = {{"command", command}, {"backend", backend}, {"version", "0.1.0"},
              {"verdicts", vs},     {"result", result},   {"pass", ok()}};
  if (elapsed_ms) out["elapsed_ms"] = *elapsed_ms;
  return out;
}

std::string Report::table() const {
  std::ostringstream s;
  for (const auto& v : verdicts) {
    s << (v.pass ? "PASS " : "FAIL ") << v.check;
    if (!v.witness.is_null()) s << "  " << (v.witness.is_string() ? v.witness.get<std::string>() : v.witness.dump());
    s << "\n";
  }
  if (!result.empty()) s << result.dump(2) << "\n";
  if (elapsed_ms) s << "elapsed " << *elapsed_ms << " ms\n";
  return s.str();
}

}  // namespace rbl::io
