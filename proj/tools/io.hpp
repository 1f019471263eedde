#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rbl/cybe/tensor.hpp"
#include "rbl/oracle/finite_field.hpp"
#include "rbl/prelie/prelie.hpp"
#include "rbl/rb/rota_baxter.hpp"

namespace rbl::io {

using json = nlohmann::json;

std::string scalar_text(const Scalar& s);
json matrix_json(const Matrix& m);
Matrix matrix_from_json(const json& rows);
json formal_json(const FormalMatrix& m);

/// "sl2" or "sl2-semidirect"; UnknownId otherwise.
AlgebraPtr algebra_by_name(const std::string& name);
std::string algebra_name(const AlgebraPtr& g);

/// {"algebra": ..., "terms": [{"i":0,"j":2,"c":"1"}, ...]}
json tensor_json(const Tensor2& t);
Tensor2 tensor_from_json(const json& j);
json tensor3_json(const Tensor3& t);

/// {"id":"P8","params":["a"],"rows":[[...],[...],[...]]}
json entry_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const json& j);

json fp_matrix_json(const FpMatrix& m);
/// Schema: {"p","enumerated","specialized","orphans":[{"rows":...,"region","rational_lift"}],"elapsed_ms", ...}
json fp_report_json(const FpReport& r);

/// "a=1/2,b=3" or "a=~0.5+1.2*i"; ParseError on malformed text.
Bindings parse_bindings(const std::string& text);
/// Comma-separated coordinates over sl2, e.g. "0,3,1/2".
Vector parse_sl2_vector(const std::string& text);

json read_json_file(const std::string& path);

struct Verdict {
  std::string check;
  bool pass = true;
  json witness;
};

/// Command echo, verdicts, result payload, version and backend.
struct Report {
  std::string command;
  std::string backend = "exact";
  std::vector<Verdict> verdicts;
  json result = json::object();
  std::optional<double> elapsed_ms;

  void add(std::string check, bool pass, json witness = nullptr) {
    verdicts.push_back({std::move(check), pass, std::move(witness)});
  }
  bool ok() const;
  json to_json() const;
  /// One line per verdict, then the result payload.
  std::string table() const;
};

}  // namespace rbl::io
