#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "io.hpp"
#include "rbl/cybe/cybe.hpp"
#include "rbl/scalar/error.hpp"
#include "rbl/scalar/text.hpp"

using namespace rbl;
using io::json;

namespace {

struct Options {
  bool as_json = false;
  bool timing = false;
  std::string out;
  std::string params;
  double tol = 1e-9;
  int samples = 5;
  unsigned threads = 0;
};

std::uint64_t seed() {
  const char* s = std::getenv("RBL_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 0;
}

OperatorMatrix operator_from(const std::string& op, const std::string& params, const std::string& matrix_file) {
  if (!matrix_file.empty()) {
    json j = io::read_json_file(matrix_file);
    AlgebraPtr g = io::algebra_by_name(j.value("algebra", std::string("sl2")));
    return OperatorMatrix(g, io::matrix_from_json(j.at("rows")));
  }
  if (op.empty()) throw Error(ErrorKind::ParseError, "either --op or --matrix is required");
  const CatalogEntry& e = catalog_entry(op);
  if (params.empty()) return e.op();
  return specialize(e, io::parse_bindings(params));
}

json residual_witness(const LieAlgebra& g, const RbReport& r) {
  json w = json::array();
  for (const auto& f : r.failures) {
    LinComb lc;
    for (std::size_t k = 0; k < f.residual.size(); ++k) {
      const Scalar& c = f.residual[k];
      if (!c.is_exact() || !c.is_zero()) lc.terms.emplace_back(k, c);
    }
    w.push_back({{"pair", "(" + g.labels()[f.i] + "," + g.labels()[f.j] + ")"}, {"residual", lc.str(g.labels())}});
  }
  return w;
}

io::Report verify_catalog(bool numeric, const std::string& catalog_file, const Options& o) {
  io::Report rep;
  rep.command = "verify-catalog";
  std::vector<CatalogEntry> entries;
  if (catalog_file.empty()) {
    entries = catalog();
  } else {
    json j = io::read_json_file(catalog_file);
    for (const auto& e : j.at("entries")) entries.push_back(io::entry_from_json(e));
  }
  std::vector<CatalogVerdict> vs;
  if (numeric) {
    rep.backend = "numeric";
    vs = verify_catalog_numeric(entries, o.samples, o.tol, seed());
  } else {
    vs = verify_catalog_exact(entries);
  }
  std::size_t passed = 0;
  for (const auto& v : vs) {
    json w = nullptr;
    if (!v.ok) {
      w = json::array();
      for (const auto& f : v.failures) {
        LinComb lc;
        for (std::size_t k = 0; k < f.residual.size(); ++k) {
          const Scalar& c = f.residual[k];
          if (c.is_exact() ? !c.is_zero() : !c.is_zero(ZeroTest::within(o.tol))) lc.terms.emplace_back(k, c);
        }
        w.push_back({{"pair", "(" + sl2()->labels()[f.i] + "," + sl2()->labels()[f.j] + ")"},
                     {"residual", lc.str(sl2()->labels())}});
      }
      if (!v.detail.empty()) w.push_back({{"detail", v.detail}});
    }
    passed += v.ok;
    rep.add(v.id, v.ok, w);
  }
  rep.result = {{"passed", passed}, {"total", vs.size()}};
  return rep;
}

io::Report rb_check(const OperatorMatrix& p, const std::string& weight) {
  io::Report rep;
  rep.command = "rb-check";
  Scalar w = weight.empty() ? Scalar(0) : parse_scalar(weight);
  RbReport r = check_rb(p, w);
  rep.add("rota-baxter", r.ok, r.ok ? json(nullptr) : residual_witness(*p.algebra, r));
  rep.result = {{"matrix", io::matrix_json(p.m)}, {"weight", io::scalar_text(w)}};
  return rep;
}

io::Report cybe_check(const Tensor2& r) {
  io::Report rep;
  rep.command = "cybe-check";
  CybeResult c = check_cybe(r);
  json w = nullptr;
  if (!c.ok) {
    const auto& l = r.algebra->labels();
    auto [i, j, k] = *c.witness;
    w = {{"component", l[i] + "(x)" + l[j] + "(x)" + l[k]}, {"value", io::scalar_text(c.value)}};
  }
  rep.add("cybe", c.ok, w);
  rep.result = {{"lhs", io::tensor3_json(cybe_lhs(r))}};
  return rep;
}

io::Report lift(const OperatorMatrix& p) {
  io::Report rep;
  rep.command = "lift";
  Tensor2 r = rb_to_cybe(p);
  rep.add("skew", transpose21(r).equals(r * Scalar(-1), ZeroTest::exact()));
  rep.add("cybe", check_cybe(r).ok);
  rep.result = {{"tensor", io::tensor_json(r)}, {"terms", r.coeffs.size()}};
  return rep;
}

io::Report system_cmd(const std::string& algebra) {
  io::Report rep;
  rep.command = "system";
  AlgebraPtr g = io::algebra_by_name(algebra);
  PolySystem s = generate_rb_system(*g);
  json eqs = json::array();
  for (std::size_t k = 0; k < s.equations.size(); ++k) {
    eqs.push_back({{"origin", s.origin[k]}, {"equation", normalize_equation(s.equations[k]).str() + " = 0"}});
  }
  rep.add("generated", !s.equations.empty(), json(s.equations.size()));
  rep.result = {{"algebra", algebra}, {"equations", eqs}};
  return rep;
}

std::string family_name(BdFamily f) {
  switch (f) {
    case BdFamily::R1: return "r1";
    case BdFamily::R2: return "r2";
    case BdFamily::R3: return "r3";
  }
  return {};
}

io::Report bd(const std::string& xs, const std::string& ys) {
  io::Report rep;
  rep.command = "bd";
  Vector x = io::parse_sl2_vector(xs);
  std::vector<Vector> ys_list;
  if (ys.empty()) {
    ys_list = bd_solve(x);
    rep.add("eigenvectors", !ys_list.empty(), json(ys_list.size()));
  } else {
    ys_list.push_back(io::parse_sl2_vector(ys));
  }
  json out = json::array();
  for (const auto& y : ys_list) {
    try {
      BdClass c = bd_classify(x, y);
      json item = {{"y", y.str()}, {"family", family_name(c.family)}, {"k", io::scalar_text(c.k)},
                   {"tensor", io::tensor_json(bd_tensor(x, y))}};
      if (c.a) item["a"] = io::scalar_text(*c.a);
      out.push_back(item);
      rep.add("classified", true, json(family_name(c.family)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoMatch && e.kind() != ErrorKind::NotEigenpair) throw;
      rep.add(e.kind() == ErrorKind::NotEigenpair ? "eigenpair" : "classified", false, json(e.what()));
    }
  }
  rep.result = {{"x", x.str()}, {"solutions", out}};
  return rep;
}

io::Report prelie_cmd(const std::string& op, const std::string& params) {
  io::Report rep;
  rep.command = "prelie";
  const CatalogEntry& e = catalog_entry(op);
  Bindings b = params.empty() ? Bindings{} : io::parse_bindings(params);
  bool numeric = false;
  for (const auto& [v, val] : b) numeric |= std::holds_alternative<std::complex<double>>(val);
  ZeroTest test = numeric ? ZeroTest::within(1e-9) : ZeroTest::exact();
  if (numeric) rep.backend = "numeric";
  OperatorMatrix p = params.empty() ? e.op() : specialize(e, b);
  if (numeric) p = OperatorMatrix(sl2()->to_numeric(test), p.m.is_exact() ? p.m.to_numeric() : p.m);
  PreLie a = prelie_from_rb(p, test);
  std::string row_id = e.id.substr(1);
  if (e.branch) {
    bool on = !b.empty() && evaluate(RatFun(*e.branch), b).is_zero(test);
    row_id += on ? "eq" : "ne";
  }
  const ClassRow& row = class_row(row_id);
  json result = {{"product", io::formal_json(characteristic_matrix(a.table()))}, {"claimed_class", class_name(row.claimed)}, {"basis", row.basis},
                 {"row", row.id}};
  try {
    CanonicalClass c = classify(op, b, test);
    rep.add("class", true, json(class_name(c)));
    result["class"] = class_name(c);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::ClassMismatch) throw;
    rep.add("class", false, json(err.what()));
  }
  if (params.empty()) result["characteristic_matrix"] = io::formal_json(verify_class_row(row).computed);
  rep.result = result;
  return rep;
}

io::Report fp_enum(std::uint32_t p, bool compare, const Options& o) {
  io::Report rep;
  rep.command = "fp-enum";
  rep.backend = "fp";
  if (!compare) {
    auto all = enumerate_rb_fp(p, o.threads);
    rep.add("enumerated", true, json(all.size()));
    rep.result = {{"p", p}, {"enumerated", all.size()}};
    return rep;
  }
  FpReport r = compare_fp(p, o.threads);
  rep.add("soundness", true, json(r.specialized));
  json full = io::fp_report_json(r);
  if (!o.out.empty()) {
    std::ofstream(o.out) << full.dump(2) << "\n";
  }
  full.erase("elapsed_ms");
  rep.result = full;
  if (o.timing) rep.elapsed_ms = r.elapsed_ms;
  return rep;
}

io::Report report_cmd() {
  io::Report rep;
  rep.command = "report";
  auto vs = verify_catalog_exact(catalog());
  bool cat_ok = std::all_of(vs.begin(), vs.end(), [](const CatalogVerdict& v) { return v.ok; });
  rep.add("catalog-soundness", cat_ok, json(std::to_string(vs.size()) + " entries"));
  bool lifts = true;
  for (const auto& e : catalog()) lifts &= check_cybe(rb_to_cybe(e.op())).ok;
  rep.add("lifted-cybe", lifts);
  for (const auto& row : class_table()) {
    ClassVerdict v = verify_class_row(row);
    rep.add("class-row-" + row.id, v.ok, json(class_name(row.claimed)));
  }
  for (const auto& d : five_algebras_report()) {
    rep.add("double-" + class_name(d.cls) + "-cybe", d.cybe_ok);
    rep.add("double-" + class_name(d.cls) + "-printed", d.matches);
  }
  return rep;
}

int emit(const io::Report& rep, const Options& o) {
  if (o.as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.table();
  }
  return rep.ok() ? 0 : 1;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownId:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::UnboundParameter:
    case ErrorKind::ConstraintViolated:
    case ErrorKind::UnsupportedModulus:
    case ErrorKind::PoleAtBinding:
    case ErrorKind::AlgebraMismatch:
    case ErrorKind::SingularBasis:
    case ErrorKind::MissingTolerance:
    case ErrorKind::TagMismatch:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rota-Baxter operators, CYBE solutions and pre-Lie algebras on sl(2,C)"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.as_json, "JSON report on stdout");
    c->add_flag("--timing", o.timing, "include elapsed time");
  };

  std::function<io::Report()> run;

  auto* vc = app.add_subcommand("verify-catalog", "Rota-Baxter check of every catalog entry");
  bool exact = false, numeric = false;
  std::string catalog_file;
  vc->add_flag("--exact", exact, "symbolic check (default)");
  vc->add_flag("--numeric", numeric, "check at random complex parameter samples");
  vc->add_option("--samples", o.samples, "samples per entry")->check(CLI::PositiveNumber);
  vc->add_option("--tol", o.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  vc->add_option("--catalog", catalog_file, "catalog JSON replacing the built-in one");
  common(vc);
  vc->callback([&] {
    if (exact && numeric) throw CLI::ValidationError("--exact and --numeric are exclusive");
    run = [&] { return verify_catalog(numeric, catalog_file, o); };
  });

  std::string op, matrix_file, weight, tensor_file, algebra = "sl2", xs, ys;
  auto* rb = app.add_subcommand("rb-check", "Rota-Baxter identity for one operator");
  rb->add_option("--op", op, "catalog id P1..P22");
  rb->add_option("--matrix", matrix_file, "matrix JSON {\"algebra\",\"rows\"}");
  rb->add_option("--params", o.params, "a=...,b=...");
  rb->add_option("--weight", weight, "weight (default 0)");
  common(rb);
  rb->callback([&] { run = [&] { return rb_check(operator_from(op, o.params, matrix_file), weight); }; });

  auto* cc = app.add_subcommand("cybe-check", "classical Yang-Baxter equation for a tensor");
  cc->add_option("--tensor", tensor_file, "tensor JSON")->required();
  common(cc);
  cc->callback([&] { run = [&] { return cybe_check(io::tensor_from_json(io::read_json_file(tensor_file))); }; });

  auto* lc = app.add_subcommand("lift", "skew CYBE solution in sl2 + sl2* from an operator");
  lc->add_option("--op", op, "catalog id");
  lc->add_option("--matrix", matrix_file, "matrix JSON");
  lc->add_option("--params", o.params, "a=...,b=...");
  common(lc);
  lc->callback([&] { run = [&] { return lift(operator_from(op, o.params, matrix_file)); }; });

  auto* sc = app.add_subcommand("system", "Rota-Baxter equations in the matrix entries");
  sc->add_option("--algebra", algebra, "sl2 or sl2-semidirect");
  common(sc);
  sc->callback([&] { run = [&] { return system_cmd(algebra); }; });

  auto* bc = app.add_subcommand("bd", "solve [x,y] = y and classify x(x)y - y(x)x");
  bc->add_option("--x", xs, "coordinates e,f,h")->required();
  bc->add_option("--y", ys, "coordinates e,f,h (default: solve)");
  common(bc);
  bc->callback([&] { run = [&] { return bd(xs, ys); }; });

  auto* pc = app.add_subcommand("prelie", "induced pre-Lie algebra and its class");
  pc->add_option("--op", op, "catalog id")->required();
  pc->add_option("--params", o.params, "a=...,b=...");
  common(pc);
  pc->callback([&] { run = [&] { return prelie_cmd(op, o.params); }; });

  std::uint32_t p = 3;
  bool compare = false;
  auto* fc = app.add_subcommand("fp-enum", "Rota-Baxter operators on sl(2,F_p)");
  fc->add_option("--p", p, "odd prime <= 13")->required();
  fc->add_flag("--compare", compare, "compare with catalog specializations");
  fc->add_option("--out", o.out, "write the report JSON here");
  fc->add_option("--threads", o.threads, "worker cap (0 = all cores)");
  common(fc);
  fc->callback([&] { run = [&] { return fp_enum(p, compare, o); }; });

  auto* cat = app.add_subcommand("catalog", "print the catalog as JSON");
  cat->callback([&] {
    run = [] {
      io::Report rep;
      rep.command = "catalog";
      json entries = json::array();
      for (const auto& e : catalog()) entries.push_back(io::entry_json(e));
      rep.result = {{"entries", entries}};
      return rep;
    };
  });

  auto* rc = app.add_subcommand("report", "summary of every module check");
  common(rc);
  rc->callback([&] { run = [] { return report_cmd(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    auto start = std::chrono::steady_clock::now();
    io::Report rep = run();
    if (o.timing && !rep.elapsed_ms) {
      rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (app.got_subcommand("catalog")) {
      std::cout << rep.result.dump(2) << "\n";
      return 0;
    }
    return emit(rep, o);
  } catch (const Error& e) {
    std::cerr << "rbl: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const json::exception& e) {
    std::cerr << "rbl: malformed JSON: " << e.what() << "\n";
    return 2;
  }
}
