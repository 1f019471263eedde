#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbl/cybe/tensor.hpp"
#include "rbl/lie/operator.hpp"
#include "rbl/lie/representation.hpp"

namespace rbl {

/// {{x,y},z} - {x,{y,z}} - {{y,x},z} + {y,{x,z}} on basis triples.
struct PreLieResult {
  bool ok = true;
  std::optional<TripleWitness> witness;
};
PreLieResult check_prelie(const ProductTable& t, const ZeroTest& test = ZeroTest::exact());

/// Product {b_i, b_j} = sum_k a_ij^k b_k satisfying the pre-Lie identity.
class PreLie {
 public:
  /// NotPreLie with the first failing triple.
  static PreLie create(ProductTable table, std::string name = {}, const ZeroTest& test = ZeroTest::exact());

  const std::string& name() const { return name_; }
  std::size_t dim() const { return table_.dim(); }
  const std::vector<std::string>& labels() const { return table_.labels; }
  const ProductTable& table() const { return table_; }
  std::vector<Scalar> product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    return table_.product(x, y);
  }
  bool is_exact() const { return table_.is_exact(); }

 private:
  PreLie(ProductTable t, std::string name) : table_(std::move(t)), name_(std::move(name)) {}
  ProductTable table_;
  std::string name_;
};

/// {x,y} = [P(x), y]; NotRotaBaxter unless P is Rota-Baxter of weight 0.
PreLie prelie_from_rb(const OperatorMatrix& p, const ZeroTest& test = ZeroTest::exact());

/// [x,y] = {x,y} - {y,x}.
AlgebraPtr subadjacent(const PreLie& a, const ZeroTest& test = ZeroTest::exact());

/// L_x(y) = {x,y} as a representation of the sub-adjacent algebra.
/// RepresentationLawViolated when [L_x,L_y] != L_[x,y].
Representation left_mult_rep(const PreLie& a, const ZeroTest& test = ZeroTest::exact());

/// Characteristic matrix in the basis e'_i = sum_j N(i,j) b_j, labelled
/// e1, e2, ... (or `labels`). SingularBasis when N is not invertible.
FormalMatrix characteristic_matrix_prelie(const PreLie& a, const Matrix& n, std::vector<std::string> labels = {},
                                          const ZeroTest& test = ZeroTest::exact());

enum class CanonicalClass { Trivial, N1, H6, D1, E6, Dbar8 };

/// "Trivial", "(N-1)_{-1}", "(H-6)", "(D_{-1}-1)", "(E-6)", "(Dbar_1-8)".
std::string class_name(CanonicalClass c);
/// Accepts class_name() output and the short forms N1, H6, D1, E6, Dbar8.
std::optional<CanonicalClass> parse_class(std::string_view s);
/// Canonical characteristic matrix over e1, e2, e3.
FormalMatrix canonical_matrix(CanonicalClass c);
PreLie canonical_prelie(CanonicalClass c);

/// One row of the basis table used to identify the induced pre-Lie class.
struct ClassRow {
  std::string id;     // "1" .. "21", "22eq", "22ne"
  std::string entry;  // catalog id
  CanonicalClass claimed;
  /// Basis vectors over e, f, h (later rows may refer to e1, e2).
  std::vector<std::string> basis;
  /// Replacement basis for rows whose listed basis does not reproduce the
  /// claimed matrix.
  std::optional<std::vector<std::string>> erratum;
  /// Parameter substitutions making the row radical-free, e.g. a := sa^2.
  std::vector<std::pair<std::string, std::string>> substitutions;
  /// Square roots introduced by the substitutions: {root, radicand}.
  std::vector<std::pair<std::string, std::string>> roots;
  /// Free variables of the row after substitution.
  std::vector<std::string> vars;
  /// Perfect-square point used for the exact check of radical rows.
  std::vector<std::pair<std::string, long>> square_point;
};

const std::vector<ClassRow>& class_table();
/// UnknownId when absent.
const ClassRow& class_row(std::string_view id);

/// Catalog matrix of the row's entry after its substitutions.
Matrix row_operator(const ClassRow& row);
/// Basis matrix of the row (rows are e1, e2, e3 in e, f, h coordinates).
Matrix row_basis(const ClassRow& row, bool erratum = false);

struct ClassVerdict {
  std::string row;
  CanonicalClass claimed = CanonicalClass::Trivial;
  bool ok = false;
  FormalMatrix computed;
  FormalMatrix expected;
  std::vector<std::pair<std::size_t, std::size_t>> differences;
  std::string detail;
};

/// Verifies the row's basis against its claimed class: symbolically when
/// `point` is empty, otherwise at the binding of the row's variables (numeric
/// bindings need a tolerance).
ClassVerdict verify_class_row(const ClassRow& row, const std::optional<Bindings>& point = std::nullopt,
                              bool erratum = false, const ZeroTest& test = ZeroTest::exact());

/// Class of PL_P for a catalog entry at the given parameters (symbolic when
/// empty). The branch of P22 is chosen from 16ab^3 - 1. ClassMismatch when
/// the row's basis does not produce the claimed matrix.
CanonicalClass classify(std::string_view entry, const Bindings& params = {},
                        const ZeroTest& test = ZeroTest::exact());

/// g(A) + g(A)* under the dual of the left multiplication representation.
AlgebraPtr prelie_double(const PreLie& a, const ZeroTest& test = ZeroTest::exact());
/// sum_i (e_i (x) e_i* - e_i* (x) e_i) over prelie_double(a).
Tensor2 canonical_r(const PreLie& a, const ZeroTest& test = ZeroTest::exact());

struct DoubleReport {
  CanonicalClass cls;
  AlgebraPtr algebra;
  FormalMatrix computed;
  FormalMatrix printed;
  bool matches = false;
  std::vector<std::pair<std::size_t, std::size_t>> differences;
  /// Same table with +L^T in place of -L^T (not a Lie algebra in general).
  FormalMatrix plus_transpose;
  bool plus_transpose_matches = false;
  /// Whether the printed table satisfies the Jacobi identity.
  bool printed_is_lie = false;
  bool cybe_ok = false;
};

/// Printed 6x6 characteristic matrices of the doubles, over e1..e3, e1*..e3*.
FormalMatrix printed_double_matrix(CanonicalClass c);
/// Doubles for N1, H6, D1, E6, Dbar8 compared with the printed matrices.
std::vector<DoubleReport> five_algebras_report();
/// The five doubles; MatrixMismatch at the first one that differs from print.
std::vector<AlgebraPtr> five_algebras();

}  // namespace rbl
