#include "rbl/lie/table.hpp"

#include <cctype>

#include "rbl/scalar/error.hpp"
#include "rbl/scalar/text.hpp"

namespace rbl {

ProductTable::ProductTable(std::vector<std::string> basis_labels) : labels(std::move(basis_labels)) {
  c.assign(dim() * dim() * dim(), Scalar(0));
}

std::vector<Scalar> ProductTable::product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "product operand length");
  bool numeric = !is_exact();
  for (std::size_t i = 0; i < n; ++i) numeric = numeric || !x[i].is_exact() || !y[i].is_exact();
  std::vector<Scalar> out(n, numeric ? Scalar::numeric(0.0) : Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_exact() && x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_exact() && y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& ck = at(i, j, k);
        if (ck.is_exact() && ck.is_zero()) continue;
        out[k] += xy * ck;
      }
    }
  }
  return out;
}

std::vector<Scalar> ProductTable::product_basis(std::size_t i, std::size_t j) const {
  std::vector<Scalar> out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = at(i, j, k);
  return out;
}

bool ProductTable::is_exact() const {
  for (const auto& s : c) {
    if (!s.is_exact()) return false;
  }
  return true;
}

ProductTable ProductTable::to_numeric() const {
  ProductTable t = *this;
  for (auto& s : t.c) s = s.to_numeric();
  return t;
}

ProductTable ProductTable::evaluate(const Bindings& b) const {
  ProductTable t = *this;
  for (auto& s : t.c) s = rbl::evaluate(s, b);
  return t;
}

ProductTable ProductTable::rebased(const Matrix& nb, std::vector<std::string> new_labels) const {
  const std::size_t n = dim();
  if (nb.rows() != n || nb.cols() != n || new_labels.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "basis matrix shape");
  }
  Matrix inv = nb.inverse();
  ProductTable out(std::move(new_labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // old coordinates of e'_i * e'_j, then re-expressed as a row vector.
      std::vector<Scalar> old = product(nb.row(i), nb.row(j));
      std::vector<Scalar> coords = inv.apply_row(old);
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = coords[k];
    }
  }
  return out;
}

bool LinComb::equals(const LinComb& o, const ZeroTest& test) const {
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < terms.size() || b < o.terms.size()) {
    if (b == o.terms.size() || (a < terms.size() && terms[a].first < o.terms[b].first)) {
      if (!terms[a].second.is_zero(test)) return false;
      ++a;
    } else if (a == terms.size() || o.terms[b].first < terms[a].first) {
      if (!o.terms[b].second.is_zero(test)) return false;
      ++b;
    } else {
      if (!terms[a].second.equals(o.terms[b].second, test)) return false;
      ++a;
      ++b;
    }
  }
  return true;
}

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t k = s.front() == '-' ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

std::string LinComb::str(const std::vector<std::string>& labels) const {
  std::string out;
  for (const auto& [k, coeff] : terms) {
    std::string part;
    std::string cs = coeff.str();
    if (coeff.is_exact() && coeff.is_one()) {
      part = labels[k];
    } else if (coeff.is_exact() && (-coeff).is_one()) {
      part = "-" + labels[k];
    } else if (coeff.is_exact() && is_integer_text(cs)) {
      part = cs + labels[k];
    } else {
      part = "(" + cs + ")" + labels[k];
    }
    if (!out.empty() && part.front() != '-') out += "+";
    out += part;
  }
  return out.empty() ? "0" : out;
}

bool FormalMatrix::equals(const FormalMatrix& o, const ZeroTest& test) const {
  return differences(o, test).empty();
}

std::vector<std::pair<std::size_t, std::size_t>> FormalMatrix::differences(const FormalMatrix& o,
                                                                           const ZeroTest& test) const {
  if (dim() != o.dim()) throw Error(ErrorKind::DimensionMismatch, "characteristic matrices differ in size");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!at(i, j).equals(o.at(i, j), test)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string FormalMatrix::str() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < dim(); ++j) {
      if (j) out += ", ";
      out += at(i, j).str(labels);
    }
    out += "]\n";
  }
  return out;
}

FormalMatrix characteristic_matrix(const ProductTable& t, const ZeroTest& test) {
  FormalMatrix m;
  m.labels = t.labels;
  const std::size_t n = t.dim();
  m.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& s = t.at(i, j, k);
        if (!s.is_zero(test)) m.at(i, j).terms.emplace_back(k, s);
      }
    }
  }
  return m;
}

LinComb parse_lincomb(std::string_view text, const std::vector<std::string>& labels) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, why + " in linear combination \"" + std::string(text) + "\"");
  };
  std::vector<Scalar> coeffs(labels.size(), Scalar(0));
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "0") return {};
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    Scalar sign(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = Scalar(-1);
      ++pos;
      skip();
    } else if (!first) {
      fail("expected sign");
    }
    first = false;
    Scalar coeff(1);
    if (pos < text.size() && text[pos] == '(') {
      int depth = 0;
      std::size_t start = pos;
      for (; pos < text.size(); ++pos) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')' && --depth == 0) break;
      }
      if (pos == text.size()) fail("unbalanced parenthesis");
      coeff = parse_scalar(text.substr(start + 1, pos - start - 1));
      ++pos;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      if (pos > start) coeff = parse_scalar(text.substr(start, pos - start));
    }
    skip();
    std::size_t best = labels.size();
    std::size_t best_len = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const auto& l = labels[k];
      if (l.size() > best_len && text.substr(pos, l.size()) == l) {
        best = k;
        best_len = l.size();
      }
    }
    if (best == labels.size()) fail("unknown basis label");
    pos += best_len;
    coeffs[best] += sign * coeff;
  }
  LinComb out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!coeffs[k].is_zero()) out.terms.emplace_back(k, coeffs[k]);
  }
  return out;
}

FormalMatrix parse_formal_matrix(const std::vector<std::vector<std::string>>& rows,
                                 const std::vector<std::string>& labels) {
  FormalMatrix m;
  m.labels = labels;
  const std::size_t n = labels.size();
  if (rows.size() != n) throw Error(ErrorKind::DimensionMismatch, "formal matrix row count");
  m.entries.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "formal matrix row length");
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = parse_lincomb(rows[i][j], labels);
  }
  return m;
}

}  // namespace rbl
