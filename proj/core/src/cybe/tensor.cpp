#include "rbl/cybe/tensor.hpp"

#include <cctype>

#include "rbl/scalar/error.hpp"

namespace rbl {

namespace {

bool exact_zero(const Scalar& s) { return s.is_exact() && s.is_zero(); }

template <class Map, class Key>
void accumulate(Map& m, const Key& key, const Scalar& c) {
  if (exact_zero(c)) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second += c;
  if (exact_zero(it->second)) m.erase(it);
}

void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a || !b || !same_algebra(*a, *b)) throw Error(ErrorKind::AlgebraMismatch, "tensors over different algebras");
}

std::string coeff_prefix(const Scalar& c) {
  if (c.is_exact() && c.is_one()) return "";
  if (c.is_exact() && (-c).is_one()) return "-";
  LinComb lc;
  lc.terms.emplace_back(0, c);
  std::string s = lc.str({""});
  return s;
}

}  // namespace

void Tensor2::add(std::size_t i, std::size_t j, const Scalar& c) { accumulate(coeffs, std::make_pair(i, j), c); }

Scalar Tensor2::at(std::size_t i, std::size_t j) const {
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? Scalar(0) : it->second;
}

bool Tensor2::is_zero(const ZeroTest& test) const {
  for (const auto& [k, c] : coeffs) {
    if (!c.is_zero(test)) return false;
  }
  return true;
}

bool Tensor2::equals(const Tensor2& o, const ZeroTest& test) const {
  require_same(algebra, o.algebra);
  Tensor2 d = *this - o;
  return d.is_zero(test);
}

Tensor2 Tensor2::evaluate(const Bindings& b) const {
  Tensor2 out(algebra);
  for (const auto& [k, c] : coeffs) out.add(k.first, k.second, rbl::evaluate(c, b));
  return out;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  require_same(algebra, o.algebra);
  for (const auto& [k, c] : o.coeffs) add(k.first, k.second, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  require_same(algebra, o.algebra);
  for (const auto& [k, c] : o.coeffs) add(k.first, k.second, -c);
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s) {
  if (exact_zero(s)) {
    coeffs.clear();
    return *this;
  }
  for (auto& [k, c] : coeffs) c *= s;
  return *this;
}

std::string Tensor2::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs) {
    std::string term = coeff_prefix(c) + algebra->labels()[k.first] + "⊗" + algebra->labels()[k.second];
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

void Tensor3::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  accumulate(coeffs, std::array<std::size_t, 3>{i, j, k}, c);
}

Scalar Tensor3::at(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = coeffs.find({i, j, k});
  return it == coeffs.end() ? Scalar(0) : it->second;
}

bool Tensor3::is_zero(const ZeroTest& test) const {
  for (const auto& [k, c] : coeffs) {
    if (!c.is_zero(test)) return false;
  }
  return true;
}

bool Tensor3::equals(const Tensor3& o, const ZeroTest& test) const {
  require_same(algebra, o.algebra);
  Tensor3 d = *this;
  for (const auto& [k, c] : o.coeffs) d.add(k[0], k[1], k[2], -c);
  return d.is_zero(test);
}

std::string Tensor3::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  const auto& l = algebra->labels();
  for (const auto& [k, c] : coeffs) {
    std::string term = coeff_prefix(c) + l[k[0]] + "⊗" + l[k[1]] + "⊗" + l[k[2]];
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

Tensor2 outer(const Vector& x, const Vector& y) {
  require_same_algebra(x, y);
  Tensor2 t(x.algebra);
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (exact_zero(x.coords[i])) continue;
    for (std::size_t j = 0; j < y.coords.size(); ++j) {
      if (exact_zero(y.coords[j])) continue;
      t.add(i, j, x.coords[i] * y.coords[j]);
    }
  }
  return t;
}

Tensor2 transpose21(const Tensor2& r) {
  Tensor2 t(r.algebra);
  for (const auto& [k, c] : r.coeffs) t.add(k.second, k.first, c);
  return t;
}

Tensor2 parse_tensor2(std::string_view text, const AlgebraPtr& g) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, why + " in tensor \"" + std::string(text) + "\"");
  };
  std::string s(text);
  for (std::size_t p; (p = s.find("⊗")) != std::string::npos;) s.replace(p, std::string("⊗").size(), "@");
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  // A factor: "[lincomb]" or a single scaled label up to the next '@', '+',
  // '-' at depth zero, or end.
  auto factor = [&]() -> Vector {
    skip();
    std::size_t start = pos;
    std::string body;
    if (pos < s.size() && s[pos] == '[') {
      std::size_t close = s.find(']', pos);
      if (close == std::string::npos) fail("unbalanced bracket");
      body = s.substr(pos + 1, close - pos - 1);
      pos = close + 1;
    } else {
      int depth = 0;
      while (pos < s.size()) {
        char c = s[pos];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '@' || c == '+' || (c == '-' && pos > start))) break;
        ++pos;
      }
      body = s.substr(start, pos - start);
    }
    if (body.empty()) fail("empty factor");
    LinComb lc = parse_lincomb(body, g->labels());
    Vector v = Vector::zero(g);
    for (const auto& [k, c] : lc.terms) v.coords[k] = c;
    return v;
  };
  Tensor2 out(g);
  skip();
  if (s.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos == s.size()) break;
    Scalar sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = Scalar(-1);
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Vector x = factor();
    skip();
    if (pos >= s.size() || s[pos] != '@') fail("expected tensor sign");
    ++pos;
    Vector y = factor();
    out += outer(x, y) * sign;
  }
  return out;
}

}  // namespace rbl
