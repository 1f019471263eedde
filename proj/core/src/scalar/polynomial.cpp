#include "rbl/scalar/polynomial.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "rbl/scalar/error.hpp"

namespace rbl {

// ---- Monomial -------------------------------------------------------------

Monomial Monomial::of(VarId v, unsigned e) {
  if (e > 255) throw Error(ErrorKind::CapacityExceeded, "exponent overflow");
  Monomial m;
  m.exp[v] = static_cast<std::uint8_t>(e);
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](std::uint8_t e) { return e == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

std::uint64_t Monomial::var_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp[i] != 0) m |= std::uint64_t{1} << i;
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{exp[i]} + o.exp[i];
    if (e > 255) throw Error(ErrorKind::CapacityExceeded, "exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exp[i] = std::min(exp[i], o.exp[i]);
  return r;
}

// ---- Polynomial -----------------------------------------------------------

namespace {

bool term_greater(const Polynomial::Term& x, const Polynomial::Term& y) { return x.mono > y.mono; }

}  // namespace

Polynomial::Polynomial(Coeff c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, std::move(c)});
}

Polynomial Polynomial::var(VarId v) { return term(Monomial::of(v), Coeff(1)); }

Polynomial Polynomial::term(Monomial m, Coeff c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Coeff Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Coeff(0);
}

unsigned Polynomial::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
  return d;
}

std::uint64_t Polynomial::var_mask() const {
  std::uint64_t m = 0;
  for (const auto& t : terms_) m |= t.mono.var_mask();
  return m;
}

Polynomial Polynomial::coefficient_in(VarId v, unsigned d) const {
  // Zeroing one exponent preserves the relative lex order of the survivors
  // only up to ties between distinct terms, so rebuild through from_terms.
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.degree_in(v) == d) {
      Term c = t;
      c.mono.exp[v] = 0;
      out.push_back(std::move(c));
    }
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  Coeff inv = leading_coeff().inverse();
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= inv;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono > i->mono) {
      out.push_back(*j++);
    } else {
      Coeff c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.leading_coeff();
  if (a.is_constant()) return b * a.leading_coeff();
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (divisor.is_constant()) return *this * divisor.leading_coeff().inverse();
  const Term& lt = divisor.leading();
  Coeff lc_inv = lt.coeff.inverse();
  std::vector<Term> quotient;
  Polynomial rem = *this;
  while (!rem.is_zero()) {
    const Term& r = rem.leading();
    if (!lt.mono.divides(r.mono)) return std::nullopt;
    Term q{r.mono / lt.mono, r.coeff * lc_inv};
    rem -= Polynomial::term(q.mono, q.coeff) * divisor;
    quotient.push_back(std::move(q));
  }
  return from_terms(std::move(quotient));
}

Coeff Polynomial::evaluate(const std::function<Coeff(VarId)>& value) const {
  std::map<std::pair<VarId, unsigned>, Coeff> powers;
  std::vector<std::optional<Coeff>> base(kMaxVariables);
  auto power = [&](VarId v, unsigned e) -> const Coeff& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    if (!base[v]) base[v] = value(v);
    Coeff r(1);
    for (unsigned i = 0; i < e; ++i) r *= *base[v];
    return powers.emplace(key, std::move(r)).first->second;
  };
  Coeff sum(0);
  for (const auto& t : terms_) {
    Coeff prod = t.coeff;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (t.mono.exp[v] != 0) prod *= power(static_cast<VarId>(v), t.mono.exp[v]);
    }
    sum += prod;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate_numeric(
    const std::function<std::complex<double>(VarId)>& value) const {
  std::vector<std::optional<std::complex<double>>> base(kMaxVariables);
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    std::complex<double> prod = t.coeff.to_complex();
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (!base[v]) base[v] = value(static_cast<VarId>(v));
      for (unsigned e = 0; e < t.mono.exp[v]; ++e) prod *= *base[v];
    }
    sum += prod;
  }
  return sum;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(static_cast<VarId>(v));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string term;
    if (mono.empty()) {
      term = t.coeff.is_compound() ? "(" + t.coeff.str() + ")" : t.coeff.str();
      if (terms_.size() == 1) term = t.coeff.str();
    } else if (t.coeff.is_one()) {
      term = mono;
    } else if ((-t.coeff).is_one()) {
      term = "-" + mono;
    } else if (t.coeff.is_compound()) {
      term = "(" + t.coeff.str() + ")*" + mono;
    } else {
      term = t.coeff.str() + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

// ---- gcd ------------------------------------------------------------------

namespace {

VarId first_var(std::uint64_t mask) {
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (mask & (std::uint64_t{1} << v)) return static_cast<VarId>(v);
  }
  return 0;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorKind::DivisionByZero, "internal: inexact division in gcd");
  return *std::move(q);
}

Polynomial content_in(const Polynomial& p, VarId v) {
  Polynomial g;
  unsigned d = p.degree_in(v);
  for (unsigned e = 0; e <= d; ++e) {
    Polynomial c = p.coefficient_in(v, e);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, VarId v) {
  unsigned n = b.degree_in(v);
  Polynomial lcb = b.coefficient_in(v, n);
  while (!a.is_zero()) {
    unsigned d = a.degree_in(v);
    if (d < n) break;
    Polynomial lca = a.coefficient_in(v, d);
    a = lcb * a - lca * Polynomial::term(Monomial::of(v, d - n), Coeff(1)) * b;
  }
  return a;
}

Polynomial monomial_gcd(const Polynomial& single, const Polynomial& other) {
  Monomial g = single.leading().mono;
  for (const auto& t : other.terms()) {
    g = g.gcd(t.mono);
    if (g.is_one()) break;
  }
  return Polynomial::term(g, Coeff(1));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.size() == 1) return monomial_gcd(a, b);
  if (b.size() == 1) return monomial_gcd(b, a);
  if (a.monic() == b.monic()) return a.monic();

  std::uint64_t ma = a.var_mask();
  std::uint64_t mb = b.var_mask();
  VarId v = first_var(ma | mb);
  if (!(mb & (std::uint64_t{1} << v))) return gcd(content_in(a, v), b);
  if (!(ma & (std::uint64_t{1} << v))) return gcd(a, content_in(b, v));

  Polynomial ca = content_in(a, v);
  Polynomial cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial pa = exact_quotient(a, ca);
  Polynomial pb = exact_quotient(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  // Primitive pseudo-remainder sequence in v over K[other variables].
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c.monic();
    pa = std::move(pb);
    pb = exact_quotient(r, content_in(r, v));
  }
  return (c * pb).monic();
}

}  // namespace rbl
