#include "rbl/scalar/ratfun.hpp"

#include "rbl/scalar/error.hpp"

namespace rbl {

namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorKind::DivisionByZero, "internal: inexact cofactor division");
  return *std::move(q);
}

}  // namespace

RatFun::RatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFun::normalize() {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = quotient(num_, g);
      den_ = quotient(den_, g);
    }
  }
  if (!den_.leading_coeff().is_one()) {
    Coeff inv = den_.leading_coeff().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFun RatFun::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero function");
  RatFun r(Raw{}, den_, num_);
  if (!r.den_.leading_coeff().is_one()) {
    Coeff inv = r.den_.leading_coeff().inverse();
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

RatFun RatFun::operator-() const { return RatFun(Raw{}, -num_, den_); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  Polynomial da = quotient(den_, g);
  Polynomial db = quotient(o.den_, g);
  num_ = num_ * db + o.num_ * da;
  den_ = den_ * db;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel so the product needs no further gcd.
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = quotient(num_, g1) * quotient(o.num_, g2);
  Polynomial d = quotient(den_, g2) * quotient(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (!den_.leading_coeff().is_one()) {
    Coeff inv = den_.leading_coeff().inverse();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
  return *this *= o.inverse();
}

Coeff RatFun::evaluate(const std::map<VarId, Coeff>& bindings) const {
  auto lookup = [&](VarId v) -> Coeff {
    auto it = bindings.find(v);
    if (it == bindings.end()) throw Error(ErrorKind::UnboundParameter, variable_name(v));
    return it->second;
  };
  Coeff d = den_.evaluate(lookup);
  Coeff n = num_.evaluate(lookup);
  if (d.is_zero()) throw Error(ErrorKind::PoleAtBinding, "denominator " + den_.str() + " vanishes");
  return n / d;
}

std::complex<double> RatFun::evaluate_numeric(const std::map<VarId, std::complex<double>>& bindings) const {
  auto lookup = [&](VarId v) -> std::complex<double> {
    auto it = bindings.find(v);
    if (it == bindings.end()) throw Error(ErrorKind::UnboundParameter, variable_name(v));
    return it->second;
  };
  std::complex<double> d = den_.evaluate_numeric(lookup);
  std::complex<double> n = num_.evaluate_numeric(lookup);
  if (d == 0.0) throw Error(ErrorKind::PoleAtBinding, "denominator " + den_.str() + " vanishes");
  return n / d;
}

namespace {

RatFun substitute_poly(const Polynomial& p, const std::map<VarId, RatFun>& subst) {
  RatFun sum;
  std::map<std::pair<VarId, unsigned>, RatFun> powers;
  for (const auto& t : p.terms()) {
    Monomial kept = t.mono;
    RatFun factor(t.coeff);
    for (const auto& [v, r] : subst) {
      unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      kept.exp[v] = 0;
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) {
        RatFun pw(1);
        for (unsigned i = 0; i < e; ++i) pw *= r;
        it = powers.emplace(key, std::move(pw)).first;
      }
      factor *= it->second;
    }
    sum += factor * RatFun(Polynomial::term(kept, Coeff(1)));
  }
  return sum;
}

}  // namespace

RatFun RatFun::substitute(const std::map<VarId, RatFun>& subst) const {
  return substitute_poly(num_, subst) / substitute_poly(den_, subst);
}

std::string RatFun::str() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + " | " + den_.str();
}

}  // namespace rbl
