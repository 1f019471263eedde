#include "rbl/oracle/finite_field.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "rbl/scalar/error.hpp"

namespace rbl {

namespace {

std::uint32_t mod_of(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

const Rational& rational_coeff(const Coeff& c) {
  if (!c.is_rational()) throw Error(ErrorKind::NumericTag, "non-rational coefficient " + c.str() + " cannot be reduced mod p");
  return c.u().re();
}

mpz_class denominator_lcm(const Polynomial& f, mpz_class acc) {
  for (const auto& t : f.terms()) {
    mpz_class d = rational_coeff(t.coeff).get_den();
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
  }
  return acc;
}

/// f * scale evaluated mod p; scale must clear every coefficient denominator.
std::uint32_t eval_scaled(const Polynomial& f, const mpz_class& scale, std::uint32_t p,
                          const std::map<VarId, std::uint32_t>& values) {
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    const Rational& q = rational_coeff(t.coeff);
    mpz_class c = q.get_num() * (scale / q.get_den());
    std::uint64_t v = mod_of(c, p);
    for (VarId x = 0; x < t.mono.exp.size(); ++x) {
      for (unsigned k = 0; k < t.mono.exp[x]; ++k) {
        auto it = values.find(x);
        if (it == values.end()) throw Error(ErrorKind::UnboundParameter, "parameter " + variable_name(x) + " is unbound");
        v = v * it->second % p;
      }
    }
    acc = (acc + v) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

/// Value mod p of a rational function, or nullopt at a pole.
std::optional<std::uint32_t> eval_mod(const RatFun& f, std::uint32_t p, const std::map<VarId, std::uint32_t>& values) {
  mpz_class scale = denominator_lcm(f.den(), denominator_lcm(f.num(), mpz_class(1)));
  std::uint32_t d = eval_scaled(f.den(), scale, p, values);
  if (d == 0) return std::nullopt;
  std::uint32_t n = eval_scaled(f.num(), scale, p, values);
  return (FpScalar(n, p) * FpScalar(d, p).inverse()).value;
}

}  // namespace

FpScalar::FpScalar(long v, std::uint32_t modulus) : p(modulus) {
  long r = v % static_cast<long>(modulus);
  value = static_cast<std::uint32_t>(r < 0 ? r + modulus : r);
}

FpScalar FpScalar::inverse() const {
  if (value == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  std::uint64_t result = 1, base = value;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return {static_cast<long>(result), p};
}

FpMatrix FpMatrix::scaled(std::uint32_t lambda, std::uint32_t p) const {
  FpMatrix out;
  for (std::size_t i = 0; i < 9; ++i) out.e[i] = static_cast<std::uint8_t>(e[i] * lambda % p);
  return out;
}

std::string FpMatrix::str() const {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < 3; ++i) {
    s << (i ? ",[" : "[");
    for (std::size_t j = 0; j < 3; ++j) s << (j ? "," : "") << static_cast<int>(e[i * 3 + j]);
    s << "]";
  }
  s << "]";
  return s.str();
}

void require_modulus(std::uint32_t p) {
  static const std::set<std::uint32_t> ok = {3, 5, 7, 11, 13};
  if (!ok.count(p)) {
    throw Error(ErrorKind::UnsupportedModulus, "modulus " + std::to_string(p) + " is not an odd prime <= 13");
  }
}

FpSystem::FpSystem(std::uint32_t p) : p_(p) {
  require_modulus(p);
  PolySystem sys = generate_rb_system(*sl2());
  std::map<VarId, std::uint8_t> index;
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i) index[sys.unknowns[i]] = static_cast<std::uint8_t>(i);
  for (std::size_t s = 0; s < sys.equations.size(); ++s) {
    const Polynomial& f = sys.equations[s];
    mpz_class scale = denominator_lcm(f, mpz_class(1));
    Equation eq{s, {}, 0};
    for (const auto& t : f.terms()) {
      const Rational& q = rational_coeff(t.coeff);
      Term term{mod_of(q.get_num() * (scale / q.get_den()), p), {}};
      if (term.coeff == 0) continue;
      for (const auto& [var, idx] : index) {
        for (unsigned k = 0; k < t.mono.exp[var]; ++k) term.vars.push_back(idx);
      }
      for (auto v : term.vars) eq.last_var = std::max(eq.last_var, v);
      eq.terms.push_back(std::move(term));
    }
    eqs_.push_back(std::move(eq));
  }
  std::stable_sort(eqs_.begin(), eqs_.end(),
                   [](const Equation& a, const Equation& b) { return a.terms.size() < b.terms.size(); });
}

namespace {

bool holds(const FpSystem::Equation& eq, const std::uint8_t* r, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (const auto& t : eq.terms) {
    std::uint64_t v = t.coeff;
    for (auto x : t.vars) v = v * r[x] % p;
    acc += v;
  }
  return acc % p == 0;
}

}  // namespace

int FpSystem::first_violation(const FpMatrix& m) const {
  int first = -1;
  for (const auto& eq : eqs_) {
    if (!holds(eq, m.e.data(), p_) && (first < 0 || static_cast<int>(eq.source) < first)) {
      first = static_cast<int>(eq.source);
    }
  }
  return first;
}

bool FpSystem::satisfied(const FpMatrix& m) const { return first_violation(m) < 0; }

std::vector<FpMatrix> enumerate_rb_fp(std::uint32_t p, unsigned threads) {
  FpSystem sys(p);
  // Equations to test once unknown d has been assigned.
  std::array<std::vector<const FpSystem::Equation*>, 9> at_depth;
  for (const auto& eq : sys.equations()) at_depth[eq.last_var].push_back(&eq);

  auto check = [&](const std::uint8_t* r, std::size_t d) {
    for (const auto* eq : at_depth[d]) {
      if (!holds(*eq, r, p)) return false;
    }
    return true;
  };

  const std::size_t prefixes = static_cast<std::size_t>(p) * p * p;
  std::vector<std::vector<FpMatrix>> found(prefixes);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task; (task = next.fetch_add(1)) < prefixes;) {
      FpMatrix m;
      m.e[0] = static_cast<std::uint8_t>(task / (p * p));
      m.e[1] = static_cast<std::uint8_t>(task / p % p);
      m.e[2] = static_cast<std::uint8_t>(task % p);
      if (!check(m.e.data(), 0) || !check(m.e.data(), 1) || !check(m.e.data(), 2)) continue;
      std::function<void(std::size_t)> descend = [&](std::size_t d) {
        if (d == 9) {
          found[task].push_back(m);
          return;
        }
        for (std::uint32_t v = 0; v < p; ++v) {
          m.e[d] = static_cast<std::uint8_t>(v);
          if (check(m.e.data(), d)) descend(d + 1);
        }
        m.e[d] = 0;
      };
      descend(3);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  // Tasks are in lexicographic prefix order and each task emits in odometer
  // order, so concatenation is already sorted.
  std::vector<FpMatrix> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<FpMatrix> specialize_entry_fp(const CatalogEntry& entry, std::uint32_t p) {
  require_modulus(p);
  std::vector<VarId> params;
  for (const auto& name : entry.params) params.push_back(variable(name));
  std::set<FpMatrix> out;
  std::map<VarId, std::uint32_t> values;
  std::function<void(std::size_t)> bind = [&](std::size_t k) {
    if (k < params.size()) {
      for (std::uint32_t v = 1; v < p; ++v) {
        values[params[k]] = v;
        bind(k + 1);
      }
      return;
    }
    for (const auto& c : entry.nonvanishing) {
      auto v = eval_mod(RatFun(c), p, values);
      if (!v || *v == 0) return;
    }
    FpMatrix m;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        auto v = eval_mod(entry.matrix(i, j).exact(), p, values);
        if (!v) return;
        m(i, j) = static_cast<std::uint8_t>(*v);
      }
    }
    for (std::uint32_t lambda = 1; lambda < p; ++lambda) out.insert(m.scaled(lambda, p));
  };
  bind(0);
  return {out.begin(), out.end()};
}

std::vector<FpMatrix> specialize_catalog_fp(std::uint32_t p) {
  std::set<FpMatrix> all;
  for (const auto& e : catalog()) {
    auto s = specialize_entry_fp(e, p);
    all.insert(s.begin(), s.end());
  }
  return {all.begin(), all.end()};
}

std::string orphan_region(const FpMatrix& m) {
  if (m(2, 0) != 0) return "r31!=0";
  return m(2, 1) != 0 ? "r31=0,r32!=0" : "r31=0,r32=0";
}

Matrix centered_lift(const FpMatrix& m, std::uint32_t p) {
  Matrix q(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      long v = m(i, j);
      q(i, j) = Scalar(v > static_cast<long>(p / 2) ? v - static_cast<long>(p) : v);
    }
  }
  return q;
}

bool lifts_to_rational(const FpMatrix& m, std::uint32_t p) {
  return check_rb(OperatorMatrix(sl2(), centered_lift(m, p))).ok;
}

FpReport compare_fp(std::uint32_t p, unsigned threads) {
  auto start = std::chrono::steady_clock::now();
  FpReport r;
  r.p = p;
  FpSystem sys(p);
  std::vector<FpMatrix> all = enumerate_rb_fp(p, threads);
  r.enumerated = all.size();
  std::map<FpMatrix, std::size_t> sources;
  for (const auto& e : catalog()) {
    auto s = specialize_entry_fp(e, p);
    r.per_entry[e.id] = s.size();
    for (const auto& m : s) {
      int bad = sys.first_violation(m);
      if (bad >= 0) {
        throw Error(ErrorKind::SoundnessViolation, e.id + " specializes mod " + std::to_string(p) + " to " + m.str() +
                                                       ", violating equation " + std::to_string(bad + 1));
      }
      ++sources[m];
    }
  }
  r.specialized = sources.size();
  for (const auto& [m, n] : sources) r.shared += n > 1;
  for (const auto& m : all) {
    if (!sources.count(m)) {
      r.orphans.push_back(m);
      ++r.orphan_regions[orphan_region(m)];
      r.rational_lifts += lifts_to_rational(m, p);
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_orphans(const FpReport& r) {
  std::ostringstream s;
  for (const auto& m : r.orphans) {
    s << m.str() << " " << orphan_region(m) << (lifts_to_rational(m, r.p) ? " lift" : "") << "\n";
  }
  return s.str();
}

}  // namespace rbl
