#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rbl/rb/rota_baxter.hpp"

namespace rbl {

/// Element of F_p, p an odd prime.
struct FpScalar {
  std::uint32_t value = 0;
  std::uint32_t p = 3;

  FpScalar() = default;
  FpScalar(long v, std::uint32_t modulus);

  FpScalar operator+(FpScalar o) const { return {static_cast<long>(value + o.value), p}; }
  FpScalar operator-(FpScalar o) const { return {static_cast<long>(value) - o.value, p}; }
  FpScalar operator*(FpScalar o) const {
    return {static_cast<long>(static_cast<std::uint64_t>(value) * o.value % p), p};
  }
  /// DivisionByZero on 0.
  FpScalar inverse() const;
  bool is_zero() const { return value == 0; }
  friend bool operator==(FpScalar a, FpScalar b) { return a.value == b.value && a.p == b.p; }
};

/// 3x3 matrix over F_p, entries row-major in [0, p). Ordered lexicographically
/// on the flattened entries.
struct FpMatrix {
  std::array<std::uint8_t, 9> e{};

  std::uint8_t operator()(std::size_t i, std::size_t j) const { return e[i * 3 + j]; }
  std::uint8_t& operator()(std::size_t i, std::size_t j) { return e[i * 3 + j]; }
  FpMatrix scaled(std::uint32_t lambda, std::uint32_t p) const;
  /// "[[a,b,c],[d,e,f],[g,h,i]]".
  std::string str() const;
  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

/// UnsupportedModulus unless p is an odd prime <= 13.
void require_modulus(std::uint32_t p);

/// Rota-Baxter system of sl2 reduced mod p, as generated by generate_rb_system.
class FpSystem {
 public:
  explicit FpSystem(std::uint32_t p);
  std::uint32_t p() const { return p_; }
  std::size_t size() const { return eqs_.size(); }
  bool satisfied(const FpMatrix& m) const;
  /// Index of the first violated equation (in generation order), or -1.
  int first_violation(const FpMatrix& m) const;

  struct Term {
    std::uint32_t coeff;
    std::vector<std::uint8_t> vars;  // unknown indices 0..8, repeated by degree
  };
  struct Equation {
    std::size_t source;  // index in generate_rb_system order
    std::vector<Term> terms;
    std::uint8_t last_var;  // largest unknown index used
  };
  /// Equations ordered by number of monomials.
  const std::vector<Equation>& equations() const { return eqs_; }

 private:
  std::uint32_t p_;
  std::vector<Equation> eqs_;
};

/// All F_p matrices satisfying the reduced system, sorted. Odometer over
/// r11..r33 with r33 innermost, pruning each equation as soon as its
/// unknowns are set; prefixes (r11, r12, r13) are spread over `threads`.
std::vector<FpMatrix> enumerate_rb_fp(std::uint32_t p, unsigned threads = 0);

/// lambda * entry(params) mod p over all parameter values in F_p^x avoiding
/// poles and vanishing constraints, all lambda in F_p^x. Sorted, deduplicated.
std::vector<FpMatrix> specialize_entry_fp(const CatalogEntry& entry, std::uint32_t p);
std::vector<FpMatrix> specialize_catalog_fp(std::uint32_t p);

/// Case region of a matrix by the zero pattern of r31, r32.
std::string orphan_region(const FpMatrix& m);
/// Lift with entries in (-p/2, p/2).
Matrix centered_lift(const FpMatrix& m, std::uint32_t p);
/// Whether the centered lift is a Rota-Baxter operator over Q.
bool lifts_to_rational(const FpMatrix& m, std::uint32_t p);

struct FpReport {
  std::uint32_t p = 0;
  std::size_t enumerated = 0;
  std::size_t specialized = 0;
  std::vector<FpMatrix> orphans;
  /// Distinct matrices produced per catalog entry.
  std::map<std::string, std::size_t> per_entry;
  /// Matrices produced by more than one entry.
  std::size_t shared = 0;
  /// Orphan count per region.
  std::map<std::string, std::size_t> orphan_regions;
  /// Orphans whose centered lift is Rota-Baxter over Q.
  std::size_t rational_lifts = 0;
  double elapsed_ms = 0;
};

/// SoundnessViolation when a specialization fails the system.
FpReport compare_fp(std::uint32_t p, unsigned threads = 0);

/// One orphan per line: matrix, region, "lift" when the centered lift is
/// Rota-Baxter over Q.
std::string format_orphans(const FpReport& r);

}  // namespace rbl
