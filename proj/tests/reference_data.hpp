#pragma once

#include <string>
#include <vector>

#include "rbl/lie/matrix.hpp"

namespace rbl::reference {

/// Skew tensors r_1 .. r_22 over sl2 + sl2* (basis e, f, h, e*, f*, h*),
/// one per catalog entry, in parse_tensor2 syntax.
inline const std::vector<std::string>& lifted_solutions() {
  static const std::vector<std::string> r = {
      "h@f* - f*@h",
      "0",
      "f@e* - e*@f",
      "h@h* - h*@h",
      "e@f* - f*@e",
      "[e+(a)h]@f* - f*@[e+(a)h]",
      "[e+(a)f]@e* + [(1/a)e+f]@f* - e*@[e+(a)f] - f*@[(1/a)e+f]",
      "[e+(a^2/16)f]@e* + [(16/a^2)e-3f-(8/a)h]@f* + [(a)f+2h]@h* - e*@[e+(a^2/16)f]"
      " - f*@[(16/a^2)e-3f-(8/a)h] - h*@[(a)f+2h]",
      "h@e* - e*@h",
      "h@e* - 2f@h* - e*@h + 2h*@f",
      "[f+(a)h]@e* - e*@[f+(a)h]",
      "[f+(a)h]@e* - (2*a)f@h* - e*@[f+(a)h] + (2*a)h*@f",
      "[f+(a)h]@e* + [(2*a)f+(2*a^2)h]@h* - e*@[f+(a)h] - h*@[(2*a)f+(2*a^2)h]",
      "[f+(a)h]@e* - [(4*a^2)f+(4*a^3)h]@f* + [(4*a)f+(4*a^2)h]@h* - e*@[f+(a)h]"
      " + f*@[(4*a^2)f+(4*a^3)h] - h*@[(4*a)f+(4*a^2)h]",
      "h@f* - 2e@h* - f*@h + 2h*@e",
      "[e+(a)h]@f* - (2*a)e@h* - f*@[e+(a)h] + (2*a)h*@e",
      "[e+(a)h]@f* + [(2*a)e+(2*a^2)h]@h* - f*@[e+(a)h] - h*@[(2*a)e+(2*a^2)h]",
      "-[(4*a^2)e+(4*a^3)h]@e* + [e+(a)h]@f* + [(4*a)e+(4*a^2)h]@h* + e*@[(4*a^2)e+(4*a^3)h]"
      " - f*@[e+(a)h] - h*@[(4*a)e+(4*a^2)h]",
      "[e-(3*a^2/4)f+(a)h]@e* - [(4/(27*a^2))e+(1/3)f]@f* - [(8/(9*a))e+(2/3)h]@h*"
      " - e*@[e-(3*a^2/4)f+(a)h] + f*@[(4/(27*a^2))e+(1/3)f] + h*@[(8/(9*a))e+(2/3)h]",
      "[(a)e-(a^2/2)h]@e* - [(a)f+(1/2)h]@f* + [e+(a^2)f]@h* - e*@[(a)e-(a^2/2)h]"
      " + f*@[(a)f+(1/2)h] - h*@[e+(a^2)f]",
      "[(a)e+(4*a^3)f]@e* - [(1/(4*a))e+(a)f]@f* + [e+(4*a^2)f]@h* - e*@[(a)e+(4*a^3)f]"
      " + f*@[(1/(4*a))e+(a)f] - h*@[e+(4*a^2)f]",
      "-[(1/(4*b))e-(a)f+((1+16*a*b^3)/(16*b^2))h]@e* + [(b)e-(4*a*b^2)f+((1+16*a*b^3)/4)h]@f*"
      " + [e-(4*a*b)f+((1+16*a*b^3)/(4*b))h]@h* + e*@[(1/(4*b))e-(a)f+((1+16*a*b^3)/(16*b^2))h]"
      " - f*@[(b)e-(4*a*b^2)f+((1+16*a*b^3)/4)h] - h*@[e-(4*a*b)f+((1+16*a*b^3)/(4*b))h]",
  };
  return r;
}

/// The nine quadratic equations for a Rota-Baxter operator on sl2, as printed,
/// in "lhs - (rhs)" form.
inline const std::vector<std::string>& printed_rb_equations() {
  static const std::vector<std::string> eqs = {
      "4*r13*r21 - (r11+r22)*r31",
      "4*r12*r23 - (r11+r22)*r32",
      "4*r23*r13 - ((r11+r22)*r33 + r12*r21 - r11*r22)",
      "2*r13*r31 - (2*r12*r21 + r32*r31 - 2*r11^2)",
      "4*r12*r33 - (2*r12*r22 + r32^2 - 2*r11*r12 + 2*r13*r32)",
      "r11*r32 - (2*r12*r23 + r32*r33 - 2*(r11+r33)*r13 + r12*r31)",
      "4*r21*r33 - (2*r23*r31 + 2*r21*r11 + r31^2 - 2*r22*r21)",
      "2*r22^2 - (-2*r23*r32 + 2*r21*r12 + r31*r32)",
      "r21*r32 - r22*r31 - (2*(r22+r33)*r23 - 2*r21*r13 - r31*r33)"};
  return eqs;
}

/// Characteristic matrix of sl2 + sl2* over e, f, h, e*, f*, h*.
inline const std::vector<std::vector<std::string>>& printed_semidirect_matrix() {
  static const std::vector<std::vector<std::string>> m = {{"0", "h", "-2e", "2h*", "0", "-f*"},
                                                          {"-h", "0", "2f", "0", "-2h*", "e*"},
                                                          {"2e", "-2f", "0", "-2e*", "2f*", "0"},
                                                          {"-2h*", "0", "2e*", "0", "0", "0"},
                                                          {"0", "2h*", "-2f*", "0", "0", "0"},
                                                          {"f*", "-e*", "0", "0", "0", "0"}};
  return m;
}

/// Basis of sl2 orthonormal for the Killing form, rows in e, f, h coordinates.
inline Matrix orthonormal_basis() {
  Scalar i = Scalar::i();
  Scalar q = Scalar::sqrt(2) / Scalar(4);
  return Matrix{{q * i, -q * i, 0}, {q, q, 0}, {0, 0, q}};
}

/// Catalog entries skew-symmetric in the orthonormal basis, with their matrices there.
inline const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& printed_skew_matrices() {
  static const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> m = {
      {"P2", {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}},
      {"P10", {{"0", "0", "i"}, {"0", "0", "1"}, {"-i", "-1", "0"}}},
      {"P15", {{"0", "0", "-i"}, {"0", "0", "1"}, {"i", "-1", "0"}}},
      {"P20",
       {{"0", "a*i", "(1-a^2)/2*i"}, {"-a*i", "0", "-(1+a^2)/2"}, {"(a^2-1)/2*i", "(1+a^2)/2", "0"}}}};
  return m;
}

/// Skew solutions on sl2 with symbolic k, a.
inline const char* r1_text() { return "(k)e@h - (k)h@e"; }
inline const char* r2_text() { return "(k)f@h - (k)h@f"; }
inline const char* r3_text() {
  return "(k*a)f@e - (k*a)e@f + (k/2)h@f - (k/2)f@h + (k*a^2/2)h@e - (k*a^2/2)e@h";
}

}  // namespace rbl::reference
