#pragma once

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "qappell/scalar.hpp"
#include "qappell/zpoly.hpp"

namespace qappell::test {

inline Scalar Q(const char* text) { return parse_scalar(text); }

/// Polynomial from ascending rational coefficients given as text.
inline ZPoly Z(std::initializer_list<const char*> coeffs) {
  std::vector<Scalar> c;
  for (const char* t : coeffs) c.push_back(parse_scalar(t));
  return ZPoly(std::move(c));
}

inline bool all_zero(const std::vector<Scalar>& xs) {
  for (const auto& x : xs)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace qappell::test

namespace doctest {
template <>
struct StringMaker<qappell::ZPoly> {
  static String convert(const qappell::ZPoly& p) {
    std::string s = "[";
    for (const auto& c : p.coeffs()) s += qappell::to_string(c) + " ";
    return String((s + "]").c_str());
  }
};
}  // namespace doctest
