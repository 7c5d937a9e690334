#pragma once

#include <span>
#include <vector>

#include "qappell/scalar.hpp"

namespace qappell {

/// Dense polynomial in the lattice variable z, ascending degree. The
/// coefficient vector never carries trailing zeros; the zero polynomial is
/// empty and has degree -1.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Scalar> coeffs);

  static ZPoly constant(const Scalar& c);
  static ZPoly monomial(int degree, const Scalar& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of z^k; zero outside the stored range.
  Scalar coeff(int k) const;
  const Scalar& lead() const;
  std::span<const Scalar> coeffs() const { return coeffs_; }

  Scalar eval(const Scalar& z) const;

  ZPoly& operator+=(const ZPoly& rhs);
  ZPoly& operator-=(const ZPoly& rhs);
  ZPoly& operator*=(const Scalar& c);

  friend ZPoly operator+(ZPoly lhs, const ZPoly& rhs) { return lhs += rhs; }
  friend ZPoly operator-(ZPoly lhs, const ZPoly& rhs) { return lhs -= rhs; }
  friend ZPoly operator-(ZPoly p) { return p *= Scalar(-1); }
  friend ZPoly operator*(ZPoly p, const Scalar& c) { return p *= c; }
  friend ZPoly operator*(const Scalar& c, ZPoly p) { return p *= c; }
  friend ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs);
  friend bool operator==(const ZPoly& lhs, const ZPoly& rhs) = default;

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

}  // namespace qappell
