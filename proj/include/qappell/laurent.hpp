#pragma once

#include <span>
#include <vector>

#include "qappell/scalar.hpp"
#include "qappell/zpoly.hpp"

namespace qappell {

/// Finitely supported two-sided sequence in the auxiliary variable w = q^s,
/// stored densely from exponent `lo()` upward. Both ends of the support are
/// nonzero; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<Scalar> coeffs);

  static LaurentPoly monomial(int exponent, const Scalar& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int lo() const { return lo_; }
  /// Highest exponent; only meaningful when nonzero.
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(int k) const;
  std::span<const Scalar> coeffs() const { return coeffs_; }

  /// coeff(k) == coeff(-k) for every k.
  bool is_symmetric() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Scalar& c);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(LaurentPoly p, const Scalar& c) { return p *= c; }
  friend LaurentPoly operator*(const Scalar& c, LaurentPoly p) { return p *= c; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) = default;

 private:
  void normalize();

  int lo_ = 0;
  std::vector<Scalar> coeffs_;
};

/// p(z) with z = (w + 1/w)/2. Result is symmetric with support in
/// [-deg p, deg p].
LaurentPoly z_to_laurent(const ZPoly& p);

/// Inverse of z_to_laurent; throws Error(NotSymmetric) for non-symmetric
/// input.
ZPoly laurent_to_z(const LaurentPoly& l);

/// w -> c*w, i.e. coefficient k is multiplied by c^k. Throws
/// Error(ZeroScale) for c == 0.
LaurentPoly laurent_scale(const LaurentPoly& l, const Scalar& c);

/// Exact quotient num / den. Throws Error(NotDivisible) when a remainder is
/// left; Error(BadParameter) for den == 0.
LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace qappell
