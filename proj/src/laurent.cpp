#include "qappell/laurent.hpp"

#include <algorithm>
#include <utility>

#include "qappell/error.hpp"

namespace qappell {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Scalar inverse_power_of_two(unsigned long n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  return Scalar(mpz_class(1), den);
}

}  // namespace

LaurentPoly::LaurentPoly(int lo, std::vector<Scalar> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(int exponent, const Scalar& c) { return LaurentPoly(exponent, {c}); }

Scalar LaurentPoly::coeff(int k) const {
  if (is_zero() || k < lo_ || k > hi()) return 0;
  return coeffs_[static_cast<std::size_t>(k - lo_)];
}

bool LaurentPoly::is_symmetric() const {
  if (is_zero()) return true;
  if (lo_ != -hi()) return false;
  for (std::size_t i = 0, j = coeffs_.size() - 1; i < j; ++i, --j) {
    if (coeffs_[i] != coeffs_[j]) return false;
  }
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(lo_, rhs.lo_);
  const int hi = std::max(this->hi(), rhs.hi());
  std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(lo_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(rhs.lo_ - lo)] += rhs.coeffs_[i];
  lo_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += rhs * Scalar(-1); }

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return LaurentPoly(lhs.lo_ + rhs.lo_, std::move(out));
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && qappell::is_zero(coeffs_.back())) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && qappell::is_zero(coeffs_[lead])) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    lo_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) lo_ = 0;
}

LaurentPoly z_to_laurent(const ZPoly& p) {
  const int n = p.degree();
  if (n < 0) return {};
  // ((w + 1/w)/2)^k has coefficient binom(k, j)/2^k at w^(k - 2j).
  std::vector<Scalar> out(static_cast<std::size_t>(2 * n + 1));
  for (int k = 0; k <= n; ++k) {
    const Scalar& pk = p.coeffs()[static_cast<std::size_t>(k)];
    if (is_zero(pk)) continue;
    const Scalar scaled = pk * inverse_power_of_two(static_cast<unsigned long>(k));
    for (int j = 0; j <= k; ++j) {
      out[static_cast<std::size_t>(k - 2 * j + n)] += scaled * binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    }
  }
  return LaurentPoly(-n, std::move(out));
}

ZPoly laurent_to_z(const LaurentPoly& l) {
  if (!l.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "Laurent polynomial is not symmetric under w -> 1/w");
  if (l.is_zero()) return {};
  const int n = l.hi();
  std::vector<Scalar> rest(l.coeffs().begin(), l.coeffs().end());  // exponent e at index e + n
  std::vector<Scalar> out(static_cast<std::size_t>(n) + 1);
  // Peel the top exponent: c w^m is the leading term of c 2^m z^m.
  for (int m = n; m >= 0; --m) {
    const Scalar c = rest[static_cast<std::size_t>(m + n)];
    if (is_zero(c)) continue;
    mpz_class two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(m));
    out[static_cast<std::size_t>(m)] = c * two_m;
    for (int j = 0; j <= m; ++j) {
      rest[static_cast<std::size_t>(m - 2 * j + n)] -= c * binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    }
  }
  return ZPoly(std::move(out));
}

LaurentPoly laurent_scale(const LaurentPoly& l, const Scalar& c) {
  if (is_zero(c)) throw Error(ErrorCode::ZeroScale, "scale factor must be nonzero");
  if (l.is_zero()) return {};
  std::vector<Scalar> out(l.coeffs().begin(), l.coeffs().end());
  Scalar factor = pow(c, l.lo());
  for (auto& x : out) {
    x *= factor;
    factor *= c;
  }
  return LaurentPoly(l.lo(), std::move(out));
}

LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::BadParameter, "division by the zero Laurent polynomial");
  if (num.is_zero()) return {};
  // Strip the w-power offsets; what remains is ordinary polynomial division
  // by a divisor with nonzero constant term.
  const auto d = den.coeffs();
  std::vector<Scalar> rem(num.coeffs().begin(), num.coeffs().end());
  const std::size_t dlen = d.size();
  if (rem.size() < dlen) throw Error(ErrorCode::NotDivisible, "numerator support narrower than divisor");
  std::vector<Scalar> quot(rem.size() - dlen + 1);
  const Scalar& dlead = d.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Scalar c = rem[i + dlen - 1] / dlead;
    quot[i] = c;
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < dlen; ++j) rem[i + j] -= c * d[j];
  }
  for (const auto& r : rem) {
    if (!is_zero(r)) throw Error(ErrorCode::NotDivisible, "nonzero remainder in exact Laurent division");
  }
  return LaurentPoly(num.lo() - den.lo(), std::move(quot));
}

}  // namespace qappell
