#include "qappell/zpoly.hpp"

#include <algorithm>
#include <utility>

#include "qappell/error.hpp"

namespace qappell {

ZPoly::ZPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const Scalar& c) { return ZPoly({c}); }

ZPoly ZPoly::monomial(int degree, const Scalar& c) {
  if (degree < 0) throw Error(ErrorCode::BadIndex, "negative monomial degree");
  std::vector<Scalar> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return ZPoly(std::move(coeffs));
}

Scalar ZPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Scalar& ZPoly::lead() const {
  if (is_zero()) throw Error(ErrorCode::BadIndex, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Scalar ZPoly::eval(const Scalar& z) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ZPoly& ZPoly::operator+=(const ZPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const Scalar& c) {
  if (qappell::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (is_zero(lhs.coeffs_[i])) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return ZPoly(std::move(out));
}

void ZPoly::trim() {
  while (!coeffs_.empty() && qappell::is_zero(coeffs_.back())) coeffs_.pop_back();
}

}  // namespace qappell
