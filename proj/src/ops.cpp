#include "qappell/ops.hpp"

#include <string>

#include "qappell/error.hpp"

namespace qappell {

Ttrr::Ttrr(std::vector<Scalar> b, std::vector<Scalar> c) : b_(std::move(b)), c_(std::move(c)) {
  if (b_.empty() || c_.size() + 1 != b_.size()) {
    throw Error(ErrorCode::BadParameter, "TTRR needs B_0..B_N and C_1..C_N");
  }
}

const Scalar& Ttrr::B(int n) const {
  if (n < 0 || n > horizon()) throw Error(ErrorCode::BadIndex, "B_" + std::to_string(n) + " outside TTRR horizon");
  return b_[static_cast<std::size_t>(n)];
}

const Scalar& Ttrr::C(int n) const {
  if (n < 1 || n > horizon()) throw Error(ErrorCode::BadIndex, "C_" + std::to_string(n) + " outside TTRR horizon");
  return c_[static_cast<std::size_t>(n - 1)];
}

void Ttrr::check_regular() const {
  for (int n = 1; n <= horizon(); ++n) {
    if (is_zero(C(n))) throw Error(ErrorCode::ZeroC, "C_" + std::to_string(n) + " = 0: functional is not regular");
  }
}

const ZPoly& OpsFamily::P(int n) const {
  if (n < 0 || n > horizon()) throw Error(ErrorCode::BadIndex, "P_" + std::to_string(n) + " outside family horizon");
  return polys_[static_cast<std::size_t>(n)];
}

OpsFamily generate_ops(const Ttrr& ttrr) {
  ttrr.check_regular();
  OpsFamily fam;
  fam.source_ = ttrr;
  const int N = ttrr.horizon();
  fam.polys_.reserve(static_cast<std::size_t>(N) + 1);
  fam.polys_.push_back(ZPoly::constant(1));
  const ZPoly z = ZPoly::monomial(1);
  for (int n = 0; n < N; ++n) {
    ZPoly next = z * fam.polys_[n] - ttrr.B(n) * fam.polys_[n];
    if (n >= 1) next -= ttrr.C(n) * fam.polys_[n - 1];
    fam.polys_.push_back(std::move(next));
  }
  return fam;
}

Ttrr alsc_ttrr(const Scalar& a, const Scalar& b, const LatticeParam& lp, int horizon) {
  if (horizon < 0) throw Error(ErrorCode::BadParameter, "negative horizon");
  std::vector<Scalar> bs;
  std::vector<Scalar> cs;
  Scalar qn = 1;  // q^n
  for (int n = 0; n <= horizon; ++n) {
    if (n >= 1) {
      const Scalar qn_prev = qn;
      qn *= lp.q();
      cs.push_back((1 - a * b * qn_prev) * (1 - qn) / 4);
    }
    bs.push_back((a + b) * qn / 2);
  }
  Ttrr ttrr(std::move(bs), std::move(cs));
  ttrr.check_regular();
  return ttrr;
}

std::vector<Scalar> expand_in_basis(const ZPoly& p, const OpsFamily& fam) {
  if (p.degree() > fam.horizon()) {
    throw Error(ErrorCode::HorizonExceeded, "degree " + std::to_string(p.degree()) + " exceeds family horizon");
  }
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree() + 1));
  ZPoly rest = p;
  while (!rest.is_zero()) {
    const int d = rest.degree();
    const Scalar c = rest.lead();
    out[static_cast<std::size_t>(d)] = c;
    rest -= c * fam.P(d);
  }
  return out;
}

std::pair<Scalar, Scalar> subleading(const OpsFamily& fam, int n) {
  const ZPoly& p = fam.P(n);
  return {n >= 1 ? p.coeff(n - 1) : Scalar(0), n >= 2 ? p.coeff(n - 2) : Scalar(0)};
}

}  // namespace qappell
