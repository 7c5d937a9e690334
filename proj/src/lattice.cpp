#include "qappell/lattice.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "qappell/error.hpp"
#include "qappell/laurent.hpp"

namespace qappell {

LatticeParam::LatticeParam(Scalar v) : v_(std::move(v)) {
  if (sgn(v_) <= 0 || v_ == 1) {
    throw Error(ErrorCode::BadParameter, "lattice base v = q^(1/2) must be positive and != 1, got " + to_string(v_));
  }
  q_ = v_ * v_;
  alpha_ = (v_ + 1 / v_) / 2;
}

Scalar seq(SeqKind kind, int n, const LatticeParam& lp) {
  const int lowest = (kind == SeqKind::AlphaN || kind == SeqKind::GammaN) ? -1 : 0;
  if (n < lowest) throw Error(ErrorCode::BadIndex, "sequence index " + std::to_string(n) + " below " + std::to_string(lowest));
  switch (kind) {
    case SeqKind::AlphaN:
      if (n == -1) return lp.alpha();
      return (lp.v_pow(n) + lp.v_pow(-n)) / 2;
    case SeqKind::GammaN:
      if (n == -1) return -1;
      return (lp.v_pow(n) - lp.v_pow(-n)) / (lp.v() - 1 / lp.v());
    case SeqKind::UN: {
      // gamma_{-2} never matters: n = 0 kills its multiplier, and n = 1
      // reads gamma_{-1} by convention.
      const Scalar g_low = n >= 1 ? gamma_n(n - 2, lp) : Scalar(0);
      return (n * g_low - (n - 2) * gamma_n(n, lp)) / 4;
    }
    case SeqKind::UHatN: {
      const Scalar a_low = n >= 1 ? alpha_n(n - 2, lp) : alpha_n(0, lp);
      return Scalar(n, 4) * (a_low - alpha_n(n, lp));
    }
  }
  throw Error(ErrorCode::BadParameter, "unknown sequence kind");
}

ZPoly structural_poly(Structural which, const LatticeParam& lp) {
  const Scalar k = lp.alpha() * lp.alpha() - 1;
  if (which == Structural::U1) return ZPoly({0, k});
  return ZPoly({-k, 0, k});
}

namespace {

// p(x(s + 1/2)) and p(x(s - 1/2)) as Laurent polynomials in w = q^s.
std::pair<LaurentPoly, LaurentPoly> half_shifts(const ZPoly& p, const LatticeParam& lp) {
  const LaurentPoly hat = z_to_laurent(p);
  return {laurent_scale(hat, lp.v()), laurent_scale(hat, 1 / lp.v())};
}

}  // namespace

ZPoly apply_Dq(const ZPoly& p, const LatticeParam& lp) {
  if (p.degree() < 1) return {};
  auto [up, down] = half_shifts(p, lp);
  // x(s + 1/2) - x(s - 1/2) = (v - 1/v)(w - 1/w)/2
  const Scalar half_gap = (lp.v() - 1 / lp.v()) / 2;
  const LaurentPoly denominator(-1, {-half_gap, 0, half_gap});
  return laurent_to_z(laurent_divide_exact(up - down, denominator));
}

ZPoly apply_Sq(const ZPoly& p, const LatticeParam& lp) {
  if (p.degree() < 1) return p;
  auto [up, down] = half_shifts(p, lp);
  return laurent_to_z((up + down) * Scalar(1, 2));
}

ZPoly apply_Dq_pow(ZPoly p, int times, const LatticeParam& lp) {
  for (int i = 0; i < times && !p.is_zero(); ++i) p = apply_Dq(p, lp);
  return p;
}

ZPoly identity_residual(Identity which, const ZPoly& f, const std::optional<ZPoly>& g, const LatticeParam& lp, int n) {
  const bool needs_g = which == Identity::ProductD || which == Identity::ProductS;
  if (needs_g != g.has_value()) {
    throw std::invalid_argument("identity_residual: g must be given exactly for the product rules");
  }
  const Scalar& alpha = lp.alpha();
  switch (which) {
    case Identity::ProductD: {
      const ZPoly lhs = apply_Dq(f * *g, lp);
      return lhs - (apply_Dq(f, lp) * apply_Sq(*g, lp) + apply_Sq(f, lp) * apply_Dq(*g, lp));
    }
    case Identity::ProductS: {
      const ZPoly lhs = apply_Sq(f * *g, lp);
      const ZPoly u2 = structural_poly(Structural::U2, lp);
      return lhs - (apply_Dq(f, lp) * apply_Dq(*g, lp) * u2 + apply_Sq(f, lp) * apply_Sq(*g, lp));
    }
    case Identity::SqSquared: {
      const ZPoly lhs = alpha * apply_Sq(apply_Sq(f, lp), lp);
      const ZPoly u1 = structural_poly(Structural::U1, lp);
      const ZPoly u2 = structural_poly(Structural::U2, lp);
      const ZPoly df = apply_Dq(f, lp);
      return lhs - (apply_Sq(u1 * df, lp) + u2 * apply_Dq(df, lp) + alpha * f);
    }
    case Identity::DqnSq: {
      if (n < 0) throw std::invalid_argument("identity_residual: DqnSq needs n >= 0");
      const ZPoly lhs = apply_Dq_pow(apply_Sq(f, lp), n, lp);
      const ZPoly dnf = apply_Dq_pow(f, n, lp);
      const ZPoly u1 = structural_poly(Structural::U1, lp);
      return lhs - (alpha_n(n, lp) * apply_Sq(dnf, lp) + gamma_n(n, lp) * (u1 * apply_Dq(dnf, lp)));
    }
  }
  throw std::invalid_argument("identity_residual: unknown identity");
}

}  // namespace qappell
