#pragma once

#include <optional>

#include "qappell/scalar.hpp"
#include "qappell/zpoly.hpp"

namespace qappell {

/// Base of the q-quadratic lattice x(s) = (q^s + q^-s)/2, carried as
/// v = q^(1/2) so that every derived quantity stays rational.
class LatticeParam {
 public:
  /// Throws Error(BadParameter) unless v > 0 and v != 1.
  explicit LatticeParam(Scalar v);

  const Scalar& v() const { return v_; }
  const Scalar& q() const { return q_; }
  /// (q^(1/2) + q^(-1/2))/2
  const Scalar& alpha() const { return alpha_; }

  /// v^k = q^(k/2).
  Scalar v_pow(long k) const { return pow(v_, k); }

  /// Same lattice read with base 1/q.
  LatticeParam inverted() const { return LatticeParam(1 / v_); }

 private:
  Scalar v_;
  Scalar q_;
  Scalar alpha_;
};

enum class SeqKind { AlphaN, GammaN, UN, UHatN };

/// alpha_n = (v^n + v^-n)/2, gamma_n = (v^n - v^-n)/(v - 1/v),
/// u_n = (n gamma_{n-2} - (n-2) gamma_n)/4, uhat_n = n (alpha_{n-2} - alpha_n)/4.
/// Index -1 is allowed for AlphaN/GammaN and returns alpha and -1.
/// Throws Error(BadIndex) below the bound.
Scalar seq(SeqKind kind, int n, const LatticeParam& lp);

inline Scalar alpha_n(int n, const LatticeParam& lp) { return seq(SeqKind::AlphaN, n, lp); }
inline Scalar gamma_n(int n, const LatticeParam& lp) { return seq(SeqKind::GammaN, n, lp); }

enum class Structural { U1, U2 };

/// U1 = (alpha^2 - 1) z, U2 = (alpha^2 - 1)(z^2 - 1).
ZPoly structural_poly(Structural which, const LatticeParam& lp);

/// Askey-Wilson divided difference on the lattice.
ZPoly apply_Dq(const ZPoly& p, const LatticeParam& lp);
/// Average of the two half-step shifts.
ZPoly apply_Sq(const ZPoly& p, const LatticeParam& lp);
/// apply_Dq iterated `times` times.
ZPoly apply_Dq_pow(ZPoly p, int times, const LatticeParam& lp);

enum class Identity {
  ProductD,   // Dq(fg) = Dq f Sq g + Sq f Dq g
  ProductS,   // Sq(fg) = Dq f Dq g U2 + Sq f Sq g
  SqSquared,  // alpha Sq^2 f = Sq(U1 Dq f) + U2 Dq^2 f + alpha f
  DqnSq,      // Dq^n Sq f = alpha_n Sq Dq^n f + gamma_n U1 Dq^(n+1) f
};

/// LHS - RHS of the chosen operator identity. `g` must be present exactly
/// for the product rules; `n` is used by DqnSq only. Throws
/// std::invalid_argument on a mismatched call.
ZPoly identity_residual(Identity which, const ZPoly& f, const std::optional<ZPoly>& g, const LatticeParam& lp,
                        int n = 0);

}  // namespace qappell
