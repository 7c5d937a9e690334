#pragma once

#include <vector>

#include "qappell/functional.hpp"
#include "qappell/lattice.hpp"
#include "qappell/ops.hpp"

namespace qappell {

/// phi(z) = a z^2 + b z + c, psi(z) = d z + e in D(phi u) = S(psi u).
struct PearsonData {
  Scalar a, b, c, d, e;

  ZPoly phi() const { return ZPoly({c, b, a}); }
  ZPoly psi() const { return ZPoly({e, d}); }
};

/// d_n = a gamma_n + d alpha_n.
Scalar pearson_d(const PearsonData& pd, int n, const LatticeParam& lp);
/// e_n = b gamma_n + e alpha_n.
Scalar pearson_e(const PearsonData& pd, int n, const LatticeParam& lp);
/// phi^[n](z) = (d(alpha^2-1) gamma_2n + a alpha_2n)(z^2 - 1/2)
///            + (b alpha_n + e(alpha^2-1) gamma_n) z + c + a/2.
ZPoly pearson_phi_n(const PearsonData& pd, int n, const LatticeParam& lp);

/// Recurrence coefficients of the monic OPS of a functional satisfying the
/// Pearson equation; B_0..B_N and C_1..C_N. Throws Error(Inadmissible)
/// for d == 0 or a vanishing d_k, Error(ZeroC) for a vanishing C_{n+1}.
Ttrr ttrr_from_pearson(const PearsonData& pd, const LatticeParam& lp, int horizon);

/// <D(phi u) - S(psi u), z^m> for m <= horizon(u) - 2; empty when the
/// horizon is too small to form phi u.
std::vector<Scalar> pearson_residual(const PearsonData& pd, const MomentFunctional& u, const LatticeParam& lp);

/// Pearson pair of the Al-Salam-Chihara family Q_n(z; s, -s | q^s):
/// phi = -(s/2)(q^(1/2) - q^(-1/2))(z^2 - 1), psi = z.
PearsonData appell_case1_pearson(int sign, const LatticeParam& lp);

}  // namespace qappell
