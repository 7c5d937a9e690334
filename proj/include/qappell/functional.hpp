#pragma once

#include <vector>

#include "qappell/lattice.hpp"
#include "qappell/ops.hpp"
#include "qappell/scalar.hpp"
#include "qappell/zpoly.hpp"

namespace qappell {

/// Linear functional on polynomials, known through the moments
/// mu_0..mu_N. Reading past mu_N is a hard error: a silently truncated
/// moment vector would fake zero residuals.
class MomentFunctional {
 public:
  MomentFunctional() = default;
  explicit MomentFunctional(std::vector<Scalar> moments) : moments_(std::move(moments)) {}

  /// N, or -1 when no moment is known.
  int horizon() const { return static_cast<int>(moments_.size()) - 1; }
  const Scalar& moment(int n) const;
  const std::vector<Scalar>& moments() const { return moments_; }

  friend bool operator==(const MomentFunctional&, const MomentFunctional&) = default;

 private:
  std::vector<Scalar> moments_;
};

/// Moments mu_0 = 1, ..., mu_{2N+1} of the functional orthogonalizing the
/// recurrence; these are all the moments B_0..B_N, C_1..C_N determine.
MomentFunctional moments_from_ttrr(const Ttrr& ttrr);

/// <u, p>. Throws Error(HorizonExceeded) when deg p > horizon.
Scalar pair(const MomentFunctional& u, const ZPoly& p);

/// f u, defined by <f u, p> = <u, f p>. Horizon drops by deg f.
MomentFunctional leftmul(const ZPoly& f, const MomentFunctional& u);

/// <D u, f> = -<u, Dq f>. Horizon preserved.
MomentFunctional functional_Dq(const MomentFunctional& u, const LatticeParam& lp);
/// <S u, f> = <u, Sq f>. Horizon preserved.
MomentFunctional functional_Sq(const MomentFunctional& u, const LatticeParam& lp);

/// sum_i c_i u_i over the common horizon of the inputs.
MomentFunctional combine(const std::vector<std::pair<Scalar, MomentFunctional>>& terms);

/// <e_n, P_j> with e_n = <u, P_n^2>^-1 P_n u.
Scalar dual_basis_pairing(const OpsFamily& fam, const MomentFunctional& u, int n, int j);

enum class FunctionalIdentity {
  FDqW,     // f D w = D(Sq f w) - S(Dq f w)
  DqnSqW,   // alpha D^n S w = alpha_{n+1} S D^n w + gamma_n U1 D^(n+1) w
};

/// Moment-wise <LHS - RHS, z^m> over the surviving horizon. `f` is used by
/// FDqW, `n` by DqnSqW.
std::vector<Scalar> functional_identity_residual(FunctionalIdentity which, const ZPoly& f, const MomentFunctional& u,
                                                 const LatticeParam& lp, int n = 0);

}  // namespace qappell
