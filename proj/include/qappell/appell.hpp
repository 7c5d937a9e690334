#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qappell/functional.hpp"
#include "qappell/lattice.hpp"
#include "qappell/ops.hpp"
#include "qappell/report.hpp"

namespace qappell {

/// Case1: Sq Dq P_n = k_n P_{n-1}. Case2: Dq Sq P_n = r_n P_{n-1}.
enum class AppellKind { Case1 = 1, Case2 = 2 };

class AppellCase {
 public:
  /// Throws Error(BadParameter) unless sign is +1 or -1.
  AppellCase(AppellKind kind, int sign);

  AppellKind kind() const { return kind_; }
  int sign() const { return sign_; }
  int id() const { return static_cast<int>(kind_); }

 private:
  AppellKind kind_;
  int sign_;
};

/// k_n = gamma_n alpha_{n-1} (Case1) or r_n = gamma_2n / 2 (Case2), with
/// the zeroth coefficient 0.
Scalar lowering_coefficient(AppellKind kind, int n, const LatticeParam& lp);

struct SolutionFamily {
  Ttrr ttrr;                   // B_0..B_N, C_1..C_N
  std::vector<Scalar> lowering;  // k_0..k_N
};

/// Case1: B_n = 0, C_{n+1} = (1 - q^{s(n+1)})(1 + q^{sn})/4.
/// Case2: B_n = 0, C_{n+1} = (1 - q^{2s(n+1)})/4.
SolutionFamily solution_family(const AppellCase& ac, const LatticeParam& lp, int horizon);

/// Sq Dq P_n - k_n P_{n-1} (Case1) or Dq Sq P_n - r_n P_{n-1} (Case2).
ZPoly appell_residual(const AppellCase& ac, const OpsFamily& fam, const std::vector<Scalar>& ks,
                      const LatticeParam& lp, int n);

enum class StructureRelation {
  Dx2,   // Dq^2 P_n relation
  DxSx,  // Case1: U2 Dq Sq P_n; Case2: (z^2 - alpha^2) Sq Dq P_n
  Sx2,   // Sq^2 P_n relation
};

/// Case1's a_n^[3] carries (a_{n-1} - X a_n) C_n; the printed X is alpha^2.
enum class A3Factor { AlphaSquared, TwoAlphaSquaredMinusOne, One };

const char* to_string(StructureRelation which);
const char* to_string(A3Factor factor);

struct NamedCoeff {
  std::string name;
  std::optional<Scalar> value;  // empty when an undefined index is demanded
};

/// The full coefficient tuple of the structure relations for the case, at n.
/// Case1: a_n, b_n, c_n, a_n^[1..5]; Case2: a_n, b_n, c_n, b_n^[1..5],
/// c_n^[1..3]. Coefficients whose formula needs B_j (j < 0), C_j (j < 1)
/// or k_j (j < 0) under a nonzero multiplier are left empty.
std::vector<NamedCoeff> structure_coeffs(const AppellCase& ac, const std::vector<Scalar>& ks, const Ttrr& ttrr,
                                         const LatticeParam& lp, int n, A3Factor a3 = A3Factor::AlphaSquared);

/// LHS - RHS of the chosen relation, coefficients as printed (or with the
/// chosen a^[3] factor in Case1). Terms on P_j with j < 0 are dropped.
/// Throws Error(BadIndex) when a surviving coefficient is undefined.
ZPoly structure_residual(const AppellCase& ac, StructureRelation which, const OpsFamily& fam,
                         const std::vector<Scalar>& ks, const Ttrr& ttrr, const LatticeParam& lp, int n,
                         A3Factor a3 = A3Factor::AlphaSquared);

/// One printed coefficient disagreeing with the expansion of the relation's
/// left side in the P basis.
struct Discrepancy {
  int n = 0;
  std::string coeff;  // coefficient name, or "P_j" for an unexpected component
  int basis_index = 0;
  Scalar printed;
  Scalar oracle;
};

/// Independent check of the printed coefficients: expands the left side via
/// expand_in_basis and compares component by component.
std::vector<Discrepancy> structure_cross_check(const AppellCase& ac, StructureRelation which, const OpsFamily& fam,
                                               const std::vector<Scalar>& ks, const Ttrr& ttrr,
                                               const LatticeParam& lp, int n, A3Factor a3 = A3Factor::AlphaSquared);

/// The a^[3] factors for which the Case1 DxSx relation vanishes at every
/// valid n in [n_min, n_max].
std::vector<A3Factor> supported_a3_factors(const OpsFamily& fam, const std::vector<Scalar>& ks, const Ttrr& ttrr,
                                           const LatticeParam& lp, int n_min, int n_max);

enum class DifferenceEq { S1 = 1, S2, S3, S4, S5 };

/// Left side of the chosen equation of the difference system, with
/// t_n = k_n / C_n. Throws Error(BadIndex) outside the validity range.
Scalar system_residual(const AppellCase& ac, DifferenceEq eq, const std::vector<Scalar>& ks, const Ttrr& ttrr,
                       const LatticeParam& lp, int n);

/// Moments <LHS - RHS, z^m>, m = 0..max_m, of functional equation
/// `which` (1..4). Requires horizon(u) >= max_m + 3.
std::vector<Scalar> functional_equation_residual(const AppellCase& ac, int which, const MomentFunctional& u,
                                                 const LatticeParam& lp, int max_m);

/// Family B = 0, C_n = (1 - q^n)(1 + q^{n-1}) / (4(1 - r q^{2n})) checked
/// against S5 (n = 3..N) and the initial-condition relation (n = 1..N).
/// Passes exactly for r = 0. Throws Error(PoleInFamily) on 1 - r q^{2n} = 0.
AppellReport falsify_family(const Scalar& r, const LatticeParam& lp, int horizon);

}  // namespace qappell
