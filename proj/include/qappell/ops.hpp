#pragma once

#include <utility>
#include <vector>

#include "qappell/lattice.hpp"
#include "qappell/scalar.hpp"
#include "qappell/zpoly.hpp"

namespace qappell {

/// Recurrence coefficients B_0..B_N and C_1..C_N of
/// P_{n+1} = (z - B_n) P_n - C_n P_{n-1}.
class Ttrr {
 public:
  Ttrr() = default;
  /// `b` holds B_0..B_N, `c` holds C_1..C_N; sizes must agree.
  Ttrr(std::vector<Scalar> b, std::vector<Scalar> c);

  int horizon() const { return static_cast<int>(b_.size()) - 1; }
  const Scalar& B(int n) const;
  const Scalar& C(int n) const;

  const std::vector<Scalar>& B_values() const { return b_; }
  const std::vector<Scalar>& C_values() const { return c_; }

  /// Throws Error(ZeroC) if some C_n vanishes, 1 <= n <= horizon.
  void check_regular() const;

  friend bool operator==(const Ttrr&, const Ttrr&) = default;

 private:
  std::vector<Scalar> b_;
  std::vector<Scalar> c_;
};

/// Monic P_0..P_N generated by a Ttrr of the same horizon.
class OpsFamily {
 public:
  const std::vector<ZPoly>& polynomials() const { return polys_; }
  const ZPoly& P(int n) const;
  int horizon() const { return static_cast<int>(polys_.size()) - 1; }
  const Ttrr& source() const { return source_; }

 private:
  friend OpsFamily generate_ops(const Ttrr& ttrr);
  std::vector<ZPoly> polys_;
  Ttrr source_;
};

OpsFamily generate_ops(const Ttrr& ttrr);

/// Monic Al-Salam-Chihara coefficients B_n = (a+b) q^n / 2,
/// C_n = (1 - ab q^(n-1))(1 - q^n)/4. Throws Error(ZeroC) on a vanishing C_n.
Ttrr alsc_ttrr(const Scalar& a, const Scalar& b, const LatticeParam& lp, int horizon);

/// Rogers q-Hermite: Al-Salam-Chihara at a = b = 0.
inline Ttrr rogers_ttrr(const LatticeParam& lp, int horizon) { return alsc_ttrr(0, 0, lp, horizon); }

/// Coefficients c_k of p = sum c_k P_k, by leading-term elimination.
/// Throws Error(HorizonExceeded) if deg p > family horizon.
std::vector<Scalar> expand_in_basis(const ZPoly& p, const OpsFamily& fam);

/// (f_n, g_n): the z^(n-1) and z^(n-2) coefficients of P_n.
std::pair<Scalar, Scalar> subleading(const OpsFamily& fam, int n);

}  // namespace qappell
