#include "qappell/pearson.hpp"

#include <string>

#include "qappell/error.hpp"

namespace qappell {

Scalar pearson_d(const PearsonData& pd, int n, const LatticeParam& lp) {
  return pd.a * gamma_n(n, lp) + pd.d * alpha_n(n, lp);
}

Scalar pearson_e(const PearsonData& pd, int n, const LatticeParam& lp) {
  return pd.b * gamma_n(n, lp) + pd.e * alpha_n(n, lp);
}

ZPoly pearson_phi_n(const PearsonData& pd, int n, const LatticeParam& lp) {
  const Scalar a2m1 = lp.alpha() * lp.alpha() - 1;
  const Scalar quad = pd.d * a2m1 * gamma_n(2 * n, lp) + pd.a * alpha_n(2 * n, lp);
  const Scalar lin = pd.b * alpha_n(n, lp) + pd.e * a2m1 * gamma_n(n, lp);
  return ZPoly({quad * Scalar(-1, 2) + pd.c + pd.a / 2, lin, quad});
}

Ttrr ttrr_from_pearson(const PearsonData& pd, const LatticeParam& lp, int horizon) {
  if (horizon < 0) throw Error(ErrorCode::BadParameter, "negative horizon");
  if (is_zero(pd.d)) throw Error(ErrorCode::Inadmissible, "psi must have degree one (d != 0)");
  // Every denominator d_k, k in {-1} U [0, 2N+1], is checked up front.
  std::vector<Scalar> dk;
  for (int k = -1; k <= 2 * horizon + 1; ++k) {
    dk.push_back(pearson_d(pd, k, lp));
    if (is_zero(dk.back())) throw Error(ErrorCode::Inadmissible, "d_" + std::to_string(k) + " = 0");
  }
  auto d = [&](int k) -> const Scalar& { return dk[static_cast<std::size_t>(k + 1)]; };

  std::vector<Scalar> bs;
  std::vector<Scalar> cs;
  for (int n = 0; n <= horizon; ++n) {
    // gamma_0 = 0 removes the first term at n = 0, where d_{-2} is undefined.
    Scalar bn = -gamma_n(n + 1, lp) * pearson_e(pd, n, lp) / d(2 * n);
    if (n >= 1) bn += gamma_n(n, lp) * pearson_e(pd, n - 1, lp) / d(2 * n - 2);
    bs.push_back(std::move(bn));
    if (n < horizon) {
      const Scalar point = -pearson_e(pd, n, lp) / d(2 * n);
      Scalar cn1 = -gamma_n(n + 1, lp) * d(n - 1) / (d(2 * n - 1) * d(2 * n + 1)) * pearson_phi_n(pd, n, lp).eval(point);
      if (is_zero(cn1)) throw Error(ErrorCode::ZeroC, "C_" + std::to_string(n + 1) + " = 0: form is not regular");
      cs.push_back(std::move(cn1));
    }
  }
  return Ttrr(std::move(bs), std::move(cs));
}

std::vector<Scalar> pearson_residual(const PearsonData& pd, const MomentFunctional& u, const LatticeParam& lp) {
  if (u.horizon() < 2) return {};
  const MomentFunctional lhs = functional_Dq(leftmul(pd.phi(), u), lp);
  const MomentFunctional rhs = functional_Sq(leftmul(pd.psi(), u), lp);
  std::vector<Scalar> out;
  for (int m = 0; m <= u.horizon() - 2; ++m) out.push_back(lhs.moment(m) - rhs.moment(m));
  return out;
}

PearsonData appell_case1_pearson(int sign, const LatticeParam& lp) {
  const Scalar a = Scalar(-sign, 2) * (lp.v() - 1 / lp.v());
  return PearsonData{a, 0, -a, 1, 0};
}

}  // namespace qappell
