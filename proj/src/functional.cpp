#include "qappell/functional.hpp"

#include <algorithm>
#include <string>

#include "qappell/error.hpp"

namespace qappell {

const Scalar& MomentFunctional::moment(int n) const {
  if (n < 0 || n > horizon()) {
    throw Error(ErrorCode::HorizonExceeded,
                "moment " + std::to_string(n) + " requested, horizon is " + std::to_string(horizon()));
  }
  return moments_[static_cast<std::size_t>(n)];
}

MomentFunctional moments_from_ttrr(const Ttrr& ttrr) {
  const int n_max = ttrr.horizon();
  // P_{N+1} needs only B_N and C_N; the appended pair is never read.
  std::vector<Scalar> b = ttrr.B_values();
  std::vector<Scalar> c = ttrr.C_values();
  b.emplace_back(0);
  c.emplace_back(1);
  const OpsFamily fam = generate_ops(Ttrr(std::move(b), std::move(c)));
  std::vector<std::vector<Scalar>> expansion;
  for (int k = 0; k <= n_max + 1; ++k) expansion.push_back(expand_in_basis(ZPoly::monomial(k), fam));
  std::vector<Scalar> norm(static_cast<std::size_t>(n_max) + 1, Scalar(1));
  for (int j = 1; j <= n_max; ++j) norm[j] = norm[j - 1] * ttrr.C(j);
  // mu_{a+b} = <u, z^a z^b> = sum_j [z^a]_j [z^b]_j <u, P_j^2>.
  std::vector<Scalar> mu;
  for (int n = 0; n <= 2 * n_max + 1; ++n) {
    const int a = n / 2;
    const int b2 = n - a;
    Scalar sum = 0;
    for (int j = 0; j <= std::min(a, n_max); ++j) sum += expansion[a][j] * expansion[b2][j] * norm[j];
    mu.push_back(sum);
  }
  return MomentFunctional(std::move(mu));
}

Scalar pair(const MomentFunctional& u, const ZPoly& p) {
  if (p.degree() > u.horizon()) {
    throw Error(ErrorCode::HorizonExceeded, "pairing a degree-" + std::to_string(p.degree()) +
                                                " polynomial with horizon " + std::to_string(u.horizon()));
  }
  Scalar acc = 0;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * u.moments()[k];
  return acc;
}

MomentFunctional leftmul(const ZPoly& f, const MomentFunctional& u) {
  const int df = std::max(f.degree(), 0);
  if (df > u.horizon()) throw Error(ErrorCode::HorizonExceeded, "multiplier degree exceeds horizon");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(u.horizon() - df + 1));
  for (int n = 0; n + df <= u.horizon(); ++n) {
    Scalar acc = 0;
    const auto c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * u.moments()[k + static_cast<std::size_t>(n)];
    out.push_back(std::move(acc));
  }
  return MomentFunctional(std::move(out));
}

MomentFunctional functional_Dq(const MomentFunctional& u, const LatticeParam& lp) {
  std::vector<Scalar> out;
  out.reserve(u.moments().size());
  for (int n = 0; n <= u.horizon(); ++n) out.push_back(-pair(u, apply_Dq(ZPoly::monomial(n), lp)));
  return MomentFunctional(std::move(out));
}

MomentFunctional functional_Sq(const MomentFunctional& u, const LatticeParam& lp) {
  std::vector<Scalar> out;
  out.reserve(u.moments().size());
  for (int n = 0; n <= u.horizon(); ++n) out.push_back(pair(u, apply_Sq(ZPoly::monomial(n), lp)));
  return MomentFunctional(std::move(out));
}

MomentFunctional combine(const std::vector<std::pair<Scalar, MomentFunctional>>& terms) {
  if (terms.empty()) return {};
  int horizon = terms.front().second.horizon();
  for (const auto& [c, u] : terms) horizon = std::min(horizon, u.horizon());
  std::vector<Scalar> out(static_cast<std::size_t>(horizon + 1));
  for (const auto& [c, u] : terms) {
    for (int m = 0; m <= horizon; ++m) out[static_cast<std::size_t>(m)] += c * u.moments()[static_cast<std::size_t>(m)];
  }
  return MomentFunctional(std::move(out));
}

Scalar dual_basis_pairing(const OpsFamily& fam, const MomentFunctional& u, int n, int j) {
  const ZPoly& pn = fam.P(n);
  const Scalar norm = pair(u, pn * pn);
  if (is_zero(norm)) throw Error(ErrorCode::ZeroC, "<u, P_n^2> = 0: functional is not regular");
  return pair(u, pn * fam.P(j)) / norm;
}

std::vector<Scalar> functional_identity_residual(FunctionalIdentity which, const ZPoly& f, const MomentFunctional& u,
                                                 const LatticeParam& lp, int n) {
  MomentFunctional residual;
  switch (which) {
    case FunctionalIdentity::FDqW: {
      const MomentFunctional lhs = leftmul(f, functional_Dq(u, lp));
      const MomentFunctional first = functional_Dq(leftmul(apply_Sq(f, lp), u), lp);
      const MomentFunctional second = functional_Sq(leftmul(apply_Dq(f, lp), u), lp);
      residual = combine({{1, lhs}, {-1, first}, {1, second}});
      break;
    }
    case FunctionalIdentity::DqnSqW: {
      if (n < 0) throw Error(ErrorCode::BadIndex, "DqnSqW needs n >= 0");
      MomentFunctional dn = u;
      for (int i = 0; i < n; ++i) dn = functional_Dq(dn, lp);
      MomentFunctional lhs = functional_Sq(u, lp);
      for (int i = 0; i < n; ++i) lhs = functional_Dq(lhs, lp);
      const MomentFunctional s_dn = functional_Sq(dn, lp);
      const MomentFunctional u1_dn1 = leftmul(structural_poly(Structural::U1, lp), functional_Dq(dn, lp));
      residual = combine({{lp.alpha(), lhs}, {-alpha_n(n + 1, lp), s_dn}, {-gamma_n(n, lp), u1_dn1}});
      break;
    }
  }
  return residual.moments();
}

}  // namespace qappell
