#include "qappell/appell.hpp"
#include "qappell/error.hpp"
#include "qappell/functional.hpp"
#include "qappell/suites.hpp"
#include "support.hpp"

using namespace qappell;
using namespace qappell::test;

namespace {

// Weighted Motzkin path count: level steps weigh B_k, down steps from
// level k weigh C_k.
std::vector<Scalar> path_moments(const Ttrr& t, int count) {
  const int levels = t.horizon() + 1;
  std::vector<Scalar> state(levels, 0);
  state[0] = 1;
  std::vector<Scalar> out;
  for (int step = 0; step < count; ++step) {
    out.push_back(state[0]);
    std::vector<Scalar> next(levels, 0);
    for (int k = 0; k < levels; ++k) {
      if (state[k] == 0) continue;
      next[k] += state[k] * t.B(k);
      if (k + 1 < levels) next[k + 1] += state[k];
      if (k >= 1) next[k - 1] += state[k] * t.C(k);
    }
    state = next;
  }
  return out;
}

const LatticeParam kHalf(Scalar(1, 2));

MomentFunctional case1_moments(int horizon) {
  return moments_from_ttrr(solution_family(AppellCase(AppellKind::Case1, 1), kHalf, horizon).ttrr);
}

}  // namespace

TEST_CASE("moments agree with the path-counting oracle") {
  std::vector<Ttrr> families = {
      solution_family(AppellCase(AppellKind::Case1, 1), kHalf, 10).ttrr,
      solution_family(AppellCase(AppellKind::Case2, -1), kHalf, 10).ttrr,
      alsc_ttrr(Q("1/3"), Q("-2"), kHalf, 10),
      alsc_ttrr(Q("3/5"), Q("1/7"), LatticeParam(Q("3/2")), 10),
  };
  for (const Ttrr& t : families) {
    const MomentFunctional u = moments_from_ttrr(t);
    // Paths of length <= 2N+1 never rise above level N, so they agree.
    const std::vector<Scalar> oracle = path_moments(t, u.horizon() + 1);
    CHECK(u.horizon() >= t.horizon());
    CHECK(u.moments() == std::vector<Scalar>(oracle.begin(), oracle.begin() + u.horizon() + 1));
    CHECK(u.moment(1) == t.B(0));
  }
}

TEST_CASE("moment examples") {
  const MomentFunctional u = case1_moments(6);
  CHECK(u.moment(0) == 1);
  CHECK(u.moment(2) == Q("3/8"));
  CHECK(u.moment(3) == 0);
  CHECK(u.moment(4) == Q("513/2048"));
  const MomentFunctional rogers2 =
      moments_from_ttrr(solution_family(AppellCase(AppellKind::Case2, 1), kHalf, 4).ttrr);
  CHECK(rogers2.moment(2) == Q("15/64"));
  try {
    u.moment(u.horizon() + 1);
    FAIL("expected HorizonExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HorizonExceeded);
  }
}

TEST_CASE("pair and leftmul") {
  const SolutionFamily sf = solution_family(AppellCase(AppellKind::Case1, 1), kHalf, 6);
  const OpsFamily fam = generate_ops(sf.ttrr);
  const MomentFunctional u = moments_from_ttrr(sf.ttrr);
  CHECK(pair(u, Z({"1"})) == 1);
  CHECK(pair(u, fam.P(1) * fam.P(1)) == sf.ttrr.C(1));
  CHECK(pair(u, fam.P(1) * fam.P(2)) == 0);
  CHECK(leftmul(Z({"1"}), u) == u);
  const MomentFunctional zu = leftmul(Z({"0", "1"}), u);
  CHECK(zu.horizon() == u.horizon() - 1);
  for (int n = 0; n <= zu.horizon(); ++n) CHECK(zu.moment(n) == u.moment(n + 1));
  CHECK(leftmul(Z({"-1", "0", "1"}), u).moment(0) == Q("-5/8"));
  CHECK_THROWS_AS(pair(u, ZPoly::monomial(u.horizon() + 1)), Error);
}

TEST_CASE("functional operators are adjoints of the polynomial ones") {
  const MomentFunctional u = case1_moments(6);
  const MomentFunctional du = functional_Dq(u, kHalf);
  const MomentFunctional su = functional_Sq(u, kHalf);
  CHECK(du.horizon() == u.horizon());
  CHECK(su.horizon() == u.horizon());
  CHECK(du.moment(0) == 0);
  CHECK(su.moment(0) == u.moment(0));
  const MomentFunctional sdu = functional_Sq(du, kHalf);
  CHECK(sdu.moment(1) == Q("-5/4"));
  CHECK(sdu.moment(1) == -pair(u, apply_Dq(apply_Sq(Z({"0", "1"}), kHalf), kHalf)));
  const ZPoly f = Z({"2", "-1", "0", "3/2", "1"});
  CHECK(pair(du, f) == -pair(u, apply_Dq(f, kHalf)));
  CHECK(pair(su, f) == pair(u, apply_Sq(f, kHalf)));
}

TEST_CASE("combine works over the common horizon") {
  const MomentFunctional a({1, 2, 3});
  const MomentFunctional b({5, 7});
  const MomentFunctional c = combine({{2, a}, {-1, b}});
  CHECK(c == MomentFunctional({-3, -3}));
}

TEST_CASE("orthogonality and dual basis") {
  const SolutionFamily sf = solution_family(AppellCase(AppellKind::Case1, 1), kHalf, 10);
  const OpsFamily fam = generate_ops(sf.ttrr);
  const MomentFunctional u = moments_from_ttrr(sf.ttrr);
  Scalar norm = 1;
  for (int n = 0; n <= 10; ++n) {
    if (n >= 1) norm *= sf.ttrr.C(n);
    CHECK(pair(u, fam.P(n) * fam.P(n)) == norm);
    for (int j = 0; j < n; ++j) CHECK(pair(u, fam.P(j) * fam.P(n)) == 0);
  }
  CHECK(dual_basis_pairing(fam, u, 0, 0) == 1);
  CHECK(dual_basis_pairing(fam, u, 0, 2) == 0);
  CHECK(dual_basis_pairing(fam, u, 2, 2) == 1);
}

TEST_CASE("functional identities") {
  RandomPolys rp(17);
  const MomentFunctional w = rp.functional(7);
  CHECK(all_zero(functional_identity_residual(FunctionalIdentity::FDqW, Z({"1"}), w, kHalf)));
  const std::vector<Scalar> r = functional_identity_residual(FunctionalIdentity::FDqW, Z({"0", "1"}), w, kHalf);
  CHECK_FALSE(r.empty());
  CHECK(all_zero(r));
  CHECK(all_zero(functional_identity_residual(FunctionalIdentity::DqnSqW, ZPoly(), w, kHalf, 0)));
  for (int n = 1; n <= 3; ++n) {
    const auto rn = functional_identity_residual(FunctionalIdentity::DqnSqW, ZPoly(), w, LatticeParam(Q("2/3")), n);
    CHECK_FALSE(rn.empty());
    CHECK(all_zero(rn));
  }
}
