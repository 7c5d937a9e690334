#include "qappell/appell.hpp"
#include "qappell/error.hpp"
#include "qappell/pearson.hpp"
#include "support.hpp"

using namespace qappell;
using namespace qappell::test;

namespace {

const LatticeParam kHalf(Scalar(1, 2));

}  // namespace

TEST_CASE("Pearson pair reproduces the Case 1 family for both signs") {
  for (const int s : {1, -1}) {
    CAPTURE(s);
    const PearsonData pd = appell_case1_pearson(s, kHalf);
    CHECK(pd.psi() == Z({"0", "1"}));
    // phi = -(s/2)(v - 1/v)(z^2 - 1)
    const Scalar a = -Scalar(s, 2) * (kHalf.v() - 1 / kHalf.v());
    CHECK(pd.phi() == a * Z({"-1", "0", "1"}));
    const Ttrr t = ttrr_from_pearson(pd, kHalf, 15);
    const Scalar qs = s > 0 ? kHalf.q() : 1 / kHalf.q();
    for (int n = 0; n < 15; ++n) {
      CHECK(t.B(n) == 0);
      CHECK(t.C(n + 1) == (1 - pow(qs, n + 1)) * (1 + pow(qs, n)) / 4);
    }
    CHECK(t == solution_family(AppellCase(AppellKind::Case1, s), kHalf, 15).ttrr);
  }
}

TEST_CASE("the opposite overall sign of phi yields the reciprocal-base family") {
  PearsonData pd = appell_case1_pearson(1, kHalf);
  pd.a = -pd.a;
  pd.c = -pd.c;
  CHECK(ttrr_from_pearson(pd, kHalf, 10) == solution_family(AppellCase(AppellKind::Case1, -1), kHalf, 10).ttrr);
}

TEST_CASE("b = e = 0 gives a symmetric recurrence") {
  const PearsonData pd{Q("1/3"), 0, Q("-2"), Q("5/7"), 0};
  const Ttrr t = ttrr_from_pearson(pd, kHalf, 6);
  for (int n = 0; n <= 6; ++n) CHECK(t.B(n) == 0);
}

TEST_CASE("pearson residual") {
  const PearsonData pd = appell_case1_pearson(1, kHalf);
  const MomentFunctional u = moments_from_ttrr(solution_family(AppellCase(AppellKind::Case1, 1), kHalf, 12).ttrr);
  const std::vector<Scalar> r = pearson_residual(pd, u, kHalf);
  CHECK(r.size() >= 19);
  CHECK(all_zero(r));
  CHECK(pearson_residual(pd, MomentFunctional({1}), kHalf).empty());
  PearsonData bumped = pd;
  bumped.c += 1;
  const std::vector<Scalar> rb = pearson_residual(bumped, u, kHalf);
  bool nonzero = false;
  for (int m = 0; m <= 4; ++m) nonzero = nonzero || !is_zero(rb.at(m));
  CHECK(nonzero);
}

TEST_CASE("induced moments of a general Pearson pair satisfy the equation") {
  const PearsonData pd{Q("-1/2"), Q("1/3"), Q("2"), Q("1"), Q("-1/4")};
  const LatticeParam lp(Q("2/3"));
  const MomentFunctional u = moments_from_ttrr(ttrr_from_pearson(pd, lp, 10));
  const std::vector<Scalar> r = pearson_residual(pd, u, lp);
  CHECK_FALSE(r.empty());
  CHECK(all_zero(r));
}

TEST_CASE("inadmissible Pearson data") {
  try {
    ttrr_from_pearson(PearsonData{1, 0, -1, 0, 0}, kHalf, 5);
    FAIL("expected Inadmissible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inadmissible);
  }
  CHECK(pearson_d(PearsonData{0, 0, 0, 1, 0}, 3, kHalf) == alpha_n(3, kHalf));
  CHECK(pearson_e(PearsonData{0, 2, 0, 0, 1}, 2, kHalf) == 2 * gamma_n(2, kHalf) + alpha_n(2, kHalf));
}
