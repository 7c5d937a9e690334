#include "qappell/error.hpp"
#include "qappell/ops.hpp"
#include "support.hpp"

using namespace qappell;
using namespace qappell::test;

TEST_CASE("generate_ops runs the recurrence") {
  const Ttrr t({0, 0}, {Q("3/8")});
  const OpsFamily fam = generate_ops(t);
  CHECK(fam.horizon() == 1);
  CHECK(fam.P(0) == Z({"1"}));
  CHECK(fam.P(1) == Z({"0", "1"}));
  const OpsFamily fam2 = generate_ops(Ttrr({0, 0, 0}, {Q("3/8"), Q("75/256")}));
  CHECK(fam2.P(2) == Z({"-3/8", "0", "1"}));
  const OpsFamily shifted = generate_ops(Ttrr({Q("2/5"), 1, 0}, {Q("1/3"), 1}));
  CHECK(shifted.P(1) == Z({"-2/5", "1"}));
  CHECK(shifted.P(2) == (Z({"-1", "1"}) * Z({"-2/5", "1"})) - Z({"1/3"}));
}

TEST_CASE("regularity gate and bad indices") {
  try {
    Ttrr({0, 0}, {0}).check_regular();
    FAIL("expected ZeroC");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroC);
  }
  const Ttrr t({0, 0}, {1});
  CHECK_THROWS_AS(t.C(0), Error);
  CHECK_THROWS_AS(t.B(2), Error);
  CHECK_THROWS_AS(Ttrr({0, 0}, {}), std::exception);
}

TEST_CASE("Al-Salam-Chihara and Rogers recurrences") {
  const LatticeParam lp(Q("1/2"));
  const Ttrr asc = alsc_ttrr(1, -1, lp, 3);
  CHECK(asc.B(0) == 0);
  CHECK(asc.B(2) == 0);
  CHECK(asc.C(1) == Q("3/8"));
  CHECK(asc.C(2) == Q("75/256"));
  const Ttrr rogers = rogers_ttrr(lp, 6);
  for (int n = 1; n <= 6; ++n) {
    CHECK(rogers.B(n - 1) == 0);
    CHECK(rogers.C(n) == (1 - pow(lp.q(), n)) / 4);
  }
  const Ttrr sq = alsc_ttrr(lp.v(), -lp.v(), lp, 6);
  for (int n = 1; n <= 6; ++n) CHECK(sq.C(n) == (1 - pow(lp.q(), 2 * n)) / 4);
  const Ttrr general = alsc_ttrr(Q("1/3"), Q("2"), lp, 4);
  for (int n = 0; n <= 4; ++n) CHECK(general.B(n) == Q("7/3") * pow(lp.q(), n) / 2);
  // ab q^0 = 1 makes C_1 vanish.
  try {
    alsc_ttrr(2, Q("1/2"), lp, 3);
    FAIL("expected ZeroC");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroC);
  }
}

TEST_CASE("expand_in_basis") {
  const LatticeParam lp(Q("1/2"));
  const OpsFamily fam = generate_ops(alsc_ttrr(1, -1, lp, 5));
  CHECK(expand_in_basis(fam.P(3), fam) == std::vector<Scalar>{0, 0, 0, 1});
  CHECK(expand_in_basis(Z({"0", "1"}), fam) == std::vector<Scalar>{0, 1});
  CHECK(expand_in_basis(Z({"0", "0", "1"}), fam) == std::vector<Scalar>{Q("3/8"), 0, 1});
  const ZPoly p = Z({"1", "-2", "0", "5", "1/3"});
  const std::vector<Scalar> c = expand_in_basis(p, fam);
  ZPoly back;
  for (std::size_t k = 0; k < c.size(); ++k) back += c[k] * fam.P(static_cast<int>(k));
  CHECK(back == p);
  try {
    expand_in_basis(ZPoly::monomial(6), fam);
    FAIL("expected HorizonExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HorizonExceeded);
  }
}

TEST_CASE("subleading coefficients") {
  const LatticeParam lp(Q("1/2"));
  const OpsFamily fam = generate_ops(alsc_ttrr(1, -1, lp, 4));
  CHECK(subleading(fam, 0) == std::pair<Scalar, Scalar>{0, 0});
  CHECK(subleading(fam, 2) == std::pair<Scalar, Scalar>{0, Q("-3/8")});
  const OpsFamily shifted = generate_ops(alsc_ttrr(Q("1/3"), 2, lp, 4));
  CHECK(subleading(shifted, 1).first == -shifted.source().B(0));
  // f_n = -(B_0 + ... + B_{n-1})
  Scalar sum = 0;
  for (int k = 0; k < 4; ++k) sum += shifted.source().B(k);
  CHECK(subleading(shifted, 4).first == -sum);
}
