#include "qappell/appell.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

#include "qappell/error.hpp"

namespace qappell {

namespace {

// A coefficient that may reference an index outside the defined range.
// Multiplication by a structural zero (k_0, r_0) annihilates an undefined
// factor; nothing else does.
class Partial {
 public:
  static Partial known(Scalar v) { return Partial(State::Value, std::move(v), {}); }
  static Partial structural_zero() { return Partial(State::StructuralZero, 0, {}); }
  static Partial undefined(std::string why) { return Partial(State::Undefined, 0, std::move(why)); }

  bool defined() const { return state_ != State::Undefined; }
  Scalar value() const {
    if (!defined()) throw Error(ErrorCode::BadIndex, why_);
    return v_;
  }
  std::optional<Scalar> maybe() const { return defined() ? std::optional<Scalar>(v_) : std::nullopt; }

  friend Partial operator+(const Partial& x, const Partial& y) {
    if (!x.defined()) return x;
    if (!y.defined()) return y;
    if (x.state_ == State::StructuralZero) return y;
    if (y.state_ == State::StructuralZero) return x;
    return known(x.v_ + y.v_);
  }
  friend Partial operator-(const Partial& x) {
    if (x.state_ != State::Value) return x;
    return known(-x.v_);
  }
  friend Partial operator-(const Partial& x, const Partial& y) { return x + (-y); }
  friend Partial operator*(const Partial& x, const Partial& y) {
    if (x.state_ == State::StructuralZero || y.state_ == State::StructuralZero) return structural_zero();
    if (!x.defined()) return x;
    if (!y.defined()) return y;
    return known(x.v_ * y.v_);
  }
  friend Partial operator/(const Partial& x, const Partial& y) {
    if (!y.defined()) return y;
    if (y.state_ == State::StructuralZero || is_zero(y.v_)) {
      throw Error(ErrorCode::ZeroC, "division by a vanishing coefficient");
    }
    if (x.state_ == State::StructuralZero) return x;
    if (!x.defined()) return x;
    return known(x.v_ / y.v_);
  }
  friend Partial operator*(const Scalar& c, const Partial& y) { return known(c) * y; }
  friend Partial operator+(const Partial& x, const Scalar& c) { return x + known(c); }
  friend Partial operator-(const Partial& x, const Scalar& c) { return x - known(c); }

 private:
  enum class State { Value, StructuralZero, Undefined };
  Partial(State s, Scalar v, std::string why) : state_(s), v_(std::move(v)), why_(std::move(why)) {}

  State state_;
  Scalar v_;
  std::string why_;
};

class Env {
 public:
  Env(const std::vector<Scalar>& ks, const Ttrr& ttrr, const LatticeParam& lp) : ks_(ks), ttrr_(ttrr), lp_(lp) {
    alpha2_ = lp.alpha() * lp.alpha();
    two_a2m1_ = 2 * alpha2_ - 1;
    four_a2m3_ = 4 * alpha2_ - 3;
  }

  Partial k(int i) const {
    if (i < 0) return Partial::undefined("k_" + std::to_string(i) + " is undefined");
    if (i >= static_cast<int>(ks_.size())) return Partial::undefined("k_" + std::to_string(i) + " beyond supplied list");
    if (i == 0 && is_zero(ks_[0])) return Partial::structural_zero();
    return Partial::known(ks_[static_cast<std::size_t>(i)]);
  }
  Partial B(int i) const {
    if (i < 0 || i > ttrr_.horizon()) return Partial::undefined("B_" + std::to_string(i) + " is undefined");
    return Partial::known(ttrr_.B(i));
  }
  Partial C(int i) const {
    if (i < 1 || i > ttrr_.horizon()) return Partial::undefined("C_" + std::to_string(i) + " is undefined");
    return Partial::known(ttrr_.C(i));
  }
  Partial t(int i) const { return k(i) / C(i); }

  const LatticeParam& lp() const { return lp_; }
  const Scalar& alpha() const { return lp_.alpha(); }
  const Scalar& alpha2() const { return alpha2_; }
  const Scalar& A() const { return two_a2m1_; }    // 2 alpha^2 - 1
  const Scalar& A4() const { return four_a2m3_; }  // 4 alpha^2 - 3

 private:
  const std::vector<Scalar>& ks_;
  const Ttrr& ttrr_;
  const LatticeParam& lp_;
  Scalar alpha2_;
  Scalar two_a2m1_;
  Scalar four_a2m3_;
};

const Scalar kQuarter(1, 4);
const Scalar kHalf(1, 2);

// Structure coefficients, first case.
Partial c1_a(const Env& e, int n) { return e.k(n + 1) - e.A() * e.k(n) - Scalar(1); }
Partial c1_b(const Env& e, int n) { return (e.B(n) - e.A() * e.B(n - 1)) * e.k(n); }
Partial c1_c(const Env& e, int n) { return e.k(n - 1) * e.C(n) - e.A() * e.k(n) * e.C(n - 1); }

Scalar a3_factor_value(const Env& e, A3Factor f) {
  switch (f) {
    case A3Factor::AlphaSquared: return e.alpha2();
    case A3Factor::TwoAlphaSquaredMinusOne: return e.A();
    case A3Factor::One: return 1;
  }
  return e.alpha2();
}

std::vector<std::pair<std::string, Partial>> case1_tuple(const Env& e, int n, A3Factor a3) {
  const Scalar x = a3_factor_value(e, a3);
  std::vector<std::pair<std::string, Partial>> out;
  out.emplace_back("a_n", c1_a(e, n));
  out.emplace_back("b_n", c1_b(e, n));
  out.emplace_back("c_n", c1_c(e, n));
  out.emplace_back("a_n^[1]", c1_a(e, n + 1) - c1_a(e, n));
  out.emplace_back("a_n^[2]", c1_b(e, n + 1) - c1_b(e, n));
  out.emplace_back("a_n^[3]", c1_c(e, n + 1) - c1_c(e, n) + (e.B(n) - e.B(n - 1)) * c1_b(e, n) +
                                  (c1_a(e, n - 1) - x * c1_a(e, n)) * e.C(n));
  out.emplace_back("a_n^[4]", (e.B(n) - e.B(n - 2)) * c1_c(e, n) + c1_b(e, n - 1) * e.C(n) - c1_b(e, n) * e.C(n - 1));
  out.emplace_back("a_n^[5]", c1_c(e, n - 1) * e.C(n) - c1_c(e, n) * e.C(n - 2));
  // Right side of the Sq^2 relation.
  const Scalar an = alpha_n(n, e.lp());
  out.emplace_back("2alpha_n^2", Partial::known(2 * an * an));
  out.emplace_back("k_n(B_n-B_{n-1})", e.k(n) * (e.B(n) - e.B(n - 1)));
  out.emplace_back("k_{n-1}C_n-k_nC_{n-1}", e.k(n - 1) * e.C(n) - e.k(n) * e.C(n - 1));
  return out;
}

// Second case.
Partial c2_a(const Env& e, int n) { return e.k(n + 1) - e.A4() * e.k(n) - e.alpha(); }
Partial c2_b(const Env& e, int n) { return (e.B(n) - e.A4() * e.B(n - 1)) * e.k(n); }
Partial c2_c(const Env& e, int n) { return e.k(n - 1) * e.C(n) - e.A4() * e.k(n) * e.C(n - 1); }

std::vector<std::pair<std::string, Partial>> case2_tuple(const Env& e, int n) {
  const Scalar& A = e.A();
  std::vector<std::pair<std::string, Partial>> out;
  out.emplace_back("a_n", c2_a(e, n));
  out.emplace_back("b_n", c2_b(e, n));
  out.emplace_back("c_n", c2_c(e, n));
  out.emplace_back("b_n^[1]", c2_a(e, n + 1) - A * c2_a(e, n));
  out.emplace_back("b_n^[2]", c2_b(e, n + 1) - A * c2_b(e, n) - 2 * (e.alpha2() - 1) * c2_a(e, n) * e.B(n));
  out.emplace_back("b_n^[3]", c2_c(e, n + 1) - A * c2_c(e, n) + (e.B(n) - A * e.B(n - 1)) * c2_b(e, n) +
                                  (c2_a(e, n - 1) - A * c2_a(e, n)) * e.C(n));
  out.emplace_back("b_n^[4]",
                   (e.B(n) - A * e.B(n - 2)) * c2_c(e, n) + c2_b(e, n - 1) * e.C(n) - A * c2_b(e, n) * e.C(n - 1));
  out.emplace_back("b_n^[5]", c2_c(e, n - 1) * e.C(n) - A * c2_c(e, n) * e.C(n - 2));
  out.emplace_back("c_n^[1]", e.k(n + 1) - A * e.k(n) + e.alpha());
  out.emplace_back("c_n^[2]", (e.B(n) - A * e.B(n - 1)) * e.k(n));
  out.emplace_back("c_n^[3]", e.k(n - 1) * e.C(n) - A * e.k(n) * e.C(n - 1));
  return out;
}

struct Term {
  const char* coeff;
  int offset;  // multiplies P_{n + offset}
};

std::vector<Term> relation_terms(AppellKind kind, StructureRelation which) {
  if (kind == AppellKind::Case1) {
    switch (which) {
      case StructureRelation::Dx2: return {{"a_n", 0}, {"b_n", -1}, {"c_n", -2}};
      case StructureRelation::DxSx:
        return {{"a_n^[1]", 1}, {"a_n^[2]", 0}, {"a_n^[3]", -1}, {"a_n^[4]", -2}, {"a_n^[5]", -3}};
      case StructureRelation::Sx2:
        return {{"2alpha_n^2", 0}, {"k_n(B_n-B_{n-1})", -1}, {"k_{n-1}C_n-k_nC_{n-1}", -2}};
    }
  }
  switch (which) {
    case StructureRelation::Dx2: return {{"a_n", 0}, {"b_n", -1}, {"c_n", -2}};
    case StructureRelation::DxSx:
      return {{"b_n^[1]", 1}, {"b_n^[2]", 0}, {"b_n^[3]", -1}, {"b_n^[4]", -2}, {"b_n^[5]", -3}};
    case StructureRelation::Sx2: return {{"c_n^[1]", 0}, {"c_n^[2]", -1}, {"c_n^[3]", -2}};
  }
  return {};
}

ZPoly relation_lhs(AppellKind kind, StructureRelation which, const ZPoly& p, const LatticeParam& lp) {
  const Scalar& alpha = lp.alpha();
  const Scalar a2m1 = alpha * alpha - 1;
  const ZPoly u2 = structural_poly(Structural::U2, lp);
  const ZPoly z2_minus_a2({-alpha * alpha, 0, 1});
  if (kind == AppellKind::Case1) {
    switch (which) {
      case StructureRelation::Dx2: return (2 * alpha) * (u2 * apply_Dq_pow(p, 2, lp));
      case StructureRelation::DxSx: return (4 * alpha) * (u2 * apply_Dq(apply_Sq(p, lp), lp));
      case StructureRelation::Sx2: return Scalar(2) * apply_Sq(apply_Sq(p, lp), lp);
    }
  }
  switch (which) {
    case StructureRelation::Dx2: return (2 * a2m1) * (z2_minus_a2 * apply_Dq_pow(p, 2, lp));
    case StructureRelation::DxSx: return (4 * alpha * a2m1) * (z2_minus_a2 * apply_Sq(apply_Dq(p, lp), lp));
    case StructureRelation::Sx2: return (2 * alpha) * apply_Sq(apply_Sq(p, lp), lp);
  }
  return {};
}

std::map<std::string, Partial> tuple_map(const AppellCase& ac, const Env& env, int n, A3Factor a3) {
  auto tuple = ac.kind() == AppellKind::Case1 ? case1_tuple(env, n, a3) : case2_tuple(env, n);
  return {tuple.begin(), tuple.end()};
}

}  // namespace

AppellCase::AppellCase(AppellKind kind, int sign) : kind_(kind), sign_(sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::BadParameter, "sign must be +1 or -1");
}

const char* to_string(StructureRelation which) {
  switch (which) {
    case StructureRelation::Dx2: return "Dx2";
    case StructureRelation::DxSx: return "DxSx";
    case StructureRelation::Sx2: return "Sx2";
  }
  return "?";
}

const char* to_string(A3Factor factor) {
  switch (factor) {
    case A3Factor::AlphaSquared: return "alpha^2";
    case A3Factor::TwoAlphaSquaredMinusOne: return "2alpha^2-1";
    case A3Factor::One: return "1";
  }
  return "?";
}

Scalar lowering_coefficient(AppellKind kind, int n, const LatticeParam& lp) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "lowering coefficient index must be >= 0");
  if (n == 0) return 0;
  if (kind == AppellKind::Case1) return gamma_n(n, lp) * alpha_n(n - 1, lp);
  return gamma_n(2 * n, lp) / 2;
}

SolutionFamily solution_family(const AppellCase& ac, const LatticeParam& lp, int horizon) {
  if (horizon < 0) throw Error(ErrorCode::BadParameter, "negative horizon");
  const Scalar qs = lp.v_pow(2 * ac.sign());  // q^s
  std::vector<Scalar> bs(static_cast<std::size_t>(horizon) + 1);
  std::vector<Scalar> cs;
  for (int n = 0; n < horizon; ++n) {
    if (ac.kind() == AppellKind::Case1) {
      cs.push_back((1 - pow(qs, n + 1)) * (1 + pow(qs, n)) / 4);
    } else {
      cs.push_back((1 - pow(qs, 2 * (n + 1))) / 4);
    }
  }
  std::vector<Scalar> ks;
  for (int n = 0; n <= horizon; ++n) ks.push_back(lowering_coefficient(ac.kind(), n, lp));
  return {Ttrr(std::move(bs), std::move(cs)), std::move(ks)};
}

ZPoly appell_residual(const AppellCase& ac, const OpsFamily& fam, const std::vector<Scalar>& ks,
                      const LatticeParam& lp, int n) {
  if (n < 0 || n > fam.horizon() || n >= static_cast<int>(ks.size())) {
    throw Error(ErrorCode::BadIndex, "Appell residual index " + std::to_string(n) + " out of range");
  }
  const ZPoly& p = fam.P(n);
  const ZPoly lhs = ac.kind() == AppellKind::Case1 ? apply_Sq(apply_Dq(p, lp), lp) : apply_Dq(apply_Sq(p, lp), lp);
  if (n == 0) return lhs;
  return lhs - ks[static_cast<std::size_t>(n)] * fam.P(n - 1);
}

std::vector<NamedCoeff> structure_coeffs(const AppellCase& ac, const std::vector<Scalar>& ks, const Ttrr& ttrr,
                                         const LatticeParam& lp, int n, A3Factor a3) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "structure coefficients need n >= 0");
  const Env env(ks, ttrr, lp);
  auto tuple = ac.kind() == AppellKind::Case1 ? case1_tuple(env, n, a3) : case2_tuple(env, n);
  std::vector<NamedCoeff> out;
  out.reserve(tuple.size());
  for (auto& [name, value] : tuple) out.push_back({name, value.maybe()});
  return out;
}

ZPoly structure_residual(const AppellCase& ac, StructureRelation which, const OpsFamily& fam,
                         const std::vector<Scalar>& ks, const Ttrr& ttrr, const LatticeParam& lp, int n, A3Factor a3) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "structure relation needs n >= 0");
  const Env env(ks, ttrr, lp);
  const auto coeffs = tuple_map(ac, env, n, a3);
  ZPoly residual = relation_lhs(ac.kind(), which, fam.P(n), lp);
  for (const Term& term : relation_terms(ac.kind(), which)) {
    const int j = n + term.offset;
    if (j < 0) continue;
    residual -= coeffs.at(term.coeff).value() * fam.P(j);
  }
  return residual;
}

std::vector<Discrepancy> structure_cross_check(const AppellCase& ac, StructureRelation which, const OpsFamily& fam,
                                               const std::vector<Scalar>& ks, const Ttrr& ttrr,
                                               const LatticeParam& lp, int n, A3Factor a3) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "structure relation needs n >= 0");
  const Env env(ks, ttrr, lp);
  const auto coeffs = tuple_map(ac, env, n, a3);
  const std::vector<Scalar> expansion = expand_in_basis(relation_lhs(ac.kind(), which, fam.P(n), lp), fam);
  auto component = [&](int j) { return j < static_cast<int>(expansion.size()) ? expansion[j] : Scalar(0); };

  std::vector<Discrepancy> out;
  std::vector<bool> covered(expansion.size() + 4, false);
  for (const Term& term : relation_terms(ac.kind(), which)) {
    const int j = n + term.offset;
    if (j < 0) continue;
    covered[static_cast<std::size_t>(j)] = true;
    const Scalar printed = coeffs.at(term.coeff).value();
    const Scalar oracle = component(j);
    if (printed != oracle) out.push_back({n, term.coeff, j, printed, oracle});
  }
  for (int j = 0; j < static_cast<int>(expansion.size()); ++j) {
    if (!covered[static_cast<std::size_t>(j)] && !is_zero(expansion[j])) {
      out.push_back({n, "P_" + std::to_string(j), j, 0, expansion[j]});
    }
  }
  return out;
}

std::vector<A3Factor> supported_a3_factors(const OpsFamily& fam, const std::vector<Scalar>& ks, const Ttrr& ttrr,
                                           const LatticeParam& lp, int n_min, int n_max) {
  const AppellCase ac(AppellKind::Case1, 1);
  std::vector<A3Factor> out;
  for (A3Factor f : {A3Factor::AlphaSquared, A3Factor::TwoAlphaSquaredMinusOne, A3Factor::One}) {
    bool ok = true;
    for (int n = n_min; n <= n_max && ok; ++n) {
      try {
        ok = structure_residual(ac, StructureRelation::DxSx, fam, ks, ttrr, lp, n, f).is_zero();
      } catch (const Error& err) {
        if (err.code() != ErrorCode::BadIndex) throw;
      }
    }
    if (ok) out.push_back(f);
  }
  return out;
}

Scalar system_residual(const AppellCase& ac, DifferenceEq eq, const std::vector<Scalar>& ks, const Ttrr& ttrr,
                       const LatticeParam& lp, int n) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "difference equations need n >= 0");
  const Env e(ks, ttrr, lp);
  const Scalar& A = e.A();
  const bool first = ac.kind() == AppellKind::Case1;
  auto b_quadratic = [&] { return e.B(n) * e.B(n) - 2 * A * e.B(n) * e.B(n - 1) + e.B(n - 1) * e.B(n - 1); };
  Partial r = Partial::undefined("unknown equation");
  switch (eq) {
    case DifferenceEq::S1:
      r = first ? (e.k(n + 2) - kHalf) - 2 * A * (e.k(n + 1) - kHalf) + (e.k(n) - kHalf)
                : e.k(n + 2) - 2 * A * e.k(n + 1) + e.k(n);
      break;
    case DifferenceEq::S2:
      r = e.t(n + 2) - 2 * A * e.t(n + 1) + e.t(n);
      break;
    case DifferenceEq::S3:
      r = first ? e.k(n + 1) * e.B(n + 1) + (e.k(n + 1) - e.k(n + 2) - 2 * A * e.k(n)) * e.B(n) + e.k(n) * e.B(n - 1)
                : e.k(n + 1) * e.B(n + 1) - e.A4() * (e.k(n) + e.k(n + 1)) * e.B(n) + e.k(n) * e.B(n - 1);
      break;
    case DifferenceEq::S4:
      r = e.t(n + 3) * e.B(n + 2) - (e.t(n + 2) + e.t(n + 1)) * e.B(n + 1) + e.t(n) * e.B(n);
      break;
    case DifferenceEq::S5:
      if (first) {
        r = (e.t(n + 1) + e.t(n + 2)) * (e.C(n + 1) - kQuarter) - 4 * e.alpha2() * e.t(n) * (e.C(n) - kQuarter) +
            (e.t(n - 1) + e.t(n - 2)) * (e.C(n - 1) - kQuarter) - e.t(n) * b_quadratic();
      } else {
        r = e.t(n + 2) * (e.C(n + 1) - kQuarter) - Scalar(2) * e.t(n) * (e.C(n) - kQuarter) +
            e.t(n - 2) * (e.C(n - 1) - kQuarter) - e.t(n) * b_quadratic();
      }
      break;
  }
  return r.value();
}

std::vector<Scalar> functional_equation_residual(const AppellCase& ac, int which, const MomentFunctional& u,
                                                 const LatticeParam& lp, int max_m) {
  if (which < 1 || which > 4) throw Error(ErrorCode::BadParameter, "functional equation index must be 1..4");
  if (max_m < 0) throw Error(ErrorCode::BadParameter, "max_m must be >= 0");
  if (u.horizon() < max_m + 3) {
    throw Error(ErrorCode::HorizonExceeded, "functional equations up to m = " + std::to_string(max_m) +
                                                " need horizon " + std::to_string(max_m + 3));
  }
  const int s = ac.sign();
  const Scalar qs = lp.v_pow(2 * s);    // q^s
  const Scalar qs_half = lp.v_pow(s);   // q^{s/2}
  const Scalar qs2 = qs * qs;           // q^{2s}
  const Scalar& alpha = lp.alpha();
  const Scalar a2m1 = alpha * alpha - 1;
  auto D = [&](const MomentFunctional& w) { return functional_Dq(w, lp); };
  auto S = [&](const MomentFunctional& w) { return functional_Sq(w, lp); };
  auto times = [&](const ZPoly& f, const MomentFunctional& w) { return leftmul(f, w); };
  const ZPoly u2 = structural_poly(Structural::U2, lp);
  const ZPoly z2_minus_a2({-alpha * alpha, 0, 1});

  MomentFunctional residual;
  if (ac.kind() == AppellKind::Case1) {
    switch (which) {
      case 1:  // (q^s - 1) D S u = 2z u
        residual = combine({{qs - 1, D(S(u))}, {-1, times(ZPoly({0, 2}), u)}});
        break;
      case 2:  // 2 q^{3s/2} D^2(U2 u) = -(2z^2 + q^s - 1) u
        residual = combine({{2 * qs * qs_half, D(D(times(u2, u)))}, {1, times(ZPoly({qs - 1, 0, 2}), u)}});
        break;
      case 3:  // 2 q^s S^2 u = (-2z^2 + 1 + q^s) u
        residual = combine({{2 * qs, S(S(u))}, {-1, times(ZPoly({1 + qs, 0, -2}), u)}});
        break;
      case 4:  // 8 q^{5s/2} S D(U2 u) = (1 - q^s) z (-4z^2 + q^{2s} + 3) u
        residual = combine({{8 * qs2 * qs_half, S(D(times(u2, u)))},
                            {-1, times((1 - qs) * ZPoly({0, qs2 + 3, 0, -4}), u)}});
        break;
    }
  } else {
    switch (which) {
      case 1:  // q^{s/2}(q^s - 1) S D u = 2z u
        residual = combine({{qs_half * (qs - 1), S(D(u))}, {-1, times(ZPoly({0, 2}), u)}});
        break;
      case 2:  // 4(alpha^2 - 1) q^{5s/2} D^2((z^2 - alpha^2) u) = (-4z^2 + 1 - q^{2s}) u
        residual = combine({{4 * a2m1 * qs2 * qs_half, D(D(times(z2_minus_a2, u)))},
                            {-1, times(ZPoly({1 - qs2, 0, -4}), u)}});
        break;
      case 3:  // 4 q^{2s} S^2 u = (-4z^2 + 1 + 3q^{2s}) u
        residual = combine({{4 * qs2, S(S(u))}, {-1, times(ZPoly({1 + 3 * qs2, 0, -4}), u)}});
        break;
      case 4:  // 2 q^{3s}(1 - q^s) D S((z^2 - alpha^2) u) = z(-4z^2 + q^{4s} + q^{2s} + 2) u
        residual = combine({{2 * qs2 * qs * (1 - qs), D(S(times(z2_minus_a2, u)))},
                            {-1, times(ZPoly({0, qs2 * qs2 + qs2 + 2, 0, -4}), u)}});
        break;
    }
  }
  std::vector<Scalar> out(residual.moments().begin(), residual.moments().begin() + max_m + 1);
  return out;
}

AppellReport falsify_family(const Scalar& r, const LatticeParam& lp, int horizon) {
  if (horizon < 1) throw Error(ErrorCode::BadParameter, "falsification horizon must be >= 1");
  const int top = horizon + 2;  // S5 at N reads C_{N+2}; the initial condition reads k_{N+2}
  const Scalar& q = lp.q();
  std::vector<Scalar> cs;
  for (int n = 1; n <= top; ++n) {
    const Scalar denom = 1 - r * pow(q, 2 * n);
    if (is_zero(denom)) throw Error(ErrorCode::PoleInFamily, "1 - r q^{2n} = 0 at n = " + std::to_string(n));
    cs.push_back((1 - pow(q, n)) * (1 + pow(q, n - 1)) / (4 * denom));
  }
  const Ttrr ttrr(std::vector<Scalar>(static_cast<std::size_t>(top) + 1), cs);
  std::vector<Scalar> ks;
  for (int n = 0; n <= top; ++n) ks.push_back(lowering_coefficient(AppellKind::Case1, n, lp));

  AppellReport report;
  report.check = "falsify r=" + to_string(r);
  report.case_id = 1;
  report.sign = 1;
  report.v = to_string(lp.v());
  report.note = "S5 for n = 3.." + std::to_string(horizon) + ", initial condition for n = 1.." + std::to_string(horizon);
  const AppellCase ac(AppellKind::Case1, 1);
  for (int n = 3; n <= horizon; ++n) report.add(n, system_residual(ac, DifferenceEq::S5, ks, ttrr, lp, n), "S5");
  Scalar tail = 0;  // sum_{l=1}^{n} (C_l - 1/4)
  for (int n = 1; n <= horizon; ++n) {
    tail += ttrr.C(n) - kQuarter;
    const Scalar& kn = ks[n];
    const Scalar& kn2 = ks[n + 2];
    const Scalar rhs = (kn - kn2 + gamma_n(n + 2, lp) * alpha_n(n - 1, lp)) / (4 * kn) + (kn2 - kn) / kn * tail;
    report.add(n, ttrr.C(n + 1) - kQuarter - rhs, "IC");
  }
  return report;
}

}  // namespace qappell
