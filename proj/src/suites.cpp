#include "qappell/suites.hpp"

#include <algorithm>
#include <string>

#include "qappell/error.hpp"

namespace qappell {

namespace {

AppellReport make_report(std::string check, int case_id, int sign, const LatticeParam& lp) {
  AppellReport r;
  r.check = std::move(check);
  r.case_id = case_id;
  r.sign = sign;
  r.v = to_string(lp.v());
  return r;
}

std::string range_note(const std::vector<int>& valid, const std::vector<int>& skipped) {
  std::string note;
  if (!valid.empty()) note = "checked n = " + std::to_string(valid.front()) + ".." + std::to_string(valid.back());
  if (!skipped.empty()) {
    note += note.empty() ? "" : "; ";
    note += "skipped (undefined index) n =";
    for (int n : skipped) note += " " + std::to_string(n);
  }
  return note;
}

}  // namespace

bool SuiteResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const AppellReport& r) { return r.pass; });
}

bool SuiteResult::pass_modulo_explained() const {
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!reports[i].pass && std::find(explained.begin(), explained.end(), i) == explained.end()) return false;
  }
  return true;
}

RandomPolys::RandomPolys(std::uint64_t seed) : engine_(seed) {}

// mt19937_64 output is fixed by the standard; the bounded draw is done here
// rather than with std::uniform_int_distribution, whose algorithm is not.
std::uint64_t RandomPolys::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

Scalar RandomPolys::scalar() {
  const long num = static_cast<long>(below(19)) - 9;
  const long den = static_cast<long>(below(3)) + 1;
  Scalar x(num, den);
  x.canonicalize();
  return x;
}

ZPoly RandomPolys::poly(int max_degree) {
  const int degree = static_cast<int>(below(static_cast<std::uint64_t>(max_degree) + 1));
  std::vector<Scalar> coeffs;
  for (int k = 0; k <= degree; ++k) coeffs.push_back(scalar());
  return ZPoly(std::move(coeffs));
}

MomentFunctional RandomPolys::functional(int horizon) {
  std::vector<Scalar> mu{1};
  for (int k = 1; k <= horizon; ++k) mu.push_back(scalar());
  return MomentFunctional(std::move(mu));
}

SuiteResult identity_suite(const LatticeParam& lp, int max_degree, int trials, std::uint64_t seed) {
  RandomPolys rng(seed);
  SuiteResult out;
  auto report = [&](std::string name) { return make_report("identities/" + name, 0, 1, lp); };
  AppellReport product_d = report("ProductD");
  AppellReport product_s = report("ProductS");
  AppellReport sq_squared = report("SqSquared");
  std::vector<AppellReport> dqn_sq;
  for (int n = 0; n <= 4; ++n) dqn_sq.push_back(report("DqnSq(" + std::to_string(n) + ")"));
  AppellReport f_dq_w = report("FDqW");
  std::vector<AppellReport> dqn_sq_w;
  for (int n = 0; n <= 3; ++n) dqn_sq_w.push_back(report("DqnSqW(" + std::to_string(n) + ")"));

  for (int t = 0; t < trials; ++t) {
    const ZPoly f = rng.poly(max_degree);
    const ZPoly g = rng.poly(max_degree);
    const MomentFunctional w = rng.functional(max_degree + 6);
    product_d.add(t, identity_residual(Identity::ProductD, f, g, lp));
    product_s.add(t, identity_residual(Identity::ProductS, f, g, lp));
    sq_squared.add(t, identity_residual(Identity::SqSquared, f, std::nullopt, lp));
    for (int n = 0; n <= 4; ++n) dqn_sq[n].add(t, identity_residual(Identity::DqnSq, f, std::nullopt, lp, n));
    f_dq_w.add(t, functional_identity_residual(FunctionalIdentity::FDqW, f, w, lp));
    for (int n = 0; n <= 3; ++n) {
      dqn_sq_w[n].add(t, functional_identity_residual(FunctionalIdentity::DqnSqW, ZPoly(), w, lp, n));
    }
  }
  out.reports.push_back(std::move(product_d));
  out.reports.push_back(std::move(product_s));
  out.reports.push_back(std::move(sq_squared));
  for (auto& r : dqn_sq) out.reports.push_back(std::move(r));
  out.reports.push_back(std::move(f_dq_w));
  for (auto& r : dqn_sq_w) out.reports.push_back(std::move(r));
  return out;
}

SuiteResult appell_suite(const AppellCase& ac, const LatticeParam& lp, int n_max) {
  const SolutionFamily sol = solution_family(ac, lp, n_max);
  const OpsFamily fam = generate_ops(sol.ttrr);
  AppellReport r = make_report("appell", ac.id(), ac.sign(), lp);
  for (int n = 0; n <= n_max; ++n) r.add(n, appell_residual(ac, fam, sol.lowering, lp, n));
  r.note = "n = 0.." + std::to_string(n_max);
  return {{std::move(r)}, {}, {}};
}

SuiteResult structure_suite(const AppellCase& ac, const LatticeParam& lp, int n_max) {
  // P_{n+1} appears on the right; coefficients reach k_{n+2}, C_{n+1}.
  const SolutionFamily sol = solution_family(ac, lp, n_max + 3);
  const OpsFamily fam = generate_ops(sol.ttrr);
  SuiteResult out;
  for (StructureRelation which : {StructureRelation::Dx2, StructureRelation::DxSx, StructureRelation::Sx2}) {
    AppellReport r = make_report(std::string("structure/") + to_string(which), ac.id(), ac.sign(), lp);
    std::vector<int> valid;
    std::vector<int> skipped;
    for (int n = 0; n <= n_max; ++n) {
      try {
        r.add(n, structure_residual(ac, which, fam, sol.lowering, sol.ttrr, lp, n));
        valid.push_back(n);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BadIndex) throw;
        skipped.push_back(n);
      }
    }
    r.note = range_note(valid, skipped);
    const bool failed = !r.pass;
    out.reports.push_back(std::move(r));
    if (!failed) continue;

    const std::size_t failing = out.reports.size() - 1;
    for (int n : valid) {
      for (auto& d : structure_cross_check(ac, which, fam, sol.lowering, sol.ttrr, lp, n)) {
        out.discrepancies.emplace_back(failing, std::move(d));
      }
    }
    if (ac.kind() != AppellKind::Case1 || which != StructureRelation::DxSx) continue;
    const auto factors = supported_a3_factors(fam, sol.lowering, sol.ttrr, lp, 0, n_max);
    if (factors.empty()) continue;
    AppellReport corrected = make_report(
        std::string("structure/DxSx (a_n^[3] factor ") + to_string(factors.front()) + ")", ac.id(), ac.sign(), lp);
    for (int n : valid) {
      corrected.add(n, structure_residual(ac, which, fam, sol.lowering, sol.ttrr, lp, n, factors.front()));
    }
    std::string supported;
    for (auto f : factors) supported += std::string(supported.empty() ? "" : ", ") + to_string(f);
    corrected.note = "printed factor alpha^2 rejected by basis expansion; supported factor(s): " + supported;
    const bool only_a3 = std::all_of(out.discrepancies.begin(), out.discrepancies.end(), [&](const auto& p) {
      return p.first != failing || p.second.coeff == "a_n^[3]";
    });
    if (corrected.pass && only_a3) out.explained.push_back(failing);
    out.reports.push_back(std::move(corrected));
  }
  return out;
}

SuiteResult system_suite(const AppellCase& ac, const LatticeParam& lp, int n_max) {
  const SolutionFamily sol = solution_family(ac, lp, n_max + 4);
  SuiteResult out;
  for (DifferenceEq eq : {DifferenceEq::S1, DifferenceEq::S2, DifferenceEq::S3, DifferenceEq::S4, DifferenceEq::S5}) {
    const int id = static_cast<int>(eq);
    const std::string name = ac.kind() == AppellKind::Case1 ? "S" + std::to_string(id)
                                                             : "S" + std::to_string(id) + std::to_string(id);
    AppellReport r = make_report("system/" + name, ac.id(), ac.sign(), lp);
    std::vector<int> valid;
    std::vector<int> skipped;
    for (int n = 0; n <= n_max; ++n) {
      try {
        r.add(n, system_residual(ac, eq, sol.lowering, sol.ttrr, lp, n));
        valid.push_back(n);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BadIndex) throw;
        skipped.push_back(n);
      }
    }
    r.note = range_note(valid, skipped);
    out.reports.push_back(std::move(r));
  }
  return out;
}

SuiteResult functional_suite(const AppellCase& ac, const LatticeParam& lp, int max_m) {
  const SolutionFamily sol = solution_family(ac, lp, max_m + 3);
  const MomentFunctional u = moments_from_ttrr(sol.ttrr);
  SuiteResult out;
  for (int which = 1; which <= 4; ++which) {
    AppellReport r = make_report("functional/eq" + std::to_string(which), ac.id(), ac.sign(), lp);
    const auto residual = functional_equation_residual(ac, which, u, lp, max_m);
    for (int m = 0; m <= max_m; ++m) r.add(m, residual[static_cast<std::size_t>(m)]);
    r.note = "m = 0.." + std::to_string(max_m);
    out.reports.push_back(std::move(r));
  }
  return out;
}

SuiteResult pearson_suite(const PearsonData& pd, const LatticeParam& lp, int horizon, int max_m,
                          const std::optional<Ttrr>& expected, int sign) {
  SuiteResult out;
  const Ttrr ttrr = ttrr_from_pearson(pd, lp, std::max(horizon, max_m + 2));
  if (expected) {
    AppellReport r = make_report("pearson/ttrr", 0, sign, lp);
    for (int n = 0; n < horizon; ++n) {
      r.add(n, ttrr.B(n) - expected->B(n), "B_n");
      r.add(n, ttrr.C(n + 1) - expected->C(n + 1), "C_{n+1}");
    }
    r.note = "n = 0.." + std::to_string(horizon - 1);
    out.reports.push_back(std::move(r));
  }
  AppellReport r = make_report("pearson/residual", 0, sign, lp);
  const auto residual = pearson_residual(pd, moments_from_ttrr(ttrr), lp);
  for (int m = 0; m <= max_m && m < static_cast<int>(residual.size()); ++m) r.add(m, residual[static_cast<std::size_t>(m)]);
  r.note = "m = 0.." + std::to_string(max_m);
  out.reports.push_back(std::move(r));
  return out;
}

SuiteResult falsify_suite(const Scalar& r, const LatticeParam& lp, int horizon) {
  return {{falsify_family(r, lp, horizon)}, {}, {}};
}

}  // namespace qappell
