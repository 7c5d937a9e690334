#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qappell/appell.hpp"
#include "qappell/pearson.hpp"
#include "qappell/report.hpp"

namespace qappell {

/// A batch of reports plus any printed-coefficient discrepancies found by
/// the basis-expansion cross-check.
struct SuiteResult {
  std::vector<AppellReport> reports;
  /// Paired with the index of the report they explain.
  std::vector<std::pair<std::size_t, Discrepancy>> discrepancies;
  /// Failing reports whose failure is fully accounted for by a discrepancy
  /// with a passing corrected variant.
  std::vector<std::size_t> explained;

  bool all_pass() const;
  /// All reports pass, or every failure is explained.
  bool pass_modulo_explained() const;
};

/// Random rational polynomial: degree uniform in [0, max_degree],
/// numerators uniform in [-9, 9], denominators in {1, 2, 3}.
class RandomPolys {
 public:
  explicit RandomPolys(std::uint64_t seed);
  Scalar scalar();
  ZPoly poly(int max_degree);
  MomentFunctional functional(int horizon);

 private:
  std::mt19937_64 engine_;
  std::uint64_t below(std::uint64_t bound);
};

/// Operator identities and their functional counterparts on random input.
SuiteResult identity_suite(const LatticeParam& lp, int max_degree, int trials, std::uint64_t seed);

/// Appell equation for the solution family, n = 0..n_max.
SuiteResult appell_suite(const AppellCase& ac, const LatticeParam& lp, int n_max);

/// The three structure relations for n = 0..n_max, printed coefficients,
/// with cross-check and corrected variant on failure.
SuiteResult structure_suite(const AppellCase& ac, const LatticeParam& lp, int n_max);

/// Five difference equations on the solution family, n = 0..n_max.
SuiteResult system_suite(const AppellCase& ac, const LatticeParam& lp, int n_max);

/// Four functional equations for the solution moments, m = 0..max_m.
SuiteResult functional_suite(const AppellCase& ac, const LatticeParam& lp, int max_m);

/// Recurrence from a Pearson pair (compared against `expected` when given,
/// n = 0..horizon-1) and Pearson residual of the induced moments, m = 0..max_m.
SuiteResult pearson_suite(const PearsonData& pd, const LatticeParam& lp, int horizon, int max_m,
                          const std::optional<Ttrr>& expected, int sign = 1);

/// falsify_family over one r.
SuiteResult falsify_suite(const Scalar& r, const LatticeParam& lp, int horizon);

}  // namespace qappell
