#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qappell/scalar.hpp"
#include "qappell/zpoly.hpp"

namespace qappell {

struct ResidualEntry {
  int index = 0;
  /// A scalar, a polynomial, or a list of moment residuals.
  std::variant<Scalar, ZPoly, std::vector<Scalar>> value;
  /// Distinguishes interleaved equations inside one report (e.g. "S5").
  std::string label;

  bool is_zero() const;
};

/// Outcome of one verification check; `pass` is true iff every residual
/// is zero.
struct AppellReport {
  std::string check;
  int case_id = 0;  // 1 or 2; 0 when the check is not case-specific
  int sign = 1;
  std::string v;
  std::vector<ResidualEntry> residuals;
  bool pass = true;
  /// Validity range, skipped indices and similar remarks.
  std::string note;

  void add(int index, std::variant<Scalar, ZPoly, std::vector<Scalar>> value, std::string label = {});
};

}  // namespace qappell
