#include "qappell/report.hpp"

#include <utility>

namespace qappell {

bool ResidualEntry::is_zero() const {
  if (const auto* s = std::get_if<Scalar>(&value)) return qappell::is_zero(*s);
  if (const auto* p = std::get_if<ZPoly>(&value)) return p->is_zero();
  for (const auto& x : std::get<std::vector<Scalar>>(value)) {
    if (!qappell::is_zero(x)) return false;
  }
  return true;
}

void AppellReport::add(int index, std::variant<Scalar, ZPoly, std::vector<Scalar>> value, std::string label) {
  ResidualEntry entry{index, std::move(value), std::move(label)};
  if (!entry.is_zero()) pass = false;
  residuals.push_back(std::move(entry));
}

}  // namespace qappell
