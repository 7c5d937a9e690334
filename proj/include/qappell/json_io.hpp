#pragma once

#include <json.hpp>

#include "qappell/appell.hpp"
#include "qappell/functional.hpp"
#include "qappell/ops.hpp"
#include "qappell/report.hpp"
#include "qappell/zpoly.hpp"

namespace qappell {

using Json = nlohmann::ordered_json;

/// ZPoly as an array of Scalar strings, ascending degree.
Json zpoly_to_json(const ZPoly& p);
ZPoly zpoly_from_json(const Json& j);

/// {"B": [B_0..B_N], "C": [C_1..C_N], "P": [[coeffs of P_0], ...]}
Json family_to_json(const OpsFamily& fam);

/// {"moments": ["1", "0", "3/8", ...]}
Json moments_to_json(const MomentFunctional& u);
MomentFunctional moments_from_json(const Json& j);

/// {"check", "case", "sign", "v", "residuals": [{"index", "value"}], "pass"}
/// plus "note" when present. Zero residuals encode as "0".
Json report_to_json(const AppellReport& report);

Json discrepancy_to_json(const Discrepancy& d, const AppellReport& context);

}  // namespace qappell
