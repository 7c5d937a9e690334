#include "qappell/json_io.hpp"

#include "qappell/error.hpp"

namespace qappell {

namespace {

Json scalars_to_json(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<Scalar> scalars_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "expected an array of rational strings");
  std::vector<Scalar> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw Error(ErrorCode::Parse, "expected a rational string");
    out.push_back(parse_scalar(x.get<std::string>()));
  }
  return out;
}

std::string sign_text(int sign) { return sign > 0 ? "+1" : "-1"; }

}  // namespace

Json zpoly_to_json(const ZPoly& p) {
  return scalars_to_json(std::vector<Scalar>(p.coeffs().begin(), p.coeffs().end()));
}

ZPoly zpoly_from_json(const Json& j) { return ZPoly(scalars_from_json(j)); }

Json family_to_json(const OpsFamily& fam) {
  Json out;
  out["B"] = scalars_to_json(fam.source().B_values());
  out["C"] = scalars_to_json(fam.source().C_values());
  Json ps = Json::array();
  for (const auto& p : fam.polynomials()) ps.push_back(zpoly_to_json(p));
  out["P"] = std::move(ps);
  return out;
}

Json moments_to_json(const MomentFunctional& u) {
  Json out;
  out["moments"] = scalars_to_json(u.moments());
  return out;
}

MomentFunctional moments_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("moments")) throw Error(ErrorCode::Parse, "missing \"moments\"");
  return MomentFunctional(scalars_from_json(j.at("moments")));
}

Json report_to_json(const AppellReport& report) {
  Json out;
  out["check"] = report.check;
  out["case"] = report.case_id;
  out["sign"] = sign_text(report.sign);
  out["v"] = report.v;
  Json residuals = Json::array();
  for (const auto& entry : report.residuals) {
    Json r;
    r["index"] = entry.index;
    if (!entry.label.empty()) r["label"] = entry.label;
    if (entry.is_zero()) {
      r["value"] = "0";
    } else if (const auto* s = std::get_if<Scalar>(&entry.value)) {
      r["value"] = to_string(*s);
    } else if (const auto* p = std::get_if<ZPoly>(&entry.value)) {
      r["value"] = zpoly_to_json(*p);
    } else {
      r["value"] = scalars_to_json(std::get<std::vector<Scalar>>(entry.value));
    }
    residuals.push_back(std::move(r));
  }
  out["residuals"] = std::move(residuals);
  out["pass"] = report.pass;
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

Json discrepancy_to_json(const Discrepancy& d, const AppellReport& context) {
  Json out;
  out["discrepancy"] = context.check;
  out["case"] = context.case_id;
  out["sign"] = sign_text(context.sign);
  out["v"] = context.v;
  out["n"] = d.n;
  out["coeff"] = d.coeff;
  out["basis_index"] = d.basis_index;
  out["printed"] = to_string(d.printed);
  out["oracle"] = to_string(d.oracle);
  return out;
}

}  // namespace qappell
