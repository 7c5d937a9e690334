#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "qappell/appell.hpp"
#include "qappell/error.hpp"
#include "qappell/json_io.hpp"
#include "qappell/pearson.hpp"
#include "qappell/suites.hpp"

namespace qappell::cli {

namespace {

struct RunConfig {
  std::string family;
  std::string suite;
  std::string v = "1/2";
  std::string sign = "+1";
  int case_id = 1;
  int n = -1;  // per-subcommand default when left negative
  int m = 18;
  int degree = 10;
  int trials = 50;
  std::uint64_t seed = 42;
  std::string a = "0";
  std::string b = "0";
  std::string r = "0";
  bool table = false;
  bool strict = false;
  bool printed_sign = false;
  std::vector<std::string> pearson;
};

int parse_sign(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw Error(ErrorCode::BadParameter, "sign must be +1 or -1, got '" + text + "'");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

void print_table_report(std::ostream& out, const AppellReport& r) {
  out << (r.pass ? "PASS  " : "FAIL  ") << r.check;
  if (r.case_id != 0) out << "  case=" << r.case_id;
  out << "  sign=" << sign_text(r.sign) << "  v=" << r.v << "  residuals=" << r.residuals.size();
  const auto bad = std::find_if(r.residuals.begin(), r.residuals.end(), [](const auto& e) { return !e.is_zero(); });
  if (bad != r.residuals.end()) {
    out << "  first nonzero at index " << bad->index;
    if (!bad->label.empty()) out << " (" << bad->label << ")";
  }
  if (!r.note.empty()) out << "  [" << r.note << "]";
  out << '\n';
}

void emit(std::ostream& out, const SuiteResult& result, bool table) {
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    const AppellReport& r = result.reports[i];
    if (table) {
      print_table_report(out, r);
    } else {
      out << report_to_json(r).dump() << '\n';
    }
    for (const auto& [owner, d] : result.discrepancies) {
      if (owner != i) continue;
      if (table) {
        out << "  discrepancy n=" << d.n << "  " << d.coeff << " (P_" << d.basis_index << ")  printed=" << to_string(d.printed)
            << "  basis expansion=" << to_string(d.oracle) << '\n';
      } else {
        out << discrepancy_to_json(d, r).dump() << '\n';
      }
    }
  }
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const LatticeParam lp(parse_scalar(cfg.v));
  const int horizon = cfg.n < 0 ? 10 : cfg.n;
  require(horizon >= 1, "--n must be >= 1");
  Ttrr ttrr;
  if (cfg.family == "asc") {
    ttrr = alsc_ttrr(parse_scalar(cfg.a), parse_scalar(cfg.b), lp, horizon);
  } else if (cfg.family == "rogers") {
    ttrr = rogers_ttrr(lp, horizon);
  } else {
    const AppellKind kind = cfg.family == "case1" ? AppellKind::Case1 : AppellKind::Case2;
    ttrr = solution_family(AppellCase(kind, parse_sign(cfg.sign)), lp, horizon).ttrr;
  }
  const OpsFamily fam = generate_ops(ttrr);
  if (!cfg.table) {
    out << family_to_json(fam).dump() << '\n';
    return kExitOk;
  }
  out << "family " << cfg.family << "  v=" << to_string(lp.v()) << "  q=" << to_string(lp.q()) << '\n';
  for (int n = 0; n <= fam.horizon(); ++n) {
    out << "n=" << n << "  B=" << to_string(ttrr.B(n));
    if (n >= 1) out << "  C=" << to_string(ttrr.C(n));
    out << "  P=" << zpoly_to_json(fam.P(n)).dump() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const LatticeParam lp(parse_scalar(cfg.v));
  const int sign = parse_sign(cfg.sign);
  require(cfg.case_id == 1 || cfg.case_id == 2, "--case must be 1 or 2");
  require(cfg.trials >= 1, "--trials must be >= 1");
  require(cfg.m >= 0, "--m must be >= 0");
  require(cfg.degree >= 0, "--degree must be >= 0");
  const AppellCase ac(cfg.case_id == 1 ? AppellKind::Case1 : AppellKind::Case2, sign);
  auto horizon = [&](int fallback) {
    const int n = cfg.n < 0 ? fallback : cfg.n;
    require(n >= 1, "--n must be >= 1");
    return n;
  };

  SuiteResult result;
  if (cfg.suite == "identities") {
    result = identity_suite(lp, cfg.degree, cfg.trials, cfg.seed);
  } else if (cfg.suite == "appell") {
    result = appell_suite(ac, lp, horizon(20));
  } else if (cfg.suite == "structure") {
    result = structure_suite(ac, lp, horizon(15));
  } else if (cfg.suite == "system") {
    result = system_suite(ac, lp, horizon(15));
  } else if (cfg.suite == "functional") {
    result = functional_suite(ac, lp, cfg.m);
  } else if (cfg.suite == "pearson") {
    const int n = horizon(15);
    if (!cfg.pearson.empty()) {
      require(cfg.pearson.size() == 5, "pearson takes five rationals: a b c d e");
      const PearsonData pd{parse_scalar(cfg.pearson[0]), parse_scalar(cfg.pearson[1]), parse_scalar(cfg.pearson[2]),
                           parse_scalar(cfg.pearson[3]), parse_scalar(cfg.pearson[4])};
      result = pearson_suite(pd, lp, n, cfg.m, std::nullopt, sign);
    } else {
      PearsonData pd = appell_case1_pearson(sign, lp);
      if (cfg.printed_sign) {
        pd.a = -pd.a;
        pd.c = -pd.c;
      }
      const Ttrr expected = solution_family(AppellCase(AppellKind::Case1, sign), lp, n).ttrr;
      result = pearson_suite(pd, lp, n, cfg.m, expected, sign);
    }
  } else if (cfg.suite == "falsify") {
    result = falsify_suite(parse_scalar(cfg.r), lp, horizon(10));
  } else {
    throw Error(ErrorCode::BadParameter, "unknown verify suite '" + cfg.suite + "'");
  }
  emit(out, result, cfg.table);
  const bool ok = cfg.strict ? result.all_pass() : result.pass_modulo_explained();
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact Askey-Wilson operator calculus and Appell-type OPS verification"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--v", cfg.v, "lattice base v = q^(1/2), rational, v > 0, v != 1");
    sub->add_option("--sign", cfg.sign, "s = +1 or -1");
    sub->add_option("--n", cfg.n, "degree / horizon");
    sub->add_flag("--table", cfg.table, "human-readable output");
    sub->add_flag("--json", [&](std::int64_t) { cfg.table = false; }, "newline-delimited JSON output (default)");
  };

  CLI::App* generate = app.add_subcommand("generate", "print a recurrence and its monic polynomials");
  generate->add_option("family", cfg.family, "asc | rogers | case1 | case2")
      ->required()
      ->check(CLI::IsMember({"asc", "rogers", "case1", "case2"}));
  add_common(generate);
  generate->add_option("--a", cfg.a, "Al-Salam-Chihara parameter a");
  generate->add_option("--b", cfg.b, "Al-Salam-Chihara parameter b");

  CLI::App* verify = app.add_subcommand("verify", "run a residual suite; exit 0 iff every residual vanishes");
  verify->add_option("suite", cfg.suite, "identities | appell | system | structure | pearson | functional | falsify")
      ->required()
      ->check(CLI::IsMember({"identities", "appell", "system", "structure", "pearson", "functional", "falsify"}));
  verify->add_option("pearson", cfg.pearson, "a b c d e of phi = az^2+bz+c, psi = dz+e (pearson only)");
  add_common(verify);
  verify->add_option("--case", cfg.case_id, "1 (Sq Dq) or 2 (Dq Sq)");
  verify->add_option("--m", cfg.m, "highest moment index for functional checks");
  verify->add_option("--r", cfg.r, "perturbation parameter for falsify");
  verify->add_option("--degree", cfg.degree, "maximum random degree for identities");
  verify->add_option("--trials", cfg.trials, "random trials for identities");
  verify->add_option("--seed", cfg.seed, "seed for identities");
  verify->add_flag("--strict", cfg.strict, "fail on printed-coefficient discrepancies even when explained");
  verify->add_flag("--printed-sign", cfg.printed_sign, "pearson: use phi with the opposite overall sign");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::BadParameter:
      case ErrorCode::Parse:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  }
}

}  // namespace qappell::cli
