#pragma once

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "twreg/classify.hpp"
#include "twreg/cli/document.hpp"
#include "twreg/specfun.hpp"
#include "twreg/verify/asymptotics.hpp"
#include "twreg/verify/suite.hpp"

namespace twreg::cli {

enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_anomaly = 2, exit_check_failed = 3 };

inline cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw input_error("");
      return {re, 0.0};
    }
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw input_error("");
    const double im = std::stod(b, &used);
    if (used != b.size()) throw input_error("");
    return {re, im};
  } catch (const std::exception&) {
    throw input_error("cannot parse complex number \"" + s + "\" (expected re,im)");
  }
}

struct Grid1D {
  double lo, step, hi;
};

inline Grid1D parse_grid(const std::string& s) {
  Grid1D g{};
  char extra = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.step, &g.hi, &extra) != 3 || !(g.step > 0.0) ||
      g.hi < g.lo)
    throw input_error("grid must be lo:step:hi with step > 0 and lo <= hi");
  return g;
}

inline std::vector<double> grid_points(const Grid1D& g) {
  std::vector<double> xs;
  const auto n = static_cast<long>(std::floor((g.hi - g.lo) / g.step + 1e-9));
  for (long k = 0; k <= n; ++k) {
    double x = g.lo + k * g.step;
    if (std::abs(x) < 1e-12 * g.step) x = 0.0;
    xs.push_back(x);
  }
  return xs;
}

inline json verdict_json(const Verdict& v) {
  const auto& b = v.symbol;
  const auto& d = v.source.disc;
  json j;
  j["theta_used"] = v.theta_used;
  j["b_coefficients"] = {{"b20", complex_json(b.b20)}, {"b11", complex_json(b.b11)}, {"b02", complex_json(b.b02)},
                         {"b10", complex_json(b.b10)}, {"b01", complex_json(b.b01)}, {"b00", complex_json(b.b00)}};
  j["deltas"] = {{"d2", complex_json(d.d2)}, {"d1", complex_json(d.d1)}, {"d0", complex_json(d.d0)}};
  j["delta_case"] = to_string(d.kind);
  j["lambda"] = d.lambda ? complex_json(*d.lambda) : json(nullptr);
  j["lambda_odd_positive"] = v.source.lambda_odd_positive;
  json roots = json::array();
  for (const RootReport* r : {&v.source.plus, &v.source.minus}) {
    roots.push_back({{"root", r->root == Root::Plus ? "+" : "-"},
                     {"class", to_string(r->cls)},
                     {"end_behaviors", {{"+inf", to_string(r->at_plus)}, {"-inf", to_string(r->at_minus)}}}});
  }
  j["roots"] = roots;
  j["matched_condition"] =
      v.matched_condition() == Condition::none ? json(nullptr) : json(condition_code(v.matched_condition()));
  j["source_regular"] = v.source.regular;
  j["source_injective"] = v.source.injective ? json(*v.source.injective) : json(nullptr);
  j["twisted_regular"] = v.twisted_regular;
  j["anomaly"] = v.source.anomaly;
  j["warnings"] = v.warnings;
  return j;
}

struct ClassifyFlags {
  std::optional<double> theta, tol_zero, tol_lambda;
};

inline int cmd_classify(const std::string& path, const ClassifyFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    OperatorDocument doc = load_document(path);
    if (flags.theta) doc.options.theta = flags.theta;
    if (flags.tol_zero) doc.options.tol_zero = flags.tol_zero;
    if (flags.tol_lambda) doc.options.tol_lambda = flags.tol_lambda;
    const ClassifyTolerances tol = tolerances_for(doc);
    const Verdict v = doc.kind == DocumentKind::Twisted
                          ? classify_twisted({doc.coefficients, *doc.frame}, doc.options.theta, tol)
                          : classify_symbol(document_symbol(doc), tol);
    out << verdict_json(v).dump() << '\n';
    return v.source.anomaly ? exit_anomaly : exit_ok;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const order_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const frame_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const shift_required_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_input;
}

struct SpecfunArgs {
  std::string function;  // phi, theta or airy
  cplx p{0.0, 0.0}, q{1.0, 0.0}, z{0.0, 0.0};
  std::string which = "ai";
  std::optional<int> asym;
  double eps = default_sector_eps;
};

inline int cmd_specfun(const SpecfunArgs& a, std::ostream& out, std::ostream& err) {
  json j;
  j["function"] = a.function;
  try {
    if (a.asym) {
      AsymptoticEval r;
      if (a.function == "phi") {
        r = phi_asym(a.p, a.q, a.z, *a.asym, a.eps);
      } else if (a.function == "theta") {
        r = theta_asym(a.p, a.z, *a.asym, a.eps);
      } else {
        const AiryKind k = a.which == "bi" ? AiryKind::Bi : AiryKind::Ai;
        r = airy_asym(k, a.z, a.z.real() >= 0.0 ? AiryRegime::RightSector : AiryRegime::LeftSector, a.eps);
      }
      if (!r.sector_ok) throw sector_error("z lies outside the sector of the expansion");
      j["value"] = complex_json(r.value);
      j["route"] = "asymptotic";
      j["terms"] = r.terms_used;
      j["est_remainder"] = r.est_remainder;
    } else {
      cplx v;
      if (a.function == "phi")
        v = phi(a.p, a.q, a.z);
      else if (a.function == "theta")
        v = theta(a.p, a.z);
      else
        v = a.which == "bi" ? airy_bi(a.z) : airy_ai(a.z);
      j["value"] = complex_json(v);
      j["route"] = "series";
      j["est_remainder"] = 0.0;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  out << j.dump() << '\n';
  return exit_ok;
}

inline std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Writes x, Re u, Im u, |u| and the modulus of the predicted leading form.
inline int cmd_solve(const std::string& path, cplx c1, cplx c2, const Grid1D& grid, std::ostream& out,
                     std::ostream& err) {
  WeylSymbol b;
  try {
    b = document_symbol(load_document(path));
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  const SolutionBasis basis(b);
  out << "x,re_u,im_u,abs_u,envelope\n";
  for (double x : grid_points(grid)) {
    out << csv_number(x);
    try {
      const cplx u = eval_solution(basis, c1, c2, x);
      out << ',' << csv_number(u.real()) << ',' << csv_number(u.imag()) << ',' << csv_number(std::abs(u));
    } catch (const error&) {
      out << ",NA,NA,NA";
    }
    try {
      if (x == 0.0 || (c1 == cplx(0.0) && c2 == cplx(0.0))) throw domain_error("no envelope");
      out << ',' << csv_number(std::abs(verify::solution_asym_sample(b, c1, c2, x).predicted)) << '\n';
    } catch (const error&) {
      out << ",NA\n";
    }
  }
  return exit_ok;
}

inline json report_json(const verify::CheckReport& r) {
  json meta = json::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  json j;
  j["name"] = r.name;
  j["residual"] = std::isfinite(r.residual) ? json(r.residual) : json(nullptr);
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["metadata"] = meta;
  return j;
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed, int jobs, std::ostream& out, std::ostream& err) {
  std::vector<verify::CriterionOutcome> outcomes;
  try {
    outcomes = verify::run_suite(suite, seed, jobs);
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  bool all = true;
  for (const auto& r : verify::flatten_sorted(outcomes)) {
    all = all && r.passed;
    out << report_json(r).dump() << '\n';
  }
  return all ? exit_ok : exit_check_failed;
}

}  // namespace twreg::cli
