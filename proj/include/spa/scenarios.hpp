#pragma once

// Scenario runner: each scenario wires catalog functions, solvers and sweeps
// into a set of named assertions with numeric evidence. Configuration is a
// JSON object merged over per-scenario defaults; every cap that is not an
// analytic constant is labelled empirical.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spa/catalog.hpp"
#include "spa/constrained.hpp"
#include "spa/lift.hpp"
#include "spa/moduli.hpp"
#include "spa/remez.hpp"
#include "spa/report.hpp"
#include "spa/sweep.hpp"

namespace spa {

struct Assertion {
  std::string name;
  bool passed = false;
  nlohmann::json evidence;
};

struct ScenarioReport {
  std::string id;
  nlohmann::json config;
  std::vector<Assertion> assertions;
  std::vector<std::pair<std::string, ErrorTable>> tables;  // label -> table
  nlohmann::json diagnostics;

  bool all_passed() const {
    for (const Assertion& a : assertions)
      if (!a.passed) return false;
    return true;
  }
};

namespace scenario_detail {

inline TestFunction function_from_json(const nlohmann::json& j) {
  ParamMap params;
  if (j.contains("params"))
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      params[it.key()] =
          it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
  return get_function(j.at("id").get<std::string>(), params);
}

inline std::string function_label(const nlohmann::json& j) {
  std::string s = j.at("id").get<std::string>();
  if (j.contains("params"))
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      s += " " + it.key() + "=" +
           (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  return s;
}

inline nlohmann::json merge_config(nlohmann::json defaults, const nlohmann::json& user) {
  if (user.is_object())
    for (auto it = user.begin(); it != user.end(); ++it) defaults[it.key()] = it.value();
  return defaults;
}

// Default monotone test set: catalog entries whose default parameters assert
// membership in the s = 0 nondecreasing class.
inline nlohmann::json monotone_defaults() {
  nlohmann::json out = nlohmann::json::array();
  for (const CatalogEntry& e : list_catalog()) {
    TestFunction f = get_function(e.id);
    for (const ShapeConstraint& c : f.shape_classes)
      if (c.q == 1 && c.change_points.empty()) {
        out.push_back({{"id", e.id}});
        break;
      }
  }
  return out;
}

inline double sup_scaled(const ErrorTable& t, double alpha, int from_n = 0) {
  double s = 0.0;
  for (const ErrorRow& r : t.rows)
    if (r.n >= from_n) s = std::max(s, std::pow(r.n, alpha) * r.value);
  return s;
}

// Monotone log-log interpolation of omega_2 on a precomputed step ladder.
struct OmegaLadder {
  std::vector<double> t, w;

  double operator()(double x) const {
    double tt = std::max(x, 1e-300);
    if (tt >= t.front()) return w.front();
    for (size_t i = 1; i < t.size(); ++i) {
      if (tt >= t[i]) {
        double u = (std::log(tt) - std::log(t[i])) /
                   (std::log(t[i - 1]) - std::log(t[i]));
        double lw = std::log(std::max(w[i], 1e-300));
        double hw = std::log(std::max(w[i - 1], 1e-300));
        return std::exp(lw + u * (hw - lw));
      }
    }
    // Below the ladder: second differences of a smooth function scale as t^2.
    double base = w.back();
    return base * (tt / t.back()) * (tt / t.back());
  }
};

inline OmegaLadder omega2_ladder(const TestFunction& g, double t_max, int points) {
  OmegaLadder lad;
  for (int j = 0; j < points; ++j) {
    double t = t_max * std::pow(2.0, -8.0 * j / (points - 1));
    lad.t.push_back(t);
    lad.w.push_back(omega_k(g, 2, t));
  }
  return lad;
}

// ---------------------------------------------------------------- chain ---

inline ScenarioReport scenario_chain(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "chain";
  rep.config = cfg;
  double slack = cfg.at("slack").get<double>();
  struct Worst {
    double margin = -1e300;
    nlohmann::json at;
  };
  std::map<std::string, Worst> worst;
  std::map<std::string, bool> ok{{"tilde_le_interpolatory", true},
                                 {"interpolatory_le_constrained", true},
                                 {"tilde_le_tilde_constrained", true},
                                 {"tilde_constrained_le_constrained", true}};
  int cases = 0;
  for (const auto& fj : cfg.at("functions")) {
    TestFunction f = function_from_json(fj);
    std::string label = function_label(fj);
    for (double alpha : cfg.at("alphas").get<std::vector<double>>()) {
      for (int n = cfg.at("n_from").get<int>(); n <= cfg.at("n_to").get<int>(); ++n) {
        ShapeConstraint mono(1, {});
        double e_tilde =
            best_constrained(f, n, std::nullopt, WeightSpec::delta_alpha(alpha, n)).error;
        double e_phi =
            best_constrained(f, n, std::nullopt, WeightSpec::phi_alpha(alpha)).error;
        double e_tilde1 =
            best_constrained(f, n, mono, WeightSpec::delta_alpha(alpha, n)).error;
        double e_phi1 = best_constrained(f, n, mono, WeightSpec::phi_alpha(alpha)).error;
        ++cases;
        auto record = [&](const std::string& key, double lhs, double rhs) {
          double margin = lhs - rhs;  // positive means violation
          if (margin > slack) ok[key] = false;
          if (margin > worst[key].margin) {
            worst[key].margin = margin;
            worst[key].at = {{"function", label}, {"alpha", alpha}, {"n", n},
                             {"lhs", lhs},        {"rhs", rhs}};
          }
        };
        record("tilde_le_interpolatory", e_tilde, e_phi);
        record("interpolatory_le_constrained", e_phi, e_phi1);
        record("tilde_le_tilde_constrained", e_tilde, e_tilde1);
        record("tilde_constrained_le_constrained", e_tilde1, e_phi1);
      }
    }
  }
  for (const auto& [key, good] : ok) {
    Assertion a;
    a.name = key;
    a.passed = good;
    a.evidence = {{"cases", cases},
                  {"slack", slack},
                  {"worst_margin", worst[key].margin},
                  {"worst_case", worst[key].at}};
    rep.assertions.push_back(std::move(a));
  }
  return rep;
}

// ------------------------------------------------------------ qmon-lift ---

inline ScenarioReport scenario_qmon_lift(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "qmon-lift";
  rep.config = cfg;
  TestFunction f = function_from_json(cfg.at("function"));
  nlohmann::json ratios = nlohmann::json::object();
  for (int q : cfg.at("qs").get<std::vector<int>>()) {
    bool shape_ok = true, bound_ok = true, direct_ok = true;
    double qfact = 1.0;
    for (int i = 2; i <= q; ++i) qfact *= i;
    nlohmann::json qratios = nlohmann::json::array();
    double worst_bound = -1e300, worst_direct = -1e300;
    for (int n = q + 2; n <= cfg.at("n_to").get<int>(); ++n) {
      auto [p, lift] = lift_q_monotone(f, q, n);
      if (!lift.shape_ok) shape_ok = false;
      double bound_margin = lift.achieved_error - lift.guaranteed_bound;
      worst_bound = std::max(worst_bound, bound_margin);
      if (bound_margin > 1e-8) bound_ok = false;
      ApproxResult direct =
          best_constrained(f, n, ShapeConstraint(q, {}), WeightSpec::unweighted());
      double direct_margin = direct.error - lift.achieved_error;
      worst_direct = std::max(worst_direct, direct_margin);
      if (direct_margin > 1e-9) direct_ok = false;
      qratios.push_back({{"n", n}, {"reference_ratio", lift.reference_ratio}});
    }
    ratios["q" + std::to_string(q)] = qratios;
    rep.assertions.push_back(
        {"shape_preserved_q" + std::to_string(q), shape_ok, {{"q", q}}});
    rep.assertions.push_back({"guaranteed_bound_q" + std::to_string(q), bound_ok,
                              {{"worst_margin", worst_bound}}});
    rep.assertions.push_back({"direct_solver_no_worse_q" + std::to_string(q),
                              direct_ok,
                              {{"worst_margin", worst_direct}}});
  }
  rep.diagnostics["reference_ratios"] = ratios;
  rep.diagnostics["note"] =
      "reference_ratio compares the achieved error against (2/q!) * E_{n-q}(f^(q))";
  return rep;
}

// ---------------------------------------------------------- compare-q12 ---

inline ScenarioReport scenario_compare_q12(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "compare-q12";
  rep.config = cfg;
  double cap = cfg.at("cap").get<double>();
  int n_to = cfg.at("n_to").get<int>();
  for (int q : {1, 2}) {
    bool ok = true, rowwise_ok = true;
    nlohmann::json matrix = nlohmann::json::array();
    for (const auto& fj : cfg.at("functions").at(std::to_string(q))) {
      TestFunction f = function_from_json(fj);
      ErrorTable unc =
          sweep(f, std::nullopt, WeightSpec::unweighted(), q + 1, n_to, 0.0);
      ErrorTable con = sweep(f, ShapeConstraint(q, {}), WeightSpec::unweighted(),
                             q + 1, n_to, 0.0);
      rep.tables.emplace_back(function_label(fj) + "|unconstrained", unc);
      rep.tables.emplace_back(function_label(fj) + "|q=" + std::to_string(q), con);
      for (size_t i = 0; i < con.rows.size(); ++i)
        if (con.rows[i].value < unc.rows[i].value - 1e-9) rowwise_ok = false;
      for (double alpha : cfg.at("alphas").get<std::vector<double>>()) {
        double num = sup_scaled(con, alpha);
        double den = sup_scaled(unc, alpha);
        double ratio = den > 0 ? num / den : 0.0;
        matrix.push_back({{"function", function_label(fj)},
                          {"alpha", alpha},
                          {"sup_constrained_scaled", num},
                          {"sup_unconstrained_scaled", den},
                          {"ratio", ratio}});
        if (ratio > cap) ok = false;
      }
    }
    rep.assertions.push_back({"ratio_below_empirical_cap_q" + std::to_string(q), ok,
                              {{"empirical_cap", cap}, {"cases", matrix}}});
    rep.assertions.push_back({"constrained_dominates_rowwise_q" + std::to_string(q),
                              rowwise_ok,
                              {{"slack", 1e-9}}});
  }
  return rep;
}

// ------------------------------------------------------- pointwise-thm21 ---

inline ScenarioReport scenario_pointwise_thm21(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "pointwise-thm21";
  rep.config = cfg;
  double cap = cfg.at("ratio_cap").get<double>();
  for (const auto& case_cfg : cfg.at("cases")) {
    int r = case_cfg.at("r").get<int>();
    TestFunction f = function_from_json(case_cfg.at("function"));
    TestFunction fr = f.derivative_function(r);
    nlohmann::json levels = nlohmann::json::array();
    double rmin = 1e300, rmax = 0.0;
    for (int n = cfg.at("n_from").get<int>(); n <= cfg.at("n_to").get<int>(); ++n) {
      OmegaLadder lad = omega2_ladder(fr, 1.0 / n, cfg.at("ladder_points").get<int>());
      auto weight = [lad, n, r](double x) {
        double t = phi(x) / n;
        return std::max(std::pow(t, r) * lad(t), 1e-14);
      };
      ApproxResult sol = best_constrained(f, n, ShapeConstraint(1, {}),
                                          WeightSpec::custom(weight, r));
      levels.push_back({{"n", n}, {"ratio", sol.error}, {"converged", sol.converged}});
      rmin = std::min(rmin, sol.error);
      rmax = std::max(rmax, sol.error);
    }
    bool ok = rmax / std::max(rmin, 1e-300) < cap;
    rep.assertions.push_back(
        {"pointwise_ratio_bounded_r" + std::to_string(r), ok,
         {{"function", function_label(case_cfg.at("function"))},
          {"max_over_min", rmax / std::max(rmin, 1e-300)},
          {"empirical_cap", cap},
          {"levels", levels}}});
  }
  rep.diagnostics["note"] =
      "ratio is the minimax value of |f-P| / ((phi/n)^r omega_2(f^(r), phi/n)) "
      "over nondecreasing P; functions are chosen with smoothness matching r "
      "so the bound is exercised rather than dominated";
  return rep;
}

// ------------------------------------------------------- inverse-lemma22 ---

inline ScenarioReport scenario_inverse_lemma22(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "inverse-lemma22";
  rep.config = cfg;
  int r = cfg.at("r").get<int>();
  double beta = cfg.at("beta").get<double>();
  TestFunction f = get_function("shifted_power",
                                {{"r", std::to_string(r)}, {"beta", std::to_string(beta)}});
  int N = cfg.at("n_from").get<int>();
  int n_to = cfg.at("n_to").get<int>();

  // Near-best polynomials in the rho_n^(r+beta) gauge.
  double hyp_c = 0.0;
  nlohmann::json hyp = nlohmann::json::array();
  for (int n = N; n <= n_to; ++n) {
    auto weight = [n, r, beta](double x) { return std::pow(rho_n(x, n), r + beta); };
    ApproxResult sol =
        best_constrained(f, n, std::nullopt, WeightSpec::custom(weight, 0.0));
    hyp_c = std::max(hyp_c, sol.error);
    hyp.push_back({{"n", n}, {"gauge_error", sol.error}});
  }
  bool hyp_ok = hyp_c <= cfg.at("hypothesis_cap").get<double>();
  rep.assertions.push_back({"gauge_hypothesis_bounded", hyp_ok,
                            {{"constant", hyp_c},
                             {"empirical_cap", cfg.at("hypothesis_cap").get<double>()},
                             {"per_degree", hyp}}});

  // Inverse direction: omega_2(f^(r), t) <= C' (t^beta + t^2 E_{r+2}(f)).
  ApproxResult base = best_unconstrained(f, r + 2, 1e-10);
  TestFunction fr = f.derivative_function(r);
  double cprime = 0.0;
  nlohmann::json ladder = nlohmann::json::array();
  for (int j = 1; j <= cfg.at("ladder_points").get<int>(); ++j) {
    double t = std::pow(2.0, -j);
    double w2 = omega_k(fr, 2, t);
    double rhs = std::pow(t, beta) + t * t * base.error;
    double c = w2 / rhs;
    cprime = std::max(cprime, c);
    ladder.push_back({{"t", t}, {"omega2", w2}, {"required_constant", c}});
  }
  bool inv_ok = cprime <= cfg.at("inverse_cap").get<double>();
  rep.assertions.push_back({"inverse_modulus_bounded", inv_ok,
                            {{"smallest_working_constant", cprime},
                             {"empirical_cap", cfg.at("inverse_cap").get<double>()},
                             {"E_r_plus_2", base.error},
                             {"ladder", ladder}}});
  return rep;
}

// ------------------------------------------------------ thm31-comonotone ---

inline ScenarioReport scenario_thm31(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "thm31-comonotone";
  rep.config = cfg;
  double cap = cfg.at("cap").get<double>();
  int n_to = cfg.at("n_to").get<int>();
  nlohmann::json table = nlohmann::json::array();
  bool nonexceptional_ok = true;
  for (double y1 : cfg.at("y1s").get<std::vector<double>>()) {
    nlohmann::json fj{{"id", "trunc"},
                      {"params", {{"m", "2"}, {"a", std::to_string(y1)}}}};
    TestFunction f = function_from_json(fj);
    ErrorTable unc = sweep(f, std::nullopt, WeightSpec::unweighted(), 1, n_to, 0.0);
    ErrorTable con =
        sweep(f, ShapeConstraint(1, {y1}), WeightSpec::unweighted(), 2, n_to, 0.0);
    rep.tables.emplace_back("trunc m=2 a=" + std::to_string(y1) + "|unconstrained", unc);
    rep.tables.emplace_back("trunc m=2 a=" + std::to_string(y1) + "|comonotone", con);
    for (double alpha : cfg.at("alphas").get<std::vector<double>>()) {
      // Rescale so the hypothesis n^alpha E_n(f) >= 1 holds on the window.
      double mn = 1e300;
      for (const ErrorRow& r : unc.rows)
        mn = std::min(mn, std::pow(r.n, alpha) * r.value);
      double lambda = mn > 0 ? 1.0 / mn : 1.0;
      std::optional<int> n_star;
      double supc = 0.0;
      for (size_t i = 0; i < con.rows.size(); ++i) {
        double scaled = lambda * std::pow(con.rows[i].n, alpha) * con.rows[i].value;
        supc = std::max(supc, scaled);
        bool tail_ok = true;
        for (size_t j = i; j < con.rows.size(); ++j)
          if (lambda * std::pow(con.rows[j].n, alpha) * con.rows[j].value > cap)
            tail_ok = false;
        if (tail_ok && !n_star) n_star = con.rows[i].n;
      }
      bool exceptional = in_exceptional_set(alpha, 1);
      if (!exceptional && !n_star) nonexceptional_ok = false;
      table.push_back({{"y1", y1},
                       {"alpha", alpha},
                       {"exceptional", exceptional},
                       {"normalization", lambda},
                       {"sup_scaled_comonotone", supc},
                       {"n_star_candidate", n_star ? nlohmann::json(*n_star)
                                                   : nlohmann::json()}});
    }
  }
  rep.assertions.push_back({"nonexceptional_alphas_bounded", nonexceptional_ok,
                            {{"empirical_cap", cap}, {"cases", table}}});
  rep.diagnostics["note"] =
      "n_star_candidate is the first window degree from which all scaled "
      "comonotone errors stay below the cap; the rule is a window heuristic";
  return rep;
}

// -------------------------------------------------------- q3-divergence ---

inline ScenarioReport scenario_q3_divergence(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "q3-divergence";
  rep.config = cfg;
  int n_lo = cfg.at("n_lo").get<int>();
  int n_hi = cfg.at("n_hi").get<int>();
  nlohmann::json members = nlohmann::json::array();
  double growth_lo = 0.0, growth_hi = 0.0;
  bool unbounded_trend = false, unconstrained_ok = true;
  for (const auto& fj : cfg.at("members")) {
    TestFunction f = function_from_json(fj);
    ErrorTable con =
        sweep(f, ShapeConstraint(3, {0.0}), WeightSpec::unweighted(), n_lo, n_hi, 1.0);
    ErrorTable unc = sweep(f, std::nullopt, WeightSpec::unweighted(), n_lo, n_hi,
                           static_cast<double>(f.sobolev_order));
    rep.tables.emplace_back(function_label(fj) + "|q=3 Y1={0}", con);
    rep.tables.emplace_back(function_label(fj) + "|unconstrained", unc);
    double first = con.rows.front().scaled;
    double last = con.rows.back().scaled;
    double umin = 1e300, umax = 0.0;
    for (const ErrorRow& r : unc.rows) {
      umin = std::min(umin, r.scaled);
      umax = std::max(umax, r.scaled);
    }
    if (umax / std::max(umin, 1e-300) > cfg.at("bounded_ratio_cap").get<double>())
      unconstrained_ok = false;
    bool is_growth_member = fj.at("id") == "abs";
    if (is_growth_member) {
      growth_lo = first;
      growth_hi = last;
      if (last > first) unbounded_trend = true;
    }
    members.push_back({{"member", function_label(fj)},
                       {"scaled_constrained_first", first},
                       {"scaled_constrained_last", last},
                       {"trend_ratio", first > 0 ? last / first : 0.0},
                       {"unconstrained_scaled_min", umin},
                       {"unconstrained_scaled_max", umax},
                       {"sobolev_order", f.sobolev_order}});
  }
  rep.assertions.push_back(
      {"constrained_scaled_error_grows", unbounded_trend,
       {{"member", "abs"},
        {"n_low", n_lo},
        {"n_high", n_hi},
        {"value_low", growth_lo},
        {"value_high", growth_hi}}});
  rep.assertions.push_back({"unconstrained_scaled_error_bounded", unconstrained_ok,
                            {{"bounded_ratio_cap",
                              cfg.at("bounded_ratio_cap").get<double>()},
                             {"members", members}}});
  return rep;
}

// ----------------------------------------------------------- op117-probe ---

inline ScenarioReport scenario_op117(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "op117-probe";
  rep.config = cfg;
  double lambda = cfg.at("lambda").get<double>();
  int n_from = cfg.at("n_from").get<int>();
  int n_to = cfg.at("n_to").get<int>();
  TestFunction f =
      get_function("op117_pert", {{"lambda", std::to_string(lambda)}});
  ShapeConstraint c(2, {0.5, 0.0, -0.5});

  ErrorTable unc = sweep(f, std::nullopt, WeightSpec::unweighted(), n_from, n_to, 4.0);
  double scale = unc.sup_scaled > 0 ? 1.0 / unc.sup_scaled : 1.0;

  ErrorTable con = sweep(f, c, WeightSpec::unweighted(), n_from, n_to, 4.0);
  for (ErrorRow& r : con.rows) {
    r.value *= scale;
    r.scaled *= scale;
    r.lower_bound *= scale;
  }
  con.sup_scaled *= scale;
  rep.tables.emplace_back("op117_pert normalized|coconvex", con);

  bool p6 = false;
  for (const ErrorRow& r : con.rows)
    if (r.n == 6 && r.converged) p6 = true;
  rep.assertions.push_back(
      {"degree6_constrained_polynomial_constructed", p6,
       {{"n4_error_at_6", con.rows.empty() ? 0.0 : con.rows.front().scaled}}});
  double cap = cfg.at("cap").get<double>();
  rep.assertions.push_back({"scaled_coconvex_error_recorded",
                            con.sup_scaled <= cap,
                            {{"sup_n4_error", con.sup_scaled},
                             {"empirical_cap", cap},
                             {"normalization", scale}}});
  rep.diagnostics["note"] =
      "f is normalized so sup over the window of n^4 E_n(f) equals 1";
  return rep;
}

// ------------------------------------------------------------ thm13-ratio ---

inline ScenarioReport scenario_thm13(const nlohmann::json& cfg) {
  ScenarioReport rep;
  rep.id = "thm13-ratio";
  rep.config = cfg;
  double cap = cfg.at("cap").get<double>();
  int n_from = cfg.at("n_from").get<int>();
  int n_to = cfg.at("n_to").get<int>();
  bool found_all = true;
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& fj : cfg.at("functions")) {
    TestFunction f = function_from_json(fj);
    for (double alpha : cfg.at("alphas").get<std::vector<double>>()) {
      ErrorTable num = sweep(f, ShapeConstraint(1, {}), WeightSpec::phi_alpha(alpha),
                             n_from, n_to, alpha);
      ErrorTable den = sweep(f, std::nullopt, WeightSpec::delta_alpha(alpha, 1),
                             n_from, n_to, alpha);
      double den_sup = 0.0;
      for (const ErrorRow& r : den.rows) den_sup = std::max(den_sup, r.scaled);
      nlohmann::json ratios = nlohmann::json::array();
      std::optional<int> n_star;
      for (const ErrorRow& lead : num.rows) {
        double num_sup = 0.0;
        for (const ErrorRow& r : num.rows)
          if (r.n >= lead.n) num_sup = std::max(num_sup, r.scaled);
        double ratio = den_sup > 0 ? num_sup / den_sup : 0.0;
        ratios.push_back({{"trial_n_star", lead.n}, {"ratio", ratio}});
        if (!n_star && ratio <= cap) n_star = lead.n;
      }
      if (!n_star) found_all = false;
      cases.push_back({{"function", function_label(fj)},
                       {"alpha", alpha},
                       {"denominator_sup", den_sup},
                       {"ratios", ratios},
                       {"n_star_candidate",
                        n_star ? nlohmann::json(*n_star) : nlohmann::json()}});
      rep.tables.emplace_back(function_label(fj) + "|interpolatory comonotone a=" +
                                  std::to_string(alpha),
                              num);
    }
  }
  rep.assertions.push_back({"threshold_exists_below_empirical_cap", found_all,
                            {{"empirical_cap", cap}, {"cases", cases}}});
  return rep;
}

}  // namespace scenario_detail

inline std::vector<std::string> scenario_names() {
  return {"chain",          "qmon-lift",       "compare-q12",
          "pointwise-thm21", "inverse-lemma22", "thm31-comonotone",
          "q3-divergence",  "op117-probe",     "thm13-ratio"};
}

inline nlohmann::json scenario_default_config(const std::string& name) {
  using nlohmann::json;
  if (name == "chain")
    return {{"functions", scenario_detail::monotone_defaults()},
            {"alphas", {0.5, 1.0, 2.0}},
            {"n_from", 2},
            {"n_to", 16},
            {"slack", 1e-8}};
  if (name == "qmon-lift")
    return {{"function", {{"id", "exp"}}}, {"qs", {1, 2, 3}}, {"n_to", 14}};
  if (name == "compare-q12")
    return {{"functions",
             {{"1", {{{"id", "exp"}}, {{"id", "xabsx"}}}},
              {"2", {{{"id", "abs"}}, {{"id", "trunc"}, {"params", {{"m", "2"}}}}}}}},
            {"alphas", {0.5, 1.0, 2.0, 3.0}},
            {"n_to", 24},
            {"cap", 50.0}};
  if (name == "pointwise-thm21")
    return {{"cases",
             {{{"r", 1}, {"function", {{"id", "trunc"}, {"params", {{"m", "2"}}}}}},
              {{"r", 2}, {"function", {{"id", "trunc"}, {"params", {{"m", "3"}}}}}}}},
            {"n_from", 4},
            {"n_to", 16},
            {"ladder_points", 24},
            {"ratio_cap", 10.0}};
  if (name == "inverse-lemma22")
    return {{"r", 1},          {"beta", 0.7},        {"n_from", 4},
            {"n_to", 18},      {"ladder_points", 10}, {"hypothesis_cap", 100.0},
            {"inverse_cap", 1000.0}};
  if (name == "thm31-comonotone")
    return {{"y1s", {0.0, 0.9, 0.99}},
            {"alphas", {1.5, 2.0, 3.0}},
            {"n_to", 24},
            {"cap", 50.0}};
  if (name == "q3-divergence")
    return {{"members",
             {{{"id", "q3_family"}, {"params", {{"y1", "0"}}}},
              {{"id", "abs"}, {"params", {{"a", "0"}}}},
              {{"id", "trunc"}, {"params", {{"m", "2"}, {"a", "0"}}}}}},
            {"n_lo", 8},
            {"n_hi", 24},
            {"bounded_ratio_cap", 10.0}};
  if (name == "op117-probe")
    return {{"lambda", 0.5}, {"n_from", 6}, {"n_to", 16}, {"cap", 1000.0}};
  if (name == "thm13-ratio")
    return {{"functions", {{{"id", "exp"}}, {{"id", "trunc"}, {"params", {{"m", "2"}}}}}},
            {"alphas", {1.0, 2.0, 3.0}},
            {"n_from", 2},
            {"n_to", 20},
            {"cap", 50.0}};
  throw ConfigError("unknown scenario '" + name + "'");
}

inline ScenarioReport run_scenario(const std::string& name,
                                   const nlohmann::json& user_config = {}) {
  nlohmann::json cfg =
      scenario_detail::merge_config(scenario_default_config(name), user_config);
  using namespace scenario_detail;
  if (name == "chain") return scenario_chain(cfg);
  if (name == "qmon-lift") return scenario_qmon_lift(cfg);
  if (name == "compare-q12") return scenario_compare_q12(cfg);
  if (name == "pointwise-thm21") return scenario_pointwise_thm21(cfg);
  if (name == "inverse-lemma22") return scenario_inverse_lemma22(cfg);
  if (name == "thm31-comonotone") return scenario_thm31(cfg);
  if (name == "q3-divergence") return scenario_q3_divergence(cfg);
  if (name == "op117-probe") return scenario_op117(cfg);
  if (name == "thm13-ratio") return scenario_thm13(cfg);
  throw ConfigError("unknown scenario '" + name + "'");
}

inline nlohmann::json scenario_report_to_json(const ScenarioReport& rep) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "scenario";
  j["inputs"] = {{"name", rep.id}, {"config", rep.config}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [label, table] : rep.tables) {
    nlohmann::json t = table_to_json(table);
    t["label"] = label;
    rows.push_back(std::move(t));
  }
  j["rows"] = std::move(rows);
  nlohmann::json asserts = nlohmann::json::array();
  for (const Assertion& a : rep.assertions)
    asserts.push_back(
        {{"name", a.name}, {"passed", a.passed}, {"evidence", a.evidence}});
  j["assertions"] = std::move(asserts);
  j["diagnostics"] = rep.diagnostics;
  return j;
}

}  // namespace spa
