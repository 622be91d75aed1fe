// spa: shape-constrained polynomial approximation toolkit.
//
// Subcommands: approx, constrained, sweep, classify, tables, scenario.
// Exit codes: 0 success, 1 scenario assertion failure, 2 configuration error,
// 3 solver failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spa/catalog.hpp"
#include "spa/constrained.hpp"
#include "spa/remez.hpp"
#include "spa/report.hpp"
#include "spa/scenarios.hpp"
#include "spa/sweep.hpp"
#include "spa/theorems.hpp"

namespace {

using nlohmann::json;

spa::ParamMap parse_params(const std::vector<std::string>& kvs) {
  spa::ParamMap out;
  for (const std::string& kv : kvs) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw spa::ConfigError("--param expects key=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

std::vector<double> parse_ys(const std::string& s) {
  std::vector<double> ys;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      ys.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw spa::ConfigError("--ys expects a comma-separated list, got '" + s + "'");
    }
  }
  return ys;
}

spa::WeightSpec make_weight(const std::string& kind, double alpha, int n, bool interp) {
  spa::WeightSpec w;
  if (kind == "none")
    w = spa::WeightSpec::unweighted();
  else if (kind == "phi")
    w = spa::WeightSpec::phi_alpha(alpha);
  else if (kind == "delta")
    w = spa::WeightSpec::delta_alpha(alpha, n);
  else
    throw spa::ConfigError("--weight must be none, phi or delta");
  if (interp) w.interpolate_left = w.interpolate_right = true;
  return w;
}

json solve_report(const std::string& command, const json& inputs,
                  const spa::ApproxResult& r, double alpha) {
  json j;
  j["schema_version"] = spa::kSchemaVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  int n = inputs.at("n").get<int>();
  j["rows"] = json::array({{{"n", n},
                            {"value", r.error},
                            {"scaled", std::pow(n, alpha) * r.error},
                            {"lower_bound", r.lower_bound},
                            {"converged", r.converged}}});
  j["assertions"] = json::array();
  json diag{{"iterations", r.iterations}};
  if (r.alternation) {
    diag["alternation"] = {{"count", r.alternation->points.size()},
                           {"valid", r.alternation->valid},
                           {"points", r.alternation->points},
                           {"values", r.alternation->values}};
    if (!r.alternation->defect.empty())
      diag["alternation"]["defect"] = r.alternation->defect;
  }
  if (r.active_set) {
    diag["active_residual_nodes"] = r.active_set->residual_nodes.size();
    diag["active_shape_nodes"] = r.active_set->shape_nodes.size();
  }
  j["diagnostics"] = std::move(diag);
  return j;
}

void emit_solver_output(const json& report, const std::string& out) {
  if (out == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  const json& row = report["rows"][0];
  if (out == "csv") {
    std::cout << "n,value,scaled,lower_bound,converged\n";
    std::cout << row["n"] << ',' << row["value"].dump() << ',' << row["scaled"].dump()
              << ',' << row["lower_bound"].dump() << ','
              << (row["converged"].get<bool>() ? 1 : 0) << "\n";
    return;
  }
  std::cout << report["command"].get<std::string>() << " "
            << report["inputs"].dump() << "\n";
  std::cout << "  value       = " << row["value"].dump() << "\n";
  std::cout << "  lower_bound = " << row["lower_bound"].dump() << "\n";
  std::cout << "  converged   = " << (row["converged"].get<bool>() ? "yes" : "no")
            << "\n";
  if (report["diagnostics"].contains("alternation")) {
    const json& alt = report["diagnostics"]["alternation"];
    std::cout << "  alternations: " << alt["count"] << " (valid "
              << (alt["valid"].get<bool>() ? "yes" : "no") << ")\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"shape-constrained polynomial approximation toolkit"};
  app.require_subcommand(1);

  std::string f_id, out = "text", weight = "none", ys_str, config_path, plot_path;
  std::string scenario_name;
  std::vector<std::string> params;
  int n = 8, q = 1, n_from = 2, n_to = 12, N = 1, s = 0;
  double alpha = 0.0, tol = 1e-9;
  bool interp = false;
  double cap = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* a = app.add_subcommand("approx", "best uniform approximation");
  a->add_option("--f", f_id, "catalog function id")->required();
  a->add_option("--param", params, "function parameter key=value");
  a->add_option("--n", n, "polynomial space dimension (degree < n)")->required();
  a->add_option("--alpha", alpha, "weight exponent");
  a->add_option("--weight", weight, "none, phi or delta");
  a->add_option("--tol", tol, "solver tolerance");
  a->add_flag("--interp", interp, "force endpoint interpolation");
  add_common(a);

  CLI::App* c = app.add_subcommand("constrained", "best co-q-monotone approximation");
  c->add_option("--f", f_id, "catalog function id")->required();
  c->add_option("--param", params, "function parameter key=value");
  c->add_option("--n", n, "polynomial space dimension")->required();
  c->add_option("--q", q, "order of monotonicity")->required();
  c->add_option("--ys", ys_str, "change points, decreasing, e.g. \"0.5,0,-0.5\"");
  c->add_option("--alpha", alpha, "weight exponent");
  c->add_option("--weight", weight, "none, phi or delta");
  c->add_option("--tol", tol, "solver tolerance");
  c->add_flag("--interp", interp, "force endpoint interpolation");
  add_common(c);

  CLI::App* w = app.add_subcommand("sweep", "degree sweep");
  w->add_option("--f", f_id, "catalog function id")->required();
  w->add_option("--param", params, "function parameter key=value");
  w->add_option("--q", q, "order of monotonicity (omit for unconstrained)");
  w->add_option("--ys", ys_str, "change points, decreasing");
  w->add_option("--n-from", n_from, "first degree")->required();
  w->add_option("--n-to", n_to, "last degree")->required();
  w->add_option("--alpha", alpha, "scaling exponent (and weight exponent)");
  w->add_option("--weight", weight, "none, phi or delta");
  w->add_option("--cap", cap, "cap for the first-bounded-degree estimate");
  w->add_option("--tol", tol, "solver tolerance");
  w->add_option("--plot", plot_path, "write a log-log SVG plot");
  add_common(w);

  CLI::App* cl = app.add_subcommand("classify", "threshold regime for (alpha, N, s)");
  cl->add_option("--alpha", alpha, "exponent")->required();
  cl->add_option("--N", N, "first degree of the hypothesis window")->required();
  cl->add_option("--s", s, "number of change points")->required();
  add_common(cl);

  CLI::App* tb = app.add_subcommand("tables", "render the regime table for s");
  tb->add_option("--s", s, "number of change points")->required();
  add_common(tb);

  CLI::App* sc = app.add_subcommand("scenario", "run a named experiment scenario");
  sc->add_option("name", scenario_name, "scenario name")->required();
  sc->add_option("--config", config_path, "JSON config overriding the defaults");
  add_common(sc);

  CLI11_PARSE(app, argc, argv);

  if (a->parsed()) {
    spa::TestFunction f = spa::get_function(f_id, parse_params(params));
    json inputs{{"f", f_id}, {"n", n}, {"weight", weight}, {"alpha", alpha},
                {"tol", tol}};
    spa::ApproxResult r;
    if (weight == "none" && !interp) {
      r = spa::best_unconstrained(f, n, tol);
    } else {
      r = spa::best_constrained(f, n, std::nullopt,
                                make_weight(weight, alpha, n, interp), tol);
    }
    emit_solver_output(solve_report("approx", inputs, r, alpha), out);
    return 0;
  }

  if (c->parsed()) {
    spa::TestFunction f = spa::get_function(f_id, parse_params(params));
    spa::ShapeConstraint con(q, parse_ys(ys_str));
    json inputs{{"f", f_id},
                {"n", n},
                {"q", q},
                {"ys", con.change_points},
                {"weight", weight},
                {"alpha", alpha},
                {"tol", tol}};
    spa::ApproxResult r =
        spa::best_constrained(f, n, con, make_weight(weight, alpha, n, interp), tol);
    emit_solver_output(solve_report("constrained", inputs, r, alpha), out);
    return 0;
  }

  if (w->parsed()) {
    spa::TestFunction f = spa::get_function(f_id, parse_params(params));
    std::optional<spa::ShapeConstraint> con;
    if (w->count("--q") > 0) con = spa::ShapeConstraint(q, parse_ys(ys_str));
    spa::WeightSpec ws = make_weight(weight, alpha, n_to, interp);
    std::optional<double> cap_opt;
    if (w->count("--cap")) cap_opt = cap;
    spa::ErrorTable t = spa::sweep(f, con, ws, n_from, n_to, alpha, cap_opt, tol);
    if (!plot_path.empty()) spa::write_svg_loglog(plot_path, {t});
    if (out == "json") {
      json j;
      j["schema_version"] = spa::kSchemaVersion;
      j["command"] = "sweep";
      j["inputs"] = {{"f", f_id},        {"weight", weight}, {"alpha", alpha},
                     {"n_from", n_from}, {"n_to", n_to},     {"tol", tol}};
      if (con) {
        j["inputs"]["q"] = con->q;
        j["inputs"]["ys"] = con->change_points;
      }
      j["rows"] = spa::rows_to_json(t.rows);
      j["assertions"] = json::array();
      j["diagnostics"] = {{"sup_scaled", t.sup_scaled}};
      if (t.n_star_candidate) j["diagnostics"]["n_star_candidate"] = *t.n_star_candidate;
      std::cout << j.dump(2) << "\n";
    } else if (out == "csv") {
      std::cout << spa::table_to_csv(t);
    } else {
      std::cout << spa::table_to_text(t);
    }
    return 0;
  }

  if (cl->parsed()) {
    spa::Regime r = spa::classify_regime(alpha, N, s);
    if (out == "json") {
      json j{{"schema_version", spa::kSchemaVersion},
             {"command", "classify"},
             {"inputs", {{"alpha", alpha}, {"N", N}, {"s", s}}},
             {"rows", json::array({{{"regime", spa::to_string(r)}}})},
             {"assertions", json::array()},
             {"diagnostics", json::object()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << spa::to_string(r) << "\n";
    }
    return 0;
  }

  if (tb->parsed()) {
    spa::RegimeTable t = spa::render_table(s);
    if (out == "json") {
      json j{{"schema_version", spa::kSchemaVersion},
             {"command", "tables"},
             {"inputs", {{"s", s}}},
             {"rows", spa::regime_table_to_json(t)["rows_ascending"]},
             {"assertions", json::array()},
             {"diagnostics",
              {{"row_convention",
                t.half_alpha_rows ? "ceil(alpha/2)" : "ceil(alpha)"}}}};
      std::cout << j.dump(2) << "\n";
    } else if (out == "csv") {
      std::cout << spa::regime_table_to_csv(t);
    } else {
      std::cout << spa::regime_table_to_text(t);
    }
    return 0;
  }

  if (sc->parsed()) {
    json cfg = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw spa::ConfigError("cannot read config file " + config_path);
      in >> cfg;
    }
    spa::ScenarioReport rep = spa::run_scenario(scenario_name, cfg);
    json j = spa::scenario_report_to_json(rep);
    if (out == "json") {
      std::cout << j.dump(2) << "\n";
    } else if (out == "csv") {
      std::cout << "assertion,passed\n";
      for (const spa::Assertion& asrt : rep.assertions)
        std::cout << asrt.name << ',' << (asrt.passed ? 1 : 0) << "\n";
    } else {
      std::cout << "scenario " << rep.id << "\n";
      for (const spa::Assertion& asrt : rep.assertions)
        std::cout << "  [" << (asrt.passed ? "PASS" : "FAIL") << "] " << asrt.name
                  << "\n";
      for (const auto& [label, table] : rep.tables)
        std::cout << "\n[" << label << "]\n" << spa::table_to_text(table);
    }
    return rep.all_passed() ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const spa::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const spa::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
