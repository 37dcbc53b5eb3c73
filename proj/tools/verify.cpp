#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "grassmann/cli_support.hpp"

using namespace grassmann;
using nlohmann::ordered_json;

namespace {

struct Common {
  std::size_t vars = 1;
  std::string names;
  std::vector<std::string> derivation;

  void attach(CLI::App& app) {
    app.add_option("--vars", vars, "number of field variables t1..tk")->check(CLI::Range(0, int(kMaxVariables)));
    app.add_option("--names", names, "comma separated variable names, overriding t1..tk");
    app.add_option("--derivation", derivation, "D(<var>) = <expr>, repeatable or ';' separated");
  }

  Context context() const {
    std::vector<std::string> n = names.empty() ? default_variable_names(vars) : split(names, ',');
    std::vector<std::string> lines;
    for (const auto& d : derivation)
      for (const auto& part : split(d, ';')) lines.push_back(part);
    return Context(n, Derivation::parse(lines, n));
  }
};

int run_morphism(int argc, char** argv) {
  CLI::App app{"apply a morphism to one configuration", "verify morphism"};
  Common common;
  common.attach(app);
  std::string name, points;
  int n = 0;
  app.add_option("name", name, "d, dprime, tau0_2, tau0_2_expanded, tau0_3, tau0_n, tau1_2, tau1_3, tau1_3_alt, tau2_3")
      ->required();
  app.add_option("--points", points, "[[x,y,..],..], one row per point")->required();
  app.add_option("--n", n, "weight for tau0_n");
  CLI11_PARSE(app, argc, argv);

  Context ctx = common.context();
  Configuration c(parse_points(points, ctx.names()));
  if (name == "d" || name == "dprime") {
    ConfigSum s = name == "d" ? boundary_d(c) : boundary_dprime(c);
    for (const auto& [x, k] : s) {
      std::cout << (k > 0 ? "+" : "") << k << " (";
      for (int i = 0; i < x.size(); ++i) {
        std::cout << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < x.point(i).size(); ++j) std::cout << (j ? "," : "") << ctx.str(x.point(i)[j]);
        std::cout << "]";
      }
      std::cout << ")" << (x.apex_size() ? " mod " + std::to_string(x.apex_size()) + " apex vectors" : "") << "\n";
    }
  } else if (name == "tau0_2") {
    std::cout << serialize(ctx, tau0_2(ctx, c));
  } else if (name == "tau0_2_expanded") {
    std::cout << serialize(ctx, tau0_2_expanded(ctx, c));
  } else if (name == "tau0_3") {
    std::cout << serialize(ctx, tau0_3(ctx, c));
  } else if (name == "tau0_n") {
    std::cout << serialize(ctx, tau0_n(ctx, c, n ? n : c.dim()));
  } else if (name == "tau1_2") {
    std::cout << serialize(ctx, tau1_2(c));
  } else if (name == "tau1_3") {
    std::cout << serialize(ctx, tau1_3(ctx, c));
  } else if (name == "tau1_3_alt") {
    std::cout << serialize(ctx, tau1_3_alt(ctx, c));
  } else if (name == "tau2_3") {
    Tau23Result r = tau2_3_detailed(c);
    std::cout << "terms before merging: " << r.terms << "\n" << serialize(ctx, r.value);
  } else {
    std::cerr << "unknown morphism '" << name << "'\n";
    return 2;
  }
  return 0;
}

int run_relator(int argc, char** argv) {
  CLI::App app{"build a relator and print its differential", "verify relator"};
  Common common;
  common.attach(app);
  std::string name;
  std::vector<std::string> args;
  app.add_option("name", name, "relator name")->required();
  app.add_option("--arg", args, "argument, repeatable");
  CLI11_PARSE(app, argc, argv);

  Context ctx = common.context();
  std::vector<RationalFunction> parsed;
  for (const auto& a : args) parsed.push_back(ctx.parse(a));
  Relator r = make_relator(ctx, name, parsed);
  switch (r.group) {
    case RelatorGroup::B2: {
      TensorElement t = delta2(ctx, r.b2);
      std::cout << serialize(ctx, r.b2) << "delta2: " << (t.is_zero(ctx) ? "0\n" : "\n" + serialize(ctx, t));
      break;
    }
    case RelatorGroup::Beta2: {
      TensorElement t = partial2(ctx, r.beta);
      std::cout << serialize(ctx, r.beta) << "partial2: " << (t.is_zero(ctx) ? "0\n" : "\n" + serialize(ctx, t));
      break;
    }
    case RelatorGroup::Beta3: {
      MidElement m = partial3(ctx, r.beta);
      TensorElement left = mid_left_tensor(ctx, m), right = mid_right_wedge(ctx, m);
      std::cout << serialize(ctx, r.beta) << "partial3 left tier: " << (left.is_zero(ctx) ? "0" : "nonzero")
                << "\npartial3 right tier: " << (right.is_zero(ctx) ? "0" : "nonzero") << "\n";
      break;
    }
  }
  return 0;
}

ordered_json to_json(const CheckReport& r, bool timing) {
  ordered_json j;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["tier"] = to_string(r.tier);
  j["status"] = to_string(r.status);
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["max_residual"] = r.max_residual ? ordered_json(*r.max_residual) : ordered_json(nullptr);
  j["residual_count"] = r.residual_count;
  j["ratio"] = r.ratio ? ordered_json(*r.ratio) : ordered_json(nullptr);
  j["message"] = r.message;
  if (timing) j["runtime_ms"] = std::llround(r.runtime_ms);
  return j;
}

int run_checks_main(int argc, char** argv) {
  CLI::App app{"seeded checks of the complexes, morphisms and relators", "verify"};
  std::vector<std::string> targets;
  CheckOptions cli;
  int trials = 0, jobs = 1;
  std::string json_path, config_path, derivation;
  bool timing = false;
  app.add_option("targets", targets, "all, list, audit, or check ids")->required();
  app.add_option("--seed", cli.seed, "global seed");
  app.add_option("--trials", trials, "trials per check, overriding the defaults")->check(CLI::PositiveNumber);
  app.add_option("--precision", cli.precision, "working precision in decimal digits")->check(CLI::Range(10, 1000));
  app.add_option("--tol", cli.tolerance, "numeric tolerance");
  app.add_option("--vars", cli.vars, "number of field variables")->check(CLI::Range(1, int(kMaxVariables)));
  app.add_option("--coeff-bound", cli.coeff_bound, "bound on random integer coordinates")->check(CLI::PositiveNumber);
  app.add_option("--specializations", cli.specializations, "numeric specializations per comparison");
  app.add_option("--avoid-radius", cli.avoid_radius, "B2 arguments closer than this to 0 or 1 are resampled");
  app.add_option("--derivation", derivation, "pin D(t_i), e.g. 'D(t1) = t1^2; D(t2) = 1'");
  app.add_option("--config", config_path, "key = value settings, with [check_id] sections");
  app.add_option("--json", json_path, "write the JSON report here");
  app.add_option("--jobs", jobs, "checks run concurrently")->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "include runtimes in the JSON report");
  CLI11_PARSE(app, argc, argv);

  if (targets.size() == 1 && targets[0] == "list") {
    for (const auto& c : check_catalog())
      std::cout << c.id << "  [" << to_string(c.tier) << ", " << c.default_trials << " trials]  " << c.anchor << "\n";
    return 0;
  }
  if (targets.size() == 1 && targets[0] == "audit") {
    for (const auto& s : statement_map()) {
      std::cout << s.name << ":";
      for (const auto& id : s.checks) std::cout << " " << id;
      std::cout << "\n";
    }
    auto missing = audit_unbound();
    std::cout << "unbound statements: " << missing.size() << "\n";
    for (const auto& m : missing) std::cout << "  " << m << "\n";
    return missing.empty() ? 0 : 1;
  }

  std::vector<std::string> ids;
  for (const auto& t : targets) {
    if (t == "all") {
      auto all = all_check_ids();
      ids.insert(ids.end(), all.begin(), all.end());
    } else if (!find_check(t)) {
      std::cerr << UnknownCheck(t).what() << "\n";
      return 2;
    } else {
      ids.push_back(t);
    }
  }

  // defaults, then the config file, then explicit flags
  RunConfig cfg;
  if (!config_path.empty()) cfg = RunConfig::load(config_path);
  CheckOptions base;
  if (app.count("--vars")) base.vars = cli.vars;
  if (auto it = cfg.global.find("precision"); it != cfg.global.end()) base.precision = unsigned(std::stoul(it->second));
  base = apply_settings(base, cfg.global);
  if (app.count("--seed")) base.seed = cli.seed;
  if (app.count("--precision")) base.precision = cli.precision;
  if (app.count("--tol")) base.tolerance = cli.tolerance;
  if (app.count("--vars")) base.vars = cli.vars;
  if (app.count("--coeff-bound")) base.coeff_bound = cli.coeff_bound;
  if (app.count("--specializations")) base.specializations = cli.specializations;
  if (app.count("--avoid-radius")) base.avoid_radius = cli.avoid_radius;
  if (trials) base.trials = trials;
  if (!derivation.empty()) base.derivation = parse_derivation_images(derivation, default_variable_names(base.vars));
  if (base.derivation && base.derivation->size() != base.vars)
    throw std::invalid_argument("derivation arity does not match --vars");

  auto options_for = [&](const std::string& id) {
    auto it = cfg.per_check.find(id);
    return it == cfg.per_check.end() ? base : apply_settings(base, it->second);
  };
  std::vector<CheckReport> reports = run_checks(ids, options_for, base.precision, jobs);

  ordered_json report;
  report["seed"] = base.seed;
  report["precision"] = base.precision;
  report["tolerance"] = base.tolerance;
  report["vars"] = base.vars;
  report["numeric_evidence"] = "numeric tiers compare realizations at random specializations; probabilistic by design";
  report["checks"] = ordered_json::array();
  std::map<std::string, int> counts;
  for (const auto& r : reports) {
    report["checks"].push_back(to_json(r, timing));
    ++counts[to_string(r.status)];
    std::cout << to_string(r.status) << "  " << r.id << "  " << r.passed << "/" << r.trials;
    if (r.max_residual) std::cout << "  max residual " << *r.max_residual;
    if (r.ratio && *r.ratio != "1") std::cout << "  ratio " << *r.ratio;
    if (!r.message.empty()) std::cout << "  (" << r.message << ")";
    std::cout << "\n";
  }
  report["summary"] = counts;
  std::cout << "summary:";
  for (const auto& [k, v] : counts) std::cout << " " << k << "=" << v;
  std::cout << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << report.dump(2) << "\n";
  }
  return counts.size() == 1 && counts.count("PASS") ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    std::string first = argc > 1 ? argv[1] : "";
    if (first == "morphism") return run_morphism(argc - 1, argv + 1);
    if (first == "relator") return run_relator(argc - 1, argv + 1);
    return run_checks_main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
