#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <thread>

#include "grassmann/checks.hpp"

using namespace grassmann;

namespace {

constexpr double kTolerance = 1e-10;

struct Criterion {
  std::string name;
  std::vector<std::pair<std::string, int>> checks;  // id and trials; 0 keeps the catalog default
  unsigned precision = 50;
  double seconds = 0;
  bool extra_ratio = false;  // the scalar slack diagnostic must read 1
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"claim1", {{"claim1", 100}}, 50, 5},
      {"kernel", {{"tau12d_kernel", 100}}, 50, 5},
      {"example_four_term", {{"example_four_term", 1}}, 50, 60},
      {"gon5term_4pt", {{"gon5term", 50}, {"lemma_4pt", 50}}, 50, 120},
      {"claim3a", {{"claim3a", 25}}, 50, 60},
      {"claim3b", {{"claim3b", 5}}, 50, 300, true},
      {"triple_ratio_factorization", {{"triple_ratio_factorization", 100}}, 50, 10},
      {"remark_alld", {{"remark_alld_1", 50}, {"remark_alld_3", 50}, {"remark_alld_2", 50}}, 50, 60},
      {"relator_suite", {{"relators_beta2D", 100}, {"relator_four_term_beta2", 100}, {"relator_22term", 25}}, 50, 120},
      {"numeric_oracles", {{"numeric_oracles", 1}}, 30, 60},
      {"full_suite", {}, 50, 600},
  };
  return all;
}

bool run(const Criterion& c) {
  CheckOptions opt;
  opt.seed = 1;
  opt.tolerance = kTolerance;
  opt.precision = c.precision;
  std::vector<std::string> ids;
  std::map<std::string, int> trials;
  if (c.checks.empty()) {
    ids = all_check_ids();
  } else {
    for (const auto& [id, n] : c.checks) {
      ids.push_back(id);
      trials[id] = n;
    }
  }
  int jobs = int(std::max(1u, std::thread::hardware_concurrency()));
  auto start = std::chrono::steady_clock::now();
  auto reports = run_checks(
      ids,
      [&](const std::string& id) {
        CheckOptions o = opt;
        if (auto it = trials.find(id); it != trials.end() && it->second > 0) o.trials = it->second;
        return o;
      },
      c.precision, jobs);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = secs <= c.seconds;
  std::string detail;
  for (const auto& r : reports) {
    bool pass = r.status == Status::Pass;
    if (c.extra_ratio) pass = pass && r.ratio && *r.ratio == "1";
    ok = ok && pass;
    if (!pass || c.checks.size() > 1 || c.checks.empty()) {
      detail += "; " + r.id + " " + to_string(r.status) + " " + std::to_string(r.passed) + "/" + std::to_string(r.trials);
      if (r.ratio && *r.ratio != "1") detail += " ratio " + *r.ratio;
      if (!pass && !r.message.empty()) detail += " (" + r.message + ")";
    } else {
      detail += "; " + std::to_string(r.passed) + "/" + std::to_string(r.trials) + " trials";
      if (r.max_residual) detail += ", max residual " + *r.max_residual;
      if (c.extra_ratio) detail += ", ratio " + r.ratio.value_or("unknown");
    }
  }
  if (c.checks.empty()) {
    int passing = 0;
    for (const auto& r : reports) passing += r.status == Status::Pass;
    detail = "; " + std::to_string(passing) + "/" + std::to_string(reports.size()) + " checks PASS" +
             (passing == int(reports.size()) ? "" : detail);
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.1f s of %.0f s", secs, c.seconds);
  std::cout << (ok ? "PASS " : "FAIL ") << c.name << "  " << timing << detail << std::endl;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  bool ok = true;
  for (const auto& w : wanted) {
    bool known = false;
    for (const auto& c : criteria()) known = known || c.name == w;
    if (!known) {
      std::cerr << "unknown criterion '" << w << "'\n";
      return 2;
    }
  }
  for (const auto& c : criteria())
    if (wanted.empty() || std::find(wanted.begin(), wanted.end(), c.name) != wanted.end()) ok = run(c) && ok;
  return ok ? 0 : 1;
}
