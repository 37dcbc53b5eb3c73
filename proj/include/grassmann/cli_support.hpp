#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "grassmann/checks.hpp"

namespace grassmann {

inline std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r\n"));
  s.erase(s.find_last_not_of(" \t\r\n") + 1);
  return s;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

// "[[1,0],[0,t1],[1,1]]" with entries parsed as rational functions
inline std::vector<Vector> parse_points(std::string_view text, const std::vector<std::string>& names) {
  std::vector<Vector> rows;
  int depth = 0;
  std::string cell;
  Vector row;
  for (char ch : text) {
    if (ch == '[') {
      if (++depth > 2) throw ParseError("points nest at most two levels");
      if (depth == 2) row.clear();
      continue;
    }
    if (ch == ']') {
      if (depth == 2) {
        if (trim(cell).empty()) throw ParseError("empty coordinate");
        row.push_back(parse_rational_function(trim(cell), names));
        cell.clear();
        rows.push_back(row);
      }
      if (--depth < 0) throw ParseError("unbalanced ']'");
      continue;
    }
    if (ch == ',' && depth == 2) {
      if (trim(cell).empty()) throw ParseError("empty coordinate");
      row.push_back(parse_rational_function(trim(cell), names));
      cell.clear();
      continue;
    }
    if (depth == 2)
      cell += ch;
    else if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',')
      throw ParseError(std::string("unexpected '") + ch + "' in point list");
  }
  if (depth != 0) throw ParseError("unbalanced '['");
  if (rows.empty()) throw ParseError("no points");
  return rows;
}

// "D(t1) = t1^2; D(t2) = 1"
inline std::vector<RationalFunction> parse_derivation_images(const std::string& text, const std::vector<std::string>& names) {
  return Derivation::parse(split(text, ';'), names).images();
}

// key = value lines; a [check_id] header scopes the following keys to that check
struct RunConfig {
  std::map<std::string, std::string> global;
  std::map<std::string, std::map<std::string, std::string>> per_check;

  static RunConfig parse(std::istream& in) {
    RunConfig cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = trim(line.substr(0, line.find('#')));
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ParseError("line " + std::to_string(lineno) + ": unterminated section");
        section = trim(line.substr(1, line.size() - 2));
        if (!find_check(section)) throw UnknownCheck(section);
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
      std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
      (section.empty() ? cfg.global : cfg.per_check[section])[key] = value;
    }
    return cfg;
  }

  static RunConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse(in);
  }
};

inline void apply_setting(CheckOptions& o, const std::string& key, const std::string& value) {
  try {
    if (key == "seed")
      o.seed = std::stoull(value);
    else if (key == "trials")
      o.trials = std::stoi(value);
    else if (key == "tol")
      o.tolerance = std::stod(value);
    else if (key == "vars")
      o.vars = std::stoul(value);
    else if (key == "coeff_bound")
      o.coeff_bound = std::stol(value);
    else if (key == "specializations")
      o.specializations = std::stoi(value);
    else if (key == "avoid_radius")
      o.avoid_radius = std::stod(value);
    else if (key == "derivation")
      o.derivation = parse_derivation_images(value, default_variable_names(o.vars));
    else
      throw ParseError("unknown setting '" + key + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad value for " + key + ": " + value);
  }
}

// vars first, so a derivation sees the right variable names
inline CheckOptions apply_settings(CheckOptions o, const std::map<std::string, std::string>& kv) {
  if (auto it = kv.find("vars"); it != kv.end()) apply_setting(o, it->first, it->second);
  for (const auto& [k, v] : kv)
    if (k != "vars" && k != "precision") apply_setting(o, k, v);
  return o;
}

}  // namespace grassmann
