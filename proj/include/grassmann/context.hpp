#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grassmann/derivation.hpp"
#include "grassmann/exact/coprime_base.hpp"

namespace grassmann {

// Everything tied to one field Q(t1..tk) with a fixed derivation.
// Not thread safe; use one per worker.
class Context {
 public:
  explicit Context(std::vector<std::string> names, Derivation d = {})
      : names_(std::move(names)), derivation_(std::move(d)) {
    if (names_.size() > kMaxVariables) throw std::invalid_argument("too many variables");
    if (derivation_.arity() == 0) derivation_ = Derivation(std::vector<RationalFunction>(names_.size()));
    if (derivation_.arity() != names_.size()) throw std::invalid_argument("derivation arity mismatch");
    intern(RationalFunction(1));
  }
  explicit Context(std::size_t k) : Context(default_variable_names(k)) {}
  Context(std::size_t k, Derivation d) : Context(default_variable_names(k), std::move(d)) {}

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Derivation& derivation() const { return derivation_; }
  CoprimeBase& base() { return base_; }
  const CoprimeBase& base() const { return base_; }

  RationalFunction parse(std::string_view text) const { return parse_rational_function(text, names_); }
  std::string str(const RationalFunction& f) const { return to_string(f, names_); }
  std::string str(const Polynomial& p) const { return to_string(p, names_); }

  Legs legs(const RationalFunction& f) { return base_.factor(f); }

  int intern(const RationalFunction& f) {
    auto [it, inserted] = ids_.try_emplace(f, int(values_.size()));
    if (inserted) values_.push_back(f);
    return it->second;
  }
  const RationalFunction& value(int id) const { return values_[std::size_t(id)]; }

  // D(a)/a for an atom; zero for integers and D-constants
  const RationalFunction& dlog_atom(int atom) {
    if (dlog_.size() < base_.size()) {
      dlog_.resize(base_.size());
      dlog_known_.resize(base_.size(), false);
    }
    if (!dlog_known_[std::size_t(atom)]) {
      const auto& a = base_.atom(atom);
      dlog_[std::size_t(atom)] = a.integer ? RationalFunction() : derivation_.apply(a.value) / RationalFunction(a.value);
      dlog_known_[std::size_t(atom)] = true;
    }
    return dlog_[std::size_t(atom)];
  }

  bool dlog_vanishes(int atom) {
    if (base_.atom(atom).integer) return true;
    return dlog_atom(atom).is_zero();
  }

 private:
  std::vector<std::string> names_;
  Derivation derivation_;
  CoprimeBase base_;
  std::unordered_map<RationalFunction, int> ids_;
  std::vector<RationalFunction> values_;
  std::vector<RationalFunction> dlog_;
  std::vector<bool> dlog_known_;
};

}  // namespace grassmann
