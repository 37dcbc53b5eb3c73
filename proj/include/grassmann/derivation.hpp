#pragma once

#include <string>
#include <vector>

#include "grassmann/exact/parse.hpp"

namespace grassmann {

// D on Q(t1..tk), determined by D(t_i); D vanishes on Q.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::vector<RationalFunction> images) : images_(std::move(images)) {}

  static Derivation partial(std::size_t arity, std::size_t i) {
    std::vector<RationalFunction> im(arity);
    im.at(i) = RationalFunction(1);
    return Derivation(std::move(im));
  }

  // D(t_i) = t_i (1 - t_i) on the listed variables, zero elsewhere
  static Derivation logistic(std::size_t arity, const std::vector<std::size_t>& vars) {
    std::vector<RationalFunction> im(arity);
    for (auto v : vars) {
      RationalFunction t = RationalFunction::variable(v);
      im.at(v) = t * (RationalFunction(1) - t);
    }
    return Derivation(std::move(im));
  }

  // lines of the form "D(t1) = <expr>"
  static Derivation parse(const std::vector<std::string>& lines, const std::vector<std::string>& names) {
    std::vector<RationalFunction> im(names.size());
    for (const auto& line : lines) {
      auto eq = line.find('=');
      auto open = line.find('(');
      auto close = line.find(')');
      if (eq == std::string::npos || open == std::string::npos || close == std::string::npos || close > eq)
        throw ParseError("expected D(<var>) = <expr>: " + line);
      std::string var = line.substr(open + 1, close - open - 1);
      var.erase(0, var.find_first_not_of(' '));
      var.erase(var.find_last_not_of(' ') + 1);
      std::size_t idx = names.size();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == var) idx = i;
      if (idx == names.size()) throw ParseError("unknown variable '" + var + "'");
      im[idx] = parse_rational_function(line.substr(eq + 1), names);
    }
    return Derivation(std::move(im));
  }

  std::size_t arity() const { return images_.size(); }
  const RationalFunction& image(std::size_t i) const { return images_.at(i); }
  const std::vector<RationalFunction>& images() const { return images_; }

  bool polynomial_images() const {
    for (const auto& f : images_)
      if (!f.is_polynomial()) return false;
    return true;
  }

  RationalFunction apply(const Polynomial& p) const {
    if (polynomial_images()) {
      Polynomial acc;
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].is_zero()) continue;
        Polynomial dp = p.derivative(i);
        if (dp.is_zero()) continue;
        acc += dp * images_[i].numerator().scaled(1 / images_[i].denominator().constant_value());
      }
      return RationalFunction(acc);
    }
    RationalFunction acc;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i].is_zero()) continue;
      Polynomial dp = p.derivative(i);
      if (!dp.is_zero()) acc += RationalFunction(dp) * images_[i];
    }
    return acc;
  }

  RationalFunction apply(const RationalFunction& f) const {
    if (f.is_constant()) return {};
    RationalFunction dn = apply(f.numerator());
    if (f.denominator().is_constant()) return dn.scaled(1 / f.denominator().constant_value());
    RationalFunction dd = apply(f.denominator());
    RationalFunction den(f.denominator());
    return (dn * den - RationalFunction(f.numerator()) * dd) / (den * den);
  }

  RationalFunction dlog(const RationalFunction& f) const {
    if (f.is_zero()) throw ZeroLeg();
    return apply(f) / f;
  }

 private:
  std::vector<RationalFunction> images_;
};

}  // namespace grassmann
