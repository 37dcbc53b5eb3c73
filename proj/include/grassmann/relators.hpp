#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grassmann/polylog.hpp"

namespace grassmann {

enum class RelatorGroup { B2, Beta2, Beta3 };

struct RelatorInfo {
  std::string name;
  RelatorGroup group;
  int arity;
  std::string formula;
};

inline const std::vector<RelatorInfo>& relator_catalog() {
  static const std::vector<RelatorInfo> catalog{
      {"five_term_B2", RelatorGroup::B2, 2, "[a] - [b] + [b/a] - [(1-b)/(1-a)] + [(1-1/b)/(1-1/a)]"},
      {"five_term_betaD", RelatorGroup::Beta2, 2, "same five terms with [[.]]^D"},
      {"four_term_beta2", RelatorGroup::Beta2, 2, "<a> - <b> + a<b/a> + (1-a)<(1-b)/(1-a)>"},
      {"two_term", RelatorGroup::Beta2, 1, "[[a]]^D + [[1-a]]^D"},
      {"inversion", RelatorGroup::Beta2, 1, "[[a]]^D + [[1/a]]^D"},
      {"two_term_beta2", RelatorGroup::Beta2, 1, "<a> - <1-a>"},
      {"inversion_beta2", RelatorGroup::Beta2, 1, "<a> + a<1/a>"},
      {"distribution2", RelatorGroup::Beta2, 1, "<a^2> - (1+a)<a> - (1-a)<-a>"},
      {"distribution2_D", RelatorGroup::Beta2, 1, "[[a^2]]^D - 2[[a]]^D - 2[[-a]]^D"},
      {"distribution2_mixed", RelatorGroup::Beta2, 1, "[[a^2]]^D - (1+a)[[a]]^D - (1-a)[[-a]]^D (not a relation)"},
      {"three_term_beta3", RelatorGroup::Beta3, 1, "<1-a>_3 - <a>_3 + a<1-1/a>_3"},
      {"inversion_beta3", RelatorGroup::Beta3, 1, "<a>_3 - a<1/a>_3"},
      {"distribution3", RelatorGroup::Beta3, 1, "<a^2>_3 - 2(1+a)<a>_3 - 2(1-a)<-a>_3"},
      {"twenty_two_term", RelatorGroup::Beta3, 3, "22-term relation in <.>_3"},
  };
  return catalog;
}

struct Relator {
  std::string name;
  RelatorGroup group = RelatorGroup::B2;
  B2Element b2;
  BetaElement beta{2};
};

namespace detail {

struct RelatorBuilder {
  Context& ctx;
  BetaElement beta;

  void add(Kind kind, const RationalFunction& coeff, const RationalFunction& arg, long sign = 1) {
    beta.add(kind, arg, FieldCoeff::value(ctx, coeff.scaled(sign)));
  }
};

}  // namespace detail

inline Relator make_relator(Context& ctx, std::string_view name, const std::vector<RationalFunction>& args) {
  const RelatorInfo* info = nullptr;
  for (const auto& r : relator_catalog())
    if (r.name == name) info = &r;
  if (!info) {
    std::string known;
    for (const auto& r : relator_catalog()) known += (known.empty() ? "" : ", ") + r.name;
    throw std::invalid_argument("unknown relator '" + std::string(name) + "'; known: " + known);
  }
  if (int(args.size()) != info->arity)
    throw std::invalid_argument(info->name + " takes " + std::to_string(info->arity) + " arguments");
  Relator out;
  out.name = info->name;
  out.group = info->group;
  const RationalFunction one(1);
  auto five = [&](const RationalFunction& a, const RationalFunction& b) {
    return std::vector<std::pair<RationalFunction, long>>{
        {a, 1}, {b, -1}, {b / a, 1}, {(one - b) / (one - a), -1}, {(one - b.inverse()) / (one - a.inverse()), 1}};
  };
  detail::RelatorBuilder rb{ctx, BetaElement(info->group == RelatorGroup::Beta3 ? 3 : 2)};
  const auto P = Kind::Plain;
  const auto D = Kind::D;
  if (name == "five_term_B2") {
    for (const auto& [x, s] : five(args[0], args[1])) out.b2.add(x, s);
    return out;
  }
  if (name == "five_term_betaD") {
    for (const auto& [x, s] : five(args[0], args[1]))
      if (!is_degenerate_argument(x)) rb.add(D, one, x, s);
  } else if (name == "four_term_beta2") {
    const auto &a = args[0], &b = args[1];
    rb.add(P, one, a);
    rb.add(P, one, b, -1);
    rb.add(P, a, b / a);
    rb.add(P, one - a, (one - b) / (one - a));
  } else if (name == "two_term") {
    rb.add(D, one, args[0]);
    rb.add(D, one, one - args[0]);
  } else if (name == "inversion") {
    rb.add(D, one, args[0]);
    rb.add(D, one, args[0].inverse());
  } else if (name == "two_term_beta2") {
    rb.add(P, one, args[0]);
    rb.add(P, one, one - args[0], -1);
  } else if (name == "inversion_beta2") {
    rb.add(P, one, args[0]);
    rb.add(P, args[0], args[0].inverse());
  } else if (name == "distribution2" || name == "distribution3" || name == "distribution2_mixed") {
    const auto& a = args[0];
    Kind k = name == "distribution2_mixed" ? D : P;
    long m = name == "distribution3" ? 2 : 1;
    rb.add(k, one, a * a);
    rb.add(k, (one + a).scaled(m), a, -1);
    rb.add(k, (one - a).scaled(m), -a, -1);
  } else if (name == "distribution2_D") {
    const auto& a = args[0];
    rb.add(D, one, a * a);
    rb.add(D, RationalFunction(2), a, -1);
    rb.add(D, RationalFunction(2), -a, -1);
  } else if (name == "three_term_beta3") {
    const auto& a = args[0];
    rb.add(P, one, one - a);
    rb.add(P, one, a, -1);
    rb.add(P, a, one - a.inverse());
  } else if (name == "inversion_beta3") {
    rb.add(P, one, args[0]);
    rb.add(P, args[0], args[0].inverse(), -1);
  } else if (name == "twenty_two_term") {
    const auto &a = args[0], &b = args[1], &c = args[2];
    rb.add(P, c, a);
    rb.add(P, c, b, -1);
    rb.add(P, a - b + one, c);
    rb.add(P, one - c, one - a);
    rb.add(P, one - c, one - b, -1);
    rb.add(P, b - a, one - c);
    rb.add(P, a, c / a, -1);
    rb.add(P, b, c / b);
    rb.add(P, c * a, b / a);
    rb.add(P, one - a, (one - c) / (one - a), -1);
    rb.add(P, one - b, (one - c) / (one - b));
    rb.add(P, c * (one - a), (one - b) / (one - a));
    rb.add(P, c * (one - a), a * (one - c) / (c * (one - a)));
    rb.add(P, c * (one - b), b * (one - c) / (c * (one - b)), -1);
    rb.add(P, b, c * a / b, -1);
    rb.add(P, (one - c) * a, (a - b) / a);
    rb.add(P, (one - c) * (one - a), (b - a) / (one - a));
    rb.add(P, a - b, (one - c) * a / (a - b), -1);
    rb.add(P, one - b, c * (one - a) / (one - b), -1);
    rb.add(P, b - a, (one - c) * (one - a) / (b - a), -1);
    rb.add(P, c * (a - b), (one - c) * b / (c * (a - b)));
    rb.add(P, c * (b - a), (one - c) * (one - b) / (c * (b - a)));
  }
  out.beta = std::move(rb.beta);
  return out;
}

}  // namespace grassmann
