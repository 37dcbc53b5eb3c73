#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "grassmann/configuration.hpp"
#include "grassmann/polylog.hpp"

namespace grassmann {

namespace detail {

inline int wrap(int i, int m) { return ((i % m) + m) % m; }

// points 0..m-1 without the listed ones, ascending
inline std::vector<int> complement(int m, std::initializer_list<int> skip) {
  std::vector<int> out;
  for (int i = 0; i < m; ++i)
    if (std::find(skip.begin(), skip.end(), i) == skip.end()) out.push_back(i);
  return out;
}

inline RationalFunction generic_det(const Configuration& c, const std::vector<int>& idx) {
  RationalFunction d = c.determinant(idx);
  require_generic(d);
  return d;
}

inline void require_shape(const Configuration& c, int m, int n, const char* what) {
  if (c.size() != m || c.dim() != n)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(m) + " points in dimension " +
                                std::to_string(n) + ", got " + std::to_string(c.size()) + " in dimension " +
                                std::to_string(c.dim()));
}

}  // namespace detail

// sum_i (-1)^(i n) Dlog D(i^) (x) wedge_{j in 1,3..n} D((i+j)^)/D((i+2)^), indices mod n+1
inline TensorElement tau0_n(Context& ctx, const Configuration& c, int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("tau0_n needs 2 <= n <= 5");
  detail::require_shape(c, n + 1, n, "tau0_n");
  int m = n + 1;
  std::vector<Legs> minor;
  std::vector<FieldCoeff> dlog;
  for (int i = 0; i < m; ++i) {
    RationalFunction d = detail::generic_det(c, detail::complement(m, {i}));
    minor.push_back(ctx.legs(d));
    dlog.push_back(FieldCoeff::dlog(ctx, minor.back()));
  }
  TensorElement t(field_wedge(n - 1));
  for (int i = 0; i < m; ++i) {
    const Legs& den = minor[std::size_t(detail::wrap(i + 2, m))];
    std::vector<Legs> legs{minor[std::size_t(detail::wrap(i + 1, m))] - den};
    for (int j = 3; j <= n; ++j) legs.push_back(minor[std::size_t(detail::wrap(i + j, m))] - den);
    t.add((i * n) % 2 ? -dlog[std::size_t(i)] : dlog[std::size_t(i)], legs);
  }
  return t;
}

// compact three-term form
inline TensorElement tau0_2(Context& ctx, const Configuration& c) { return tau0_n(ctx, c, 2); }

// six-term form sum_i Dlog D(i,i+2) (x) D(i,i+1) - Dlog D(i+1,i) (x) D(i,i+2)
inline TensorElement tau0_2_expanded(Context& ctx, const Configuration& c) {
  detail::require_shape(c, 3, 2, "tau0_2");
  auto det = [&](int a, int b) { return detail::generic_det(c, {detail::wrap(a, 3), detail::wrap(b, 3)}); };
  TensorElement t(field_wedge(1));
  for (int i = 0; i < 3; ++i) {
    t.add(FieldCoeff::dlog(ctx, det(i, i + 2)), {ctx.legs(det(i, i + 1))});
    t.add(-FieldCoeff::dlog(ctx, det(i + 1, i)), {ctx.legs(det(i, i + 2))});
  }
  return t;
}

inline TensorElement tau0_3(Context& ctx, const Configuration& c) { return tau0_n(ctx, c, 3); }

inline BetaElement tau1_2(const Configuration& c) {
  detail::require_shape(c, 4, 2, "tau1_2");
  RationalFunction r = cross_ratio(c);
  if (is_degenerate_argument(r)) throw NonGenericConfiguration("cross ratio is 0 or 1");
  return beta_generator(2, Kind::D, r);
}

// -1/3 sum_i (-1)^i ([[r(i|..)]] (x) P_i + Dlog P_i (x) [r(i|..)]), P_i = prod_{j != i} D(i^, j^)
inline MidElement tau1_3(Context& ctx, const Configuration& c) {
  detail::require_shape(c, 5, 3, "tau1_3");
  MidElement m;
  for (int i = 0; i < 5; ++i) {
    RationalFunction r = projected_cross_ratio(c, i);
    if (is_degenerate_argument(r)) throw NonGenericConfiguration("projected cross ratio is 0 or 1");
    Legs p;
    for (int j = 0; j < 5; ++j)
      if (j != i) p.add(ctx.legs(detail::generic_det(c, detail::complement(5, {i, j}))));
    mpq_class s(i % 2 ? 1 : -1, 3);
    m.add_left(Kind::D, r, FieldCoeff(s), p);
    m.add_right(FieldCoeff::dlog(ctx, p).scaled(s), r);
  }
  return m;
}

// 1/3 Alt5 ([[r(0|1234)]] (x) D(012) + Dlog D(012) (x) [r(0|1234)])
inline MidElement tau1_3_alt(Context& ctx, const Configuration& c) {
  detail::require_shape(c, 5, 3, "tau1_3_alt");
  static const PermutationGroup s5 = symmetric_group(5);
  MidElement m = alternate(s5, c, [&](const Configuration& x) {
    MidElement e;
    RationalFunction r = projected_cross_ratio(x, 0);
    if (is_degenerate_argument(r)) throw NonGenericConfiguration("projected cross ratio is 0 or 1");
    Legs p = ctx.legs(detail::generic_det(x, {0, 1, 2}));
    e.add_left(Kind::D, r, FieldCoeff(1), p);
    e.add_right(FieldCoeff::dlog(ctx, p), r);
    return e;
  });
  return m.scaled(mpq_class(1, 3));
}

struct Tau23Result {
  BetaElement value{3};
  std::size_t terms = 0;  // before merging
};

// 2/45 Alt6 [[r3]]^D_3, unnormalized alternation
inline Tau23Result tau2_3_detailed(const Configuration& c) {
  detail::require_shape(c, 6, 3, "tau2_3");
  static const PermutationGroup s6 = symmetric_group(6);
  Tau23Result out;
  const mpq_class scale(2, 45);
  for (const auto& sigma : s6) {
    RationalFunction r = triple_ratio_term(c.relabeled(sigma));
    if (is_degenerate_argument(r)) {
      std::string name;
      for (int i = 0; i < sigma.size(); ++i) name += std::to_string(sigma(i));
      throw DegenerateArgument("triple ratio degenerate under permutation " + name);
    }
    out.value.add(Kind::D, r, FieldCoeff(sigma.sign() < 0 ? mpq_class(-scale) : scale));
    ++out.terms;
  }
  return out;
}

inline BetaElement tau2_3(const Configuration& c) { return tau2_3_detailed(c).value; }

// linear extensions over formal sums of configurations
inline TensorElement tau0_n(Context& ctx, const ConfigSum& s, int n) {
  TensorElement t(field_wedge(n - 1));
  for (const auto& [c, k] : s) t += tau0_n(ctx, c, n).scaled(k);
  return t;
}

inline BetaElement tau1_2(const ConfigSum& s) {
  BetaElement out(2);
  for (const auto& [c, k] : s) out += tau1_2(c).scaled(k);
  return out;
}

inline MidElement tau1_3(Context& ctx, const ConfigSum& s) {
  MidElement out;
  for (const auto& [c, k] : s) out += tau1_3(ctx, c).scaled(k);
  return out;
}

}  // namespace grassmann
