#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grassmann/configuration.hpp"
#include "grassmann/numeric/dilog.hpp"
#include "grassmann/polylog.hpp"

namespace grassmann {

using numeric::Complex;
using numeric::Real;

class SpecializationRejected : public AlgebraError {
 public:
  explicit SpecializationRejected(const std::string& why) : AlgebraError("specialization rejected: " + why) {}
};

struct Specialization {
  std::vector<Complex> values;
};

struct NumericOptions {
  unsigned digits = 50;
  double tolerance = 1e-10;
  int specializations = 5;
  double avoid_radius = 0.05;  // B2 arguments stay this far from 0 and 1
  int max_retries = 100;
};

// Points with real and imaginary parts uniform in [-2, 2] on a 2^-20 grid.
class SpecializationSampler {
 public:
  SpecializationSampler(std::uint64_t seed, std::size_t arity, bool real = false)
      : rng_(seed), arity_(arity), real_(real) {}

  Specialization next() {
    Specialization s;
    for (std::size_t i = 0; i < arity_; ++i) {
      Real re = coordinate();
      Real im = real_ ? Real(0) : coordinate();
      s.values.emplace_back(re, im);
    }
    return s;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::size_t arity_;
  bool real_;

  Real coordinate() {
    long k = long(rng_() % (1ull << 22)) - (1l << 21);
    return numeric::to_real(mpq_class(k, 1l << 20));
  }
};

inline Real pole_floor() { return boost::multiprecision::pow(Real(10), -int(Real::default_precision()) / 2); }

inline Complex evaluate(const RationalFunction& f, const Specialization& s) {
  return numeric::evaluate(f, s.values, pole_floor());
}

// term by term, without materializing the coefficient
inline Complex evaluate(Context& ctx, const FieldCoeff& c, const Specialization& s) {
  Complex acc;
  for (const auto& [b, q] : c.terms()) {
    Complex t = numeric::lift(q);
    if (b.value != 0) t = t * evaluate(ctx.value(b.value), s);
    if (b.atom >= 0) t = t * evaluate(ctx.dlog_atom(b.atom), s);
    acc += t;
  }
  return acc;
}

inline Complex checked_argument(const RationalFunction& x, const Specialization& s, const NumericOptions& opt) {
  Complex v = evaluate(x, s);
  Real r(opt.avoid_radius);
  if (numeric::abs(v) < r || numeric::abs(v - Complex(Real(1))) < r)
    throw SpecializationRejected("argument near 0 or 1");
  return v;
}

// sum c D2(x(s))
inline Real realize_B2(const B2Element& e, const Specialization& s, const NumericOptions& opt = {}) {
  Real acc(0);
  for (const auto& [x, c] : e.terms()) acc += numeric::to_real(c) * numeric::bloch_wigner(checked_argument(x, s, opt));
  return acc;
}

// sum x(s0) D2(y(s1)) over the F (x) B2 summands
inline Complex realize_F_B2(Context& ctx, const MidElement& m, const Specialization& s0, const Specialization& s1,
                            const NumericOptions& opt = {}) {
  Complex acc;
  for (const auto& [y, x] : m.right()) {
    Real d = numeric::bloch_wigner(checked_argument(y, s1, opt));
    Complex xv = evaluate(ctx, x, s0);
    acc += Complex(xv.re * d, xv.im * d);
  }
  return acc;
}

// sum f(s) H(a(s)) at a real point, D generators first rewritten as plain ones
inline Real realize_beta2_entropy(Context& ctx, const BetaElement& e, const Specialization& s) {
  Real acc(0);
  for (const auto& [g, f] : e.terms()) {
    Complex c = evaluate(ctx, f, s);
    Complex a = evaluate(g.arg, s);
    if (g.kind == Kind::D) c = c * evaluate(ctx, FieldCoeff::dlog(ctx, g.arg), s) / (Complex(Real(1)) - a);
    acc += c.re * numeric::entropy(a.re);
  }
  return acc;
}

// det of log|leg| over one real point per leg, times the coefficient at s[0]
inline Real log_fingerprint(Context& ctx, const TensorElement& t, const std::vector<Specialization>& s) {
  int n = t.shape().legs;
  bool has_coeff = t.shape().kind != TensorKind::Wedge;
  std::size_t need = std::size_t(n) + (has_coeff ? 1 : 0);
  if (s.size() < need) throw std::invalid_argument("log_fingerprint needs " + std::to_string(need) + " points");
  std::map<std::pair<int, std::size_t>, Real> logs;
  auto ln = [&](int atom, std::size_t point) -> const Real& {
    auto key = std::make_pair(atom, point);
    auto it = logs.find(key);
    if (it == logs.end()) {
      Complex v = evaluate(RationalFunction(ctx.base().atom(atom).value), s[point]);
      Real a = numeric::abs(v);
      if (a <= pole_floor()) throw PoleError();
      it = logs.emplace(key, boost::multiprecision::log(a)).first;
    }
    return it->second;
  };
  std::size_t off = has_coeff ? 1 : 0;
  Real acc(0);
  for (const auto& [key, c] : t.canonical(ctx).terms()) {
    Real coeff = has_coeff ? evaluate(ctx, c, s[0]).re : numeric::to_real(c.rational_value());
    Real value(0);
    if (t.shape().kind == TensorKind::FieldTensor) {
      value = 1;
      for (int j = 0; j < n; ++j) value *= ln(key[std::size_t(j)], off + std::size_t(j));
    } else {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Real p = Permutation(perm).sign();
        for (int j = 0; j < n; ++j) p *= ln(key[std::size_t(j)], off + std::size_t(perm[std::size_t(j)]));
        value += p;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    acc += coeff * value;
  }
  return acc;
}

// repeat f on fresh specializations until it stops rejecting
template <class F>
auto with_retries(SpecializationSampler& sampler, int max_retries, F&& f) {
  for (int attempt = 0;; ++attempt) {
    try {
      return f(sampler);
    } catch (const SpecializationRejected&) {
      if (attempt + 1 >= max_retries) throw;
    } catch (const PoleError&) {
      if (attempt + 1 >= max_retries) throw;
    }
  }
}

struct MidVerdict {
  bool left_exact = false;
  bool right_exact = false;
  bool numeric_ok = false;
  std::vector<Real> residuals;
  Real max_residual{0};
  std::optional<mpq_class> left_ratio;
  bool pass() const { return left_exact && right_exact && numeric_ok; }
};

// Tier 1: partial2 (x) id of the left summands agree exactly.
// Tier 2: id (x) delta2 of the right summands agree exactly and the D2 realizations agree numerically.
inline MidVerdict verify_mid_equal(Context& ctx, const MidElement& lhs, const MidElement& rhs, SpecializationSampler& sampler,
                                   const NumericOptions& opt = {}) {
  MidVerdict v;
  TensorElement l1 = mid_left_tensor(ctx, lhs), l2 = mid_left_tensor(ctx, rhs);
  v.left_exact = equals(ctx, l1, l2);
  if (!v.left_exact) v.left_ratio = scalar_ratio(ctx, l1, l2);
  v.right_exact = equals(ctx, mid_right_wedge(ctx, lhs), mid_right_wedge(ctx, rhs));
  v.numeric_ok = true;
  for (int i = 0; i < opt.specializations; ++i) {
    Real r = with_retries(sampler, opt.max_retries, [&](SpecializationSampler& smp) {
      Specialization s0 = smp.next(), s1 = smp.next();
      Complex d = realize_F_B2(ctx, lhs, s0, s1, opt) - realize_F_B2(ctx, rhs, s0, s1, opt);
      return numeric::abs(d);
    });
    if (r > v.max_residual) v.max_residual = r;
    if (r > Real(opt.tolerance)) v.numeric_ok = false;
    v.residuals.push_back(std::move(r));
  }
  return v;
}

}  // namespace grassmann
