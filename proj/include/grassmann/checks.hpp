#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "grassmann/morphisms.hpp"
#include "grassmann/realizations.hpp"
#include "grassmann/relators.hpp"

namespace grassmann {

enum class Status { Pass, Warn, Fail, Error };
enum class Tier { Exact, Numeric, Both };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Warn: return "WARN";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
  }
  return "?";
}

inline const char* to_string(Tier t) {
  switch (t) {
    case Tier::Exact: return "exact";
    case Tier::Numeric: return "numeric";
    case Tier::Both: return "both";
  }
  return "?";
}

struct CheckOptions {
  std::uint64_t seed = 1;
  std::optional<int> trials;
  unsigned precision = 50;
  double tolerance = 1e-10;
  std::size_t vars = 2;
  long coeff_bound = 20;
  int specializations = 5;
  double avoid_radius = 1e-3;
  std::optional<std::vector<RationalFunction>> derivation;  // pinned D(t_i); random otherwise
};

struct CheckReport {
  std::string id;
  std::string anchor;
  Tier tier = Tier::Exact;
  Status status = Status::Pass;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  std::optional<std::string> max_residual;
  int residual_count = 0;
  std::optional<std::string> ratio;
  std::string message;
  double runtime_ms = 0;
};

struct TrialOutcome {
  bool exact_ok = true;
  bool numeric_ok = true;
  std::optional<Real> max_residual;
  int residual_count = 0;
  std::optional<mpq_class> ratio;  // exact sides differ by this scalar
  bool ratio_known = true;
  bool scaled_ok = false;  // both tiers pass once the ratio is applied

  void residual(const Real& r, double tol) {
    ++residual_count;
    if (!max_residual || r > *max_residual) max_residual = r;
    if (!(r <= Real(tol))) numeric_ok = false;
  }
  void compare(Context& ctx, const TensorElement& a, const TensorElement& b) {
    if (equals(ctx, a, b)) return;
    exact_ok = false;
    auto r = scalar_ratio(ctx, a, b);
    if (r)
      ratio = *r;
    else
      ratio_known = false;
  }
  void zero(Context& ctx, const TensorElement& t) {
    if (!t.is_zero(ctx)) {
      exact_ok = false;
      ratio_known = false;
    }
  }
  void require(bool ok) {
    if (!ok) {
      exact_ok = false;
      ratio_known = false;
    }
  }
  void mid(const MidVerdict& v, double tol) {
    if (!v.left_exact || !v.right_exact) {
      exact_ok = false;
      if (v.left_ratio)
        ratio = *v.left_ratio;
      else
        ratio_known = false;
    }
    for (const auto& r : v.residuals) residual(r, tol);
  }
  // equality in the mixed group; on an exact scalar mismatch, re-verify with the scalar applied
  void mid(Context& ctx, const MidElement& lhs, const MidElement& rhs, SpecializationSampler& smp,
           const NumericOptions& opt) {
    MidVerdict v = verify_mid_equal(ctx, lhs, rhs, smp, opt);
    mid(v, opt.tolerance);
    if (v.left_ratio && !v.pass()) scaled_ok = verify_mid_equal(ctx, lhs, rhs.scaled(*v.left_ratio), smp, opt).pass();
  }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::string_view id, int trial) {
  return splitmix64(splitmix64(seed ^ fnv1a(id)) + std::uint64_t(trial));
}

// D(t_i) random of degree <= 2 with small coefficients, not all zero
template <class Rng>
Derivation random_derivation(Rng& rng, std::size_t k) {
  auto small = [&] { return long(rng() % 7) - 3; };
  for (;;) {
    std::vector<RationalFunction> im;
    bool nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
      RationalFunction f(small());
      for (std::size_t j = 0; j < k; ++j) {
        f += RationalFunction::variable(j).scaled(small());
        f += (RationalFunction::variable(i) * RationalFunction::variable(j)).scaled(small());
      }
      nonzero = nonzero || !f.is_zero();
      im.push_back(std::move(f));
    }
    if (nonzero) return Derivation(std::move(im));
  }
}

// (c0 + sum c_j t_j) / (d0 + sum d_j t_j) with small integer coefficients, avoiding 0 and 1
template <class Rng>
RationalFunction random_argument(Rng& rng, std::size_t k) {
  auto small = [&] { return long(rng() % 9) - 4; };
  for (;;) {
    RationalFunction num(small()), den(small());
    for (std::size_t j = 0; j < k; ++j) {
      num += RationalFunction::variable(j).scaled(small());
      if (rng() % 2) den += RationalFunction::variable(j).scaled(small());
    }
    if (den.is_zero()) continue;
    RationalFunction r = num / den;
    if (!is_degenerate_argument(r) && !r.is_constant()) return r;
  }
}

class TrialEnv {
 public:
  TrialEnv(std::uint64_t seed, const CheckOptions& opt) : rng_(seed), opt_(opt) {}

  std::mt19937_64& rng() { return rng_; }
  const CheckOptions& options() const { return opt_; }
  double tol() const { return opt_.tolerance; }

  Context context() {
    if (opt_.derivation) return Context(opt_.vars, Derivation(*opt_.derivation));
    return Context(opt_.vars, random_derivation(rng_, opt_.vars));
  }

  Configuration config(int m, int n) {
    RandomConfigOptions o;
    o.coeff_bound = opt_.coeff_bound;
    return random_configuration(rng_, m, n, opt_.vars, o);
  }

  RationalFunction argument() { return random_argument(rng_, opt_.vars); }

  // nonzero rational function with a variable part, for rescalings
  RationalFunction scalar() {
    for (;;) {
      RationalFunction f = argument();
      if (!f.is_zero()) return f;
    }
  }

  // random matrix whose determinant is a nonconstant polynomial
  std::vector<Vector> matrix(int n) {
    for (;;) {
      std::vector<Vector> m(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
      for (auto& row : m)
        for (auto& x : row) x = RationalFunction(long(rng_() % 11) - 5);
      m[0][0] += RationalFunction::variable(std::size_t(rng_() % opt_.vars));
      RationalFunction d = determinant(m);
      if (!d.is_zero() && !d.is_constant()) return m;
    }
  }

  SpecializationSampler sampler(bool real = false) { return SpecializationSampler(rng_(), opt_.vars, real); }

  NumericOptions numeric() const {
    NumericOptions n;
    n.digits = opt_.precision;
    n.tolerance = opt_.tolerance;
    n.specializations = opt_.specializations;
    n.avoid_radius = opt_.avoid_radius;
    return n;
  }

 private:
  std::mt19937_64 rng_;
  const CheckOptions& opt_;
};

struct CheckDescriptor {
  std::string id;
  std::string anchor;
  Tier tier;
  int default_trials;
  std::function<TrialOutcome(TrialEnv&)> body;
};

namespace checks {

inline B2Element gon_five_term(const Configuration& c) {
  B2Element e;
  for (int i = 0; i < c.size(); ++i) e.add(projected_cross_ratio(c, i), i % 2 ? -1 : 1);
  return e;
}

inline BetaElement projected_five_term(const Configuration& c) {
  BetaElement e(2);
  for (int i = 0; i < c.size(); ++i) {
    RationalFunction r = projected_cross_ratio(c, i);
    if (is_degenerate_argument(r)) throw NonGenericConfiguration("projected cross ratio is 0 or 1");
    e.add(Kind::D, r, FieldCoeff(i % 2 ? -1 : 1));
  }
  return e;
}

// sum over real specializations of the entropy realization, which must vanish
inline void entropy_residuals(Context& ctx, const BetaElement& e, TrialEnv& env, int count, TrialOutcome& out) {
  SpecializationSampler smp = env.sampler(true);
  for (int i = 0; i < count; ++i) {
    Real r = with_retries(smp, env.numeric().max_retries, [&](SpecializationSampler& s) -> Real {
      return boost::multiprecision::abs(realize_beta2_entropy(ctx, e, s.next()));
    });
    out.residual(r, env.tol());
  }
}

inline void check_example_four_term(TrialEnv& env, TrialOutcome& out) {
  Context ctx({"a", "b"}, Derivation::logistic(2, {0, 1}));
  RationalFunction a = ctx.parse("a"), b = ctx.parse("b"), o(0), i(1);
  Configuration c({{o, i}, {i, o}, {i, i}, {a, i}, {b, i}});
  BetaElement image = tau1_2(boundary_d(c));
  out.zero(ctx, partial2(ctx, image));

  // arguments up to x ~ 1/x are the five-term arguments; the last one carries D-weight 0
  auto cls = [](const RationalFunction& x) { return std::min(x, x.inverse()); };
  std::set<RationalFunction> want{cls(a), cls(b), cls(b / a), cls((i - b) / (i - a))};
  RationalFunction fifth = cls((i - b.inverse()) / (i - a.inverse()));
  std::set<RationalFunction> got;
  BetaElement plain(2);
  for (const auto& [g, f] : image.terms()) {
    RationalFunction w = f.materialize(ctx) * d_weight(ctx, g.arg);
    if (cls(g.arg) == fifth) {
      out.require(w.is_zero());
      continue;
    }
    got.insert(cls(g.arg));
    plain.add(Kind::Plain, g.arg, FieldCoeff::value(ctx, w));
  }
  out.require(got == want);
  out.require(equals(ctx, partial2(ctx, plain), partial2(ctx, make_relator(ctx, "four_term_beta2", {a, b}).beta)));

  CheckOptions pinned = env.options();
  pinned.vars = 2;
  TrialEnv real(env.rng()(), pinned);
  entropy_residuals(ctx, image, real, 20, out);
}

inline void check_numeric_oracles(TrialEnv& env, TrialOutcome& out) {
  using numeric::bloch_wigner;
  using numeric::entropy;
  SpecializationSampler smp = env.sampler();
  Complex one(Real(1));
  for (int n = 0; n < 100;) {
    Complex x = smp.next().values.at(0), y = smp.next().values.at(0);
    if (numeric::abs(x) < Real(0.05) || numeric::abs(y) < Real(0.05) || numeric::abs(x - one) < Real(0.05) ||
        numeric::abs(y - one) < Real(0.05) || numeric::abs(x - y) < Real(0.05))
      continue;
    Real r = bloch_wigner(x) - bloch_wigner(y) + bloch_wigner(y / x) - bloch_wigner((one - y) / (one - x)) +
             bloch_wigner((one - one / y) / (one - one / x));
    out.residual(boost::multiprecision::abs(r), 1e-12);
    ++n;
  }
  SpecializationSampler rs = env.sampler(true);
  for (int n = 0; n < 100;) {
    Real a = rs.next().values.at(0).re, b = rs.next().values.at(0).re;
    if (abs(a) < Real(0.05) || abs(a - 1) < Real(0.05) || abs(b) < Real(0.05) || abs(a - b) < Real(0.05)) continue;
    Real r = entropy(a) - entropy(b) + a * entropy(b / a) + (1 - a) * entropy((1 - b) / (1 - a));
    out.residual(boost::multiprecision::abs(r), 1e-12);
    ++n;
  }
  Real catalan("0.915965594177219015054603514932384110774");
  out.residual(boost::multiprecision::abs(bloch_wigner(Complex(Real(0), Real(1))) - catalan), 1e-12);
}

}  // namespace checks

inline const std::vector<CheckDescriptor>& check_catalog() {
  using namespace checks;
  static const std::vector<CheckDescriptor> catalog{
      {"dd_zero", "d o d = 0 on C_m(n)", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         int n = 2 + int(env.rng()() % 3);
         out.require(boundary_d(boundary_d(env.config(n + 3, n))).empty());
         return out;
       }},
      {"dprime_dprime_zero", "d' o d' = 0 and d d' + d' d = 0", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         int n = 3 + int(env.rng()() % 2);
         Configuration c = env.config(n + 2, n);
         out.require(boundary_dprime(boundary_dprime(c)).empty());
         out.require((boundary_d(boundary_dprime(c)) + boundary_dprime(boundary_d(c))).empty());
         return out;
       }},
      {"cross_ratio_identity_2did", "D01 D23 = D02 D13 - D03 D12 on C_4(2)", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Configuration c = env.config(4, 2);
         auto D = [&](int a, int b) { return c.determinant({a, b}); };
         out.require(D(0, 1) * D(2, 3) == D(0, 2) * D(1, 3) - D(0, 3) * D(1, 2));
         out.require(RationalFunction(1) - cross_ratio(c) == D(0, 1) * D(2, 3) / (D(0, 2) * D(1, 3)));
         return out;
       }},
      {"tau0_2_volume_invariance", "tau0_2 independent of the volume form", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(3, 2);
         out.compare(ctx, tau0_2(ctx, c), tau0_2(ctx, c.transformed(env.matrix(2))));
         return out;
       }},
      {"tau0_2_length_invariance", "tau0_2 o d independent of vector lengths", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(4, 2);
         std::vector<RationalFunction> lambda;
         for (int i = 0; i < 4; ++i) lambda.push_back(env.scalar());
         out.compare(ctx, tau0_n(ctx, boundary_d(c), 2), tau0_n(ctx, boundary_d(c.rescaled(lambda)), 2));
         return out;
       }},
      {"claim1", "partialD2 o tau1_2 = tau0_2 o d on C_4(2); compact and six-term tau0_2 agree", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(4, 2);
         out.compare(ctx, partial2(ctx, tau1_2(c)), tau0_n(ctx, boundary_d(c), 2));
         for (int i = 0; i < 4; ++i) {
           Configuration f = c.omit(i);
           if (!equals(ctx, tau0_2(ctx, f), tau0_2_expanded(ctx, f))) {
             out.exact_ok = false;
             out.ratio_known = false;
           }
         }
         return out;
       }},
      {"tau12d_kernel", "tau1_2 o d lands in ker partialD2 on C_5(2)", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         out.zero(ctx, partial2(ctx, tau1_2(boundary_d(env.config(5, 2)))));
         return out;
       }},
      {"gon5term", "sum (-1)^i [r(x_i|...)]_2 vanishes in B2 on C_5(3)", Tier::Both, 50,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         B2Element e = gon_five_term(env.config(5, 3));
         out.zero(ctx, delta2(ctx, e));
         SpecializationSampler smp = env.sampler();
         NumericOptions opt = env.numeric();
         for (int i = 0; i < 10; ++i) {
           Real r = with_retries(smp, opt.max_retries, [&](SpecializationSampler& s) -> Real {
             return boost::multiprecision::abs(realize_B2(e, s.next(), opt));
           });
           out.residual(r, env.tol());
         }
         return out;
       }},
      {"lemma_4pt", "sum (-1)^i [[r(x_i|...)]]^D_2 vanishes in beta2^D on C_5(3)", Tier::Both, 50,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         BetaElement e = projected_five_term(env.config(5, 3));
         out.zero(ctx, partial2(ctx, e));
         entropy_residuals(ctx, e, env, 10, out);
         return out;
       }},
      {"example_four_term", "tau1_2 o d of (0,inf,1,a,b) with D = a(1-a)d_a + b(1-b)d_b is the four-term relation",
       Tier::Both, 1,
       [](TrialEnv& env) {
         TrialOutcome out;
         check_example_four_term(env, out);
         return out;
       }},
      {"tau0_3_volume", "tau0_3 independent of the volume form", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(4, 3);
         out.compare(ctx, tau0_3(ctx, c), tau0_3(ctx, c.transformed(env.matrix(3))));
         return out;
       }},
      {"tau1_3_volume", "tau1_3 independent of the volume form", Tier::Both, 25,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(5, 3);
         SpecializationSampler smp = env.sampler();
         out.mid(verify_mid_equal(ctx, tau1_3(ctx, c), tau1_3(ctx, c.transformed(env.matrix(3))), smp, env.numeric()),
                 env.tol());
         return out;
       }},
      {"tau1_3_length", "tau1_3 o d independent of vector lengths", Tier::Both, 25,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(6, 3);
         std::vector<RationalFunction> lambda;
         for (int i = 0; i < 6; ++i) lambda.push_back(env.scalar());
         SpecializationSampler smp = env.sampler();
         out.mid(verify_mid_equal(ctx, tau1_3(ctx, boundary_d(c)), tau1_3(ctx, boundary_d(c.rescaled(lambda))), smp,
                                  env.numeric()),
                 env.tol());
         return out;
       }},
      {"claim3a", "tau0_3 o d = partialD o tau1_3 on C_5(3)", Tier::Exact, 25,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(5, 3);
         out.compare(ctx, partial_mid(ctx, tau1_3(ctx, c)), tau0_n(ctx, boundary_d(c), 3));
         return out;
       }},
      {"tau1_3_alt_form", "tau1_3 = 1/3 Alt5 ([[r(0|1234)]] (x) (012) + Dlog(012) (x) [r(0|1234)])", Tier::Both, 25,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(5, 3);
         SpecializationSampler smp = env.sampler();
         out.mid(ctx, tau1_3(ctx, c), tau1_3_alt(ctx, c), smp, env.numeric());
         return out;
       }},
      {"triple_ratio_factorization", "r3 = r(2|1053)/r(1|0234) and the two other apex pairs", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Configuration c = env.config(6, 3);
         RationalFunction r = triple_ratio_term(c);
         for (auto pair : {std::pair{1, 2}, std::pair{0, 2}, std::pair{0, 1}}) {
           auto [p, q] = factor_triple_ratio(c, pair);
           out.require(p / q == r);
         }
         return out;
       }},
      {"triple_ratio_symmetry", "r3 fixed by (012)(345), inverted by (12)(45)", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Configuration c = env.config(6, 3);
         RationalFunction r = triple_ratio_term(c);
         out.require(triple_ratio_term(c.relabeled(Permutation({1, 2, 0, 4, 5, 3}))) == r);
         out.require(triple_ratio_term(c.relabeled(Permutation({0, 2, 1, 3, 5, 4}))) == r.inverse());
         return out;
       }},
      {"claim3b", "partialD o tau2_3 = tau1_3 o d on C_6(3)", Tier::Both, 5,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         Configuration c = env.config(6, 3);
         Tau23Result t = tau2_3_detailed(c);
         out.require(t.terms == 720);
         SpecializationSampler smp = env.sampler();
         out.mid(ctx, partial3(ctx, t.value), tau1_3(ctx, boundary_d(c)), smp, env.numeric());
         return out;
       }},
      {"partial_sq_zero", "partialD o partialD3 = 0 and delta2 vanishes on a five-term relation", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         BetaElement e(3);
         for (int i = 0; i < 3; ++i)
           e.add(env.rng()() % 2 ? Kind::D : Kind::Plain, env.argument(), FieldCoeff::value(ctx, env.argument()));
         out.zero(ctx, partial_mid(ctx, partial3(ctx, e)));
         RationalFunction a = env.argument(), b = env.argument();
         if (a != b) out.zero(ctx, delta2(ctx, make_relator(ctx, "five_term_B2", {a, b}).b2));
         return out;
       }},
      {"relators_beta2D", "partialD2 kills two-term, inversion, five-term, distribution relators", Tier::Exact, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         RationalFunction a = env.argument(), b = env.argument();
         for (const char* name : {"two_term", "inversion", "distribution2", "distribution2_D"})
           out.zero(ctx, partial2(ctx, make_relator(ctx, name, {a}).beta));
         if (a != b) out.zero(ctx, partial2(ctx, make_relator(ctx, "five_term_betaD", {a, b}).beta));
         return out;
       }},
      {"relator_four_term_beta2", "partial2 kills the four-term relation", Tier::Both, 100,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         RationalFunction a = env.argument(), b = env.argument();
         if (a == b) return out;
         BetaElement e = make_relator(ctx, "four_term_beta2", {a, b}).beta;
         out.zero(ctx, partial2(ctx, e));
         entropy_residuals(ctx, e, env, 1, out);
         return out;
       }},
      {"relator_22term", "partial3 of the 22-term relation vanishes", Tier::Both, 25,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         RationalFunction a = env.argument(), b = env.argument(), c = env.argument();
         BetaElement e = make_relator(ctx, "twenty_two_term", {a, b, c}).beta;
         SpecializationSampler smp = env.sampler();
         out.mid(verify_mid_equal(ctx, partial3(ctx, e), MidElement{}, smp, env.numeric()), env.tol());
         return out;
       }},
      {"remark_alld_1", "tau0_2 o d' = 0 on C_4(3)", Tier::Exact, 50,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         out.zero(ctx, tau0_n(ctx, boundary_dprime(env.config(4, 3)), 2));
         return out;
       }},
      {"remark_alld_2", "tau1_2 o d' = 0 on C_5(3)", Tier::Exact, 50,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         out.zero(ctx, partial2(ctx, tau1_2(boundary_dprime(env.config(5, 3)))));
         return out;
       }},
      {"remark_alld_3", "tau0_3 o d' = 0 on C_5(4)", Tier::Exact, 50,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         out.zero(ctx, tau0_n(ctx, boundary_dprime(env.config(5, 4)), 3));
         return out;
       }},
      {"remark_alld_n", "tau0_n o d' = 0 on C_{n+2}(n+1), n = 2..5", Tier::Exact, 50,
       [](TrialEnv& env) {
         TrialOutcome out;
         Context ctx = env.context();
         int n = 2 + int(env.rng()() % 4);
         out.zero(ctx, tau0_n(ctx, boundary_dprime(env.config(n + 2, n + 1)), n));
         return out;
       }},
      {"numeric_oracles", "D2 five-term, entropy four-term, D2(i) = Catalan", Tier::Numeric, 1,
       [](TrialEnv& env) {
         TrialOutcome out;
         check_numeric_oracles(env, out);
         return out;
       }},
  };
  return catalog;
}

inline const CheckDescriptor* find_check(std::string_view id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return &c;
  return nullptr;
}

class UnknownCheck : public std::invalid_argument {
 public:
  explicit UnknownCheck(std::string_view id) : std::invalid_argument(message(id)) {}

 private:
  static std::string message(std::string_view id) {
    std::string s = "unknown check '" + std::string(id) + "'; available:";
    for (const auto& c : check_catalog()) s += " " + c.id;
    return s;
  }
};

// statements in scope and the checks bound to them
struct Statement {
  std::string name;
  std::vector<std::string> checks;
};

inline const std::vector<Statement>& statement_map() {
  static const std::vector<Statement> statements{
      {"d o d = 0", {"dd_zero"}},
      {"d' o d' = 0, bicomplex", {"dprime_dprime_zero"}},
      {"four-point determinant identity", {"cross_ratio_identity_2did"}},
      {"tau0_2 volume independence", {"tau0_2_volume_invariance"}},
      {"tau0_2 o d length independence", {"tau0_2_length_invariance"}},
      {"weight 2 square commutes", {"claim1"}},
      {"tau1_2 o d in ker partialD2", {"tau12d_kernel"}},
      {"five-point relation in B2", {"gon5term"}},
      {"projected five-term relation in beta2^D", {"lemma_4pt"}},
      {"four-term relation from a five-point configuration", {"example_four_term"}},
      {"tau0_3 volume independence", {"tau0_3_volume"}},
      {"tau1_3 volume independence", {"tau1_3_volume"}},
      {"tau1_3 o d length independence", {"tau1_3_length"}},
      {"weight 3 lower square commutes", {"claim3a"}},
      {"alternation form of tau1_3", {"tau1_3_alt_form"}},
      {"triple ratio as a quotient of projected cross ratios", {"triple_ratio_factorization"}},
      {"triple ratio symmetries", {"triple_ratio_symmetry"}},
      {"weight 3 upper square commutes", {"claim3b"}},
      {"differentials square to zero", {"partial_sq_zero"}},
      {"functional equations in beta2^D", {"relators_beta2D"}},
      {"four-term relation in beta2", {"relator_four_term_beta2"}},
      {"22-term relation in beta3", {"relator_22term"}},
      {"tau o d' vanishes", {"remark_alld_1", "remark_alld_2", "remark_alld_3", "remark_alld_n"}},
      {"numeric realizations", {"numeric_oracles"}},
  };
  return statements;
}

// statements whose bound checks are missing from the catalog
inline std::vector<std::string> audit_unbound() {
  std::vector<std::string> out;
  for (const auto& s : statement_map()) {
    bool ok = !s.checks.empty();
    for (const auto& id : s.checks) ok = ok && find_check(id);
    if (!ok) out.push_back(s.name);
  }
  return out;
}

inline CheckReport run_check(const CheckDescriptor& d, const CheckOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.id = d.id;
  rep.anchor = d.anchor;
  rep.tier = d.tier;
  rep.seed = opt.seed;
  rep.trials = opt.trials.value_or(d.default_trials);
  std::optional<Real> max_residual;
  std::optional<mpq_class> ratio;
  bool ratio_consistent = true, any_failure = false, numeric_failure = false, all_scaled_ok = true;
  try {
    for (int t = 0; t < rep.trials; ++t) {
      TrialEnv env(trial_seed(opt.seed, d.id, t), opt);
      TrialOutcome o;
      for (int attempt = 0;; ++attempt) {
        try {
          o = d.body(env);
          break;
        } catch (const NonGenericConfiguration&) {
          if (attempt >= 20) throw;
        } catch (const DegenerateArgument&) {
          if (attempt >= 20) throw;
        }
      }
      if (o.max_residual && (!max_residual || *o.max_residual > *max_residual)) max_residual = o.max_residual;
      rep.residual_count += o.residual_count;
      if (!o.numeric_ok) numeric_failure = true;
      if (!o.exact_ok) {
        any_failure = true;
        all_scaled_ok = all_scaled_ok && o.scaled_ok;
        if (!o.ratio_known || !o.ratio || (ratio && *ratio != *o.ratio))
          ratio_consistent = false;
        else
          ratio = o.ratio;
      }
      if (o.exact_ok && o.numeric_ok) ++rep.passed;
    }
    if (any_failure || numeric_failure)
      rep.status = Status::Fail;
    else if (max_residual && *max_residual > Real(opt.tolerance * 1e-2))
      rep.status = Status::Warn;
    if (!any_failure)
      rep.ratio = "1";
    else if (ratio_consistent && ratio && rep.passed == 0)
      rep.ratio = ratio->get_str();
    if (any_failure) rep.message = "exact sides differ";
    if (numeric_failure) rep.message += std::string(rep.message.empty() ? "" : "; ") + "numeric residual above tolerance";
    if (rep.ratio && any_failure && all_scaled_ok)
      rep.message += "; both tiers pass after scaling the right side by " + *rep.ratio;
  } catch (const std::exception& e) {
    rep.status = Status::Error;
    rep.message = e.what();
  }
  if (max_residual) rep.max_residual = numeric::sci(*max_residual, 3);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline CheckReport run_check(std::string_view id, const CheckOptions& opt) {
  const CheckDescriptor* d = find_check(id);
  if (!d) throw UnknownCheck(id);
  return run_check(*d, opt);
}

// checks run on up to `jobs` threads; the report keeps the requested order
inline std::vector<CheckReport> run_checks(const std::vector<std::string>& ids,
                                           const std::function<CheckOptions(const std::string&)>& options_for,
                                           unsigned precision, int jobs = 1) {
  std::vector<const CheckDescriptor*> todo;
  std::vector<CheckOptions> opts;
  for (const auto& id : ids) {
    const CheckDescriptor* d = find_check(id);
    if (!d) throw UnknownCheck(id);
    todo.push_back(d);
    opts.push_back(options_for(id));
    opts.back().precision = precision;
  }
  std::vector<CheckReport> out(todo.size());
  numeric::PrecisionScope scope(precision);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) out[i] = run_check(*todo[i], opts[i]);
  };
  if (jobs <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

inline std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckOptions& opt, int jobs = 1) {
  return run_checks(ids, [&](const std::string&) { return opt; }, opt.precision, jobs);
}

inline std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : check_catalog()) ids.push_back(c.id);
  return ids;
}

}  // namespace grassmann
