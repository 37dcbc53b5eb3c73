#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "grassmann/formal_sum.hpp"
#include "grassmann/tensor.hpp"

namespace grassmann {

// Plain is the Cathelineau generator <a>; D is [[a]]^D = D(a)/(a(1-a)) <a>.
enum class Kind { Plain, D };

struct Generator {
  Kind kind = Kind::D;
  RationalFunction arg;
  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

inline bool is_degenerate_argument(const RationalFunction& a) { return a.is_zero() || a.is_one(); }

// B2(F): rational combinations of [x]; [0] and [1] vanish.
class B2Element {
 public:
  using Sum = FormalSum<RationalFunction, mpq_class>;

  void add(const RationalFunction& x, const mpq_class& c) {
    if (!is_degenerate_argument(x)) terms_.add(x, c);
  }
  const Sum& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  B2Element& operator+=(const B2Element& o) {
    terms_ += o.terms_;
    return *this;
  }
  B2Element& operator-=(const B2Element& o) {
    terms_ -= o.terms_;
    return *this;
  }
  B2Element operator-() const {
    B2Element r;
    r -= *this;
    return r;
  }
  friend B2Element operator+(B2Element a, const B2Element& b) { return a += b; }
  friend B2Element operator-(B2Element a, const B2Element& b) { return a -= b; }

 private:
  Sum terms_;
};

inline B2Element b2(const RationalFunction& x, const mpq_class& c = 1) {
  B2Element e;
  e.add(x, c);
  return e;
}

// Weight 2 or 3 element: sum of f * <a>_n or f * [[a]]^D_n with f in F.
class BetaElement {
 public:
  using Sum = FormalSum<Generator, FieldCoeff>;

  explicit BetaElement(int weight = 2) : weight_(weight) {}

  int weight() const { return weight_; }
  const Sum& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(Kind kind, const RationalFunction& a, const FieldCoeff& f) {
    if (is_degenerate_argument(a)) throw DegenerateArgument("generator argument must avoid 0 and 1");
    terms_.add({kind, a}, f);
  }

  BetaElement& operator+=(const BetaElement& o) {
    check(o);
    terms_ += o.terms_;
    return *this;
  }
  BetaElement& operator-=(const BetaElement& o) {
    check(o);
    terms_ -= o.terms_;
    return *this;
  }
  BetaElement operator-() const {
    BetaElement r(weight_);
    r -= *this;
    return r;
  }
  friend BetaElement operator+(BetaElement a, const BetaElement& b) { return a += b; }
  friend BetaElement operator-(BetaElement a, const BetaElement& b) { return a -= b; }

  BetaElement scaled(const mpq_class& s) const {
    BetaElement r(weight_);
    for (const auto& [g, f] : terms_) r.terms_.add(g, f.scaled(s));
    return r;
  }

 private:
  int weight_;
  Sum terms_;

  void check(const BetaElement& o) const {
    if (o.weight_ != weight_) throw ShapeMismatch("weight " + std::to_string(weight_) + " vs " + std::to_string(o.weight_));
  }
};

inline BetaElement beta_generator(int weight, Kind kind, const RationalFunction& a, const FieldCoeff& f = FieldCoeff(1)) {
  BetaElement e(weight);
  e.add(kind, a, f);
  return e;
}

struct MidLeftKey {
  Generator gen;
  int atom = 0;
  friend auto operator<=>(const MidLeftKey&, const MidLeftKey&) = default;
  friend bool operator==(const MidLeftKey&, const MidLeftKey&) = default;
};

// (beta2 (x) F^x) + (F (x) B2): left f * g (x) b, right x (x) [y]
class MidElement {
 public:
  using Left = FormalSum<MidLeftKey, FieldCoeff>;
  using Right = FormalSum<RationalFunction, FieldCoeff>;

  const Left& left() const { return left_; }
  const Right& right() const { return right_; }

  void add_left(Kind kind, const RationalFunction& a, const FieldCoeff& f, const Legs& b) {
    if (is_degenerate_argument(a)) throw DegenerateArgument("generator argument must avoid 0 and 1");
    for (const auto& [atom, e] : b.entries()) left_.add({{kind, a}, atom}, f.scaled(e));
  }
  void add_left(Context& ctx, Kind kind, const RationalFunction& a, const FieldCoeff& f, const RationalFunction& b) {
    add_left(kind, a, f, ctx.legs(b));
  }
  void add_right(const FieldCoeff& x, const RationalFunction& y) {
    if (!is_degenerate_argument(y)) right_.add(y, x);
  }

  MidElement& operator+=(const MidElement& o) {
    left_ += o.left_;
    right_ += o.right_;
    return *this;
  }
  MidElement& operator-=(const MidElement& o) {
    left_ -= o.left_;
    right_ -= o.right_;
    return *this;
  }
  MidElement operator-() const {
    MidElement r;
    r -= *this;
    return r;
  }
  friend MidElement operator+(MidElement a, const MidElement& b) { return a += b; }
  friend MidElement operator-(MidElement a, const MidElement& b) { return a -= b; }

  MidElement scaled(const mpq_class& s) const {
    MidElement r;
    for (const auto& [k, f] : left_) r.left_.add(k, f.scaled(s));
    for (const auto& [y, x] : right_) r.right_.add(y, x.scaled(s));
    return r;
  }

  // rewrite dead atoms in the left keys
  MidElement canonical(Context& ctx) const {
    MidElement r;
    for (const auto& [k, f] : left_) {
      if (ctx.base().atom(k.atom).alive) {
        r.left_.add(k, f.canonical(ctx));
        continue;
      }
      Legs parts = ctx.base().expand(Legs::single(k.atom));
      r.add_left(k.gen.kind, k.gen.arg, f.canonical(ctx), parts);
    }
    for (const auto& [y, x] : right_) r.right_.add(y, x.canonical(ctx));
    return r;
  }

 private:
  Left left_;
  Right right_;
};

// delta2 [x] = (1 - x) ^ x
inline TensorElement delta2(Context& ctx, const B2Element& e) {
  TensorElement t(wedge(2));
  for (const auto& [x, c] : e.terms()) t.add(FieldCoeff(c), {ctx.legs(RationalFunction(1) - x), ctx.legs(x)});
  return t;
}

// partial of f * generator into F (x) F^x, appended to t
inline void add_partial2(Context& ctx, TensorElement& t, const Generator& g, const FieldCoeff& f, const mpq_class& scale = 1) {
  const RationalFunction& a = g.arg;
  RationalFunction b = RationalFunction(1) - a;
  Legs la = ctx.legs(a), lb = ctx.legs(b);
  if (g.kind == Kind::Plain) {
    t.add(f.times(ctx, FieldCoeff::value(ctx, a)).scaled(scale), {la});
    t.add(f.times(ctx, FieldCoeff::value(ctx, b)).scaled(scale), {lb});
  } else {
    t.add(f.times(ctx, FieldCoeff::dlog(ctx, lb)).scaled(-scale), {la});
    t.add(f.times(ctx, FieldCoeff::dlog(ctx, la)).scaled(scale), {lb});
  }
}

inline TensorElement partial2(Context& ctx, const BetaElement& e) {
  if (e.weight() != 2) throw ShapeMismatch("partial2 needs weight 2");
  TensorElement t(field_wedge(1));
  for (const auto& [g, f] : e.terms()) add_partial2(ctx, t, g, f);
  return t;
}

inline MidElement partial3(Context& ctx, const BetaElement& e) {
  if (e.weight() != 3) throw ShapeMismatch("partial3 needs weight 3");
  MidElement m;
  for (const auto& [g, f] : e.terms()) {
    Legs la = ctx.legs(g.arg);
    m.add_left(g.kind, g.arg, f, la);
    if (g.kind == Kind::D)
      m.add_right(f.times(ctx, FieldCoeff::dlog(ctx, la)), g.arg);
    else
      m.add_right(f.times(ctx, FieldCoeff::value(ctx, RationalFunction(1) - g.arg)), g.arg);
  }
  return m;
}

// partial2 (x) id on the left summands, in F (x) F^x (x) F^x
inline TensorElement mid_left_tensor(Context& ctx, const MidElement& m) {
  TensorElement out(field_tensor(2));
  for (const auto& [k, f] : m.left()) {
    TensorElement t(field_wedge(1));
    add_partial2(ctx, t, k.gen, f);
    for (const auto& [key, c] : t.terms()) out.add_key({key[0], k.atom}, c);
  }
  return out;
}

// id (x) delta2 on the right summands, in F (x) wedge^2 F^x
inline TensorElement mid_right_wedge(Context& ctx, const MidElement& m) {
  TensorElement out(field_wedge(2));
  for (const auto& [y, x] : m.right()) out.add(x, {ctx.legs(RationalFunction(1) - y), ctx.legs(y)});
  return out;
}

// (g (x) b) -> -(partial2 g) ^ b,  x (x) [y] -> x (x) (1 - y) ^ y
inline TensorElement partial_mid(Context& ctx, const MidElement& m) {
  TensorElement out = mid_right_wedge(ctx, m);
  for (const auto& [k, f] : m.left()) {
    TensorElement t(field_wedge(1));
    add_partial2(ctx, t, k.gen, f, -1);
    for (const auto& [key, c] : t.terms()) out.add(c, {Legs::single(key[0]), Legs::single(k.atom)});
  }
  return out;
}

// [x] -> [[x]]^D
inline BetaElement tau2D(const B2Element& e) {
  BetaElement out(2);
  for (const auto& [x, c] : e.terms()) out.add(Kind::D, x, FieldCoeff(c));
  return out;
}

// F-coefficient of a D generator written as a plain one: D(a)/(a(1-a))
inline RationalFunction d_weight(const Context& ctx, const RationalFunction& a) {
  return ctx.derivation().apply(a) / (a * (RationalFunction(1) - a));
}

inline std::string generator_name(const Context& ctx, const Generator& g, int weight) {
  std::string a = ctx.str(g.arg);
  if (g.kind == Kind::D) return "[[" + a + "]]^D_" + std::to_string(weight);
  return "<" + a + ">_" + std::to_string(weight);
}

inline std::string serialize(Context& ctx, const B2Element& e) {
  std::ostringstream os;
  os << "B2\n";
  for (const auto& [x, c] : e.terms()) os << c.get_str() << " [" << ctx.str(x) << "]_2\n";
  return os.str();
}

inline std::string serialize(Context& ctx, const BetaElement& e) {
  std::ostringstream os;
  os << "beta" << e.weight() << "\n";
  for (const auto& [g, f] : e.terms()) os << "(" << ctx.str(f.materialize(ctx)) << ") " << generator_name(ctx, g, e.weight()) << "\n";
  return os.str();
}

inline std::string serialize(Context& ctx, const MidElement& m) {
  MidElement c = m.canonical(ctx);
  std::ostringstream os;
  os << "beta2 (x) F^x + F (x) B2\n";
  for (const auto& [k, f] : c.left())
    os << "(" << ctx.str(f.materialize(ctx)) << ") " << generator_name(ctx, k.gen, 2) << " (x) "
       << ctx.str(ctx.base().atom(k.atom).value) << "\n";
  for (const auto& [y, x] : c.right()) os << "(" << ctx.str(x.materialize(ctx)) << ") (x) [" << ctx.str(y) << "]_2\n";
  return os.str();
}

}  // namespace grassmann
