#pragma once

#include <map>

#include "grassmann/context.hpp"

namespace grassmann {

// Element of F written as sum c * g * Dlog(atom) with c rational; atom -1 means no Dlog factor.
// Formal zero implies zero; the converse needs materialize().
class FieldCoeff {
 public:
  struct Basis {
    int value = 0;
    int atom = -1;
    friend auto operator<=>(const Basis&, const Basis&) = default;
  };

  FieldCoeff() = default;
  FieldCoeff(const mpq_class& c) {  // NOLINT
    if (c != 0) terms_[{}] = c;
  }
  FieldCoeff(long c) : FieldCoeff(mpq_class(c)) {}  // NOLINT

  static FieldCoeff value(Context& ctx, const RationalFunction& f) {
    if (f.is_constant()) return FieldCoeff(f.constant_value());
    FieldCoeff r;
    r.terms_[{ctx.intern(f), -1}] = 1;
    return r;
  }

  static FieldCoeff dlog(Context& ctx, const RationalFunction& f) { return dlog(ctx, ctx.legs(f)); }

  static FieldCoeff dlog(Context& ctx, const Legs& legs) {
    FieldCoeff r;
    for (const auto& [a, e] : legs.entries())
      if (!ctx.dlog_vanishes(a)) r.terms_[{0, a}] += e;
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
  }

  const std::map<Basis, mpq_class>& terms() const { return terms_; }
  bool is_formally_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Basis{}); }
  mpq_class rational_value() const { return terms_.empty() ? mpq_class(0) : terms_.begin()->second; }

  FieldCoeff& operator+=(const FieldCoeff& o) {
    for (const auto& [b, c] : o.terms_) accumulate(b, c);
    return *this;
  }
  FieldCoeff& operator-=(const FieldCoeff& o) {
    for (const auto& [b, c] : o.terms_) accumulate(b, -c);
    return *this;
  }
  void add_scaled(const FieldCoeff& o, const mpq_class& s) {
    if (s == 0) return;
    for (const auto& [b, c] : o.terms_) accumulate(b, c * s);
  }
  friend FieldCoeff operator+(FieldCoeff a, const FieldCoeff& b) { return a += b; }
  friend FieldCoeff operator-(FieldCoeff a, const FieldCoeff& b) { return a -= b; }
  FieldCoeff operator-() const { return scaled(-1); }

  FieldCoeff scaled(const mpq_class& s) const {
    FieldCoeff r;
    if (s == 0) return r;
    r.terms_ = terms_;
    for (auto& [b, c] : r.terms_) c *= s;
    return r;
  }

  FieldCoeff times(Context& ctx, const FieldCoeff& o) const {
    if (is_rational()) return o.scaled(rational_value());
    if (o.is_rational()) return scaled(o.rational_value());
    FieldCoeff r;
    for (const auto& [b1, c1] : terms_)
      for (const auto& [b2, c2] : o.terms_) {
        if (b1.atom >= 0 && b2.atom >= 0) {
          FieldCoeff x;
          x.terms_[b1] = c1;
          FieldCoeff y;
          y.terms_[b2] = c2;
          r += value(ctx, x.materialize(ctx) * y.materialize(ctx));
          continue;
        }
        int v = b1.value == 0   ? b2.value
                : b2.value == 0 ? b1.value
                                : ctx.intern(ctx.value(b1.value) * ctx.value(b2.value));
        r.accumulate({v, std::max(b1.atom, b2.atom)}, c1 * c2);
      }
    return r;
  }

  // rewrite Dlogs of dead atoms
  FieldCoeff canonical(Context& ctx) const {
    bool clean = true;
    for (const auto& [b, c] : terms_)
      if (b.atom >= 0 && !ctx.base().atom(b.atom).alive) clean = false;
    if (clean) return *this;
    FieldCoeff r;
    for (const auto& [b, c] : terms_) {
      if (b.atom < 0 || ctx.base().atom(b.atom).alive) {
        r.accumulate(b, c);
        continue;
      }
      Legs parts = ctx.base().expand(Legs::single(b.atom));
      for (const auto& [a, e] : parts.entries())
        if (!ctx.dlog_vanishes(a)) r.accumulate({b.value, a}, c * e);
    }
    return r;
  }

  RationalFunction materialize(Context& ctx) const {
    RationalFunction total;
    auto it = terms_.begin();
    while (it != terms_.end()) {
      int g = it->first.value;
      RationalFunction inner;
      for (; it != terms_.end() && it->first.value == g; ++it) {
        if (it->first.atom < 0)
          inner += RationalFunction(it->second);
        else
          inner += ctx.dlog_atom(it->first.atom).scaled(it->second);
      }
      total += g == 0 ? inner : ctx.value(g) * inner;
    }
    return total;
  }

  friend bool operator==(const FieldCoeff&, const FieldCoeff&) = default;

 private:
  std::map<Basis, mpq_class> terms_;

  void accumulate(const Basis& b, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
};

inline bool is_formally_zero(const FieldCoeff& c) { return c.is_formally_zero(); }

}  // namespace grassmann
