#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grassmann/field_coeff.hpp"

namespace grassmann {

enum class TensorKind {
  FieldWedge,   // F (x) wedge^m F^x, m = 1 is F (x) F^x
  FieldTensor,  // F (x) F^x (x) ... (x) F^x
  Wedge,        // wedge^n F^x (x) Q
};

struct TensorShape {
  TensorKind kind = TensorKind::FieldWedge;
  int legs = 1;
  friend bool operator==(const TensorShape&, const TensorShape&) = default;

  std::string name() const {
    switch (kind) {
      case TensorKind::FieldWedge: return "F(x)Wedge" + std::to_string(legs);
      case TensorKind::FieldTensor: return "F(x)Fx^" + std::to_string(legs);
      case TensorKind::Wedge: return "Wedge" + std::to_string(legs);
    }
    return "?";
  }
};

inline TensorShape field_wedge(int m) { return {TensorKind::FieldWedge, m}; }
inline TensorShape field_tensor(int m) { return {TensorKind::FieldTensor, m}; }
inline TensorShape wedge(int n) { return {TensorKind::Wedge, n}; }

using TensorKey = std::vector<int>;

class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(TensorShape shape) : shape_(shape) {}

  const TensorShape& shape() const { return shape_; }
  const std::map<TensorKey, FieldCoeff>& terms() const { return terms_; }
  bool is_formally_zero() const { return terms_.empty(); }

  std::size_t basis_term_count() const {
    std::size_t n = 0;
    for (const auto& [k, c] : terms_) n += c.terms().size();
    return n;
  }

  // c * (l1 op l2 op ...), expanded multilinearly over the atoms of each leg
  void add(const FieldCoeff& c, const std::vector<Legs>& legs) {
    if (int(legs.size()) != shape_.legs) throw ShapeMismatch("expected " + std::to_string(shape_.legs) + " legs");
    if (c.is_formally_zero()) return;
    if (shape_.kind == TensorKind::Wedge && !c.is_rational()) throw ShapeMismatch("wedge coefficients are rational");
    TensorKey key(legs.size());
    expand(c, legs, 0, 1, key);
  }

  void add(Context& ctx, const FieldCoeff& c, const std::vector<RationalFunction>& legs) {
    std::vector<Legs> ls;
    ls.reserve(legs.size());
    for (const auto& l : legs) ls.push_back(ctx.legs(l));
    add(c, ls);
  }

  void add_key(const TensorKey& key, const FieldCoeff& c) {
    if (c.is_formally_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_formally_zero()) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) { return accumulate(o, 1); }
  TensorElement& operator-=(const TensorElement& o) { return accumulate(o, -1); }
  TensorElement& accumulate(const TensorElement& o, const mpq_class& s) {
    check_shape(o);
    for (const auto& [k, c] : o.terms_) add_key(k, c.scaled(s));
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  TensorElement scaled(const mpq_class& s) const {
    TensorElement r(shape_);
    if (s != 0)
      for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled(s));
    return r;
  }

  // dead atoms rewritten in keys and coefficients, formal zeros dropped
  TensorElement canonical(Context& ctx) const {
    TensorElement r(shape_);
    for (const auto& [k, c] : terms_) {
      std::vector<Legs> legs;
      for (int a : k) legs.push_back(ctx.base().expand(Legs::single(a)));
      r.add(c.canonical(ctx), legs);
    }
    return r;
  }

  std::map<TensorKey, RationalFunction> materialized(Context& ctx) const {
    std::map<TensorKey, RationalFunction> out;
    for (const auto& [k, c] : canonical(ctx).terms_) {
      RationalFunction f = c.materialize(ctx);
      if (!f.is_zero()) out.emplace(k, std::move(f));
    }
    return out;
  }

  bool is_zero(Context& ctx) const {
    for (const auto& [k, c] : canonical(ctx).terms_)
      if (!c.materialize(ctx).is_zero()) return false;
    return true;
  }

  void check_shape(const TensorElement& o) const {
    if (!(o.shape_ == shape_)) throw ShapeMismatch(shape_.name() + " vs " + o.shape_.name());
  }

 private:
  TensorShape shape_;
  std::map<TensorKey, FieldCoeff> terms_;

  void expand(const FieldCoeff& c, const std::vector<Legs>& legs, std::size_t pos, long mult, TensorKey& key) {
    if (pos == legs.size()) {
      if (shape_.kind == TensorKind::FieldTensor) {
        add_key(key, c.scaled(mult));
        return;
      }
      TensorKey k = key;
      int sign = 1;
      for (std::size_t i = 1; i < k.size(); ++i)
        for (std::size_t j = i; j > 0 && k[j - 1] > k[j]; --j) {
          std::swap(k[j - 1], k[j]);
          sign = -sign;
        }
      for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i] == k[i - 1]) return;
      add_key(k, c.scaled(mult * sign));
      return;
    }
    for (const auto& [a, e] : legs[pos].entries()) {
      key[pos] = a;
      expand(c, legs, pos + 1, mult * e, key);
    }
  }
};

inline bool equals(Context& ctx, const TensorElement& a, const TensorElement& b) {
  a.check_shape(b);
  return (a - b).is_zero(ctx);
}

// lambda with a = lambda * b, if one exists
inline std::optional<mpq_class> scalar_ratio(Context& ctx, const TensorElement& a, const TensorElement& b) {
  a.check_shape(b);
  auto ma = a.materialized(ctx), mb = b.materialized(ctx);
  if (mb.empty()) return std::nullopt;
  const auto& [key, fb] = *mb.begin();
  auto it = ma.find(key);
  if (it == ma.end()) return mpq_class(0);
  RationalFunction q = it->second / fb;
  if (!q.is_constant()) return std::nullopt;
  mpq_class lambda = q.constant_value();
  if (!(a - b.scaled(lambda)).is_zero(ctx)) return std::nullopt;
  return lambda;
}

// stable text: atom table followed by key: coefficient lines
inline std::string serialize(Context& ctx, const TensorElement& t) {
  auto m = t.materialized(ctx);
  std::map<int, bool> used;
  for (const auto& [k, f] : m)
    for (int a : k) used[a] = true;
  std::ostringstream os;
  os << t.shape().name() << "\n";
  if (m.empty()) os << "0\n";
  for (const auto& [a, u] : used) os << "atom " << a << " = " << ctx.str(ctx.base().atom(a).value) << "\n";
  for (const auto& [k, f] : m) {
    os << "[";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << "] " << ctx.str(f) << "\n";
  }
  return os.str();
}

}  // namespace grassmann
