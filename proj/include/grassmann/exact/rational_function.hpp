#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "grassmann/exact/gcd.hpp"

namespace grassmann {

// num/den with gcd 1, integer coefficients of joint content 1, lc(den) > 0.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Polynomial& p) : RationalFunction(normalize(p, Polynomial(1))) {}  // NOLINT
  RationalFunction(const mpq_class& c) : RationalFunction(Polynomial(c)) {}                  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}                               // NOLINT

  static RationalFunction variable(std::size_t i) { return RationalFunction(Polynomial::variable(i)); }

  static RationalFunction normalize(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZero();
    RationalFunction r;
    if (num.is_zero()) return r;
    Polynomial g = polynomial_gcd(num, den);
    if (!g.is_constant()) {
      num = *num.divide_exact(g);
      den = *den.divide_exact(g);
    }
    mpz_class l = 1, n = 0;
    for (const Polynomial* p : {&num, &den})
      for (const auto& t : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (const Polynomial* p : {&num, &den})
      for (const auto& t : p->terms()) {
        mpz_class c = t.coeff.get_num() * (l / t.coeff.get_den());
        mpz_gcd(n.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
      }
    mpq_class s(l, n);
    s.canonicalize();
    if (den.leading_coeff() < 0) s = -s;
    r.num_ = num.scaled(s);
    r.den_ = den.scaled(s);
    return r;
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  mpq_class constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool is_one() const { return is_constant() && !is_zero() && num_ == den_; }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_);
    return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    return normalize(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero();
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading_coeff() < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
    return r;
  }

  RationalFunction scaled(const mpq_class& c) const {
    if (c == 0 || is_zero()) return {};
    return normalize(num_.scaled(c), den_);
  }

  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r;
    r.num_ = num_.pow(unsigned(e));
    r.den_ = den_.pow(unsigned(e));
    return r;
  }

  RationalFunction derivative(std::size_t v) const {
    Polynomial dn = num_.derivative(v), dd = den_.derivative(v);
    if (dd.is_zero()) return normalize(dn, den_);
    return normalize(dn * den_ - num_ * dd, den_ * den_);
  }

  mpq_class evaluate(std::span<const mpq_class> point) const {
    mpq_class d = den_.evaluate(point);
    if (d == 0) throw PoleError();
    return num_.evaluate(point) / d;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  std::size_t hash() const { return num_.hash() * 7919u ^ den_.hash(); }

 private:
  Polynomial num_;
  Polynomial den_;
};

inline std::vector<std::string> default_variable_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

inline std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    bool unit = c == 1;
    if (!unit || t.mono.is_one()) {
      os << c.get_str();
      if (!t.mono.is_one()) os << "*";
    }
    bool firstvar = true;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << (i < names.size() ? names[i] : "t" + std::to_string(i + 1));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

inline std::string to_string(const RationalFunction& f, const std::vector<std::string>& names) {
  std::string n = to_string(f.numerator(), names);
  if (f.denominator().is_one()) return n;
  const Polynomial& den = f.denominator();
  bool simple_den = den.size() == 1 && (den.is_constant() || den.leading_coeff() == 1);
  bool simple_num = f.numerator().size() == 1 && f.numerator().leading_coeff() > 0 &&
                    (f.numerator().is_constant() || f.numerator().leading_coeff() == 1);
  std::string d = to_string(den, names);
  return (simple_num ? n : "(" + n + ")") + "/" + (simple_den ? d : "(" + d + ")");
}

}  // namespace grassmann

template <>
struct std::hash<grassmann::RationalFunction> {
  std::size_t operator()(const grassmann::RationalFunction& f) const { return f.hash(); }
};
