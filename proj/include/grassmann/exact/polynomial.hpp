#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grassmann/errors.hpp"

namespace grassmann {

inline constexpr std::size_t kMaxVariables = 8;

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVariables) throw std::out_of_range("monomial variable index");
    if (e > 0xFFFFu) throw std::overflow_error("exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<std::uint16_t>(e);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = unsigned(exps_[i]) + o.exps_[i];
      if (e > 0xFFFFu) throw std::overflow_error("exponent overflow");
      r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // o / *this, requires divides(o)
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      r.exps_[i] = static_cast<std::uint16_t>(o.exps_[i] - exps_[i]);
    r.degree_ = o.degree_ - degree_;
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

// graded lex, t1 > t2 > ...
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

class Polynomial {
 public:
  struct Term {
    Monomial mono;
    mpq_class coeff;
  };

  Polynomial() = default;
  Polynomial(const mpq_class& c) {  // NOLINT implicit constants
    if (c != 0) terms_.push_back({Monomial{}, c});
  }
  Polynomial(long c) : Polynomial(mpq_class(c)) {}  // NOLINT

  static Polynomial variable(std::size_t i) {
    Polynomial p;
    p.terms_.push_back({Monomial::variable(i), mpq_class(1)});
    return p;
  }

  static Polynomial monomial(const Monomial& m, const mpq_class& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  // terms in any order, merged and sorted
  static Polynomial from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

  mpq_class constant_value() const {
    if (terms_.empty()) return 0;
    const Term& t = terms_.back();
    return t.mono.is_one() ? t.coeff : mpq_class(0);
  }

  const Term& leading_term() const { return terms_.front(); }
  const mpq_class& leading_coeff() const { return terms_.front().coeff; }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  unsigned total_degree() const {
    return terms_.empty() ? 0 : terms_.front().mono.degree();
  }

  unsigned degree_in(std::size_t v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
  }

  std::uint32_t variable_mask() const {
    std::uint32_t m = 0;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (t.mono[i]) m |= 1u << i;
    return m;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
    return from_terms(std::move(out));
  }

  Polynomial scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  // exact quotient or nullopt
  std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (is_zero()) return Polynomial{};
    if (d.terms_.size() == 1) {
      Polynomial q;
      q.terms_.reserve(terms_.size());
      mpq_class inv = 1 / d.terms_[0].coeff;
      for (const auto& t : terms_) {
        if (!d.terms_[0].mono.divides(t.mono)) return std::nullopt;
        q.terms_.push_back({d.terms_[0].mono.quotient_of(t.mono), t.coeff * inv});
      }
      return q;
    }
    Polynomial r = *this;
    std::vector<Term> q;
    const Term& ld = d.terms_.front();
    while (!r.is_zero()) {
      const Term& lr = r.terms_.front();
      if (!ld.mono.divides(lr.mono)) return std::nullopt;
      Term qt{ld.mono.quotient_of(lr.mono), lr.coeff / ld.coeff};
      r -= d.times_term(qt);
      q.push_back(std::move(qt));
    }
    Polynomial out;
    out.terms_ = std::move(q);
    return out;
  }

  Polynomial derivative(std::size_t v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono[v];
      if (!e) continue;
      Monomial m = t.mono;
      m.set(v, e - 1);
      out.push_back({m, t.coeff * e});
    }
    return from_terms(std::move(out));
  }

  // coefficients in v, index = power of v
  std::vector<Polynomial> coefficients_in(std::size_t v) const {
    std::vector<std::vector<Term>> buckets(degree_in(v) + 1);
    for (const auto& t : terms_) {
      Monomial m = t.mono;
      unsigned e = m[v];
      m.set(v, 0);
      buckets[e].push_back({m, t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
  }

  static Polynomial from_coefficients(const std::vector<Polynomial>& cs, std::size_t v) {
    std::vector<Term> out;
    for (std::size_t e = 0; e < cs.size(); ++e)
      for (const auto& t : cs[e].terms_) out.push_back({t.mono * Monomial::variable(v, unsigned(e)), t.coeff});
    return from_terms(std::move(out));
  }

  template <class Scalar, class Lift>
  Scalar evaluate_with(std::span<const Scalar> point, Lift lift) const {
    Scalar acc = lift(mpq_class(0));
    if (terms_.empty()) return acc;
    std::vector<std::vector<Scalar>> powers(kMaxVariables);
    for (const auto& t : terms_) {
      Scalar term = lift(t.coeff);
      for (std::size_t i = 0; i < kMaxVariables; ++i) {
        unsigned e = t.mono[i];
        if (!e) continue;
        if (i >= point.size()) throw std::out_of_range("evaluation point too short");
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(point[i]);
        while (pw.size() < e) pw.push_back(pw.back() * point[i]);
        term = term * pw[e - 1];
      }
      acc = acc + term;
    }
    return acc;
  }

  mpq_class evaluate(std::span<const mpq_class> point) const {
    return evaluate_with<mpq_class>(point, [](const mpq_class& q) { return q; });
  }

  // substitute t_v := value
  Polynomial substitute(std::size_t v, const mpq_class& value) const {
    auto cs = coefficients_in(v);
    Polynomial acc;
    for (std::size_t e = cs.size(); e-- > 0;) acc = acc.scaled(value) + cs[e];
    return acc;
  }

  // lcm of coefficient denominators and gcd of numerators
  mpq_class content() const {
    if (terms_.empty()) return 0;
    mpz_class num = 0, den = 1;
    for (const auto& t : terms_) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    mpq_class c(num, den);
    c.canonicalize();
    return c;
  }

  // integer coefficients, content 1, positive leading coefficient
  Polynomial primitive() const {
    if (terms_.empty()) return {};
    mpq_class c = content();
    if (leading_coeff() < 0) c = -c;
    return scaled(1 / c);
  }

  bool is_primitive() const {
    if (terms_.empty() || leading_coeff() < 0) return false;
    mpz_class g = 0;
    for (const auto& t : terms_) {
      if (t.coeff.get_den() != 1) return false;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    return g == 1;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }

  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = grlex_compare(a.terms_[i].mono, b.terms_[i].mono);
      if (c) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
      int q = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
      if (q) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
      h = h * 1000003u ^ t.mono.hash();
      h = h * 1000003u ^ std::size_t(mpz_get_si(t.coeff.get_num_mpz_t()));
      h = h * 1000003u ^ std::size_t(mpz_get_si(t.coeff.get_den_mpz_t()));
    }
    return h;
  }

 private:
  std::vector<Term> terms_;  // strictly decreasing in grlex

  Polynomial times_term(const Term& s) const {
    Polynomial r;
    if (s.coeff == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
    return r;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c = i == a.terms_.size()   ? -1
              : j == b.terms_.size() ? 1
                                     : grlex_compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const Term& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? mpq_class(-t.coeff) : t.coeff});
      } else {
        mpq_class s = subtract ? mpq_class(a.terms_[i].coeff - b.terms_[j].coeff)
                               : mpq_class(a.terms_[i].coeff + b.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    return r;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grlex_compare(x.mono, y.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff += t.coeff;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
  }
};

}  // namespace grassmann

template <>
struct std::hash<grassmann::Polynomial> {
  std::size_t operator()(const grassmann::Polynomial& p) const { return p.hash(); }
};
