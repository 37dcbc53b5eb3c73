#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

#include "grassmann/exact/rational_function.hpp"

namespace grassmann::numeric {

using Real = boost::multiprecision::mpfr_float;

// Process-wide working precision in decimal digits; restores on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm(z)); }
inline Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }
inline Complex log(const Complex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

inline Complex lift(const mpq_class& q) { return Complex(to_real(q)); }

inline Complex evaluate(const Polynomial& p, std::span<const Complex> point) {
  return p.evaluate_with<Complex>(point, [](const mpq_class& q) { return lift(q); });
}

// pole when the denominator is below pole_floor in magnitude
inline Complex evaluate(const RationalFunction& f, std::span<const Complex> point, const Real& pole_floor) {
  Complex d = evaluate(f.denominator(), point);
  if (abs(d) <= pole_floor) throw PoleError();
  if (f.denominator().is_constant()) {
    Complex n = evaluate(f.numerator(), point);
    return {n.re / d.re, n.im / d.re};
  }
  return evaluate(f.numerator(), point) / d;
}

inline std::string sci(const Real& x, int digits = 6) { return x.str(digits, std::ios_base::scientific); }

}  // namespace grassmann::numeric
