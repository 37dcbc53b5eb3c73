#pragma once

#include <array>
#include <mutex>
#include <vector>

#include "grassmann/numeric/mp.hpp"

namespace grassmann::numeric {

// B_n with B_1 = -1/2
inline mpq_class bernoulli(std::size_t n) {
  static std::mutex mu;
  static std::vector<mpq_class> table{mpq_class(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    std::size_t m = table.size();
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      acc += binom * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    table.push_back(-acc / (m + 1));
  }
  return table[n];
}

// Li2(w) through u = -log(1 - w); converges for |u| < 2 pi
inline Complex dilog_series(const Complex& w) {
  Complex u = -log(Complex(Real(1)) - w);
  Real eps = boost::multiprecision::pow(Real(10), -int(Real::default_precision()) - 5);
  Complex sum = u;
  Complex upow = u;  // u^(n+1)
  mpz_class fact = 1;
  for (std::size_t n = 1;; ++n) {
    upow *= u;
    fact *= n + 1;
    if (n > 1 && n % 2 == 1) continue;
    mpq_class c = bernoulli(n) / mpq_class(fact);
    Real cr = to_real(c);
    Complex term{upow.re * cr, upow.im * cr};
    sum += term;
    if (n > 2 && abs(term) < eps * (1 + abs(sum))) break;
    if (n > 4000) break;
  }
  return sum;
}

// Bloch-Wigner D2(z) = Im Li2(z) + arg(1 - z) log|z|
inline Real bloch_wigner(const Complex& z) {
  Real zero(0);
  if (norm(z) == 0) return zero;
  Complex one(Real(1));
  if (norm(z - one) == 0) return zero;
  struct Candidate {
    Complex w;
    int sign;
  };
  Complex inv = one / z;
  std::array<Candidate, 6> cands{{{z, 1},
                                  {inv, -1},
                                  {one - z, -1},
                                  {one - inv, 1},
                                  {one / (one - z), 1},
                                  {z / (z - one), -1}}};
  const Candidate* best = nullptr;
  Real best_score;
  for (const auto& c : cands) {
    Real score = abs(log(one - c.w));
    bool ok = norm(c.w) <= 1 && c.w.re <= Real(0.5);
    if (ok && (!best || score < best_score)) {
      best = &c;
      best_score = score;
    }
  }
  if (!best) {
    for (const auto& c : cands) {
      Real score = abs(log(one - c.w));
      if (!best || score < best_score) {
        best = &c;
        best_score = score;
      }
    }
  }
  const Complex& w = best->w;
  Complex li = dilog_series(w);
  Real d = li.im + arg(one - w) * boost::multiprecision::log(abs(w));
  return best->sign > 0 ? d : Real(-d);
}

// H(x) = -x log|x| - (1 - x) log|1 - x|
inline Real entropy(const Real& x) {
  Real r(0);
  if (x != 0) r -= x * boost::multiprecision::log(boost::multiprecision::abs(x));
  Real y = 1 - x;
  if (y != 0) r -= y * boost::multiprecision::log(boost::multiprecision::abs(y));
  return r;
}

}  // namespace grassmann::numeric
