#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "grassmann/exact/polynomial.hpp"

namespace grassmann {

namespace modp {

inline constexpr std::uint64_t kPrime = (1ull << 61) - 1;

inline std::uint64_t reduce(unsigned __int128 x) {
  std::uint64_t lo = std::uint64_t(x & kPrime) + std::uint64_t(x >> 61);
  lo = (lo & kPrime) + (lo >> 61);
  return lo >= kPrime ? lo - kPrime : lo;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return reduce((unsigned __int128)a * b); }
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inverse(std::uint64_t a) { return power(a, kPrime - 2); }

inline std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// false when the denominator vanishes mod p
inline bool lift(const mpq_class& q, std::uint64_t& out) {
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (d == 0) return false;
  out = mul(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), inverse(d));
  return true;
}

// univariate image in t_v with the other variables at point
inline bool univariate_image(const Polynomial& p, std::size_t v, const std::array<std::uint64_t, kMaxVariables>& point,
                             std::vector<std::uint64_t>& out) {
  out.assign(p.degree_in(v) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t c;
    if (!lift(t.coeff, c)) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (i != v && t.mono[i]) c = mul(c, power(point[i], t.mono[i]));
    out[t.mono[v]] = add(out[t.mono[v]], c);
  }
  return true;
}

inline void trim(std::vector<std::uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// degree of gcd, -1 for gcd(0,0)
inline int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (a.size() >= b.size()) {
      std::uint64_t inv = inverse(b.back());
      while (a.size() >= b.size()) {
        std::uint64_t f = mul(a.back(), inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = sub(a[j + shift], mul(f, b[j]));
        trim(a);
        if (a.empty()) break;
      }
    }
    std::swap(a, b);
  }
  return int(a.size()) - 1;
}

}  // namespace modp

// One-sided certificate: true proves gcd(a, b) is a constant.
inline bool certified_coprime(const Polynomial& a, const Polynomial& b) {
  std::uint32_t shared = a.variable_mask() & b.variable_mask();
  if (!shared) return true;
  std::uint64_t state = 0x51ed270b27a1f3c5ull ^ (a.hash() * 31 + b.hash());
  std::vector<std::uint64_t> ia, ib;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (!(shared >> v & 1u)) continue;
    bool proven = false;
    for (int attempt = 0; attempt < 2 && !proven; ++attempt) {
      std::array<std::uint64_t, kMaxVariables> point{};
      for (auto& x : point) x = modp::splitmix(state) % modp::kPrime;
      if (!modp::univariate_image(a, v, point, ia) || !modp::univariate_image(b, v, point, ib)) return false;
      if (ia.back() == 0 || ib.back() == 0) continue;
      if (ia.size() != a.degree_in(v) + 1 || ib.size() != b.degree_in(v) + 1) continue;
      proven = modp::gcd_degree(ia, ib) == 0;
      if (!proven) return false;
    }
    if (!proven) return false;
  }
  return true;
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  auto ra = a.coefficients_in(v);
  auto cb = b.coefficients_in(v);
  const Polynomial& lb = cb.back();
  std::size_t db = cb.size() - 1;
  auto trim = [](std::vector<Polynomial>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  };
  trim(ra);
  while (!ra.empty() && ra.size() - 1 >= db) {
    std::size_t da = ra.size() - 1;
    Polynomial la = ra.back();
    for (auto& c : ra) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) ra[j + da - db] -= la * cb[j];
    trim(ra);
    if (ra.size() > 1 && ra.size() % 4 == 0) {
      Polynomial r = Polynomial::from_coefficients(ra, v).primitive();
      ra = r.coefficients_in(v);
      trim(ra);
    }
  }
  return Polynomial::from_coefficients(ra, v);
}

// gcd of coefficients in t_v
inline Polynomial content_in(const Polynomial& p, std::size_t v) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : polynomial_gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("inexact division in gcd");
  return *q;
}

inline Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  std::uint32_t shared = a.variable_mask() & b.variable_mask();
  if (!shared) return Polynomial(1);
  std::size_t v = std::size_t(std::countr_zero(shared));
  for (std::size_t u = v + 1; u < kMaxVariables; ++u)
    if ((shared >> u & 1u) && std::max(a.degree_in(u), b.degree_in(u)) < std::max(a.degree_in(v), b.degree_in(v)))
      v = u;
  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial c = polynomial_gcd(ca, cb);
  Polynomial pa = exact_quotient(a, ca).primitive(), pb = exact_quotient(b, cb).primitive();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  Polynomial g;
  for (;;) {
    if (pb.degree_in(v) == 0) {
      g = Polynomial(1);
      break;
    }
    if (certified_coprime(pa, pb)) {
      g = Polynomial(1);
      break;
    }
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = exact_quotient(r, content_in(r, v)).primitive();
  }
  if (!g.is_constant()) g = exact_quotient(g, content_in(g, v));
  return (c * g).primitive();
}

}  // namespace detail

// Primitive gcd over Q (integer coefficients, content 1, positive leading coefficient).
inline Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? Polynomial{} : b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  Polynomial pa = a.primitive(), pb = b.primitive();
  if (pa == pb) return pa;
  if (certified_coprime(pa, pb)) return Polynomial(1);
  return detail::gcd_recursive(pa, pb);
}

}  // namespace grassmann
