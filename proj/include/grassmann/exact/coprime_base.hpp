#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grassmann/exact/rational_function.hpp"

namespace grassmann {

// Sparse exponent vector over atoms, sorted by atom id, no zero entries.
class Legs {
 public:
  using Entry = std::pair<int, long>;

  Legs() = default;
  static Legs single(int atom, long e = 1) {
    Legs l;
    if (e) l.v_.push_back({atom, e});
    return l;
  }

  const std::vector<Entry>& entries() const { return v_; }
  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }

  void add(const Legs& o, long scale = 1) {
    if (!scale || o.v_.empty()) return;
    std::vector<Entry> out;
    out.reserve(v_.size() + o.v_.size());
    std::size_t i = 0, j = 0;
    while (i < v_.size() || j < o.v_.size()) {
      if (j == o.v_.size() || (i < v_.size() && v_[i].first < o.v_[j].first)) {
        out.push_back(v_[i++]);
      } else if (i == v_.size() || o.v_[j].first < v_[i].first) {
        out.push_back({o.v_[j].first, o.v_[j].second * scale});
        ++j;
      } else {
        long e = v_[i].second + o.v_[j].second * scale;
        if (e) out.push_back({v_[i].first, e});
        ++i, ++j;
      }
    }
    v_ = std::move(out);
  }

  Legs operator-() const {
    Legs l = *this;
    for (auto& [a, e] : l.v_) e = -e;
    return l;
  }
  friend Legs operator+(Legs a, const Legs& b) {
    a.add(b);
    return a;
  }
  friend Legs operator-(Legs a, const Legs& b) {
    a.add(b, -1);
    return a;
  }
  friend bool operator==(const Legs&, const Legs&) = default;
  friend auto operator<=>(const Legs& a, const Legs& b) { return a.v_ <=> b.v_; }

 private:
  std::vector<Entry> v_;
};

// Pairwise coprime atoms: primitive polynomials and primes (or coprime integer cofactors).
// Atoms are only appended; a split atom stays in the list as dead with its decomposition.
class CoprimeBase {
 public:
  struct Atom {
    Polynomial value;
    bool integer = false;
    bool alive = true;
    Legs parts;
  };

  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(int i) const { return atoms_[std::size_t(i)]; }

  std::vector<int> alive_atoms() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i].alive) out.push_back(int(i));
    return out;
  }

  // signs dropped
  Legs factor(const mpq_class& q) {
    if (q == 0) throw ZeroLeg();
    Legs l = factor_integer(abs(mpz_class(q.get_num())));
    l.add(factor_integer(mpz_class(q.get_den())), -1);
    return l;
  }

  Legs factor(const Polynomial& p) {
    if (p.is_zero()) throw ZeroLeg();
    if (p.is_constant()) return factor(p.constant_value());
    mpq_class c = p.content();
    Polynomial prim = p.scaled(1 / c);
    if (prim.leading_coeff() < 0) prim = -prim;
    Legs l = factor(c);
    l.add(factor_primitive(prim));
    return l;
  }

  Legs factor(const RationalFunction& f) {
    if (f.is_zero()) throw ZeroLeg();
    Legs l = factor(f.numerator());
    l.add(factor(f.denominator()), -1);
    return l;
  }

  // rewrite dead atoms through their decompositions
  Legs expand(const Legs& l) const {
    bool clean = true;
    for (const auto& [a, e] : l.entries())
      if (!atoms_[std::size_t(a)].alive) clean = false;
    if (clean) return l;
    Legs out;
    for (const auto& [a, e] : l.entries()) {
      if (atoms_[std::size_t(a)].alive)
        out.add(Legs::single(a, e));
      else
        out.add(expand(atoms_[std::size_t(a)].parts), e);
    }
    return out;
  }

  // product of atom powers, up to sign
  RationalFunction value(const Legs& l) const {
    Polynomial num(1), den(1);
    for (const auto& [a, e] : l.entries()) {
      const Polynomial& v = atoms_[std::size_t(a)].value;
      if (e > 0)
        num *= v.pow(unsigned(e));
      else
        den *= v.pow(unsigned(-e));
    }
    return RationalFunction::normalize(num, den);
  }

 private:
  std::vector<Atom> atoms_;
  std::unordered_map<Polynomial, Legs> poly_cache_;
  std::map<mpz_class, Legs> int_cache_;

  int append(Polynomial v, bool integer) {
    atoms_.push_back({std::move(v), integer, true, {}});
    return int(atoms_.size()) - 1;
  }

  static const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
      const unsigned limit = 1u << 16;
      std::vector<bool> composite(limit, false);
      std::vector<unsigned> ps;
      for (unsigned i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        ps.push_back(i);
        for (unsigned long j = (unsigned long)i * i; j < limit; j += i) composite[j] = true;
      }
      return ps;
    }();
    return primes;
  }

  Legs factor_integer(mpz_class n) {
    if (n == 1) return {};
    if (auto it = int_cache_.find(n); it != int_cache_.end()) return expand(it->second);
    mpz_class key = n;
    Legs out;
    for (unsigned p : small_primes()) {
      if (mpz_class(p) * p > n) break;
      long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      if (e) out.add(Legs::single(prime_atom(mpz_class(p)), e));
    }
    if (n > 1) {
      if (n < mpz_class(1u << 16) * (1u << 16) || mpz_probab_prime_p(n.get_mpz_t(), 30) == 2)
        out.add(Legs::single(prime_atom(n)));
      else
        out.add(register_large(n));
    }
    out = expand(out);
    int_cache_[key] = out;
    return out;
  }

  int prime_atom(const mpz_class& p) {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i].integer && atoms_[i].alive && atoms_[i].value.constant_value() == p) return int(i);
    return append(Polynomial(mpq_class(p)), true);
  }

  // large cofactor without small prime factors, split by gcds against existing atoms
  Legs register_large(mpz_class rem) {
    Legs out;
    for (std::size_t i = 0; i < atoms_.size() && rem > 1; ++i) {
      if (!atoms_[i].integer || !atoms_[i].alive) continue;
      mpz_class a = atoms_[i].value.constant_value().get_num();
      for (;;) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
        if (g == a) {
          rem /= a;
          out.add(Legs::single(int(i)));
          continue;
        }
        CoprimeBase mini;
        Legs lg = mini.register_large_fresh(g), lh = mini.register_large_fresh(a / g);
        adopt(mini, int(i), lg + lh);
        break;
      }
    }
    if (rem > 1) out.add(Legs::single(append(Polynomial(mpq_class(rem)), true)));
    return out;
  }

  Legs register_large_fresh(const mpz_class& n) {
    Legs l = register_large(n);
    return expand(l);
  }

  // move mini's alive atoms into this base; atom `dead` becomes their product per `parts`
  void adopt(const CoprimeBase& mini, int dead, const Legs& parts) {
    std::map<int, int> remap;
    for (int a : mini.alive_atoms()) remap[a] = append(mini.atoms_[std::size_t(a)].value, mini.atoms_[std::size_t(a)].integer);
    Legs mapped;
    Legs expanded = mini.expand(parts);
    for (const auto& [a, e] : expanded.entries()) mapped.add(Legs::single(remap.at(a), e));
    atoms_[std::size_t(dead)].alive = false;
    atoms_[std::size_t(dead)].parts = mapped;
  }

  Legs factor_primitive(const Polynomial& p) {
    if (auto it = poly_cache_.find(p); it != poly_cache_.end()) return expand(it->second);
    Legs out = register_polynomial(p);
    poly_cache_.emplace(p, out);
    return out;
  }

  Legs register_polynomial(Polynomial rem) {
    Legs out;
    for (std::size_t i = 0; i < atoms_.size() && !rem.is_constant(); ++i) {
      if (atoms_[i].integer || !atoms_[i].alive) continue;
      if (!(atoms_[i].value.variable_mask() & rem.variable_mask())) continue;
      for (;;) {
        const Polynomial& a = atoms_[i].value;
        if (rem == a) {
          out.add(Legs::single(int(i)));
          rem = Polynomial(1);
          break;
        }
        Polynomial g = polynomial_gcd(rem, a);
        if (g.is_constant()) break;
        if (g == a) {
          rem = rem.divide_exact(a)->primitive();
          out.add(Legs::single(int(i)));
          if (rem.is_constant()) break;
          continue;
        }
        Polynomial h = a.divide_exact(g)->primitive();
        CoprimeBase mini;
        Legs lg = mini.factor_primitive(g);
        Legs lh = mini.factor_primitive(h);
        adopt(mini, int(i), lg + lh);
        break;
      }
    }
    if (!rem.is_constant()) out.add(Legs::single(append(rem, false)));
    return expand(out);
  }
};

}  // namespace grassmann
