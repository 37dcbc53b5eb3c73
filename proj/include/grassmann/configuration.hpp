#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "grassmann/exact/rational_function.hpp"
#include "grassmann/formal_sum.hpp"

namespace grassmann {

using Vector = std::vector<RationalFunction>;

inline RationalFunction determinant(std::vector<Vector> rows) {
  std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  if (n == 0) return RationalFunction(1);
  bool poly = true;
  for (const auto& r : rows)
    for (const auto& x : r) poly = poly && x.is_polynomial();
  int sign = 1;
  if (poly) {
    // Bareiss
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = rows[i][j].numerator().scaled(1 / rows[i][j].denominator().constant_value());
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k].is_zero()) {
        std::size_t p = k + 1;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return {};
        std::swap(m[k], m[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          Polynomial v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
          m[i][j] = *v.divide_exact(prev);
        }
        m[i][k] = Polynomial();
      }
      prev = m[k][k];
    }
    Polynomial d = m[n - 1][n - 1];
    return RationalFunction(sign < 0 ? -d : d);
  }
  RationalFunction det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && rows[p][k].is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      std::swap(rows[p], rows[k]);
      sign = -sign;
    }
    det *= rows[k][k];
    RationalFunction inv = rows[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (rows[i][k].is_zero()) continue;
      RationalFunction f = rows[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) rows[i][j] -= f * rows[k][j];
    }
  }
  return sign < 0 ? -det : det;
}

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : p_(std::move(images)) {}
  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  int size() const { return int(p_.size()); }
  int operator()(int i) const { return p_[std::size_t(i)]; }
  const std::vector<int>& images() const { return p_; }

  int sign() const {
    int s = 1;
    std::vector<bool> seen(p_.size(), false);
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = std::size_t(p_[j])) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  // (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> v(b.p_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(int(i)));
    return Permutation(std::move(v));
  }
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> p_;
};

using PermutationGroup = std::vector<Permutation>;

inline PermutationGroup symmetric_group(int n) {
  PermutationGroup g;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do g.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return g;
}

// permutations of 0..n-1 preserving each block
inline PermutationGroup block_group(int n, const std::vector<std::vector<int>>& blocks) {
  PermutationGroup g{Permutation::identity(n)};
  for (const auto& block : blocks) {
    PermutationGroup next;
    std::vector<int> perm = block;
    std::sort(perm.begin(), perm.end());
    std::vector<int> sorted = perm;
    do {
      std::vector<int> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 0);
      for (std::size_t i = 0; i < sorted.size(); ++i) v[std::size_t(sorted[i])] = perm[i];
      Permutation s(v);
      for (const auto& h : g) next.push_back(s * h);
    } while (std::next_permutation(perm.begin(), perm.end()));
    g = std::move(next);
  }
  return g;
}

inline PermutationGroup cyclic_group(const Permutation& gen) {
  PermutationGroup g{Permutation::identity(gen.size())};
  for (Permutation p = gen; p != g.front(); p = gen * p) g.push_back(p);
  return g;
}

// Ordered points in a quotient of Q(t)^N by the span of an ordered apex.
// Relabelings and projections share the underlying vectors and their determinant cache.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Vector> points, std::vector<Vector> fixed_apex = {})
      : s_(std::make_shared<Storage>()) {
    s_->vectors = std::move(points);
    s_->fixed_apex = std::move(fixed_apex);
    std::size_t n = s_->vectors.empty() ? 0 : s_->vectors.front().size();
    for (const auto& v : s_->vectors)
      if (v.size() != n) throw std::invalid_argument("points of different length");
    for (const auto& v : s_->fixed_apex)
      if (v.size() != n) throw std::invalid_argument("apex of different length");
    pts_.resize(s_->vectors.size());
    std::iota(pts_.begin(), pts_.end(), 0);
  }

  int size() const { return int(pts_.size()); }
  int ambient_dim() const { return s_->vectors.empty() ? 0 : int(s_->vectors.front().size()); }
  int apex_size() const { return int(s_->fixed_apex.size() + apex_.size()); }
  int dim() const { return ambient_dim() - apex_size(); }
  const Vector& point(int i) const { return s_->vectors[std::size_t(pts_[std::size_t(i)])]; }
  std::vector<Vector> apex_vectors() const {
    std::vector<Vector> out = s_->fixed_apex;
    for (int a : apex_) out.push_back(s_->vectors[std::size_t(a)]);
    return out;
  }

  // det(apex rows, then the listed points)
  RationalFunction determinant(const std::vector<int>& idx) const {
    if (int(idx.size()) != dim()) throw std::invalid_argument("determinant needs dim points");
    std::vector<int> rows = apex_;
    for (int i : idx) rows.push_back(pts_[std::size_t(i)]);
    int sign = 1;
    for (std::size_t i = 1; i < rows.size(); ++i)
      for (std::size_t j = i; j > 0 && rows[j - 1] > rows[j]; --j) {
        std::swap(rows[j - 1], rows[j]);
        sign = -sign;
      }
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i] == rows[i - 1]) return {};
    auto it = s_->cache.find(rows);
    if (it == s_->cache.end()) {
      std::vector<Vector> m = s_->fixed_apex;
      for (int r : rows) m.push_back(s_->vectors[std::size_t(r)]);
      it = s_->cache.emplace(rows, grassmann::determinant(std::move(m))).first;
    }
    return sign < 0 ? -it->second : it->second;
  }

  // point i of the result is point sigma(i) of this
  Configuration relabeled(const Permutation& sigma) const {
    if (sigma.size() != size()) throw std::invalid_argument("permutation size");
    Configuration c = *this;
    for (int i = 0; i < size(); ++i) c.pts_[std::size_t(i)] = pts_[std::size_t(sigma(i))];
    return c;
  }

  Configuration select(const std::vector<int>& idx) const {
    Configuration c = *this;
    c.pts_.clear();
    for (int i : idx) c.pts_.push_back(pts_[std::size_t(i)]);
    return c;
  }

  Configuration omit(int i) const {
    Configuration c = *this;
    c.pts_.erase(c.pts_.begin() + i);
    return c;
  }

  // (l_i | l_0 .. l_m without l_i)
  Configuration project(int i) const {
    Configuration c = omit(i);
    c.apex_.push_back(pts_[std::size_t(i)]);
    return c;
  }

  bool is_generic() const {
    int n = dim();
    if (n <= 0 || size() < n) return false;
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::vector<bool> mask(std::size_t(size()), false);
    std::fill(mask.begin(), mask.begin() + n, true);
    do {
      idx.clear();
      for (int i = 0; i < size(); ++i)
        if (mask[std::size_t(i)]) idx.push_back(i);
      if (determinant(idx).is_zero()) return false;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return true;
  }

  // the quotient only depends on the span of the apex, so its order is normalized away
  Configuration with_sorted_apex() const {
    Configuration c = *this;
    auto less = [&](int a, int b) { return s_->vectors[std::size_t(a)] < s_->vectors[std::size_t(b)]; };
    std::sort(c.apex_.begin(), c.apex_.end(), less);
    return c;
  }

  // new configuration with every vector (apex included) multiplied by the matrix on the right
  Configuration transformed(const std::vector<Vector>& matrix) const {
    auto apply = [&](const Vector& v) {
      Vector out(matrix.front().size());
      for (std::size_t j = 0; j < out.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!v[i].is_zero() && !matrix[i][j].is_zero()) out[j] += v[i] * matrix[i][j];
      return out;
    };
    std::vector<Vector> pts, apex;
    for (const auto& a : s_->fixed_apex) apex.push_back(apply(a));
    for (int a : apex_) apex.push_back(apply(s_->vectors[std::size_t(a)]));
    for (int p : pts_) pts.push_back(apply(s_->vectors[std::size_t(p)]));
    return Configuration(std::move(pts), std::move(apex));
  }

  // point i scaled by lambda[i]
  Configuration rescaled(const std::vector<RationalFunction>& lambda) const {
    std::vector<Vector> pts;
    for (int i = 0; i < size(); ++i) {
      Vector v = point(i);
      for (auto& x : v) x *= lambda[std::size_t(i)];
      pts.push_back(std::move(v));
    }
    return Configuration(std::move(pts), apex_vectors());
  }

  friend bool operator==(const Configuration& a, const Configuration& b) { return a.compare(b) == 0; }
  friend bool operator<(const Configuration& a, const Configuration& b) { return a.compare(b) < 0; }

 private:
  struct Storage {
    std::vector<Vector> vectors;
    std::vector<Vector> fixed_apex;
    std::map<std::vector<int>, RationalFunction> cache;
  };
  std::shared_ptr<Storage> s_;
  std::vector<int> apex_;
  std::vector<int> pts_;

  int compare(const Configuration& o) const {
    auto cmp = [](const auto& x, const auto& y) { return x < y ? -1 : (y < x ? 1 : 0); };
    if (int c = cmp(apex_size(), o.apex_size())) return c;
    if (int c = cmp(size(), o.size())) return c;
    if (s_ != o.s_ || apex_ != o.apex_) {
      if (int c = cmp(apex_vectors(), o.apex_vectors())) return c;
    }
    for (int i = 0; i < size(); ++i)
      if (int c = cmp(point(i), o.point(i))) return c;
    return 0;
  }
};

using ConfigSum = FormalSum<Configuration, long>;

inline void add_oriented(ConfigSum& sum, const Configuration& c, long coeff) {
  sum.add(c.with_sorted_apex(), coeff);
}

// alternating sum of point omissions
inline ConfigSum boundary_d(const Configuration& c) {
  ConfigSum s;
  for (int i = 0; i < c.size(); ++i) add_oriented(s, c.omit(i), i % 2 ? -1 : 1);
  return s;
}

inline ConfigSum boundary_dprime(const Configuration& c) {
  ConfigSum s;
  for (int i = 0; i < c.size(); ++i) add_oriented(s, c.project(i), i % 2 ? -1 : 1);
  return s;
}

template <class F>
ConfigSum apply_linear(const ConfigSum& s, F&& f) {
  ConfigSum out;
  for (const auto& [c, k] : s)
    for (const auto& [c2, k2] : f(c)) add_oriented(out, c2, k * k2);
  return out;
}

inline ConfigSum boundary_d(const ConfigSum& s) {
  return apply_linear(s, [](const Configuration& c) { return boundary_d(c); });
}
inline ConfigSum boundary_dprime(const ConfigSum& s) {
  return apply_linear(s, [](const Configuration& c) { return boundary_dprime(c); });
}

inline void require_generic(const RationalFunction& x) {
  if (x.is_zero()) throw NonGenericConfiguration();
}

// r = D03 D12 / (D02 D13) for four points of a two-dimensional quotient
inline RationalFunction cross_ratio(const Configuration& c) {
  if (c.size() != 4 || c.dim() != 2) throw std::invalid_argument("cross ratio needs 4 points in dimension 2");
  RationalFunction d03 = c.determinant({0, 3}), d12 = c.determinant({1, 2}), d02 = c.determinant({0, 2}),
                   d13 = c.determinant({1, 3});
  for (const auto* d : {&d03, &d12, &d02, &d13}) require_generic(*d);
  return d03 * d12 / (d02 * d13);
}

// r(l_i | l_a, l_b, l_c, l_d)
inline RationalFunction projected_cross_ratio(const Configuration& c, int i, const std::vector<int>& others) {
  std::vector<int> idx;
  for (int o : others) {
    if (o == i) throw std::invalid_argument("apex repeated among the points");
    idx.push_back(o < i ? o : o - 1);
  }
  return cross_ratio(c.project(i).select(idx));
}

inline RationalFunction projected_cross_ratio(const Configuration& c, int i) {
  std::vector<int> others;
  for (int j = 0; j < c.size(); ++j)
    if (j != i) others.push_back(j);
  return projected_cross_ratio(c, i, others);
}

// D013 D124 D205 / (D014 D125 D203)
inline RationalFunction triple_ratio_term(const Configuration& c) {
  if (c.size() != 6 || c.dim() != 3) throw std::invalid_argument("triple ratio needs 6 points in dimension 3");
  RationalFunction n1 = c.determinant({0, 1, 3}), n2 = c.determinant({1, 2, 4}), n3 = c.determinant({2, 0, 5});
  RationalFunction m1 = c.determinant({0, 1, 4}), m2 = c.determinant({1, 2, 5}), m3 = c.determinant({2, 0, 3});
  for (const auto* d : {&n1, &n2, &n3, &m1, &m2, &m3}) require_generic(*d);
  return n1 * n2 * n3 / (m1 * m2 * m3);
}

// triple ratio as r1 / r2 of two projected cross ratios with apexes in the pair
inline std::pair<RationalFunction, RationalFunction> factor_triple_ratio(const Configuration& c, std::pair<int, int> pair) {
  auto [a, b] = pair;
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return {projected_cross_ratio(c, 2, {1, 0, 5, 3}), projected_cross_ratio(c, 1, {0, 2, 3, 4})};
  if (a == 0 && b == 2) return {projected_cross_ratio(c, 0, {2, 1, 3, 4}), projected_cross_ratio(c, 2, {1, 0, 4, 5})};
  if (a == 0 && b == 1) return {projected_cross_ratio(c, 1, {0, 2, 4, 5}), projected_cross_ratio(c, 0, {2, 1, 5, 3})};
  throw std::invalid_argument("apex pair must lie in {0,1,2}");
}

// sum over the group of sign(sigma) f(c relabeled by sigma)
template <class F>
auto alternate(const PermutationGroup& group, const Configuration& c, F&& f) {
  using R = decltype(f(c));
  R total{};
  bool first = true;
  for (const auto& sigma : group) {
    R term = f(c.relabeled(sigma));
    if (sigma.sign() < 0) term = -term;
    if (first) {
      total = std::move(term);
      first = false;
    } else {
      total += term;
    }
  }
  return total;
}

struct RandomConfigOptions {
  long coeff_bound = 20;
  int variable_share = 3;  // one entry in this many gets a t_j term
  int max_attempts = 200;
};

// integer entries in [-B, B], some of the form c + c' t_j; rejection-sampled until generic
template <class Rng>
Configuration random_configuration(Rng& rng, int m, int n, std::size_t arity, const RandomConfigOptions& opt = {}) {
  auto draw = [&](long lo, long hi) { return lo + long(rng() % std::uint64_t(hi - lo + 1)); };
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    std::vector<Vector> pts;
    for (int i = 0; i < m; ++i) {
      Vector v;
      for (int j = 0; j < n; ++j) {
        RationalFunction x(draw(-opt.coeff_bound, opt.coeff_bound));
        if (arity > 0 && draw(1, opt.variable_share) == 1) {
          long c = draw(-3, 3);
          if (c == 0) c = 1;
          x += RationalFunction::variable(std::size_t(draw(0, long(arity) - 1))).scaled(c);
        }
        v.push_back(std::move(x));
      }
      pts.push_back(std::move(v));
    }
    Configuration c(std::move(pts));
    if (c.is_generic()) return c;
  }
  throw NonGenericConfiguration("no generic configuration found");
}

}  // namespace grassmann
