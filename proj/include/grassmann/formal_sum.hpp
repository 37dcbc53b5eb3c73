#pragma once

#include <map>
#include <utility>

#include <gmpxx.h>

namespace grassmann {

inline bool is_formally_zero(long c) { return c == 0; }
inline bool is_formally_zero(const mpq_class& c) { return c == 0; }

// Finite sum of keys with coefficients; zero coefficients are never stored.
template <class Key, class Coeff>
class FormalSum {
 public:
  using Map = std::map<Key, Coeff>;

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  void add(const Key& k, const Coeff& c) {
    if (is_formally_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_formally_zero(it->second)) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Map terms_;
};

}  // namespace grassmann
