// Finite linear combinations of Schur functions, in one or two sets of variables.
#pragma once

#include "partition.hpp"

#include <map>
#include <optional>
#include <utility>

namespace virwalk {

class SchurExpansion {
 public:
  using Map = std::map<Partition, Rational>;

  SchurExpansion() = default;
  explicit SchurExpansion(std::optional<int> column_bound) : bound_(column_bound) {}
  static SchurExpansion basis(const Partition& p, std::optional<int> column_bound = std::nullopt) {
    SchurExpansion e(column_bound);
    e.add(p, 1);
    return e;
  }

  const Map& coeffs() const { return c_; }
  std::optional<int> column_bound() const { return bound_; }
  void set_column_bound(std::optional<int> b) { bound_ = b; }
  bool is_zero() const { return c_.empty(); }

  Rational coefficient(const Partition& p) const {
    auto it = c_.find(p);
    return it == c_.end() ? Rational(0) : it->second;
  }

  void add(const Partition& p, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = c_.emplace(p, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }

  // Drops every partition with more rows than the column bound.
  SchurExpansion truncated_to_column_bound() const {
    SchurExpansion e(bound_);
    for (const auto& [p, v] : c_)
      if (!bound_ || p.length() <= *bound_) e.c_.emplace(p, v);
    return e;
  }
  bool respects_column_bound() const {
    if (!bound_) return true;
    for (const auto& [p, v] : c_)
      if (p.length() > *bound_) return false;
    return true;
  }

  SchurExpansion& operator+=(const SchurExpansion& o) {
    for (const auto& [p, v] : o.c_) add(p, v);
    return *this;
  }
  SchurExpansion& operator*=(const Rational& s) {
    if (s == 0) c_.clear();
    for (auto& [p, v] : c_) v *= s;
    return *this;
  }
  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
  friend SchurExpansion operator*(SchurExpansion a, const Rational& s) { return a *= s; }
  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) { return a.c_ == b.c_; }

 private:
  Map c_;
  std::optional<int> bound_;
};

// sum b_{lambda mu} s_lambda(t) s_mu(-s)
class BiExpansion {
 public:
  using Key = std::pair<Partition, Partition>;
  using Map = std::map<Key, Rational>;

  BiExpansion() = default;
  explicit BiExpansion(std::optional<int> column_bound) : bound_(column_bound) {}

  const Map& coeffs() const { return c_; }
  std::optional<int> column_bound() const { return bound_; }
  void set_column_bound(std::optional<int> b) { bound_ = b; }
  bool is_zero() const { return c_.empty(); }

  Rational coefficient(const Partition& l, const Partition& m) const {
    auto it = c_.find({l, m});
    return it == c_.end() ? Rational(0) : it->second;
  }
  void add(const Partition& l, const Partition& m, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = c_.emplace(Key{l, m}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  // Adds scale * (t-side expansion) (x) (s-side expansion).
  void add_product(const SchurExpansion& t_side, const SchurExpansion& s_side, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [l, a] : t_side.coeffs())
      for (const auto& [m, b] : s_side.coeffs()) add(l, m, scale * a * b);
  }

  BiExpansion& operator+=(const BiExpansion& o) {
    for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
    return *this;
  }
  BiExpansion& operator*=(const Rational& s) {
    if (s == 0) c_.clear();
    for (auto& [k, v] : c_) v *= s;
    return *this;
  }
  friend BiExpansion operator+(BiExpansion a, const BiExpansion& b) { return a += b; }
  friend bool operator==(const BiExpansion& a, const BiExpansion& b) { return a.c_ == b.c_; }

  bool respects_column_bound() const {
    if (!bound_) return true;
    for (const auto& [k, v] : c_)
      if (k.first.length() > *bound_ || k.second.length() > *bound_) return false;
    return true;
  }

 private:
  Map c_;
  std::optional<int> bound_;
};

// Coefficients indexed by the step count k; absent k reads as zero.
class KFamily {
 public:
  KFamily() = default;
  explicit KFamily(std::optional<int> column_bound) : bound_(column_bound) {}

  const std::map<int, BiExpansion>& entries() const { return e_; }
  std::optional<int> column_bound() const { return bound_; }

  Rational coefficient(int k, const Partition& l, const Partition& m) const {
    auto it = e_.find(k);
    return it == e_.end() ? Rational(0) : it->second.coefficient(l, m);
  }
  void add(int k, const Partition& l, const Partition& m, const Rational& v) {
    if (v == 0) return;
    auto it = e_.try_emplace(k, BiExpansion(bound_)).first;
    it->second.add(l, m, v);
    if (it->second.is_zero()) e_.erase(it);
  }
  void add(int k, const BiExpansion& b) {
    for (const auto& [key, v] : b.coeffs()) add(k, key.first, key.second, v);
  }
  bool is_zero() const { return e_.empty(); }
  friend bool operator==(const KFamily& a, const KFamily& b) { return a.e_ == b.e_; }

 private:
  std::map<int, BiExpansion> e_;
  std::optional<int> bound_;
};

}  // namespace virwalk
