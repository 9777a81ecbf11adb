// Truncated power series in z with exact rational coefficients.
#pragma once

#include "exact.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace virwalk {

class ZSeries {
 public:
  ZSeries() : c_(1) {}
  explicit ZSeries(int order) : c_(check_order(order) + 1) {}
  ZSeries(int order, std::vector<Rational> coeffs) : c_(check_order(order) + 1) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
  }

  static ZSeries constant(int order, const Rational& v) {
    ZSeries s(order);
    s.c_[0] = v;
    return s;
  }
  static ZSeries monomial(int order, int power, const Rational& v) {
    ZSeries s(order);
    if (power >= 0 && power <= order) s.c_[power] = v;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_.at(i); }
  Rational& operator[](int i) { return c_.at(i); }
  Rational coefficient(int i) const { return (i < 0 || i > order()) ? Rational(0) : c_[i]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  ZSeries truncated(int order) const {
    ZSeries s(order);
    for (int i = 0; i <= order && i <= this->order(); ++i) s.c_[i] = c_[i];
    return s;
  }

  // Multiply by z^j (j >= 0), dropping what falls past the order.
  ZSeries shifted(int j) const {
    ZSeries s(order());
    for (int i = 0; i + j <= order(); ++i) s.c_[i + j] = c_[i];
    return s;
  }

  ZSeries& operator+=(const ZSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  ZSeries& operator-=(const ZSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  ZSeries& operator*=(const Rational& v) {
    for (auto& x : c_) x *= v;
    return *this;
  }
  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator-(ZSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend ZSeries operator*(ZSeries a, const Rational& v) { return a *= v; }
  friend ZSeries operator*(const Rational& v, ZSeries a) { return a *= v; }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    a.same_order(b);
    ZSeries r(a.order());
    const int K = a.order();
    for (int i = 0; i <= K; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= K; ++j)
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }

  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.c_ == b.c_; }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw DomainError("negative series order");
    return order;
  }
  void same_order(const ZSeries& o) const {
    if (o.c_.size() != c_.size()) throw ShapeError("series orders differ");
  }
  std::vector<Rational> c_;
};

namespace detail {

inline ZSeries cofactor_det(const std::vector<std::vector<ZSeries>>& m, int K) {
  const std::size_t n = m.size();
  if (n == 0) return ZSeries::constant(K, 1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  ZSeries det(K);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<ZSeries>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ZSeries> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    ZSeries term = m[0][j] * cofactor_det(minor, K);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

// Laplace expansion down the rows with minors memoized by their column set;
// no division, so it is valid over the series ring.
inline ZSeries memoized_laplace_det(const std::vector<std::vector<ZSeries>>& m, int K) {
  const std::size_t n = m.size();
  std::unordered_map<std::uint64_t, ZSeries> memo;
  // minor(row r, columns mask) where popcount(mask) = n - r
  auto rec = [&](auto&& self, std::size_t r, std::uint64_t mask) -> ZSeries {
    if (r == n) return ZSeries::constant(K, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    ZSeries acc(K);
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1u)) continue;
      if (!m[r][c].is_zero()) {
        ZSeries term = m[r][c] * self(self, r + 1, mask & ~(std::uint64_t{1} << c));
        if (pos % 2) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

}  // namespace detail

inline ZSeries zseries_det(const std::vector<std::vector<ZSeries>>& m, int order) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw ShapeError("determinant of a non-square series matrix");
    for (const auto& e : row)
      if (e.order() != order) throw ShapeError("series entries of mixed order");
  }
  if (n > 63) throw ShapeError("series determinant too large");
  if (n <= 4) return detail::cofactor_det(m, order);
  return detail::memoized_laplace_det(m, order);
}

inline ZSeries zseries_det(const std::vector<std::vector<ZSeries>>& m) {
  if (m.empty()) return ZSeries::constant(0, 1);
  return zseries_det(m, m[0].empty() ? 0 : m[0][0].order());
}

}  // namespace virwalk
