// Slow, obviously-correct reference computations used only by the tests.
#pragma once

#include <virwalk/virwalk.hpp>

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using namespace virwalk;

using Cell = std::pair<int, int>;  // (row, column), 1-based

inline std::vector<Cell> cells(const SkewShape& s) {
  std::vector<Cell> c;
  for (int r = 1; r <= s.outer.length(); ++r)
    for (int col = s.inner(r) + 1; col <= s.outer(r); ++col) c.push_back({r, col});
  return c;
}

// Connected (edge-adjacent cells), no 2x2 block, nonempty; height = rows - 1.
inline std::optional<int> strip_height(const SkewShape& s) {
  const auto cs = cells(s);
  if (cs.empty()) return std::nullopt;
  std::set<Cell> in(cs.begin(), cs.end());
  for (const auto& [r, c] : cs)
    if (in.count({r + 1, c}) && in.count({r, c + 1}) && in.count({r + 1, c + 1})) return std::nullopt;
  std::set<Cell> seen{cs.front()};
  std::queue<Cell> todo;
  todo.push(cs.front());
  while (!todo.empty()) {
    auto [r, c] = todo.front();
    todo.pop();
    for (Cell nb : {Cell{r + 1, c}, Cell{r - 1, c}, Cell{r, c + 1}, Cell{r, c - 1}})
      if (in.count(nb) && seen.insert(nb).second) todo.push(nb);
  }
  if (seen.size() != cs.size()) return std::nullopt;
  std::set<int> rows;
  for (const auto& cell : cs) rows.insert(cell.first);
  return static_cast<int>(rows.size()) - 1;
}

// (mu, height) for every mu of the right size whose difference with lambda
// is a border strip.
inline std::vector<std::pair<Partition, int>> removable(const Partition& lambda, int size) {
  std::vector<std::pair<Partition, int>> out;
  for (const auto& mu : partitions_of(lambda.size() - size))
    if (lambda.contains(mu))
      if (auto h = strip_height(SkewShape(lambda, mu))) out.push_back({mu, *h});
  return out;
}

inline std::vector<std::pair<Partition, int>> addable(const Partition& lambda, int size) {
  std::vector<std::pair<Partition, int>> out;
  for (const auto& mu : partitions_of(lambda.size() + size))
    if (mu.contains(lambda))
      if (auto h = strip_height(SkewShape(mu, lambda))) out.push_back({mu, *h});
  return out;
}

// Fill cells in row-major order, checking the row and column conditions
// against already-filled neighbours.
inline BigInt count_fillings(const SkewShape& s, int max_entry, bool standard) {
  const auto cs = cells(s);
  std::map<Cell, int> fill;
  std::vector<char> used(max_entry + 2, 0);
  BigInt count = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cs.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cs[idx];
    for (int v = 1; v <= max_entry; ++v) {
      if (standard && used[v]) continue;
      auto left = fill.find({r, c - 1});
      if (left != fill.end() && (standard ? left->second >= v : left->second > v)) continue;
      auto up = fill.find({r - 1, c});
      if (up != fill.end() && up->second >= v) continue;
      fill[{r, c}] = v;
      used[v] = 1;
      self(self, idx + 1);
      used[v] = 0;
      fill.erase({r, c});
    }
  };
  // N distinct labels from 1..N use each label exactly once
  rec(rec, 0);
  return count;
}

inline BigInt standard_count(const SkewShape& s) { return count_fillings(s, s.size(), true); }
inline BigInt semistandard_count(const SkewShape& s, int q) { return count_fillings(s, q, false); }

// Coefficient of prod u_i^{e_i} in (sum_i (u_i + 1/u_i))^T, by expanding the
// Laurent polynomial power.
inline BigInt laurent_power_coefficient(int n, int T, const std::vector<int>& e) {
  std::map<std::vector<int>, BigInt> poly{{std::vector<int>(n, 0), 1}};
  for (int s = 0; s < T; ++s) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [m, c] : poly)
      for (int i = 0; i < n; ++i)
        for (int d : {1, -1}) {
          auto mm = m;
          mm[i] += d;
          next[mm] += c;
        }
    poly = std::move(next);
  }
  auto it = poly.find(e);
  return it == poly.end() ? BigInt(0) : it->second;
}

// sum_w sign(w) [u^{y - x_w}] (sum (u_i + 1/u_i))^T
inline BigInt weyl_extraction(const WalkerConfig& x, const WalkerConfig& y, int T) {
  const int n = x.n();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  BigInt total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += w[i] > w[j];
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = y.positions()[i] - x.positions()[w[i]];
    BigInt c = laurent_power_coefficient(n, T, e);
    if (inv % 2) total -= c;
    else total += c;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

// Explicit enumeration of every history, instant by instant.
inline BigInt enumerate_case1(const WalkerConfig& x, const WalkerConfig& y, int k) {
  if (k == 0) return x == y ? 1 : 0;
  BigInt total = 0;
  for (int i = 1; i <= x.n(); ++i)
    for (int d : {1, -1}) {
      WalkerConfig w = x.shifted(i, d);
      if (w.strictly_increasing()) total += enumerate_case1(w, y, k - 1);
    }
  return total;
}

inline std::vector<std::pair<WalkerConfig, int>> subset_moves(const WalkerConfig& c, int dir) {
  std::vector<std::pair<WalkerConfig, int>> out;
  const int n = c.n();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> p = c.positions();
    int moved = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        p[i] += dir;
        ++moved;
      }
    WalkerConfig w(p);
    if (w.strictly_increasing()) out.push_back({w, moved});
  }
  return out;
}

// Case 2 with every history's effective moves checked against 2k + sum(y-x).
inline BigInt enumerate_case2(const WalkerConfig& x, const WalkerConfig& y, int q, int k) {
  BigInt total = 0;
  const int expected = 2 * k + (y.sum() - x.sum());
  auto left = [&](auto&& self, const WalkerConfig& c, int steps, int moves) -> void {
    if (steps == k) {
      if (c == y) {
        if (moves != expected) throw std::logic_error("effective move count mismatch");
        ++total;
      }
      return;
    }
    for (int i = 1; i <= c.n(); ++i) {
      WalkerConfig w = c.shifted(i, -1);
      if (w.strictly_increasing()) self(self, w, steps + 1, moves + 1);
    }
  };
  auto right = [&](auto&& self, const WalkerConfig& c, int instants, int moves) -> void {
    if (instants == q) {
      left(left, c, 0, moves);
      return;
    }
    for (const auto& [w, m] : subset_moves(c, +1)) self(self, w, instants + 1, moves + m);
  };
  right(right, x, 0, 0);
  return total;
}

// Case 3 raw count: histories with exactly k effective moves.
inline BigInt enumerate_case3_raw(const WalkerConfig& x, const WalkerConfig& y, int p, int q, int k) {
  BigInt total = 0;
  auto rec = [&](auto&& self, const WalkerConfig& c, int instant, int moves) -> void {
    if (moves > k) return;
    if (instant == p + q) {
      if (c == y && moves == k) ++total;
      return;
    }
    for (const auto& [w, m] : subset_moves(c, instant < p ? +1 : -1)) self(self, w, instant + 1, moves + m);
  };
  rec(rec, x, 0, 0);
  return total;
}

// Leibniz formula over all permutations.
inline ZSeries leibniz_det(const std::vector<std::vector<ZSeries>>& m, int order) {
  const int n = static_cast<int>(m.size());
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  ZSeries total(order);
  if (n == 0) return ZSeries::constant(order, 1);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += w[i] > w[j];
    ZSeries term = ZSeries::constant(order, 1);
    for (int i = 0; i < n; ++i) term = term * m[i][w[i]];
    if (inv % 2) total -= term;
    else total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

}  // namespace oracle
