// Partitions, skew shapes, border strips and walker configurations.
#pragma once

#include "exact.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace virwalk {

class Partition {
 public:
  Partition() = default;
  // Trailing zero parts are dropped; anything else out of order throws.
  Partition(std::vector<int> parts) : parts_(std::move(parts)) {  // NOLINT
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Accepts any integer vector and returns the partition it spells, if any.
  static std::optional<Partition> from_vector(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] <= 0 || (i > 0 && v[i] > v[i - 1])) return std::nullopt;
    Partition p;
    p.parts_ = std::move(v);
    return p;
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  // 1-based; rows past the end read as 0.
  int operator()(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

  bool contains(const Partition& o) const {
    if (o.length() > length()) return false;
    for (int i = 1; i <= o.length(); ++i)
      if (o(i) > (*this)(i)) return false;
    return true;
  }

  // lambda + delta * e_i, or nothing if the result is not a partition.
  std::optional<Partition> shifted(int i, int delta) const {
    if (i < 1) return std::nullopt;
    std::vector<int> v = parts_;
    if (static_cast<int>(v.size()) < i) v.resize(i, 0);
    v[i - 1] += delta;
    return from_vector(std::move(v));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// "a,b,c" with the empty string meaning the empty partition.
inline Partition parse_partition(const std::string& text) {
  std::vector<int> v;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("malformed partition '" + text + "'");
    v.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (int p : v)
    if (p == 0) throw DomainError("malformed partition '" + text + "'");
  return Partition(v);
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> c(p.empty() ? 0 : p(1), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++c[j];
  return Partition(c);
}

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    if (!outer.contains(inner)) throw ShapeError("inner partition is not contained in the outer one");
  }
  int size() const { return outer.size() - inner.size(); }
  // Rows (1-based) holding at least one cell.
  std::vector<int> rows() const {
    std::vector<int> r;
    for (int i = 1; i <= outer.length(); ++i)
      if (outer(i) > inner(i)) r.push_back(i);
    return r;
  }
  SkewShape transposed() const { return SkewShape(conjugate(outer), conjugate(inner)); }
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

struct BorderStrip {
  SkewShape shape;
  int size = 0;
  int height = 0;
};

// Height of the skew shape if it is a border strip (nonempty, connected, no
// 2x2 square), otherwise nothing. Consecutive occupied rows r, r+1 must
// overlap in exactly one column: outer(r+1) - inner(r) == 1.
inline std::optional<int> border_strip_height(const SkewShape& s) {
  const std::vector<int> rows = s.rows();
  if (rows.empty()) return std::nullopt;
  for (std::size_t j = 1; j < rows.size(); ++j) {
    const int r = rows[j - 1];
    if (rows[j] != r + 1) return std::nullopt;
    if (s.outer(r + 1) - s.inner(r) != 1) return std::nullopt;
  }
  return static_cast<int>(rows.size()) - 1;
}

inline bool is_border_strip(const SkewShape& s) { return border_strip_height(s).has_value(); }

namespace detail {

// Bead positions beta_i = lambda_i + L - i, i = 1..L, in decreasing order.
inline std::vector<int> beta_set(const Partition& p, int L) {
  std::vector<int> b(L);
  for (int i = 1; i <= L; ++i) b[i - 1] = p(i) + L - i;
  return b;
}

inline Partition from_beta_set(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  const int L = static_cast<int>(b.size());
  std::vector<int> v(L);
  for (int i = 1; i <= L; ++i) v[i - 1] = b[i - 1] - (L - i);
  return Partition(v);
}

// Moves one bead by `delta` (+size to add a strip, -size to remove one).
inline std::vector<std::pair<Partition, BorderStrip>> move_beads(const Partition& lambda, int delta,
                                                                 std::optional<int> row_bound) {
  const int size = delta > 0 ? delta : -delta;
  const int L = lambda.length() + size;
  const std::vector<int> beads = beta_set(lambda, L);
  std::vector<char> occupied(beads.front() + size + 1, 0);
  for (int b : beads) occupied[b] = 1;
  std::vector<std::pair<Partition, BorderStrip>> out;
  for (std::size_t k = 0; k < beads.size(); ++k) {
    const int from = beads[k];
    const int to = from + delta;
    if (to < 0 || occupied[to]) continue;
    int between = 0;
    for (int p = std::min(from, to) + 1; p < std::max(from, to); ++p) between += occupied[p];
    std::vector<int> moved = beads;
    moved[k] = to;
    Partition mu = from_beta_set(moved);
    if (row_bound && mu.length() > *row_bound) continue;
    SkewShape shape = delta > 0 ? SkewShape(mu, lambda) : SkewShape(lambda, mu);
    out.push_back({mu, BorderStrip{shape, size, between}});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace detail

// All mu inside lambda with lambda \ mu a border strip of the given size.
inline std::vector<std::pair<Partition, BorderStrip>> removable_border_strips(const Partition& lambda, int size) {
  if (size < 1) throw DomainError("strip size must be positive");
  return detail::move_beads(lambda, -size, std::nullopt);
}

// All mu containing lambda with mu \ lambda a border strip of the given size,
// optionally limited to mu with at most row_bound rows.
inline std::vector<std::pair<Partition, BorderStrip>> addable_border_strips(const Partition& lambda, int size,
                                                                           std::optional<int> row_bound = std::nullopt) {
  if (size < 1) throw DomainError("strip size must be positive");
  return detail::move_beads(lambda, size, row_bound);
}

// Partitions of n in lexicographic order, optionally with at most max_parts parts.
inline std::vector<Partition> partitions_of(int n, std::optional<int> max_parts = std::nullopt) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_parts && static_cast<int>(cur.size()) >= *max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Partition> partitions_up_to(int n, std::optional<int> max_parts = std::nullopt) {
  std::vector<Partition> out;
  for (int d = 0; d <= n; ++d) {
    auto ps = partitions_of(d, max_parts);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

class WalkerConfig {
 public:
  WalkerConfig() = default;
  WalkerConfig(std::vector<int> pos) : pos_(std::move(pos)) {}  // NOLINT
  WalkerConfig(std::initializer_list<int> pos) : pos_(pos) {}

  const std::vector<int>& positions() const { return pos_; }
  int n() const { return static_cast<int>(pos_.size()); }
  // 1-based
  int operator()(int i) const { return pos_.at(i - 1); }

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < pos_.size(); ++i)
      if (pos_[i] <= pos_[i - 1]) return false;
    return true;
  }
  // x + delta * e_i (1-based)
  WalkerConfig shifted(int i, int delta) const {
    WalkerConfig c = *this;
    c.pos_.at(i - 1) += delta;
    return c;
  }
  int sum() const {
    int s = 0;
    for (int p : pos_) s += p;
    return s;
  }
  // True when some two walkers sit on neighbouring sites.
  bool has_adjacent() const {
    for (std::size_t i = 1; i < pos_.size(); ++i)
      if (pos_[i] - pos_[i - 1] == 1) return true;
    return false;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < pos_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(pos_[i]);
    }
    return s;
  }

  friend auto operator<=>(const WalkerConfig&, const WalkerConfig&) = default;
  friend bool operator==(const WalkerConfig&, const WalkerConfig&) = default;

 private:
  std::vector<int> pos_;
};

// "0,1,2"; negative entries are allowed.
inline WalkerConfig parse_config(const std::string& text) {
  std::vector<int> v;
  std::size_t start = 0;
  if (text.empty()) throw DomainError("empty walker configuration");
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed walker configuration '" + text + "'");
    }
    if (used != tok.size()) throw DomainError("malformed walker configuration '" + text + "'");
    v.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return WalkerConfig(v);
}

// x_i = lambda_{n-i+1} + i - 1
inline WalkerConfig walkers_from_partition(const Partition& lambda, int n) {
  if (lambda.length() > n) throw DomainError("partition has more rows than walkers");
  std::vector<int> x(n);
  for (int i = 1; i <= n; ++i) x[i - 1] = lambda(n - i + 1) + i - 1;
  return WalkerConfig(x);
}

inline std::pair<Partition, int> partition_from_walkers(const WalkerConfig& x) {
  const int n = x.n();
  std::vector<int> parts(n);
  for (int i = 1; i <= n; ++i) {
    const int v = x(i) - (i - 1);
    if (v < 0) throw DomainError("walker configuration is not a shifted partition");
    parts[n - i] = v;
  }
  auto p = Partition::from_vector(parts);
  if (!p) throw DomainError("walker configuration is not strictly increasing");
  return {*p, n};
}

// Same as partition_from_walkers but reports failure instead of throwing.
inline std::optional<Partition> try_partition_from_walkers(const WalkerConfig& x) {
  const int n = x.n();
  std::vector<int> parts(n);
  for (int i = 1; i <= n; ++i) {
    const int v = x(i) - (i - 1);
    if (v < 0) return std::nullopt;
    parts[n - i] = v;
  }
  return Partition::from_vector(parts);
}

// Strictly increasing n-tuples with entries in [lo, hi].
inline std::vector<WalkerConfig> configs_in_window(int n, int lo, int hi) {
  std::vector<WalkerConfig> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = next; v <= hi; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

}  // namespace virwalk
