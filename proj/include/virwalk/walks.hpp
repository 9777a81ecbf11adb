// Non-intersecting walker counts for the three walk models, by dynamic
// programming, tableau sums, reflection and determinant series.
#pragma once

#include "tableaux.hpp"
#include "zseries.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace virwalk {

struct WalkModel {
  int walk_case = 1;  // 1, 2 or 3
  int n = 1;
  int p = 0;  // case 3 right phase length
  int q = 0;  // case 2 right phase length, case 3 left phase length

  void validate() const {
    if (walk_case < 1 || walk_case > 3) throw DomainError("walk case must be 1, 2 or 3");
    if (n < 1) throw DomainError("need at least one walker");
    if (p < 0 || q < 0) throw DomainError("phase lengths must be nonnegative");
  }
  friend bool operator==(const WalkModel&, const WalkModel&) = default;
};

using Distribution = std::map<WalkerConfig, BigInt>;

namespace detail {

inline void add_count(Distribution& d, const WalkerConfig& c, const BigInt& v) {
  auto [it, inserted] = d.emplace(c, v);
  if (!inserted) it->second += v;
}

// One instant in which any subset of walkers steps by `dir`; the
// configuration only has to be strictly increasing once the instant is over.
// `moved` receives the subset size.
template <class F>
void subset_instant(const WalkerConfig& c, int dir, F&& emit) {
  const int n = c.n();
  std::vector<int> pos = c.positions();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> next = pos;
    int moved = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        next[i] += dir;
        ++moved;
      }
    WalkerConfig w(std::move(next));
    if (w.strictly_increasing()) emit(w, moved);
  }
}

inline Distribution single_step(const Distribution& d, bool allow_right, bool allow_left) {
  Distribution out;
  for (const auto& [c, v] : d)
    for (int i = 1; i <= c.n(); ++i)
      for (int dir : {1, -1}) {
        if ((dir > 0 && !allow_right) || (dir < 0 && !allow_left)) continue;
        WalkerConfig w = c.shifted(i, dir);
        if (w.strictly_increasing()) add_count(out, w, v);
      }
  return out;
}

inline Distribution subset_phase(Distribution d, int dir, int instants) {
  for (int s = 0; s < instants; ++s) {
    Distribution out;
    for (const auto& [c, v] : d) subset_instant(c, dir, [&](const WalkerConfig& w, int) { add_count(out, w, v); });
    d = std::move(out);
  }
  return d;
}

}  // namespace detail

// Endpoint distributions from x for every k = 0..kmax, holding the walk
// counts b^{(k)}_{x,.}: case 3 entries already include the k! factor.
inline std::vector<Distribution> walk_distributions(const WalkModel& model, const WalkerConfig& x, int kmax) {
  model.validate();
  if (x.n() != model.n) throw DomainError("configuration size differs from the walker count");
  if (kmax < 0) throw DomainError("negative step count");
  std::vector<Distribution> levels(kmax + 1);
  if (!x.strictly_increasing()) return levels;
  Distribution start{{x, 1}};
  switch (model.walk_case) {
    case 1: {
      levels[0] = start;
      for (int k = 1; k <= kmax; ++k) levels[k] = detail::single_step(levels[k - 1], true, true);
      break;
    }
    case 2: {
      levels[0] = detail::subset_phase(start, +1, model.q);
      for (int k = 1; k <= kmax; ++k) levels[k] = detail::single_step(levels[k - 1], false, true);
      break;
    }
    case 3: {
      // track (configuration, effective moves so far)
      std::map<std::pair<WalkerConfig, int>, BigInt> cur{{{x, 0}, 1}};
      auto phase = [&](int dir, int instants) {
        for (int s = 0; s < instants; ++s) {
          std::map<std::pair<WalkerConfig, int>, BigInt> out;
          for (const auto& [state, v] : cur)
            detail::subset_instant(state.first, dir, [&](const WalkerConfig& w, int moved) {
              const int m = state.second + moved;
              if (m > kmax) return;
              auto [it, inserted] = out.emplace(std::pair{w, m}, v);
              if (!inserted) it->second += v;
            });
          cur = std::move(out);
        }
      };
      phase(+1, model.p);
      phase(-1, model.q);
      for (const auto& [state, v] : cur) detail::add_count(levels[state.second], state.first, v);
      for (int k = 0; k <= kmax; ++k) {
        const BigInt f = factorial(k);
        for (auto& [c, v] : levels[k]) v *= f;
      }
      break;
    }
  }
  for (auto& lvl : levels)
    for (auto it = lvl.begin(); it != lvl.end();) it = it->second == 0 ? lvl.erase(it) : std::next(it);
  return levels;
}

inline BigInt count_walks_dp(const WalkModel& model, const WalkerConfig& x, const WalkerConfig& y, int k) {
  if (x.n() != model.n || y.n() != model.n) throw DomainError("configuration size differs from the walker count");
  if (!x.strictly_increasing() || !y.strictly_increasing() || k < 0) return 0;
  const auto levels = walk_distributions(model, x, k);
  auto it = levels[k].find(y);
  return it == levels[k].end() ? BigInt(0) : it->second;
}

// Tableau sums. x gives the first partition, y the second.
inline BigInt count_walks_tableaux(const WalkModel& model, const WalkerConfig& x, const WalkerConfig& y, int k) {
  model.validate();
  if (x.n() != model.n || y.n() != model.n) throw DomainError("configuration size differs from the walker count");
  if (!x.strictly_increasing() || !y.strictly_increasing() || k < 0) return 0;
  const Partition alpha = partition_from_walkers(x).first;
  const Partition beta = partition_from_walkers(y).first;
  const int n = model.n;
  BigInt total = 0;
  switch (model.walk_case) {
    case 1: {
      const int twice = k + alpha.size() + beta.size();
      if (twice % 2) return 0;
      const int size = twice / 2;
      const int k1 = size - alpha.size();
      if (k1 < 0 || size < beta.size()) return 0;
      for (const auto& nu : partitions_of(size, n)) {
        if (!nu.contains(alpha) || !nu.contains(beta)) continue;
        total += count_standard_skew(SkewShape(nu, alpha)) * count_standard_skew(SkewShape(nu, beta));
      }
      return total * binomial(k, k1);
    }
    case 2: {
      for (const auto& lambda : partitions_of(k + beta.size(), n)) {
        if (!lambda.contains(alpha) || !lambda.contains(beta)) continue;
        total += count_semistandard_skew(SkewShape(lambda, alpha).transposed(), model.q) *
                 count_standard_skew(SkewShape(lambda, beta));
      }
      return total;
    }
    case 3: {
      const int twice = k + alpha.size() + beta.size();
      if (twice % 2) return 0;
      for (const auto& lambda : partitions_of(twice / 2, n)) {
        if (!lambda.contains(alpha) || !lambda.contains(beta)) continue;
        total += count_semistandard_skew(SkewShape(lambda, alpha).transposed(), model.p) *
                 count_semistandard_skew(SkewShape(lambda, beta).transposed(), model.q);
      }
      return total * factorial(k);
    }
  }
  return 0;
}

// Case 1 by the reflection principle: signed sum over permutations w of the
// number of unconstrained T-step walks from x_{w(i)} to y_i.
inline BigInt count_walks_reflection(const WalkerConfig& x, const WalkerConfig& y, int T) {
  if (x.n() != y.n()) throw DomainError("configurations differ in size");
  if (!x.strictly_increasing() || !y.strictly_increasing() || T < 0) return 0;
  const int n = x.n();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  BigInt total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (w[i] > w[j]) ++inversions;
    std::vector<int> d(n);
    int min_steps = 0;
    for (int i = 0; i < n; ++i) {
      d[i] = y.positions()[i] - x.positions()[w[i]];
      min_steps += std::abs(d[i]);
    }
    if (min_steps > T || (T - min_steps) % 2) continue;
    // walker i takes m_i = |d_i| + 2 j_i steps, the extra pairs sharing (T - min)/2
    BigInt term = 0;
    std::vector<long> parts(2 * n);
    std::vector<int> extra(n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == n - 1) {
        extra[i] = left;
      } else {
        for (int e = 0; e <= left; ++e) {
          extra[i] = e;
          self(self, i + 1, left - e);
        }
        return;
      }
      for (int j = 0; j < n; ++j) {
        const int m = std::abs(d[j]) + 2 * extra[j];
        parts[2 * j] = (m + d[j]) / 2;
        parts[2 * j + 1] = (m - d[j]) / 2;
      }
      term += multinomial(parts);
    };
    rec(rec, 0, (T - min_steps) / 2);
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

// Determinant entry: constant term in u of u^m times the case weight.
inline ZSeries series_entry(const WalkModel& model, int m, int order) {
  ZSeries e(order);
  switch (model.walk_case) {
    case 1:
      // e^{z(u + 1/u)}: a - b = -m
      for (int b = std::max(0, m); ; ++b) {
        const int a = b - m;
        if (a + b > order) break;
        e[a + b] += make_rational(1, factorial(a) * factorial(b));
      }
      break;
    case 2:
      // (1+u)^q e^{z/u}
      for (int i = std::max(0, -m); i <= model.q; ++i)
        if (i + m <= order) e[i + m] += make_rational(binomial(model.q, i), factorial(i + m));
      break;
    case 3:
      // (1 + z u)^p (1 + z/u)^q
      for (int i = std::max(0, -m); i <= model.p; ++i)
        if (2 * i + m <= order) e[2 * i + m] += Rational(binomial(model.p, i) * binomial(model.q, i + m));
      break;
  }
  return e;
}

// a(z) mod z^{order+1}; rows come from x, columns from y.
inline ZSeries generating_series(const WalkModel& model, const WalkerConfig& x, const WalkerConfig& y, int order) {
  model.validate();
  if (x.n() != model.n || y.n() != model.n) throw DomainError("configuration size differs from the walker count");
  if (!x.strictly_increasing() || !y.strictly_increasing()) return ZSeries(order);
  const Partition alpha = partition_from_walkers(x).first;
  const Partition beta = partition_from_walkers(y).first;
  const int n = model.n;
  std::vector<std::vector<ZSeries>> m(n, std::vector<ZSeries>(n));
  for (int l = 1; l <= n; ++l)
    for (int k = 1; k <= n; ++k) m[l - 1][k - 1] = series_entry(model, alpha(l) - l - beta(k) + k, order);
  return zseries_det(m, order);
}

inline BigInt count_walks_series(const WalkModel& model, const WalkerConfig& x, const WalkerConfig& y, int k) {
  if (k < 0) return 0;
  const Rational v = generating_series(model, x, y, k)[k] * Rational(factorial(k));
  if (!is_integer(v)) throw DomainError("non-integral series coefficient");
  return v.get_num();
}

inline Rational transition_probability(const WalkerConfig& x, const WalkerConfig& y, int k, int n) {
  const BigInt b = count_walks_dp(WalkModel{1, n, 0, 0}, x, y, k);
  return make_rational(b, power(BigInt(2 * n), static_cast<unsigned long>(k)));
}

struct IncompleteTableError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Exact counts b^{(k)}_{xy} for every start x in a chosen set, every k up to
// kmax and every reachable y.
class CountTable {
 public:
  using value_type = BigInt;

  CountTable() = default;
  CountTable(WalkModel model, int kmax) : model_(model), kmax_(kmax) {}

  const WalkModel& model() const { return model_; }
  int kmax() const { return kmax_; }
  bool covers(const WalkerConfig& x) const { return rows_.count(x) > 0; }
  const std::map<WalkerConfig, std::vector<Distribution>>& rows() const { return rows_; }

  void insert(const WalkerConfig& x, std::vector<Distribution> levels) { rows_[x] = std::move(levels); }

  // Zero off the strictly increasing cone and for negative k; throws for
  // anything in the cone that was never computed.
  BigInt at(int k, const WalkerConfig& x, const WalkerConfig& y) const {
    if (k < 0 || !x.strictly_increasing() || !y.strictly_increasing()) return 0;
    auto it = rows_.find(x);
    if (it == rows_.end() || k > kmax_)
      throw IncompleteTableError("count table has no entry for k=" + std::to_string(k) + " x=" + x.to_string());
    auto jt = it->second[k].find(y);
    return jt == it->second[k].end() ? BigInt(0) : jt->second;
  }

 private:
  WalkModel model_;
  int kmax_ = 0;
  std::map<WalkerConfig, std::vector<Distribution>> rows_;
};

inline CountTable build_count_table(const WalkModel& model, const std::vector<WalkerConfig>& starts, int kmax,
                                    unsigned threads = 1) {
  CountTable table(model, kmax);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(starts.size())));
  std::vector<std::vector<Distribution>> results(starts.size());
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < starts.size(); i += threads) results[i] = walk_distributions(model, starts[i], kmax);
    }));
  for (auto& j : jobs) j.get();
  for (std::size_t i = 0; i < starts.size(); ++i) table.insert(starts[i], std::move(results[i]));
  return table;
}

// P(k,x,y) = b^{(k)}_{xy} / (2n)^k over a case 1 count table.
class ProbabilityTable {
 public:
  using value_type = Rational;
  explicit ProbabilityTable(const CountTable& counts) : counts_(&counts) {}
  Rational at(int k, const WalkerConfig& x, const WalkerConfig& y) const {
    const BigInt b = counts_->at(k, x, y);
    if (b == 0) return 0;
    return make_rational(b, power(BigInt(2 * counts_->model().n), static_cast<unsigned long>(k)));
  }
  const CountTable& counts() const { return *counts_; }

 private:
  const CountTable* counts_;
};

}  // namespace virwalk
