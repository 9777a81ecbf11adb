// Verification suites: every vanishing identity evaluated on exact data.
#pragma once

#include "diffops.hpp"

#include <random>
#include <string>
#include <vector>

namespace virwalk {

struct Failure {
  std::string check;
  int k = 0;
  std::string first;   // x or lambda
  std::string second;  // y or mu
  std::string value;
};

// How a non-default form fared on the same points.
struct VariantResult {
  std::string check;
  std::string variant;
  long checked = 0;
  long nonzero = 0;
};

struct Report {
  std::string suite;
  long checked = 0;
  long skipped = 0;  // points whose stencil leaves the computed window
  std::vector<Failure> failures;
  std::vector<VariantResult> variants;

  bool ok() const { return failures.empty(); }
  void merge(const Report& o) {
    checked += o.checked;
    skipped += o.skipped;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    variants.insert(variants.end(), o.variants.begin(), o.variants.end());
  }
};

namespace detail {

inline constexpr std::size_t kMaxRecordedFailures = 50;

inline void record(Report& r, const std::string& check, int k, const std::string& a, const std::string& b,
                   const std::string& value) {
  if (r.failures.size() < kMaxRecordedFailures) r.failures.push_back({check, k, a, b, value});
  else if (r.failures.size() == kMaxRecordedFailures) r.failures.push_back({"(further failures omitted)", 0, "", "", ""});
}

template <class V>
bool is_zero_value(const V& v) {
  return v == 0;
}

inline std::string model_label(const WalkModel& m) {
  std::string s = "case" + std::to_string(m.walk_case) + " n=" + std::to_string(m.n);
  if (m.walk_case == 3) s += " p=" + std::to_string(m.p);
  if (m.walk_case >= 2) s += " q=" + std::to_string(m.q);
  return s;
}

}  // namespace detail

// Builds the count table over all starts in [0, window) and applies the
// model's operators at every point (k <= kmax, x and y in the window) whose
// stencil stays inside the table.
inline Report verify_suite(const WalkModel& model, int window, int kmax, unsigned threads = 1) {
  model.validate();
  Report rep;
  rep.suite = "counts " + detail::model_label(model);
  const auto configs = configs_in_window(model.n, 0, window - 1);
  const CountTable table = build_count_table(model, configs, kmax + 1, threads);
  const TransposedTable<CountTable> swapped{table};

  struct Check {
    std::string name;
    DiffOpSpec spec;
    bool swap_pairing = false;
    bool is_default = true;
    std::string variant;
  };
  std::vector<Check> checks;
  const int n = model.n;
  auto spec = [&](DiffOpFamily f, bool unrestricted = false, bool printed = false) {
    return DiffOpSpec{f, n, model.p, model.q, unrestricted, printed};
  };
  switch (model.walk_case) {
    case 1:
      checks.push_back({"L1_minus", spec(DiffOpFamily::L1_minus)});
      checks.push_back({"L1_zero", spec(DiffOpFamily::L1_zero)});
      checks.push_back({"L1_plus", spec(DiffOpFamily::L1_plus)});
      if (n > 1) {
        checks.push_back({"L1_minus", spec(DiffOpFamily::L1_minus, true), false, false, "unrestricted_adjacency"});
        checks.push_back({"L1_plus", spec(DiffOpFamily::L1_plus, true), false, false, "unrestricted_adjacency"});
      }
      break;
    case 2:
      checks.push_back({"L2_minus", spec(DiffOpFamily::L2_minus)});
      checks.push_back({"L2_plus", spec(DiffOpFamily::L2_plus)});
      checks.push_back({"L2_minus", spec(DiffOpFamily::L2_minus, true, true), false, false, "as_printed"});
      if (n > 1)
        checks.push_back({"L2_minus", spec(DiffOpFamily::L2_minus, true), false, false, "unrestricted_adjacency"});
      checks.push_back({"L2_minus", spec(DiffOpFamily::L2_minus), true, false, "swapped_pairing"});
      checks.push_back({"L2_plus", spec(DiffOpFamily::L2_plus), true, false, "swapped_pairing"});
      break;
    case 3:
      checks.push_back({"L3", spec(DiffOpFamily::L3)});
      checks.push_back({"L3", spec(DiffOpFamily::L3, false, true), false, false, "as_printed"});
      checks.push_back({"L3", spec(DiffOpFamily::L3), true, false, "swapped_pairing"});
      break;
  }
  std::vector<VariantResult> vres;
  for (const auto& c : checks)
    if (!c.is_default) vres.push_back({c.name, c.variant, 0, 0});

  for (int k = 0; k <= kmax; ++k)
    for (const auto& x : configs)
      for (const auto& y : configs) {
        bool interior = true;
        std::size_t vi = 0;
        for (const auto& c : checks) {
          try {
            const BigInt v = c.swap_pairing ? apply_count_op(c.spec, swapped, k, y, x)
                                            : apply_count_op(c.spec, table, k, x, y);
            if (c.is_default) {
              if (v != 0) detail::record(rep, c.name, k, x.to_string(), y.to_string(), v.get_str());
            } else {
              ++vres[vi].checked;
              if (v != 0) ++vres[vi].nonzero;
            }
          } catch (const IncompleteTableError&) {
            if (c.is_default) interior = false;
          }
          if (!c.is_default) ++vi;
        }
        if (interior) ++rep.checked;
        else ++rep.skipped;
      }
  rep.variants = std::move(vres);
  return rep;
}

// Forward and backward equations on case 1 probabilities, and the identity
// linking the forward operator to L1_minus.
inline Report verify_probability_suite(int n, int window, int kmax, unsigned threads = 1) {
  const WalkModel model{1, n, 0, 0};
  Report rep;
  rep.suite = "probabilities n=" + std::to_string(n);
  const auto configs = configs_in_window(n, 0, window - 1);
  const CountTable counts = build_count_table(model, configs, kmax, threads);
  const ProbabilityTable P(counts);
  const DiffOpSpec lminus{DiffOpFamily::L1_minus, n};
  VariantResult a1_adjacent{"A1", "adjacent_final_positions", 0, 0};
  VariantResult a2_adjacent{"A2", "adjacent_initial_positions", 0, 0};
  for (int k = 0; k <= kmax; ++k)
    for (const auto& x : configs)
      for (const auto& y : configs) {
        bool interior = true;
        try {
          const Rational a1 = apply_prob_op(DiffOpFamily::A1, P, k, x, y);
          const BigInt l = apply_count_op(lminus, counts, k, x, y);
          BigInt adj = 0;
          for (int i = 1; i < n; ++i)
            if (y(i + 1) - y(i) == 1) adj += counts.at(k - 1, x, y.shifted(i, 1).shifted(i + 1, 1));
          const Rational scaled = a1 * Rational(power(BigInt(2 * n), static_cast<unsigned long>(k)));
          // exact form everywhere; the adjacency term vanishes when no two
          // final walkers are neighbours
          if (scaled != Rational(-l + adj * k))
            detail::record(rep, "A1_identity", k, x.to_string(), y.to_string(), scaled.get_str());
          if (!y.has_adjacent()) {
            if (a1 != 0) detail::record(rep, "A1", k, x.to_string(), y.to_string(), a1.get_str());
            if (scaled != Rational(-l))
              detail::record(rep, "A1_equals_minus_L1_minus", k, x.to_string(), y.to_string(), scaled.get_str());
          } else {
            ++a1_adjacent.checked;
            if (a1 != 0) ++a1_adjacent.nonzero;
          }
        } catch (const IncompleteTableError&) {
          interior = false;
        }
        try {
          const Rational a2 = apply_prob_op(DiffOpFamily::A2, P, k, x, y);
          if (!x.has_adjacent()) {
            if (a2 != 0) detail::record(rep, "A2", k, x.to_string(), y.to_string(), a2.get_str());
          } else {
            ++a2_adjacent.checked;
            if (a2 != 0) ++a2_adjacent.nonzero;
          }
        } catch (const IncompleteTableError&) {
          interior = false;
        }
        if (interior) ++rep.checked;
        else ++rep.skipped;
      }
  if (n > 1) {
    rep.variants.push_back(a1_adjacent);
    rep.variants.push_back(a2_adjacent);
  }
  return rep;
}

// Generating series a_{lambda mu}(z) from the determinant, cached.
class DeterminantProvider {
 public:
  DeterminantProvider(WalkModel m, int order) : model_(m), order_(order) {}
  ZSeries operator()(const Partition& l, const Partition& m) const {
    auto key = std::pair{l, m};
    auto it = cache_->find(key);
    if (it != cache_->end()) return it->second;
    ZSeries s = generating_series(model_, walkers_from_partition(l, model_.n), walkers_from_partition(m, model_.n), order_);
    cache_->emplace(key, s);
    return s;
  }

 private:
  WalkModel model_;
  int order_;
  std::shared_ptr<std::map<std::pair<Partition, Partition>, ZSeries>> cache_ =
      std::make_shared<std::map<std::pair<Partition, Partition>, ZSeries>>();
};

// The z-level operators vanish on the determinant series for all
// |lambda|, |mu| <= degree, and their z^k coefficients match the k-level
// operators applied to dynamic-programming counts.
inline Report verify_series_suite(const WalkModel& model, int degree, int order, unsigned threads = 1) {
  model.validate();
  Report rep;
  rep.suite = "series " + detail::model_label(model);
  const int n = model.n;
  const DeterminantProvider provider(model, order);
  const SeriesProvider prov = provider;
  const auto parts = partitions_up_to(degree, n);
  std::vector<WalkerConfig> starts;
  for (const auto& l : partitions_up_to(degree + 2, n)) starts.push_back(walkers_from_partition(l, n));
  const CountTable table = build_count_table(model, starts, order + 1, threads);

  struct Pair {
    SeriesOp series;
    DiffOpFamily counts;
    const char* name;
  };
  std::vector<Pair> ops;
  switch (model.walk_case) {
    case 1:
      ops = {{SeriesOp::L1_minus, DiffOpFamily::L1_minus, "L1_minus"},
             {SeriesOp::L1_zero, DiffOpFamily::L1_zero, "L1_zero"},
             {SeriesOp::L1_plus, DiffOpFamily::L1_plus, "L1_plus"}};
      break;
    case 2:
      ops = {{SeriesOp::L2_minus, DiffOpFamily::L2_minus, "L2_minus"},
             {SeriesOp::L2_plus, DiffOpFamily::L2_plus, "L2_plus"}};
      break;
    case 3: ops = {{SeriesOp::L3_times_z, DiffOpFamily::L3, "L3"}}; break;
  }
  VariantResult unrestricted{"series_L1_minus", "unrestricted_adjacency", 0, 0};
  for (const auto& l : parts)
    for (const auto& m : parts) {
      ++rep.checked;
      const WalkerConfig x = walkers_from_partition(l, n), y = walkers_from_partition(m, n);
      for (const auto& op : ops) {
        const ZSeries s = apply_series_op(op.series, n, model.p, model.q, prov, l, m, order);
        for (int k = 0; k <= order; ++k)
          if (s[k] != 0) {
            detail::record(rep, std::string("series_") + op.name, k, l.to_string(), m.to_string(), s[k].get_str());
            break;
          }
        // the operator's z^k coefficient against the count-level operator
        const DiffOpSpec spec{op.counts, n, model.p, model.q};
        const int shift = op.series == SeriesOp::L3_times_z ? 1 : 0;
        for (int k = 0; k + shift <= order && k < order; ++k) {
          BigInt c;
          try {
            c = apply_count_op(spec, table, k, x, y);
          } catch (const IncompleteTableError&) {
            continue;
          }
          Rational lhs = s[k + shift];
          if (shift == 0) lhs *= Rational(factorial(k));
          if (lhs != Rational(c))
            detail::record(rep, std::string("levels_") + op.name, k, l.to_string(), m.to_string(),
                           lhs.get_str() + " vs " + c.get_str());
        }
      }
      if (model.walk_case == 1 && n > 1) {
        const ZSeries s = apply_series_op(SeriesOp::L1_minus, n, 0, 0, prov, l, m, order, true);
        ++unrestricted.checked;
        if (!s.is_zero()) ++unrestricted.nonzero;
      }
    }
  if (model.walk_case == 1 && n > 1) rep.variants.push_back(unrestricted);
  return rep;
}

// Table view of a k-family: b^{(k)}_{xy} = btilde^{(k)}_{lambda(x) mu(y)},
// with case 3 entries presented as k! times the stored raw coefficient.
struct FamilyTable {
  using value_type = Rational;
  const KFamily& family;
  bool factorial_scaled = false;
  Rational at(int k, const WalkerConfig& x, const WalkerConfig& y) const {
    if (k < 0 || !x.strictly_increasing() || !y.strictly_increasing()) return 0;
    auto l = try_partition_from_walkers(x);
    auto m = try_partition_from_walkers(y);
    if (!l || !m) return 0;
    Rational v = family.coefficient(k, *l, *m);
    if (factorial_scaled && v != 0) v *= Rational(factorial(k));
    return v;
  }
};

// One row of the correspondence between shifted two-sided operators and
// coefficient difference operators: the basis-wise action of `op` equals
// sign times `counts` applied to the coefficients.
struct Correspondence {
  ShiftCase shift;
  int which;
  DiffOpFamily counts;
  int sign;
};

inline std::vector<Correspondence> correspondence_table() {
  return {{ShiftCase::case1, -1, DiffOpFamily::L1_minus, 1},
          {ShiftCase::case1, 0, DiffOpFamily::L1_zero, 1},
          {ShiftCase::case1, 1, DiffOpFamily::L1_plus, -1},
          {ShiftCase::case2, -1, DiffOpFamily::L2_minus, 1},
          {ShiftCase::case2, 1, DiffOpFamily::L2_plus, 1},
          {ShiftCase::case3, 0, DiffOpFamily::L3, 1}};
}

inline int case_number(ShiftCase s) {
  switch (s) {
    case ShiftCase::case1: return 1;
    case ShiftCase::case2: return 2;
    case ShiftCase::case3: return 3;
    default: return 0;
  }
}

// Compares the basis-wise action with the coefficient operator at every
// (k, lambda, mu) up to the given bounds; the output must also stay within
// the column bound and within those bounds.
inline void compare_correspondence(Report& rep, const Correspondence& c, int n, int p, int q, const KFamily& f,
                                   int kmax, int degree, const std::string& label) {
  int J = 0;
  for (const auto& [k, b] : f.entries())
    for (const auto& [key, v] : b.coeffs()) J = std::max({J, key.first.size(), key.second.size()});
  const BiOperator op = walk_operator(c.shift, c.which, n, p, q, J + 2);
  const KFamily out = apply_bivirasoro(op, f);
  const FamilyTable view{f, c.shift == ShiftCase::case3};
  const DiffOpSpec spec{c.counts, n, p, q};
  const auto parts = partitions_up_to(degree, n);
  ++rep.checked;
  for (const auto& [k, b] : out.entries())
    for (const auto& [key, v] : b.coeffs())
      if (k > kmax || key.first.length() > n || key.second.length() > n || key.first.size() > degree ||
          key.second.size() > degree)
        detail::record(rep, label + " support", k, key.first.to_string(), key.second.to_string(), v.get_str());
  for (int k = 0; k <= kmax; ++k)
    for (const auto& l : parts)
      for (const auto& m : parts) {
        const Rational lhs = out.coefficient(k, l, m);
        const Rational rhs = apply_count_op(spec, view, k, walkers_from_partition(l, n), walkers_from_partition(m, n));
        if (lhs != rhs * c.sign)
          detail::record(rep, label, k, l.to_string(), m.to_string(), lhs.get_str() + " vs " + rhs.get_str());
      }
}

// Random integer families: the shifted operators act basis-wise exactly as
// the coefficient operators act on the coefficients.
inline Report verify_fourier_suite(int families, std::uint32_t seed = 20240601u) {
  Report rep;
  rep.suite = "fourier";
  std::mt19937 rng(seed);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1)); };
  const auto table = correspondence_table();
  for (int t = 0; t < families; ++t) {
    const int n = 1 + t % 3;
    const int p = draw(0, 3), q = draw(0, 3);
    const auto parts = partitions_up_to(4, n);
    KFamily f(n);
    const int entries = draw(1, 8);
    for (int e = 0; e < entries; ++e) {
      const auto& l = parts[rng() % parts.size()];
      const auto& m = parts[rng() % parts.size()];
      f.add(draw(0, 3), l, m, draw(-3, 3));
    }
    for (const auto& c : table)
      compare_correspondence(rep, c, n, p, q, f, 6, 7,
                             "case" + std::to_string(case_number(c.shift)) + " V" + std::to_string(c.which));
  }
  return rep;
}

// True counts as a k-family; case 3 stores raw counts.
inline KFamily count_family(const WalkModel& model, int degree, int kmax) {
  KFamily f(model.n);
  const auto parts = partitions_up_to(degree, model.n);
  for (const auto& l : parts) {
    const auto levels = walk_distributions(model, walkers_from_partition(l, model.n), kmax);
    for (int k = 0; k <= kmax; ++k)
      for (const auto& [y, v] : levels[k]) {
        auto m = try_partition_from_walkers(y);
        if (!m || m->size() > degree) continue;
        Rational val(v);
        if (model.walk_case == 3) val /= Rational(factorial(k));
        f.add(k, l, *m, val);
      }
  }
  return f;
}

// The shifted operators annihilate the family of true counts away from the
// truncation edges.
inline Report verify_count_family_suite(const WalkModel& model, int degree, int kmax) {
  Report rep;
  rep.suite = "annihilation " + detail::model_label(model);
  const KFamily f = count_family(model, degree, kmax);
  for (const auto& c : correspondence_table()) {
    if (case_number(c.shift) != model.walk_case) continue;
    const BiOperator op = walk_operator(c.shift, c.which, model.n, model.p, model.q, degree + 2);
    const KFamily out = apply_bivirasoro(op, f);
    for (const auto& [k, b] : out.entries()) {
      if (k > kmax - 1) continue;
      for (const auto& [key, v] : b.coeffs()) {
        if (key.first.size() > degree - 2 || key.second.size() > degree - 2) continue;
        detail::record(rep, "V" + std::to_string(c.which), k, key.first.to_string(), key.second.to_string(),
                       v.get_str());
      }
    }
    ++rep.checked;
  }
  return rep;
}

// Unshifted V_{-1}, V_0, V_1 kill the truncated tau-function below the
// truncation degree.
inline Report verify_tau_suite(int nmax, int Nmax) {
  Report rep;
  rep.suite = "tau";
  for (int n = 1; n <= nmax; ++n)
    for (int N = 1; N <= Nmax; ++N) {
      const BiExpansion tau = tau_truncation(n, N);
      for (int which = -1; which <= 1; ++which) {
        const BiOperator op = bivirasoro_operator(which, ShiftCase::none, n, 0, 0, N + 2);
        const BiExpansion out = apply_bivirasoro(op, tau);
        ++rep.checked;
        for (const auto& [key, v] : out.coeffs())
          if (std::max(key.first.size(), key.second.size()) < N)
            detail::record(rep, "V" + std::to_string(which) + " n=" + std::to_string(n) + " N=" + std::to_string(N),
                           0, key.first.to_string(), key.second.to_string(), v.get_str());
      }
    }
  return rep;
}

}  // namespace virwalk
