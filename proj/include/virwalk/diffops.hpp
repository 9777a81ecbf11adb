// Difference operators on walk counts (in k, x, y), on generating series (in
// z, lambda, mu) and on transition probabilities.
#pragma once

#include "bivirasoro.hpp"
#include "walks.hpp"

#include <functional>
#include <string>

namespace virwalk {

enum class DiffOpFamily { L1_minus, L1_zero, L1_plus, L2_minus, L2_plus, L3, A1, A2 };

inline std::string family_name(DiffOpFamily f) {
  switch (f) {
    case DiffOpFamily::L1_minus: return "L1_minus";
    case DiffOpFamily::L1_zero: return "L1_zero";
    case DiffOpFamily::L1_plus: return "L1_plus";
    case DiffOpFamily::L2_minus: return "L2_minus";
    case DiffOpFamily::L2_plus: return "L2_plus";
    case DiffOpFamily::L3: return "L3";
    case DiffOpFamily::A1: return "A1";
    case DiffOpFamily::A2: return "A2";
  }
  return "?";
}

// The defaults are the forms that vanish on true counts. `unrestricted`
// sums the b_{x,y+e_i+e_{i+1}} terms over every i instead of only adjacent
// y_i, y_{i+1}; `as_printed` restores the sign of the b_{x,y+2e_i} term in
// L2_minus and drops the n(p-q) term from L3.
struct DiffOpSpec {
  DiffOpFamily family = DiffOpFamily::L1_minus;
  int n = 1;
  int p = 0;
  int q = 0;
  bool unrestricted = false;
  bool as_printed = false;
};

// Swaps the roles of the two configurations.
template <class Table>
struct TransposedTable {
  using value_type = typename Table::value_type;
  const Table& inner;
  value_type at(int k, const WalkerConfig& x, const WalkerConfig& y) const { return inner.at(k, y, x); }
};

namespace detail {

template <class Table>
struct Reader {
  using V = typename Table::value_type;
  const Table& t;
  // c * b^{(k)}_{x,y}, without touching the table when c vanishes
  V operator()(long c, int k, const WalkerConfig& x, const WalkerConfig& y) const {
    if (c == 0) return V(0);
    return V(t.at(k, x, y) * c);
  }
};

template <class Table>
typename Table::value_type l1_minus(const DiffOpSpec& s, const Table& t, int k, const WalkerConfig& x,
                                    const WalkerConfig& y) {
  using V = typename Table::value_type;
  Reader<Table> b{t};
  const int n = s.n;
  V acc = 0;
  for (int i = 1; i <= n; ++i) acc += b(x(i), k, x.shifted(i, -1), y) - b(y(i) + 1, k, x, y.shifted(i, 1));
  V low = b(n, k - 1, x, y);
  for (int i = 1; i <= n; ++i) low -= b(1, k - 1, x, y.shifted(i, 2));
  for (int i = 1; i < n; ++i)
    if (s.unrestricted || y(i + 1) - y(i) == 1) low += b(1, k - 1, x, y.shifted(i, 1).shifted(i + 1, 1));
  return acc + V(low * k);
}

template <class Table>
typename Table::value_type l1_zero(const DiffOpSpec& s, const Table& t, int k, const WalkerConfig& x,
                                   const WalkerConfig& y) {
  using V = typename Table::value_type;
  Reader<Table> b{t};
  V acc = b(x.sum() - y.sum(), k, x, y);
  V low = 0;
  for (int i = 1; i <= s.n; ++i) low += b(1, k - 1, x.shifted(i, 1), y) - b(1, k - 1, x, y.shifted(i, 1));
  return acc + V(low * k);
}

// L1_minus with x and y exchanged, written out.
template <class Table>
typename Table::value_type l1_plus(const DiffOpSpec& s, const Table& t, int k, const WalkerConfig& x,
                                   const WalkerConfig& y) {
  using V = typename Table::value_type;
  Reader<Table> b{t};
  const int n = s.n;
  V acc = 0;
  for (int i = 1; i <= n; ++i) acc += b(y(i), k, x, y.shifted(i, -1)) - b(x(i) + 1, k, x.shifted(i, 1), y);
  V low = b(n, k - 1, x, y);
  for (int i = 1; i <= n; ++i) low -= b(1, k - 1, x.shifted(i, 2), y);
  for (int i = 1; i < n; ++i)
    if (s.unrestricted || x(i + 1) - x(i) == 1) low += b(1, k - 1, x.shifted(i, 1).shifted(i + 1, 1), y);
  return acc + V(low * k);
}

template <class Table>
typename Table::value_type l2_minus(const DiffOpSpec& s, const Table& t, int k, const WalkerConfig& x,
                                    const WalkerConfig& y) {
  using V = typename Table::value_type;
  Reader<Table> b{t};
  const int n = s.n;
  V acc = 0;
  for (int i = 1; i <= n; ++i)
    acc += b(x(i), k, x.shifted(i, -1), y) - b(y(i) + 1, k, x, y.shifted(i, 1)) + b(x(i) - y(i) + s.q, k, x, y);
  V low = 0;
  const long two_step = s.as_printed ? 1 : -1;
  for (int i = 1; i <= n; ++i) low += b(-1, k - 1, x, y.shifted(i, 1)) + b(two_step, k - 1, x, y.shifted(i, 2));
  for (int i = 1; i < n; ++i)
    if (s.unrestricted || y(i + 1) - y(i) == 1) low += b(1, k - 1, x, y.shifted(i, 1).shifted(i + 1, 1));
  return acc + V(low * k);
}

template <class Table>
typename Table::value_type l2_plus(const DiffOpSpec& s, const Table& t, int k, const WalkerConfig& x,
                                   const WalkerConfig& y) {
  using V = typename Table::value_type;
  Reader<Table> b{t};
  const int n = s.n;
  V acc = 0;
  for (int i = 1; i <= n; ++i)
    acc += b(y(i), k, x, y.shifted(i, -1)) - b(x(i) + 1 + s.q, k, x.shifted(i, 1), y) + b(y(i) - x(i), k, x, y);
  V low = 0;
  for (int i = 1; i <= n; ++i) low += b(1, k - 1, x, y) + b(1, k - 1, x, y.shifted(i, 1));
  return acc + V(low * k);
}

// Acts on raw counts c^{(k)} = b^{(k)} / k!.
template <class Table>
typename Table::value_type l3(const DiffOpSpec& s, const Table& t, int k, const WalkerConfig& x,
                              const WalkerConfig& y) {
  using V = typename Table::value_type;
  const int n = s.n;
  auto c = [&](long coeff, int kk, const WalkerConfig& xx, const WalkerConfig& yy) -> V {
    if (coeff == 0 || kk < 0) return V(0);
    V v = t.at(kk, xx, yy);
    if constexpr (std::is_same_v<V, BigInt>) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), factorial(kk).get_mpz_t());
    } else {
      v /= V(factorial(kk));
    }
    return V(v * coeff);
  };
  V acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += c(x(i), k, x.shifted(i, -1), y) + c(x(i) + s.p + 1, k, x.shifted(i, 1), y);
    acc -= c(y(i), k, x, y.shifted(i, -1)) + c(y(i) + s.q + 1, k, x, y.shifted(i, 1));
  }
  const long d = x.sum() - y.sum();
  acc += c(d, k - 1, x, y) + c(d, k + 1, x, y);
  if (!s.as_printed) acc += c(static_cast<long>(n) * (s.p - s.q), k - 1, x, y);
  return acc;
}

}  // namespace detail

// Value of the operator at (k, x, y). The table must provide at(k, x, y)
// returning b^{(k)}_{xy} (for case 3, k! times the raw count).
template <class Table>
typename Table::value_type apply_count_op(const DiffOpSpec& spec, const Table& table, int k, const WalkerConfig& x,
                                          const WalkerConfig& y) {
  if (x.n() != spec.n || y.n() != spec.n) throw DomainError("configuration size differs from the operator's n");
  switch (spec.family) {
    case DiffOpFamily::L1_minus: return detail::l1_minus(spec, table, k, x, y);
    case DiffOpFamily::L1_zero: return detail::l1_zero(spec, table, k, x, y);
    case DiffOpFamily::L1_plus: return detail::l1_plus(spec, table, k, x, y);
    case DiffOpFamily::L2_minus: return detail::l2_minus(spec, table, k, x, y);
    case DiffOpFamily::L2_plus: return detail::l2_plus(spec, table, k, x, y);
    case DiffOpFamily::L3: return detail::l3(spec, table, k, x, y);
    case DiffOpFamily::A1:
    case DiffOpFamily::A2: throw DomainError("A1 and A2 act on probabilities; use apply_prob_op");
  }
  return 0;
}

// Forward (A1) and backward (A2) operators on P(k, x, y).
template <class Table>
Rational apply_prob_op(DiffOpFamily which, const Table& P, int k, const WalkerConfig& x, const WalkerConfig& y) {
  const int n = x.n();
  if (y.n() != n) throw DomainError("configurations differ in size");
  auto at = [&](int kk, const WalkerConfig& xx, const WalkerConfig& yy) -> Rational {
    return kk < 0 ? Rational(0) : Rational(P.at(kk, xx, yy));
  };
  auto times = [&](long c, int kk, const WalkerConfig& xx, const WalkerConfig& yy) -> Rational {
    return c == 0 ? Rational(0) : Rational(at(kk, xx, yy) * c);
  };
  const Rational p0 = at(k, x, y);
  const Rational step = k == 0 ? Rational(0) : make_rational(k, 2 * n);
  Rational acc = 0;
  for (int i = 1; i <= n; ++i) {
    if (which == DiffOpFamily::A1) {
      if (step != 0) acc += step * (at(k - 1, x, y.shifted(i, 2)) - at(k - 1, x, y));
      acc += p0 * x(i) - times(x(i), k, x.shifted(i, -1), y);
      acc += times(y(i) + 1, k, x, y.shifted(i, 1)) - p0 * y(i);
      acc -= p0 * (x(i) - y(i));
    } else if (which == DiffOpFamily::A2) {
      if (step != 0) acc += step * (at(k - 1, x.shifted(i, 2), y) - at(k - 1, x, y));
      acc += p0 * y(i) - times(y(i), k, x, y.shifted(i, -1));
      acc += times(x(i) + 1, k, x.shifted(i, 1), y) - p0 * x(i);
      acc -= p0 * (y(i) - x(i));
    } else {
      throw DomainError("apply_prob_op takes A1 or A2");
    }
  }
  return acc;
}

// Partition-indexed coefficients a_{lambda mu}(z); zero off the cone.
using SeriesProvider = std::function<ZSeries(const Partition&, const Partition&)>;

enum class SeriesOp { L1_minus, L1_zero, L1_plus, L2_minus, L2_plus, L3_times_z };

// The z-level operators. L3_times_z returns z times the case-3 operator so
// that no negative power of z is needed.
inline ZSeries apply_series_op(SeriesOp which, int n, int p, int q, const SeriesProvider& provider,
                               const Partition& lambda, const Partition& mu, int order, bool unrestricted = false) {
  auto a = [&](const std::optional<Partition>& l, const std::optional<Partition>& m) -> ZSeries {
    if (!l || !m || l->length() > n || m->length() > n) return ZSeries(order);
    ZSeries s = provider(*l, *m);
    if (s.order() != order) s = s.truncated(order);
    return s;
  };
  const std::optional<Partition> L = lambda, M = mu;
  auto two = [&](const Partition& p0, int i) -> std::optional<Partition> {
    auto r = p0.shifted(i, 1);
    return r ? r->shifted(i + 1, 1) : std::nullopt;
  };
  const Rational dsize = lambda.size() - mu.size();
  ZSeries out(order);
  auto lower_minus = [&](const Partition& l, const Partition& m, bool swap) {
    // n a - sum a_{., m+2e_i} + sum a_{., m+e_i+e_{i+1}}
    auto A = [&](std::optional<Partition> mm) { return swap ? a(mm, l) : a(l, mm); };
    ZSeries s = A(m) * Rational(n);
    for (int i = 1; i <= n; ++i) s -= A(m.shifted(i, 2));
    for (int i = 1; i < n; ++i)
      if (unrestricted || m(i) == m(i + 1)) s += A(two(m, i));
    return s;
  };
  switch (which) {
    case SeriesOp::L1_minus:
    case SeriesOp::L1_plus: {
      const bool swap = which == SeriesOp::L1_plus;
      const Partition& l = swap ? mu : lambda;
      const Partition& m = swap ? lambda : mu;
      auto A = [&](std::optional<Partition> ll, std::optional<Partition> mm) { return swap ? a(mm, ll) : a(ll, mm); };
      for (int i = 1; i <= n; ++i) {
        out += A(l.shifted(i, -1), m) * Rational(l(i) - i + n);
        out -= A(l, m.shifted(i, 1)) * Rational(m(i) - i + n + 1);
      }
      out += lower_minus(l, m, swap).shifted(1);
      break;
    }
    case SeriesOp::L1_zero: {
      out += a(L, M) * dsize;
      ZSeries s(order);
      for (int i = 1; i <= n; ++i) s += a(lambda.shifted(i, 1), M) - a(L, mu.shifted(i, 1));
      out += s.shifted(1);
      break;
    }
    case SeriesOp::L2_minus: {
      ZSeries zpart(order);
      for (int i = 1; i <= n; ++i) {
        out += a(lambda.shifted(i, -1), M) * Rational(lambda(i) - i + n);
        const ZSeries up = a(L, mu.shifted(i, 1));
        out -= up * Rational(mu(i) - i + n + 1);
        zpart -= up;
        zpart -= a(L, mu.shifted(i, 2));
      }
      for (int i = 1; i < n; ++i)
        if (unrestricted || mu(i) == mu(i + 1)) zpart += a(L, two(mu, i));
      out += a(L, M) * (dsize + n * q);
      out += zpart.shifted(1);
      break;
    }
    case SeriesOp::L2_plus: {
      ZSeries zpart = a(L, M) * Rational(n);
      for (int i = 1; i <= n; ++i) {
        out += a(L, mu.shifted(i, -1)) * Rational(mu(i) - i + n);
        out -= a(lambda.shifted(i, 1), M) * Rational(lambda(i) - i + n + q + 1);
        zpart += a(L, mu.shifted(i, 1));
      }
      out -= a(L, M) * dsize;
      out += zpart.shifted(1);
      break;
    }
    case SeriesOp::L3_times_z: {
      ZSeries s(order);
      for (int i = 1; i <= n; ++i) {
        s += a(lambda.shifted(i, -1), M) * Rational(lambda(i) - i + n);
        s += a(lambda.shifted(i, 1), M) * Rational(lambda(i) - i + n + p + 1);
        s -= a(L, mu.shifted(i, -1)) * Rational(mu(i) - i + n);
        s -= a(L, mu.shifted(i, 1)) * Rational(mu(i) - i + n + q + 1);
      }
      const ZSeries a0 = a(L, M);
      out += s.shifted(1);
      out += a0.shifted(2) * dsize + a0 * dsize;
      out += a0.shifted(2) * Rational(n * (p - q));
      break;
    }
  }
  return out;
}

}  // namespace virwalk
