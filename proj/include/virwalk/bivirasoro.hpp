// Two-sided Virasoro operators on sums  b_{lambda mu} s_lambda(t) s_mu(-s),
// optionally with the shifts that turn the generic tau-function into the
// three walk generating functions.
#pragma once

#include "virasoro.hpp"
#include "zseries.hpp"

#include <compare>
#include <map>

namespace virwalk {

// Laurent polynomial in z: power -> coefficient.
using LaurentZ = std::map<int, Rational>;

inline void add_to(LaurentZ& a, const LaurentZ& b, const Rational& scale = 1) {
  for (const auto& [j, c] : b) {
    Rational& slot = a[j];
    slot += scale * c;
    if (slot == 0) a.erase(j);
  }
}
inline LaurentZ z_power(int j, const Rational& c = 1) {
  LaurentZ l;
  if (c != 0) l[j] = c;
  return l;
}
inline LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) add_to(r, z_power(i + j, x * y));
  return r;
}

// One side of a product operator. `multiply` i means i t_i, `differentiate`
// i means d/dt_i, `virasoro` k means V_k.
struct SideAtom {
  enum class Kind { identity, virasoro, multiply, differentiate };
  Kind kind = Kind::identity;
  int index = 0;

  static SideAtom id() { return {}; }
  static SideAtom vir(int k) { return {Kind::virasoro, k}; }
  static SideAtom mul(int i) { return {Kind::multiply, i}; }
  static SideAtom diff(int i) { return {Kind::differentiate, i}; }
  friend auto operator<=>(const SideAtom&, const SideAtom&) = default;
  friend bool operator==(const SideAtom&, const SideAtom&) = default;
};

inline SchurExpansion apply_atom(const SideAtom& a, const SchurExpansion& e) {
  switch (a.kind) {
    case SideAtom::Kind::identity: return e;
    case SideAtom::Kind::virasoro: return apply_virasoro_expansion(a.index, e);
    case SideAtom::Kind::multiply: return mn_multiply(a.index, e);
    case SideAtom::Kind::differentiate: return mn_differentiate(a.index, e);
  }
  return e;
}

enum class ShiftCase { none, case1, case2, case3 };

// sum of coeff(z) * (t-side atom) (x) (s-side atom). The s-side atoms act in
// the variables s' = -s, so they apply to s_mu(-s) exactly as the t-side
// atoms apply to s_lambda(t).
class BiOperator {
 public:
  using Key = std::pair<SideAtom, SideAtom>;

  BiOperator() = default;
  BiOperator(ShiftCase c, int n) : case_(c), n_(n) {}

  ShiftCase shift_case() const { return case_; }
  int n() const { return n_; }
  const std::map<Key, LaurentZ>& terms() const { return terms_; }

  void add(const SideAtom& t, const SideAtom& s, const LaurentZ& c, const Rational& scale = 1) {
    LaurentZ& slot = terms_[{t, s}];
    add_to(slot, c, scale);
    if (slot.empty()) terms_.erase({t, s});
  }
  BiOperator& operator+=(const BiOperator& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  BiOperator& operator*=(const LaurentZ& f) {
    std::map<Key, LaurentZ> out;
    for (const auto& [k, c] : terms_) {
      LaurentZ p = c * f;
      if (!p.empty()) out[k] = p;
    }
    terms_ = std::move(out);
    return *this;
  }
  int min_z_power() const {
    int m = 0;
    for (const auto& [k, c] : terms_)
      if (!c.empty()) m = std::min(m, c.begin()->first);
    return m;
  }

 private:
  ShiftCase case_ = ShiftCase::none;
  int n_ = 0;
  std::map<Key, LaurentZ> terms_;
};

namespace detail {

// Shift i t_i -> i t_i + c(i) on one side; c is read for i = 1..J.
struct SideShift {
  std::map<int, LaurentZ> c;
  LaurentZ at(int i) const {
    auto it = c.find(i);
    return it == c.end() ? LaurentZ{} : it->second;
  }
};

inline std::pair<SideShift, SideShift> table_shifts(ShiftCase sc, int p, int q, int J) {
  SideShift t, s;
  switch (sc) {
    case ShiftCase::none: break;
    case ShiftCase::case1:
      t.c[1] = z_power(1);
      s.c[1] = z_power(1, -1);
      break;
    case ShiftCase::case2:
      for (int i = 1; i <= J + 2; ++i) t.c[i] = z_power(0, Rational(i % 2 ? q : -q));
      s.c[1] = z_power(1, -1);
      break;
    case ShiftCase::case3:
      // -p(-z)^i and q(-z)^i
      for (int i = 1; i <= J + 2; ++i) {
        t.c[i] = z_power(i, Rational(i % 2 ? p : -p));
        s.c[i] = z_power(i, Rational(i % 2 ? -q : q));
      }
      break;
  }
  return {t, s};
}

// Accumulates `scale * atom` on one side (other side identity), applying
// the shift and converting the s-side to s' = -s.
struct SideWriter {
  BiOperator* op;
  bool s_side;
  const SideShift* shift;
  int J;

  void put(const SideAtom& a, const LaurentZ& c) const {
    // odd operators pick up a sign under s -> -s
    Rational sign = 1;
    if (s_side && (a.kind == SideAtom::Kind::multiply || a.kind == SideAtom::Kind::differentiate)) sign = -1;
    if (s_side) op->add(SideAtom::id(), a, c, sign);
    else op->add(a, SideAtom::id(), c, sign);
  }

  void virasoro(int k, const Rational& scale) const {
    put(SideAtom::vir(k), z_power(0, scale));
    // V_k = sum_{i >= max(k+1,1)} (i-k) t_{i-k} d_i for |k| <= 1
    for (int i = std::max(k + 1, 1); i <= J; ++i) {
      LaurentZ c = shift->at(i - k);
      if (!c.empty()) put(SideAtom::diff(i), c * z_power(0, scale));
    }
  }
  // scale * (i t_i)
  void multiply(int i, const Rational& scale) const {
    put(SideAtom::mul(i), z_power(0, scale));
    LaurentZ c = shift->at(i);
    if (!c.empty()) put(SideAtom::id(), c * z_power(0, scale));
  }
  void differentiate(int i, const Rational& scale) const { put(SideAtom::diff(i), z_power(0, scale)); }
};

}  // namespace detail

// The operator V_which(t, s) with the table shift of `sc` applied, written in
// (t, s') coordinates. J bounds the derivative index kept from infinite
// shift sums; it must be at least the largest partition size acted on.
inline BiOperator bivirasoro_operator(int which, ShiftCase sc, int n, int p, int q, int J) {
  if (which < -1 || which > 1) throw DomainError("only V_{-1}, V_0, V_1 are supported");
  BiOperator op(sc, n);
  const auto [ts, ss] = detail::table_shifts(sc, p, q, J);
  detail::SideWriter t{&op, false, &ts, J};
  detail::SideWriter s{&op, true, &ss, J};
  switch (which) {
    case -1:
      t.virasoro(-1, 1);
      s.virasoro(1, -1);
      t.multiply(1, n);
      s.differentiate(1, n);
      break;
    case 0:
      t.virasoro(0, 1);
      s.virasoro(0, -1);
      break;
    case 1:
      s.virasoro(-1, -1);
      t.virasoro(1, 1);
      s.multiply(1, n);
      t.differentiate(1, n);
      break;
  }
  return op;
}

// The combination whose coefficient equations are the walk difference
// equations: case 1 uses each V_k on its own; case 2 uses V_{-1}+V_0 (sign
// -1) and -(V_0+V_1) (sign +1); case 3 uses V_{-1} + (z+1/z) V_0 + V_1.
inline BiOperator walk_operator(ShiftCase sc, int sign, int n, int p, int q, int J) {
  switch (sc) {
    case ShiftCase::none:
    case ShiftCase::case1: return bivirasoro_operator(sign, sc, n, p, q, J);
    case ShiftCase::case2: {
      if (sign == 0) throw DomainError("case 2 has no middle operator");
      BiOperator op = bivirasoro_operator(0, sc, n, p, q, J);
      op += bivirasoro_operator(sign, sc, n, p, q, J);
      if (sign > 0) op *= z_power(0, -1);
      return op;
    }
    case ShiftCase::case3: {
      BiOperator op = bivirasoro_operator(-1, sc, n, p, q, J);
      op += bivirasoro_operator(1, sc, n, p, q, J);
      BiOperator mid = bivirasoro_operator(0, sc, n, p, q, J);
      LaurentZ zz = z_power(1);
      add_to(zz, z_power(-1));
      mid *= zz;
      op += mid;
      return op;
    }
  }
  return BiOperator();
}

namespace detail {

inline BiExpansion apply_atoms(const SideAtom& ta, const SideAtom& sa, const BiExpansion& f) {
  BiExpansion out(f.column_bound());
  for (const auto& [key, c] : f.coeffs()) {
    SchurExpansion tl = apply_atom(ta, SchurExpansion::basis(key.first));
    if (tl.is_zero()) continue;
    SchurExpansion sl = apply_atom(sa, SchurExpansion::basis(key.second));
    out.add_product(tl, sl, c);
  }
  return out;
}

inline Rational falling(int k, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r *= (k - i);
  return r;
}

}  // namespace detail

// Basis-wise action on a family indexed by k. Cases 1 and 2 read z as
// k Lambda^{-1} (the family holds b with a = sum z^k b / k!); case 3 reads z
// as Lambda^{-1} (a = sum z^k b). Output entries with k < 0 are dropped.
inline KFamily apply_bivirasoro(const BiOperator& op, const KFamily& f) {
  if (!f.column_bound()) throw ConfigurationError("two-sided operators need a column bound");
  KFamily out(f.column_bound());
  const bool scaled = op.shift_case() == ShiftCase::case1 || op.shift_case() == ShiftCase::case2;
  for (const auto& [key, coeff] : op.terms()) {
    for (const auto& [k_in, b] : f.entries()) {
      BiExpansion img = detail::apply_atoms(key.first, key.second, b);
      if (img.is_zero()) continue;
      for (const auto& [j, c] : coeff) {
        const int k_out = k_in + j;
        if (k_out < 0) continue;
        if (scaled && j < 0) throw DomainError("negative z power under z -> k/Lambda");
        const Rational w = scaled ? c * detail::falling(k_out, j) : c;
        if (w == 0) continue;
        for (const auto& [lm, v] : img.coeffs()) out.add(k_out, lm.first, lm.second, w * v);
      }
    }
  }
  return out;
}

// Unshifted or shifted action on a plain expansion (no z present, or z left
// symbolic is not supported here): every term must carry z^0.
inline BiExpansion apply_bivirasoro(const BiOperator& op, const BiExpansion& f) {
  if (!f.column_bound()) throw ConfigurationError("two-sided operators need a column bound");
  BiExpansion out(f.column_bound());
  for (const auto& [key, coeff] : op.terms()) {
    for (const auto& [j, c] : coeff)
      if (j != 0) throw DomainError("operator carries z; apply it to a series or k-family");
    out += [&] {
      BiExpansion img = detail::apply_atoms(key.first, key.second, f);
      img *= coeff.at(0);
      return img;
    }();
  }
  return out;
}

// Coefficients that are truncated series in z.
using BiSeriesExpansion = std::map<std::pair<Partition, Partition>, ZSeries>;

// Formal-series action: z multiplies the series. Negative z powers must be
// cleared by the caller (multiply the operator by a power of z first).
inline BiSeriesExpansion apply_bivirasoro(const BiOperator& op, const BiSeriesExpansion& f, int order) {
  if (op.min_z_power() < 0) throw DomainError("operator has negative z powers; multiply by z first");
  BiSeriesExpansion out;
  for (const auto& [key, coeff] : op.terms()) {
    for (const auto& [lm, series] : f) {
      SchurExpansion tl = apply_atom(key.first, SchurExpansion::basis(lm.first));
      if (tl.is_zero()) continue;
      SchurExpansion sl = apply_atom(key.second, SchurExpansion::basis(lm.second));
      for (const auto& [l, a] : tl.coeffs())
        for (const auto& [m, b] : sl.coeffs()) {
          auto it = out.try_emplace({l, m}, ZSeries(order)).first;
          for (const auto& [j, c] : coeff) it->second += series.shifted(j) * (c * a * b);
        }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// sum_{|lambda| <= N, rows <= n} s_lambda(t) s_lambda(-s)
inline BiExpansion tau_truncation(int n, int N) {
  BiExpansion tau(n);
  for (const auto& lambda : partitions_up_to(N, n)) tau.add(lambda, lambda, 1);
  return tau;
}

}  // namespace virwalk
