// Schur polynomials as explicit polynomials in t, the Hall inner product and
// direct application of Virasoro operators. Ground truth for the
// combinatorial layer.
#pragma once

#include "expansion.hpp"
#include "tpolynomial.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>

namespace virwalk {

// Coefficient of z^k in exp(sum t_i z^i), via k s_k = sum_i i t_i s_{k-i}.
inline TPolynomial elementary_schur(int k) {
  if (k < 0) return TPolynomial();
  static std::mutex mu;
  static std::vector<TPolynomial> cache{TPolynomial(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= k) {
    const int m = static_cast<int>(cache.size());
    TPolynomial s;
    for (int i = 1; i <= m; ++i) s += TPolynomial::variable(i) * cache[m - i] * Rational(i);
    s *= make_rational(1, m);
    cache.push_back(std::move(s));
  }
  return cache[k];
}

// e_k(t) = (-1)^k s_k(-t)
inline TPolynomial elementary_symmetric(int k) {
  TPolynomial e = elementary_schur(k).negate_variables();
  return k % 2 ? -e : e;
}

namespace detail {

// det(entry(i, j)) for an l x l matrix, Laplace expansion with minors keyed
// by their remaining column set.
template <class Entry>
TPolynomial polynomial_det(int l, Entry entry) {
  if (l == 0) return TPolynomial(1);
  std::unordered_map<std::uint32_t, TPolynomial> memo;
  auto rec = [&](auto&& self, int r, std::uint32_t mask) -> TPolynomial {
    if (r == l) return TPolynomial(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    TPolynomial acc;
    int pos = 0;
    for (int c = 0; c < l; ++c) {
      if (!(mask >> c & 1u)) continue;
      TPolynomial e = entry(r, c);
      if (!e.is_zero()) {
        TPolynomial term = e * self(self, r + 1, mask & ~(1u << c));
        if (pos % 2) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, 0, (1u << l) - 1);
}

}  // namespace detail

// Jacobi-Trudi det(s_{outer_i - inner_j - i + j}), or its dual form in the
// elementary functions when the conjugate is shorter.
inline TPolynomial skew_schur_polynomial(const SkewShape& shape) {
  const Partition co = conjugate(shape.outer);
  if (co.length() < shape.outer.length()) {
    const Partition ci = conjugate(shape.inner);
    return detail::polynomial_det(co.length(), [&](int i, int j) {
      return elementary_symmetric(co(i + 1) - ci(j + 1) - i + j);
    });
  }
  return detail::polynomial_det(shape.outer.length(), [&](int i, int j) {
    return elementary_schur(shape.outer(i + 1) - shape.inner(j + 1) - i + j);
  });
}

inline TPolynomial schur_polynomial(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, TPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  TPolynomial s = skew_schur_polynomial(SkewShape(lambda, Partition()));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(lambda, std::move(s)).first->second;
}

// <f, g> = f(d~) g |_{t=0}, d~ = (d/dt_1, d/dt_2 / 2, ...). Monomials are
// orthogonal and t^a has norm prod a_i! / i^{a_i}.
inline Rational inner_product(const TPolynomial& f, const TPolynomial& g) {
  const TPolynomial& small = f.size() <= g.size() ? f : g;
  const TPolynomial& large = f.size() <= g.size() ? g : f;
  Rational total = 0;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it == large.terms().end()) continue;
    Rational norm = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      norm *= make_rational(factorial(m[i]), power(BigInt(static_cast<long>(i + 1)), m[i]));
    }
    total += c * it->second * norm;
  }
  return total;
}

// Terms of V_k that can act on a polynomial in t_1..t_N:
// V_k = 1/2 sum_{i+j=k} d_i d_j + sum_{j-i=k} i t_i d_j + 1/2 sum_{i+j=-k} (i t_i)(j t_j).
inline std::vector<DiffTerm> virasoro_operator(int k, int N) {
  std::vector<DiffTerm> op;
  auto unit = [](int i, int e = 1) {
    Monomial m(i, 0);
    m[i - 1] += e;
    return m;
  };
  for (int i = 1; i < k && i <= N; ++i) {
    const int j = k - i;
    if (j > N) continue;
    Monomial d(std::max(i, j), 0);
    d[i - 1] += 1;
    d[j - 1] += 1;
    op.push_back({make_rational(1, 2), {}, d});
  }
  for (int j = 1; j <= N; ++j) {
    const int i = j - k;
    if (i < 1) continue;
    op.push_back({Rational(i), unit(i), unit(j)});
  }
  for (int i = 1; i < -k; ++i) {
    const int j = -k - i;
    Monomial m(std::max(i, j), 0);
    m[i - 1] += 1;
    m[j - 1] += 1;
    op.push_back({make_rational(i * j, 2), m, {}});
  }
  return op;
}

inline TPolynomial apply_virasoro_direct(int k, const TPolynomial& f) {
  return apply_diffop(virasoro_operator(k, std::max(f.max_variable(), 1)), f);
}

inline TPolynomial power_sum(int n) { return TPolynomial::variable(n) * Rational(n); }

// Coefficients <f, s_lambda> over every degree present in f.
inline SchurExpansion expand_in_schur_basis(const TPolynomial& f) {
  SchurExpansion e;
  for (int d = 0; d <= f.degree(); ++d) {
    const TPolynomial part = f.homogeneous_part(d);
    if (part.is_zero()) continue;
    for (const auto& lambda : partitions_of(d)) e.add(lambda, inner_product(part, schur_polynomial(lambda)));
  }
  return e;
}

inline TPolynomial polynomial_of(const SchurExpansion& e) {
  TPolynomial f;
  for (const auto& [p, c] : e.coeffs()) f += schur_polynomial(p) * c;
  return f;
}

}  // namespace virwalk
