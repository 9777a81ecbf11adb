// Counting standard and semistandard skew tableaux and border-strip characters.
#pragma once

#include "partition.hpp"

#include <vector>

namespace virwalk {

// Aitken: f^{outer\inner} = N! det(1 / (outer_i - inner_j - i + j)!).
inline BigInt count_standard_skew(const SkewShape& shape) {
  const int l = shape.outer.length();
  const int N = shape.size();
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      const int a = shape.outer(i) - shape.inner(j) - i + j;
      m[i - 1][j - 1] = a < 0 ? Rational(0) : make_rational(1, factorial(a));
    }
  Rational v = rational_det(std::move(m)) * Rational(factorial(N));
  if (!is_integer(v)) throw DomainError("non-integral standard tableau count");
  return v.get_num();
}

// Fillings with entries 1..q, rows weak, columns strict. Jacobi-Trudi with
// h_k evaluated at i t_i = q, which is C(q + k - 1, k).
inline BigInt count_semistandard_skew(const SkewShape& shape, int q) {
  if (q < 0) throw DomainError("negative alphabet size");
  const int l = shape.outer.length();
  auto h = [q](int k) -> BigInt {
    if (k < 0) return 0;
    if (k == 0) return 1;
    return binomial(q + k - 1, k);
  };
  std::vector<std::vector<BigInt>> m(l, std::vector<BigInt>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = h(shape.outer(i) - shape.inner(j) - i + j);
  return integer_det(std::move(m));
}

// Signed count of border-strip tableaux of the given type; the last part of
// alpha is peeled off the outer rim first.
inline BigInt border_strip_character(const SkewShape& shape, const std::vector<int>& alpha) {
  long total = 0;
  for (int a : alpha) {
    if (a < 0) throw DomainError("composition parts must be nonnegative");
    total += a;
  }
  if (total != shape.size()) throw DomainError("composition size does not match the shape");
  auto rec = [&](auto&& self, const Partition& outer, std::size_t parts_left) -> BigInt {
    if (parts_left == 0) return outer == shape.inner ? BigInt(1) : BigInt(0);
    const int a = alpha[parts_left - 1];
    if (a == 0) return self(self, outer, parts_left - 1);
    BigInt acc = 0;
    for (const auto& [mu, strip] : removable_border_strips(outer, a)) {
      if (!mu.contains(shape.inner)) continue;
      BigInt sub = self(self, mu, parts_left - 1);
      if (strip.height % 2) acc -= sub;
      else acc += sub;
    }
    return acc;
  };
  return rec(rec, shape.outer, alpha.size());
}

}  // namespace virwalk
