// Virasoro and power-sum operators acting on Schur expansions through
// border-strip rules.
#pragma once

#include "expansion.hpp"

namespace virwalk {

// (n t_n) * e: add border strips of size n, signed by height.
inline SchurExpansion mn_multiply(int n, const SchurExpansion& e) {
  if (n < 1) throw DomainError("power-sum index must be positive");
  SchurExpansion out(e.column_bound());
  for (const auto& [lambda, c] : e.coeffs())
    for (const auto& [mu, strip] : addable_border_strips(lambda, n))
      out.add(mu, strip.height % 2 ? Rational(-c) : c);
  return out;
}

// d/dt_n e: remove border strips of size n, signed by height.
inline SchurExpansion mn_differentiate(int n, const SchurExpansion& e) {
  if (n < 1) throw DomainError("derivative index must be positive");
  SchurExpansion out(e.column_bound());
  for (const auto& [lambda, c] : e.coeffs())
    for (const auto& [mu, strip] : removable_border_strips(lambda, n))
      out.add(mu, strip.height % 2 ? Rational(-c) : c);
  return out;
}

// Structure constant of V_{-n} from s_lambda to s_mu. Zero unless mu \ lambda
// is a border strip of size n.
inline Rational virasoro_coefficient(int n, const Partition& lambda, const Partition& mu) {
  if (n < 1) throw DomainError("virasoro_coefficient needs n >= 1");
  if (!mu.contains(lambda) || mu.size() - lambda.size() != n) return 0;
  if (!is_border_strip(SkewShape(mu, lambda))) return 0;
  auto sign = [](int h) { return h % 2 ? -1 : 1; };
  Rational total = 0;
  // strips removed from lambda, then a longer strip added back to reach mu
  for (int i = 1; i <= lambda.size(); ++i)
    for (const auto& [nu, strip] : removable_border_strips(lambda, i)) {
      auto h = border_strip_height(SkewShape(mu, nu));
      if (h) total += sign(strip.height + *h);
    }
  // a strip of size i added to lambda, then one of size n - i reaching mu
  Rational half = 0;
  for (int i = 1; i <= n - 1; ++i)
    for (const auto& [nu, strip] : addable_border_strips(lambda, i)) {
      if (!mu.contains(nu)) continue;
      auto h = border_strip_height(SkewShape(mu, nu));
      if (h) half += sign(strip.height + *h);
    }
  return total + half / 2;
}

enum class VirasoroPath { fast, general };

// V_k on a Schur expansion. k = 0 scales by |lambda|; |k| = 1 uses the
// single-box rules unless the general path is requested.
inline SchurExpansion apply_virasoro_expansion(int k, const SchurExpansion& e,
                                               VirasoroPath path = VirasoroPath::fast) {
  SchurExpansion out(e.column_bound());
  for (const auto& [lambda, c] : e.coeffs()) {
    if (k == 0) {
      out.add(lambda, c * lambda.size());
    } else if (k == -1 && path == VirasoroPath::fast) {
      for (int i = 1; i <= lambda.length() + 1; ++i)
        if (auto mu = lambda.shifted(i, 1)) out.add(*mu, c * (lambda(i) - i + 1));
    } else if (k == 1 && path == VirasoroPath::fast) {
      for (int i = 1; i <= lambda.length(); ++i)
        if (auto mu = lambda.shifted(i, -1)) out.add(*mu, c * (lambda(i) - i));
    } else if (k < 0) {
      for (const auto& [mu, strip] : addable_border_strips(lambda, -k))
        out.add(mu, c * virasoro_coefficient(-k, lambda, mu));
    } else {
      for (const auto& [mu, strip] : removable_border_strips(lambda, k))
        out.add(mu, c * virasoro_coefficient(k, mu, lambda));
    }
  }
  return out;
}

}  // namespace virwalk
