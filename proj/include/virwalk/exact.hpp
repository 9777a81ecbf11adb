// Exact integers and rationals backed by GMP, plus the small helpers the
// rest of the library keeps reaching for.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace virwalk {

using BigInt = mpz_class;
using Rational = mpq_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigurationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// C(n, k) with C(n, k) = 0 outside 0 <= k <= n; n may be negative only when
// k < 0 or k > n are excluded by the caller, so negative n also yields 0.
inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt multinomial(const std::vector<long>& parts) {
  long total = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    total += p;
  }
  BigInt r = factorial(total);
  for (long p : parts) r /= factorial(p);
  return r;
}

inline BigInt power(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

// Determinant of a square rational matrix by Gaussian elimination.
inline Rational rational_det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ShapeError("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// Bareiss fraction-free determinant of an integer matrix.
inline BigInt integer_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ShapeError("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (m[c][c] == 0) {
      std::size_t piv = c + 1;
      while (piv < n && m[piv][c] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t j = c + 1; j < n; ++j) {
        BigInt v = m[r][j] * m[c][c] - m[r][c] * m[c][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[r][j] = v;
      }
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  BigInt d = m[n - 1][n - 1];
  return sign > 0 ? d : BigInt(-d);
}

}  // namespace virwalk
