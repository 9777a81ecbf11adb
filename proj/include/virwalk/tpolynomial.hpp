// Sparse polynomials in t_1, t_2, ... with rational coefficients.
#pragma once

#include "exact.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace virwalk {

// Exponent vector: entry i-1 is the exponent of t_i, no trailing zeros.
using Monomial = std::vector<int>;

inline void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

inline int weighted_degree(const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(i + 1) * m[i];
  return d;
}

// One term of a differential operator: coeff * t^mult * d^deriv.
struct DiffTerm {
  Rational coeff;
  Monomial mult;
  Monomial deriv;
};

class TPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  TPolynomial() = default;
  TPolynomial(const Rational& c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_[{}] = c;
  }

  static TPolynomial monomial(Monomial m, const Rational& c = 1) {
    TPolynomial p;
    trim(m);
    for (int e : m)
      if (e < 0) throw DomainError("negative exponent");
    if (c != 0) p.terms_[m] = c;
    return p;
  }
  // t_i
  static TPolynomial variable(int i) {
    if (i < 1) throw DomainError("variables are indexed from 1");
    Monomial m(i, 0);
    m[i - 1] = 1;
    return monomial(m);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(Monomial m) const {
    trim(m);
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Largest weighted degree present; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m));
    return d;
  }
  // Largest variable index present.
  int max_variable() const {
    std::size_t v = 0;
    for (const auto& [m, c] : terms_) v = std::max(v, m.size());
    return static_cast<int>(v);
  }

  TPolynomial homogeneous_part(int d) const {
    TPolynomial p;
    for (const auto& [m, c] : terms_)
      if (weighted_degree(m) == d) p.terms_.emplace(m, c);
    return p;
  }

  void add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    trim(m);
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TPolynomial& operator+=(const TPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  TPolynomial& operator-=(const TPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  TPolynomial& operator*=(const Rational& v) {
    if (v == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= v;
    return *this;
  }
  friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
  friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
  friend TPolynomial operator-(TPolynomial a) { return a *= Rational(-1); }
  friend TPolynomial operator*(TPolynomial a, const Rational& v) { return a *= v; }
  friend TPolynomial operator*(const Rational& v, TPolynomial a) { return a *= v; }
  friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
    TPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }
  TPolynomial& operator*=(const TPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const TPolynomial& a, const TPolynomial& b) { return a.terms_ == b.terms_; }

  // d/dt_i
  TPolynomial derivative(int i) const {
    if (i < 1) throw DomainError("variables are indexed from 1");
    TPolynomial r;
    const std::size_t idx = static_cast<std::size_t>(i - 1);
    for (const auto& [m, c] : terms_) {
      if (idx >= m.size() || m[idx] == 0) continue;
      Monomial mm = m;
      const int e = mm[idx]--;
      r.add_term(std::move(mm), c * e);
    }
    return r;
  }

  // t_i -> -t_i for every i.
  TPolynomial negate_variables() const {
    TPolynomial r;
    for (const auto& [m, c] : terms_) {
      int total = 0;
      for (int e : m) total += e;
      r.terms_.emplace(m, total % 2 ? Rational(-c) : c);
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (std::size_t i = 0; i < m.size() && v != 0; ++i) {
        if (m[i] == 0) continue;
        const Rational x = i < values.size() ? values[i] : Rational(0);
        Rational pw = 1;
        for (int e = 0; e < m[i]; ++e) pw *= x;
        v *= pw;
      }
      total += v;
    }
    total.canonicalize();
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.get_str();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) out += "*t" + std::to_string(i + 1) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    return out;
  }

 private:
  Terms terms_;
};

inline TPolynomial apply_diffop(const std::vector<DiffTerm>& op, const TPolynomial& f) {
  TPolynomial out;
  for (const auto& term : op) {
    if (term.coeff == 0) continue;
    TPolynomial g = f;
    for (std::size_t i = 0; i < term.deriv.size() && !g.is_zero(); ++i)
      for (int e = 0; e < term.deriv[i]; ++e) g = g.derivative(static_cast<int>(i + 1));
    if (g.is_zero()) continue;
    out += TPolynomial::monomial(term.mult, term.coeff) * g;
  }
  return out;
}

}  // namespace virwalk
