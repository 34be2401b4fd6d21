#pragma once

// Sparse multivariate polynomials over Q, plus the univariate tools needed
// to count real roots exactly.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "nilsym/rational.hpp"

namespace nilsym {

/// Exponent vector with trailing zeros trimmed, so the same monomial has one
/// representation whatever the number of variables in play.
using Monomial = std::vector<unsigned>;

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }

  static Polynomial variable(std::size_t index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    Polynomial p;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
  }

  /// sum_i coeffs[i] * t_i
  static Polynomial linear(std::span<const Rational> coeffs) {
    Polynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) p.add_term(unit_monomial(i), coeffs[i]);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  static unsigned degree_of(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(degree_of(m)));
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int md = static_cast<int>(degree_of(m));
      if (d >= 0 && md != d) return false;
      d = md;
    }
    return true;
  }

  /// Number of variables actually referenced.
  std::size_t variable_span() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return n;
  }

  Rational evaluate(std::span<const Rational> point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
        if (m[i] == 0) continue;
        assert(i < point.size());
        for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
      }
      total += term;
    }
    return total;
  }

  /// Replace variable `index` by a constant.
  Polynomial substitute(std::size_t index, const Rational& value) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (index >= m.size() || m[index] == 0) {
        out.add_term(m, c);
        continue;
      }
      Rational coeff = c;
      for (unsigned e = 0; e < m[index]; ++e) coeff *= value;
      Monomial reduced = m;
      reduced[index] = 0;
      trim(reduced);
      out.add_term(reduced, coeff);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static Monomial unit_monomial(std::size_t index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    return m;
  }

 private:
  static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }
  static Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial m(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) m[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) m[i] += b[i];
    return m;
  }

  TermMap terms_;
};

// ---------------------------------------------------------------------------
// univariate polynomials as dense coefficient vectors, lowest degree first

namespace univariate {

using Poly = std::vector<Rational>;

inline void normalize(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
  normalize(d);
  return d;
}

/// Remainder of a by b (b nonzero).
inline Poly remainder(Poly a, const Poly& b) {
  normalize(a);
  assert(!b.empty());
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    normalize(a);
  }
  return a;
}

inline Poly quotient(Poly a, const Poly& b) {
  normalize(a);
  assert(!b.empty());
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    normalize(a);
  }
  normalize(q);
  return q;
}

inline Poly gcd(Poly a, Poly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

inline Poly square_free_part(const Poly& p) {
  Poly d = derivative(p);
  if (d.empty()) return p;
  return quotient(p, gcd(p, d));
}

/// Number of distinct real roots via a Sturm chain of the square-free part.
inline std::size_t count_real_roots(Poly p) {
  normalize(p);
  assert(!p.empty());
  p = square_free_part(p);
  if (degree(p) < 1) return 0;
  std::vector<Poly> chain{p, derivative(p)};
  while (true) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto sign_changes = [&](bool at_plus_infinity) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain) {
      int s = q.back().sign();
      if (!at_plus_infinity && degree(q) % 2 == 1) s = -s;
      if (s != 0 && last != 0 && s != last) ++changes;
      if (s != 0) last = s;
    }
    return changes;
  };
  return sign_changes(false) - sign_changes(true);
}

}  // namespace univariate

}  // namespace nilsym
