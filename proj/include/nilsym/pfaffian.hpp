#pragma once

// Pfaffians of skew-symmetric matrices. Sign convention: pf of the block
// matrix with +1 at (0,1), (2,3), ... is +1.

#include <cstddef>
#include <vector>

#include "nilsym/error.hpp"
#include "nilsym/linalg.hpp"

namespace nilsym {

namespace detail {

template <typename T>
void accumulate_matchings(const Matrix<T>& a, std::vector<std::size_t>& remaining, const T& product,
                          int sign, T& total) {
  if (remaining.empty()) {
    if (sign > 0)
      total += product;
    else
      total -= product;
    return;
  }
  const std::size_t first = remaining.front();
  // Partner at position p (0-based, p >= 1) contributes (-1)^(p+1).
  for (std::size_t p = 1; p < remaining.size(); ++p) {
    const std::size_t partner = remaining[p];
    const T& entry = a(first, partner);
    if (entry == T(0)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(remaining.size() - 2);
    for (std::size_t q = 1; q < remaining.size(); ++q)
      if (q != p) rest.push_back(remaining[q]);
    const int s = (p % 2 == 1) ? sign : -sign;
    accumulate_matchings(a, rest, product * entry, s, total);
  }
}

}  // namespace detail

/// Sum over perfect matchings of sign(matching) * product of entries.
/// Works over any commutative ring; zero entries prune the search.
template <typename T>
T pfaffian_by_matchings(const Matrix<T>& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "pfaffian of a non-square matrix");
  if (a.rows() % 2 == 1) throw Error(Errc::OddDimension, "pfaffian of an odd-dimensional matrix");
  std::vector<std::size_t> all(a.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  T total(0);
  detail::accumulate_matchings(a, all, T(1), 1, total);
  return total;
}

/// Exact Pfaffian by skew-symmetric block elimination.
inline Rational pfaffian(const QMatrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "pfaffian of a non-square matrix");
  const std::size_t n = m.rows();
  if (n % 2 == 1) throw Error(Errc::OddDimension, "pfaffian of an odd-dimensional matrix");
  if (!m.is_skew()) throw Error(Errc::NotSkew, "pfaffian of a non-skew matrix");
  QMatrix a = m;
  Rational result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      // simultaneous row/column swap flips the sign
      a.swap_rows(p, k + 1);
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k + 1));
      result = -result;
    }
    const Rational pivot = a(k, k + 1);
    result *= pivot;
    // Schur complement: a_ij += (a_{k+1,i} a_{k,j} - a_{k,i} a_{k+1,j}) / pivot
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational delta = a(k + 1, i) * a(k, j) - a(k, i) * a(k + 1, j);
        if (delta.is_zero()) continue;
        delta /= pivot;
        a(i, j) += delta;
        a(j, i) -= delta;
      }
    }
  }
  return result;
}

}  // namespace nilsym
