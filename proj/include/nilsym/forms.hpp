#pragma once

// Left-invariant 2-forms: closedness, the type I / type II split relative to
// a metric decomposition n = v (+) z, exact forms and b_2.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsym/algebra.hpp"
#include "nilsym/error.hpp"
#include "nilsym/linalg.hpp"

namespace nilsym {

/// Skew matrix Omega with Omega_ab = omega(e_a, e_b) in the structural basis.
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(QMatrix omega) : omega_(std::move(omega)) {
    if (!omega_.is_skew()) throw Error(Errc::NotSkew, "2-form matrix is not skew-symmetric");
  }

  static TwoForm zero(std::size_t n) { return TwoForm(QMatrix(n, n)); }

  /// e^{ij}: Omega_ij = 1, Omega_ji = -1 (0-based indices).
  static TwoForm elementary(std::size_t n, std::size_t i, std::size_t j, const Rational& c = 1) {
    QMatrix m(n, n);
    m(i, j) = c;
    m(j, i) = -c;
    return TwoForm(std::move(m));
  }

  std::size_t dim() const { return omega_.rows(); }
  const QMatrix& omega() const { return omega_; }
  const Rational& operator()(std::size_t a, std::size_t b) const { return omega_(a, b); }
  bool is_zero() const { return omega_.is_zero(); }

  /// omega(x, y) = x^T Omega y
  Rational eval(const Vector& x, const Vector& y) const { return dot(x, omega_ * y); }

  /// Upper-triangle entries (a < b) as a flat vector.
  Vector vectorize() const {
    Vector v;
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = a + 1; b < dim(); ++b) v.push_back(omega_(a, b));
    return v;
  }

  TwoForm& operator+=(const TwoForm& o) {
    omega_ += o.omega_;
    return *this;
  }
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) {
    a.omega_ -= b.omega_;
    return a;
  }
  friend TwoForm operator*(const Rational& s, TwoForm a) {
    a.omega_ *= s;
    return a;
  }
  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.omega_ == b.omega_; }

 private:
  QMatrix omega_;
};

enum class FormKind { Closed, Exact, ClosedTypeI, ClosedTypeII };

inline std::string_view form_kind_name(FormKind k) {
  switch (k) {
    case FormKind::Closed: return "closed";
    case FormKind::Exact: return "exact";
    case FormKind::ClosedTypeI: return "closed type I";
    case FormKind::ClosedTypeII: return "closed type II";
  }
  return "?";
}

/// Linearly independent family of 2-forms. Type-split kinds remember the
/// Gram matrix of the decomposition they were computed against.
class FormSpace {
 public:
  FormSpace(std::size_t ambient_dim, std::vector<TwoForm> basis, FormKind kind,
            std::optional<QMatrix> metric_tag = std::nullopt)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), kind_(kind), metric_tag_(std::move(metric_tag)) {
    std::vector<Vector> rows;
    for (auto& f : basis_) {
      if (f.dim() != ambient_dim_) throw Error(Errc::DimensionMismatch, "basis form of wrong dimension");
      // sign-normalize so the first nonzero upper-triangle entry is positive
      Vector v = f.vectorize();
      auto lead = std::find_if(v.begin(), v.end(), [](const Rational& c) { return !c.is_zero(); });
      if (lead != v.end() && lead->sign() < 0) f = Rational(-1) * f;
      rows.push_back(f.vectorize());
    }
    if (rank(rows, ambient_dim_ * (ambient_dim_ - 1) / 2) != basis_.size())
      throw Error(Errc::DimensionMismatch, "form space basis is linearly dependent");
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<TwoForm>& basis() const& { return basis_; }
  std::vector<TwoForm> basis() && { return std::move(basis_); }
  FormKind kind() const { return kind_; }
  const std::optional<QMatrix>& metric_tag() const { return metric_tag_; }

  TwoForm combination(const std::vector<Rational>& coeffs) const {
    TwoForm out = TwoForm::zero(ambient_dim_);
    for (std::size_t b = 0; b < basis_.size(); ++b)
      if (!coeffs[b].is_zero()) out += coeffs[b] * basis_[b];
    return out;
  }

  bool contains(const TwoForm& f) const {
    std::vector<Vector> rows;
    for (const auto& b : basis_) rows.push_back(b.vectorize());
    return in_span(rows, f.vectorize());
  }

 private:
  std::size_t ambient_dim_;
  std::vector<TwoForm> basis_;
  FormKind kind_;
  std::optional<QMatrix> metric_tag_;
};

// ---------------------------------------------------------------------------
// closedness

namespace detail {

inline std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  // index of (a, b), a < b, in row-major upper-triangle order
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

/// Adds c * Omega_{s,k} to row `row` of the closedness operator.
inline void add_entry(QMatrix& op, std::size_t row, std::size_t n, std::size_t s, std::size_t k, const Rational& c) {
  if (s == k || c.is_zero()) return;
  if (s < k)
    op(row, pair_index(n, s, k)) += c;
  else
    op(row, pair_index(n, k, s)) -= c;
}

}  // namespace detail

/// omega([e_i,e_j],e_k) + omega([e_j,e_k],e_i) + omega([e_k,e_i],e_j) = 0 for all i<j<k.
inline bool is_closed(const LieAlgebra& alg, const TwoForm& form) {
  const std::size_t n = alg.dim();
  if (form.dim() != n) throw Error(Errc::DimensionMismatch, "form and algebra dimensions differ");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Rational sum = 0;
        for (std::size_t s = 0; s < n; ++s) {
          const Rational& cij = alg.structure_constant(i, j, s);
          const Rational& cjk = alg.structure_constant(j, k, s);
          const Rational& cki = alg.structure_constant(k, i, s);
          if (!cij.is_zero()) sum += cij * form(s, k);
          if (!cjk.is_zero()) sum += cjk * form(s, i);
          if (!cki.is_zero()) sum += cki * form(s, j);
        }
        if (!sum.is_zero()) return false;
      }
  return true;
}

/// Matrix of the closedness operator on upper-triangle coordinates of Omega;
/// one row per triple i<j<k.
inline QMatrix closedness_operator(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  QMatrix op(triples, pairs);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k, ++row)
        for (std::size_t s = 0; s < n; ++s) {
          detail::add_entry(op, row, n, s, k, alg.structure_constant(i, j, s));
          detail::add_entry(op, row, n, s, i, alg.structure_constant(j, k, s));
          detail::add_entry(op, row, n, s, j, alg.structure_constant(k, i, s));
        }
  return op;
}

namespace detail {

inline TwoForm form_from_pairs(std::size_t n, const Vector& coords) {
  QMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Rational& c = coords[pair_index(n, a, b)];
      m(a, b) = c;
      m(b, a) = -c;
    }
  return TwoForm(std::move(m));
}

}  // namespace detail

inline FormSpace closed_space(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<TwoForm> basis;
  if (n >= 2) {
    if (n < 3) {
      basis.push_back(TwoForm::elementary(n, 0, 1));
    } else {
      for (const auto& v : null_space(closedness_operator(alg))) basis.push_back(detail::form_from_pairs(n, v));
    }
  }
  return FormSpace(n, std::move(basis), FormKind::Closed);
}

// ---------------------------------------------------------------------------
// adapted coordinates and the type split

/// Omega' = P^T Omega P in the basis v_1..v_m, z_1..z_q.
inline QMatrix to_adapted(const Decomposition& dec, const TwoForm& form) {
  return dec.adapted_basis().transpose() * form.omega() * dec.adapted_basis();
}

inline TwoForm from_adapted(const Decomposition& dec, const QMatrix& adapted) {
  const QMatrix& inv = dec.adapted_inverse();
  return TwoForm(inv.transpose() * adapted * inv);
}

struct FormSplit {
  TwoForm type_one;  // v x v and z x z blocks
  TwoForm type_two;  // v x z blocks
};

inline FormSplit split_form(const Decomposition& dec, const TwoForm& form) {
  if (form.dim() != dec.dim()) throw Error(Errc::DimensionMismatch, "form and algebra dimensions differ");
  const std::size_t n = dec.dim();
  const std::size_t m = dec.dim_v();
  QMatrix adapted = to_adapted(dec, form);
  QMatrix one(n, n), two(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool same_block = (a < m) == (b < m);
      (same_block ? one : two)(a, b) = adapted(a, b);
    }
  return {from_adapted(dec, one), from_adapted(dec, two)};
}

/// omega(v, z) = 0 in the adapted basis (Lorentz force preserves v and z).
inline bool is_type_one(const Decomposition& dec, const TwoForm& form) { return split_form(dec, form).type_two.is_zero(); }

/// omega(v, v) = 0 and omega(z, z) = 0 (Lorentz force swaps v and z).
inline bool is_type_two(const Decomposition& dec, const TwoForm& form) { return split_form(dec, form).type_one.is_zero(); }

/// The homogeneous system sum_s C_ij^s b_sk + C_jk^s b_si + C_ki^s b_sj = 0
/// over v-triples i<j<k, where b_tk = omega(z_t, v_k). Unknown (t, k) sits in
/// column t * dim_v + k.
inline QMatrix type_two_system(const Decomposition& dec) {
  const std::size_t m = dec.dim_v();
  const std::size_t q = dec.dim_z();
  const std::size_t triples = m < 3 ? 0 : m * (m - 1) * (m - 2) / 6;
  QMatrix sys(triples, q * m);
  std::size_t row = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k, ++row)
        for (std::size_t s = 0; s < q; ++s) {
          sys(row, s * m + k) += dec.bracket_coords(i, j)[s];
          sys(row, s * m + i) += dec.bracket_coords(j, k)[s];
          sys(row, s * m + j) += dec.bracket_coords(k, i)[s];
        }
  return sys;
}

/// Form whose only nonzero adapted entries are omega(z_t, v_k) = b_tk.
inline TwoForm type_two_form(const Decomposition& dec, const Vector& b) {
  const std::size_t n = dec.dim();
  const std::size_t m = dec.dim_v();
  QMatrix adapted(n, n);
  for (std::size_t t = 0; t < dec.dim_z(); ++t)
    for (std::size_t k = 0; k < m; ++k) {
      const Rational& c = b[t * m + k];
      adapted(m + t, k) = c;
      adapted(k, m + t) = -c;
    }
  return from_adapted(dec, adapted);
}

inline FormSpace type_II_closed_space(const Decomposition& dec) {
  std::vector<TwoForm> basis;
  const std::size_t unknowns = dec.dim_z() * dec.dim_v();
  if (unknowns > 0) {
    QMatrix sys = type_two_system(dec);
    std::vector<Vector> sols;
    if (sys.rows() == 0) {
      for (std::size_t u = 0; u < unknowns; ++u) sols.push_back(unit_vector(unknowns, u));
    } else {
      sols = null_space(sys);
    }
    for (const auto& b : sols) basis.push_back(type_two_form(dec, b));
  }
  return FormSpace(dec.dim(), std::move(basis), FormKind::ClosedTypeII, dec.metric().gram());
}

/// Any pairing on v, plus pairings on z that vanish against C(n); the
/// latter is what (C1) asks of the Lorentz force: F_z(z) lies in ker(j).
inline FormSpace type_I_closed_space(const Decomposition& dec) {
  const std::size_t n = dec.dim();
  const std::size_t m = dec.dim_v();
  const std::size_t q = dec.dim_z();
  std::vector<TwoForm> basis;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      QMatrix adapted(n, n);
      adapted(a, b) = 1;
      adapted(b, a) = -1;
      basis.push_back(from_adapted(dec, adapted));
    }
  if (q >= 2) {
    std::vector<Vector> comm_coords;
    for (const auto& c : dec.commutator_basis()) comm_coords.push_back(*dec.center_coordinates(c));
    const std::size_t pairs = q * (q - 1) / 2;
    QMatrix cons(comm_coords.size() * q, pairs);
    for (std::size_t r = 0; r < comm_coords.size(); ++r)
      for (std::size_t t = 0; t < q; ++t)
        for (std::size_t s = 0; s < q; ++s)
          detail::add_entry(cons, r * q + t, q, s, t, comm_coords[r][s]);
    std::vector<Vector> sols;
    if (cons.rows() == 0) {
      for (std::size_t u = 0; u < pairs; ++u) sols.push_back(unit_vector(pairs, u));
    } else {
      sols = null_space(cons);
    }
    for (const auto& beta : sols) {
      QMatrix adapted(n, n);
      for (std::size_t s = 0; s < q; ++s)
        for (std::size_t t = s + 1; t < q; ++t) {
          const Rational& c = beta[detail::pair_index(q, s, t)];
          adapted(m + s, m + t) = c;
          adapted(m + t, m + s) = -c;
        }
      basis.push_back(from_adapted(dec, adapted));
    }
  }
  return FormSpace(n, std::move(basis), FormKind::ClosedTypeI, dec.metric().gram());
}

/// omega_Z(x, y) = <Z, [x, y]> for Z in a basis of C(n); this is d of the
/// 1-form <Z, .> and its Lorentz force is j(Z).
inline TwoForm exact_form(const Decomposition& dec, const Vector& z) {
  const std::size_t n = dec.dim();
  const LieAlgebra& alg = dec.algebra();
  Vector gz = dec.metric().gram() * z;
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational c = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (!alg.structure_constant(i, j, k).is_zero()) c += gz[k] * alg.structure_constant(i, j, k);
      m(i, j) = c;
      m(j, i) = -c;
    }
  return TwoForm(std::move(m));
}

inline FormSpace exact_space(const Decomposition& dec) {
  std::vector<TwoForm> basis;
  for (const auto& z : dec.commutator_basis()) basis.push_back(exact_form(dec, z));
  return FormSpace(dec.dim(), std::move(basis), FormKind::Exact, dec.metric().gram());
}

/// dim closed - dim exact, computed with the identity metric.
inline std::size_t betti2(const LieAlgebra& alg) {
  Decomposition dec(alg, Metric::identity(alg.dim()));
  return closed_space(alg).dim() - exact_space(dec).dim();
}

// ---------------------------------------------------------------------------
// Lorentz forces and automorphisms

/// F with omega(X, Y) = <F X, Y>, i.e. Omega = F^T G.
inline QMatrix lorentz_force(const Metric& metric, const TwoForm& form) {
  return *inverse(metric.gram()) * form.omega().transpose();
}

inline TwoForm form_of_force(const Metric& metric, const QMatrix& force) {
  return TwoForm(force.transpose() * metric.gram());
}

/// Form of psi F psi^{-1}; for G-orthogonal psi this is psi^{-T} Omega psi^{-1}.
inline TwoForm conjugate_form(const Decomposition& dec, const QMatrix& psi, const TwoForm& form) {
  if (!is_orthogonal_automorphism(dec.algebra(), dec.metric(), psi))
    throw Error(Errc::NotAutomorphism, "map is not an orthogonal automorphism");
  QMatrix inv = *inverse(psi);
  return TwoForm(inv.transpose() * form.omega() * inv);
}

}  // namespace nilsym
