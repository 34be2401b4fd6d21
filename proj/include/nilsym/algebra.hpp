#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilsym/error.hpp"
#include "nilsym/linalg.hpp"
#include "nilsym/pfaffian.hpp"
#include "nilsym/polynomial.hpp"
#include "nilsym/rational.hpp"

namespace nilsym {

// ---------------------------------------------------------------------------
// LieAlgebra

struct BracketTerm {
  std::size_t k;  // 1-based
  Rational c;
};

/// [e_i, e_j] = sum of c * e_k over terms. Indices are 1-based, i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  std::vector<BracketTerm> terms;
};

/// Finite-dimensional real Lie algebra given by exact structure constants in
/// a fixed basis e_1..e_n. Skew-symmetry is built in; 2-step nilpotency is
/// checked separately by validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;

  LieAlgebra(std::size_t dim, const std::vector<BracketEntry>& brackets, std::string name = {})
      : dim_(dim), name_(std::move(name)), c_(dim * dim * dim, Rational(0)) {
    if (dim == 0) throw Error(Errc::BadIndex, "algebra dimension must be positive");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : brackets) {
      if (b.i < 1 || b.i > dim || b.j < 1 || b.j > dim)
        throw Error(Errc::BadIndex, "bracket [e" + std::to_string(b.i) + ",e" + std::to_string(b.j) +
                                        "] out of range for dim " + std::to_string(dim));
      if (b.i >= b.j)
        throw Error(Errc::BadIndex, "bracket [e" + std::to_string(b.i) + ",e" + std::to_string(b.j) +
                                        "] must have i < j");
      if (!seen.emplace(b.i, b.j).second)
        throw Error(Errc::DuplicateBracket,
                    "bracket [e" + std::to_string(b.i) + ",e" + std::to_string(b.j) + "] given twice");
      std::set<std::size_t> ks;
      for (const auto& t : b.terms) {
        if (t.k < 1 || t.k > dim)
          throw Error(Errc::BadIndex, "term index e" + std::to_string(t.k) + " out of range in [e" +
                                          std::to_string(b.i) + ",e" + std::to_string(b.j) + "]");
        if (!ks.insert(t.k).second)
          throw Error(Errc::DuplicateBracket, "term e" + std::to_string(t.k) + " repeated in [e" +
                                                  std::to_string(b.i) + ",e" + std::to_string(b.j) + "]");
        at(b.i - 1, b.j - 1, t.k - 1) = t.c;
        at(b.j - 1, b.i - 1, t.k - 1) = -t.c;
      }
    }
  }

  static LieAlgebra abelian(std::size_t dim, std::string name = {}) { return LieAlgebra(dim, {}, std::move(name)); }

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  LieAlgebra renamed(std::string name) const {
    LieAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  /// Coefficient of e_k in [e_i, e_j]; 0-based.
  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  Vector bracket(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = structure_constant(i, j, k);
    return v;
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    Vector out = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero() || i == j) continue;
        Rational f = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const Rational& c = structure_constant(i, j, k);
          if (!c.is_zero()) out[k] += f * c;
        }
      }
    }
    return out;
  }

  bool is_abelian() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  /// Nonzero brackets with i < j, 1-based.
  std::vector<BracketEntry> entries() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        BracketEntry e{i + 1, j + 1, {}};
        for (std::size_t k = 0; k < dim_; ++k)
          if (!structure_constant(i, j, k).is_zero()) e.terms.push_back({k + 1, structure_constant(i, j, k)});
        if (!e.terms.empty()) out.push_back(std::move(e));
      }
    return out;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<Rational> c_;
};

/// Throws Errc::NotTwoStep naming the first triple with [[e_i,e_j],e_k] != 0.
inline void validate(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector ij = alg.bracket(i, j);
      if (is_zero(ij)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(alg.bracket(ij, unit_vector(n, k))))
          throw Error(Errc::NotTwoStep, "[[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "],e" +
                                            std::to_string(k + 1) + "] != 0");
      }
    }
}

inline bool is_two_step(const LieAlgebra& alg) {
  try {
    validate(alg);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// Null space of the stacked adjoint maps: {x : [x, e_k] = 0 for all k}.
inline std::vector<Vector> center(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  QMatrix ad(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t i = 0; i < n; ++i) ad(k * n + s, i) = alg.structure_constant(i, k, s);
  return null_space(ad);
}

/// Independent subfamily of the bracket vectors [e_i, e_j], i < j.
inline std::vector<Vector> commutator(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector b = alg.bracket(i, j);
      if (!is_zero(b)) brackets.push_back(std::move(b));
    }
  std::vector<Vector> basis;
  for (auto idx : independent_subset(brackets, n)) basis.push_back(brackets[idx]);
  return basis;
}

// ---------------------------------------------------------------------------
// Metric

/// Positive-definite symmetric Gram matrix G_ab = <e_a, e_b>.
class Metric {
 public:
  explicit Metric(QMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw Error(Errc::DegenerateMetric, "gram matrix is not square");
    if (!gram_.is_symmetric()) throw Error(Errc::DegenerateMetric, "gram matrix is not symmetric");
    // Sylvester: every leading principal minor must be positive.
    for (std::size_t k = 1; k <= gram_.rows(); ++k) {
      QMatrix minor(k, k);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) minor(r, c) = gram_(r, c);
      if (determinant(minor).sign() <= 0)
        throw Error(Errc::DegenerateMetric,
                    "gram matrix is not positive definite (leading minor " + std::to_string(k) + ")");
    }
  }

  static Metric identity(std::size_t n) { return Metric(QMatrix::identity(n)); }

  std::size_t dim() const { return gram_.rows(); }
  const QMatrix& gram() const { return gram_; }
  bool is_identity() const { return gram_ == QMatrix::identity(gram_.rows()); }
  Rational inner(const Vector& u, const Vector& v) const { return nilsym::inner(gram_, u, v); }

  friend bool operator==(const Metric& a, const Metric& b) { return a.gram_ == b.gram_; }

 private:
  QMatrix gram_;
};

/// Deterministic SPD matrix A^T A + n I with A drawn from {-2..2}.
inline Metric random_metric(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::DimensionMismatch, "random_metric needs n >= 1");
  std::mt19937_64 rng(seed);
  QMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(static_cast<long>(rng() % 5) - 2);
  QMatrix g = a.transpose() * a + QMatrix::identity(n) * Rational(static_cast<long>(n));
  return Metric(std::move(g));
}

// ---------------------------------------------------------------------------
// Decomposition n = v (+) z

class Decomposition {
 public:
  Decomposition(LieAlgebra algebra, Metric metric);

  const LieAlgebra& algebra() const { return algebra_; }
  const Metric& metric() const { return metric_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t dim_v() const { return v_basis_.size(); }
  std::size_t dim_z() const { return center_basis_.size(); }

  /// G-orthogonal bases (not normalized).
  const std::vector<Vector>& center_basis() const { return center_basis_; }
  const std::vector<Vector>& v_basis() const { return v_basis_; }
  const std::vector<Vector>& commutator_basis() const { return commutator_basis_; }
  const std::vector<Vector>& kerj_basis() const { return kerj_basis_; }

  /// Columns v_1..v_m, z_1..z_q; and its inverse.
  const QMatrix& adapted_basis() const { return adapted_; }
  const QMatrix& adapted_inverse() const { return adapted_inv_; }

  const QMatrix& v_gram() const { return v_gram_; }
  const QMatrix& z_gram() const { return z_gram_; }

  /// Coordinates of [v_a, v_b] in center_basis.
  const Vector& bracket_coords(std::size_t a, std::size_t b) const { return v_brackets_[a * dim_v() + b]; }

  /// Coordinates of an ambient vector of z in center_basis.
  std::optional<Vector> center_coordinates(const Vector& z) const {
    if (z.size() != dim()) return std::nullopt;
    Vector w = adapted_inv_ * z;
    for (std::size_t a = 0; a < dim_v(); ++a)
      if (!w[a].is_zero()) return std::nullopt;
    return Vector(w.begin() + static_cast<std::ptrdiff_t>(dim_v()), w.end());
  }

 private:
  LieAlgebra algebra_;
  Metric metric_;
  std::vector<Vector> center_basis_;
  std::vector<Vector> v_basis_;
  std::vector<Vector> commutator_basis_;
  std::vector<Vector> kerj_basis_;
  QMatrix adapted_;
  QMatrix adapted_inv_;
  QMatrix v_gram_;
  QMatrix z_gram_;
  std::vector<Vector> v_brackets_;
};

namespace detail {

inline QMatrix gram_of(const std::vector<Vector>& basis, const QMatrix& g) {
  QMatrix out(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) out(a, b) = inner(g, basis[a], basis[b]);
  return out;
}

}  // namespace detail

inline Decomposition::Decomposition(LieAlgebra algebra, Metric metric)
    : algebra_(std::move(algebra)), metric_(std::move(metric)) {
  const std::size_t n = algebra_.dim();
  if (metric_.dim() != n)
    throw Error(Errc::DimensionMismatch, "metric has dimension " + std::to_string(metric_.dim()) +
                                             ", algebra has " + std::to_string(n));
  const QMatrix& g = metric_.gram();

  commutator_basis_ = commutator(algebra_);
  // z = C(n) (+) ker(j), orthogonally: extend a basis of C(n) by its
  // complement inside the center.
  std::vector<Vector> raw_center = center(algebra_);
  {
    // ker(j) = {Z in z : <Z, c> = 0 for all c in C(n)}
    QMatrix pairing(commutator_basis_.size(), raw_center.size());
    for (std::size_t r = 0; r < commutator_basis_.size(); ++r)
      for (std::size_t t = 0; t < raw_center.size(); ++t) pairing(r, t) = inner(g, commutator_basis_[r], raw_center[t]);
    for (const auto& coeffs : null_space(pairing)) {
      Vector z = zero_vector(n);
      for (std::size_t t = 0; t < raw_center.size(); ++t)
        if (!coeffs[t].is_zero()) z = z + coeffs[t] * raw_center[t];
      kerj_basis_.push_back(std::move(z));
    }
  }
  std::vector<Vector> z_seed = commutator_basis_;
  z_seed.insert(z_seed.end(), kerj_basis_.begin(), kerj_basis_.end());
  center_basis_ = gram_schmidt(z_seed, g);

  // v = z^perp
  QMatrix zg(center_basis_.size(), n);
  for (std::size_t t = 0; t < center_basis_.size(); ++t) {
    Vector row = g * center_basis_[t];
    for (std::size_t c = 0; c < n; ++c) zg(t, c) = row[c];
  }
  v_basis_ = center_basis_.empty() ? std::vector<Vector>{} : gram_schmidt(null_space(zg), g);
  if (center_basis_.empty())
    for (std::size_t i = 0; i < n; ++i) v_basis_.push_back(unit_vector(n, i));

  std::vector<Vector> cols = v_basis_;
  cols.insert(cols.end(), center_basis_.begin(), center_basis_.end());
  adapted_ = QMatrix::from_columns(cols, n);
  adapted_inv_ = *inverse(adapted_);
  v_gram_ = detail::gram_of(v_basis_, g);
  z_gram_ = detail::gram_of(center_basis_, g);

  const std::size_t m = v_basis_.size();
  v_brackets_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto coords = center_coordinates(algebra_.bracket(v_basis_[a], v_basis_[b]));
      if (!coords) throw Error(Errc::NotTwoStep, "bracket of v-vectors leaves the center");
      v_brackets_[a * m + b] = std::move(*coords);
    }
}

inline Decomposition decompose(const LieAlgebra& alg, const Metric& metric) { return Decomposition(alg, metric); }

namespace detail {

/// (B_Z)_ab = <Z, [v_a, v_b]> for Z given by center coordinates.
inline QMatrix pairing_matrix(const Decomposition& dec, const Vector& z_coords) {
  const std::size_t m = dec.dim_v();
  Vector gz = dec.z_gram() * z_coords;
  QMatrix b(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c) {
      Rational val = dot(gz, dec.bracket_coords(a, c));
      b(a, c) = val;
      b(c, a) = -val;
    }
  return b;
}

}  // namespace detail

/// Matrix of j(Z) on v in v_basis (column convention: j(Z) v_a = sum_c J_ca v_c),
/// defined by <j(Z) V, W> = <Z, [V, W]>. Solves G_v J = B^T.
inline QMatrix j_map_coords(const Decomposition& dec, const Vector& z_coords) {
  if (z_coords.size() != dec.dim_z())
    throw Error(Errc::DimensionMismatch, "center coordinate vector has wrong length");
  QMatrix b = detail::pairing_matrix(dec, z_coords);
  return *inverse(dec.v_gram()) * b.transpose();
}

/// Z is an ambient coordinate vector, which must lie in the center.
inline QMatrix j_map(const Decomposition& dec, const Vector& z) {
  auto coords = dec.center_coordinates(z);
  if (!coords) throw Error(Errc::VectorNotInCenter, "j_map argument is not a central vector");
  return j_map_coords(dec, *coords);
}

// ---------------------------------------------------------------------------
// singularity and H-type

enum class Singularity { NonSingular, AlmostNonSingular, Singular };
enum class Certainty { Proven, Heuristic };

inline std::string_view singularity_name(Singularity s) {
  switch (s) {
    case Singularity::NonSingular: return "non-singular";
    case Singularity::AlmostNonSingular: return "almost non-singular";
    case Singularity::Singular: return "singular";
  }
  return "?";
}

struct SingularityClass {
  Singularity kind;
  Certainty certainty;
  std::string method;
};

/// Pf(B(z)) where B(z) = sum_t z_t B_{Z_t}. Since det j(Z) = Pf(B)^2 / det G_v,
/// it has the same real zero set as det j(Z).
inline Polynomial singularity_pfaffian(const Decomposition& dec) {
  const std::size_t m = dec.dim_v();
  const std::size_t q = dec.dim_z();
  Matrix<Polynomial> bz(m, m);
  for (std::size_t t = 0; t < q; ++t) {
    QMatrix bt = detail::pairing_matrix(dec, unit_vector(q, t));
    Polynomial zt = Polynomial::variable(t);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c)
        if (!bt(a, c).is_zero()) bz(a, c) += Polynomial(bt(a, c)) * zt;
  }
  return pfaffian_by_matchings(bz);
}

/// J_a J_b + J_b J_a = -2 <Z_a, Z_b> Id for all pairs of center basis vectors.
inline bool is_h_type(const Decomposition& dec) {
  const std::size_t m = dec.dim_v();
  const std::size_t q = dec.dim_z();
  if (m == 0 || q == 0) return false;
  std::vector<QMatrix> js;
  for (std::size_t t = 0; t < q; ++t) js.push_back(j_map_coords(dec, unit_vector(q, t)));
  const QMatrix id = QMatrix::identity(m);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a; b < q; ++b) {
      QMatrix lhs = js[a] * js[b] + js[b] * js[a];
      if (!(lhs == id * (Rational(-2) * dec.z_gram()(a, b)))) return false;
    }
  return true;
}

namespace detail {

/// Nonzero points of [-bound, bound]^q ordered by support size, then by
/// support, then lexicographically; calls visit until it returns true or
/// the budget is used up. Returns true when visit did.
template <typename Visit>
bool scan_grid(std::size_t q, long bound, std::size_t budget, std::size_t& used, Visit&& visit) {
  std::vector<Rational> point(q, Rational(0));
  for (std::size_t support = 1; support <= q; ++support) {
    std::vector<std::size_t> idx(support);
    for (std::size_t i = 0; i < support; ++i) idx[i] = i;
    while (true) {
      std::vector<long> vals(support, -bound);
      while (true) {
        bool any_zero = std::any_of(vals.begin(), vals.end(), [](long v) { return v == 0; });
        if (!any_zero) {
          std::fill(point.begin(), point.end(), Rational(0));
          for (std::size_t i = 0; i < support; ++i) point[idx[i]] = Rational(vals[i]);
          if (used++ >= budget) return false;
          if (visit(point)) return true;
        }
        std::size_t pos = 0;
        while (pos < support && vals[pos] == bound) vals[pos++] = -bound;
        if (pos == support) break;
        ++vals[pos];
      }
      // next combination of support indices
      std::size_t i = support;
      while (i > 0 && idx[i - 1] == q - support + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t k = i; k < support; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  return false;
}

}  // namespace detail

inline constexpr std::size_t kSingularityGridBudget = 200000;

/// Non-singular / almost non-singular / singular, decided from the
/// polynomial p(z) = det j(sum z_t Z_t). Exact for dim z <= 2 and for
/// H-type inputs; otherwise a grid search decides, which is only heuristic
/// when no zero is found.
inline SingularityClass classify_singularity(const Decomposition& dec) {
  const std::size_t m = dec.dim_v();
  const std::size_t q = dec.dim_z();
  if (m == 0) return {Singularity::NonSingular, Certainty::Proven, "v is trivial; vacuously non-singular"};
  if (m % 2 == 1) return {Singularity::Singular, Certainty::Proven, "dim v is odd, so every j(Z) is singular"};
  Polynomial pf = singularity_pfaffian(dec);
  if (pf.is_zero()) return {Singularity::Singular, Certainty::Proven, "det j(Z) vanishes identically"};
  if (q == 1) return {Singularity::NonSingular, Certainty::Proven, "dim z = 1 and det j(Z) is not identically 0"};
  if (q == 2) {
    // Real zeros of the binary form: the point (1,0), or a real root of f(t,1).
    Rational at_axis = pf.evaluate(std::vector<Rational>{1, 0});
    if (at_axis.is_zero())
      return {Singularity::AlmostNonSingular, Certainty::Proven, "binary form vanishes at Z_1"};
    const int deg = pf.total_degree();
    univariate::Poly f(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& [mono, c] : pf.terms()) {
      unsigned e = mono.empty() ? 0 : mono[0];
      f[e] += c;
    }
    univariate::normalize(f);
    if (univariate::count_real_roots(f) > 0)
      return {Singularity::AlmostNonSingular, Certainty::Proven, "binary form has a real projective root"};
    return {Singularity::NonSingular, Certainty::Proven, "binary form has no real projective root"};
  }
  if (is_h_type(dec)) return {Singularity::NonSingular, Certainty::Proven, "H-type"};
  const long bound = static_cast<long>(m);  // grid of 2 deg(p) + 1 points per axis
  std::size_t used = 0;
  std::vector<Rational> zero_at;
  bool found = detail::scan_grid(q, bound, kSingularityGridBudget, used, [&](const std::vector<Rational>& z) {
    if (pf.evaluate(z).is_zero()) {
      zero_at = z;
      return true;
    }
    return false;
  });
  if (found) {
    std::string where;
    for (std::size_t t = 0; t < zero_at.size(); ++t) where += (t ? "," : "") + zero_at[t].str();
    return {Singularity::AlmostNonSingular, Certainty::Proven, "det j(Z) = 0 at Z = (" + where + ")"};
  }
  return {Singularity::NonSingular, Certainty::Heuristic,
          "no zero of det j(Z) among " + std::to_string(used) + " grid points"};
}

// ---------------------------------------------------------------------------
// orthogonal automorphisms

/// psi[e_i, e_j] = [psi e_i, psi e_j] for all i < j, and psi^T G psi = G.
inline bool is_orthogonal_automorphism(const LieAlgebra& alg, const Metric& metric, const QMatrix& psi) {
  const std::size_t n = alg.dim();
  if (psi.rows() != n || psi.cols() != n || metric.dim() != n) return false;
  if (!(psi.transpose() * metric.gram() * psi == metric.gram())) return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(psi.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(psi * alg.bracket(i, j) == alg.bracket(images[i], images[j]))) return false;
  return true;
}

}  // namespace nilsym
