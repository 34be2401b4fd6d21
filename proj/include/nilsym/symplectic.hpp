#pragma once

// Existence of left-invariant symplectic forms. Answers are either backed by
// a witness form or by a certificate that re-validates independently.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilsym/algebra.hpp"
#include "nilsym/forms.hpp"
#include "nilsym/pfaffian.hpp"
#include "nilsym/polynomial.hpp"

namespace nilsym {

enum class Answer { Yes, No, Unknown };

inline std::string_view answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

enum class CertificateKind { OddDimension, CommonRadical, ZeroPfaffian, NonSingularObstruction };

inline std::string_view certificate_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::OddDimension: return "odd_dimension";
    case CertificateKind::CommonRadical: return "common_radical";
    case CertificateKind::ZeroPfaffian: return "zero_pfaffian";
    case CertificateKind::NonSingularObstruction: return "non_singular_obstruction";
  }
  return "?";
}

struct Certificate {
  CertificateKind kind;
  Vector radical;  // CommonRadical only
};

struct Verdict {
  Answer answer = Answer::Unknown;
  std::optional<TwoForm> witness;
  std::optional<Certificate> certificate;
  std::vector<std::string> method;
};

struct SymplecticOptions {
  std::uint64_t seed = 20240611;
  std::size_t samples = 64;
  std::size_t max_symbolic_params = 30;
  std::size_t max_symbolic_dim = 12;
};

inline Rational pfaffian(const TwoForm& form) { return pfaffian(form.omega()); }

inline bool is_nondegenerate(const TwoForm& form) {
  return form.dim() % 2 == 0 && !pfaffian(form).is_zero();
}

inline bool is_symplectic(const LieAlgebra& alg, const TwoForm& form) {
  return is_nondegenerate(form) && is_closed(alg, form);
}

/// {x : Omega_b x = 0 for every basis form}.
inline std::vector<Vector> common_radical(const FormSpace& space) {
  const std::size_t n = space.ambient_dim();
  QMatrix stacked(space.dim() * n, n);
  for (std::size_t b = 0; b < space.dim(); ++b)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(b * n + r, c) = space.basis()[b](r, c);
  return null_space(stacked);
}

/// Pfaffian of the generic element sum_b t_b Omega_b, homogeneous of degree n/2.
inline Polynomial pfaffian_polynomial(const FormSpace& space) {
  const std::size_t n = space.ambient_dim();
  if (n % 2 == 1) throw Error(Errc::OddDimension, "pfaffian polynomial in odd dimension");
  Matrix<Polynomial> generic(n, n);
  for (std::size_t b = 0; b < space.dim(); ++b) {
    Polynomial tb = Polynomial::variable(b);
    const TwoForm& f = space.basis()[b];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!f(r, c).is_zero()) generic(r, c) += Polynomial(f(r, c)) * tb;
  }
  return pfaffian_by_matchings(generic);
}

/// Deterministic parameter vectors from [-2d, 2d]^k, d = n/2.
inline std::vector<std::vector<Rational>> sample_parameters(std::size_t k, std::size_t half_dim, std::uint64_t seed,
                                                            std::size_t count) {
  std::mt19937_64 rng(seed);
  const std::uint64_t width = 4 * half_dim + 1;
  const long offset = 2 * static_cast<long>(half_dim);
  std::vector<std::vector<Rational>> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Rational> p(k);
    for (auto& x : p) x = Rational(static_cast<long>(rng() % width) - offset);
    out.push_back(std::move(p));
  }
  return out;
}

/// Nonzero point of a nonzero polynomial: variables outside the support of
/// one monomial go to 0, then each support variable in turn takes the first
/// value in 1..deg+1 that keeps the partial substitution nonzero (a nonzero
/// polynomial of degree deg in that variable has at most deg roots).
inline std::vector<Rational> nonzero_point(const Polynomial& poly, std::size_t k) {
  std::vector<Rational> point(k, Rational(0));
  if (poly.is_zero()) return point;
  const Monomial& mono = poly.terms().begin()->first;
  Polynomial p = poly;
  for (std::size_t b = 0; b < k; ++b)
    if (b >= mono.size() || mono[b] == 0) p = p.substitute(b, 0);
  const long deg = poly.total_degree();
  for (std::size_t b = 0; b < mono.size(); ++b) {
    if (mono[b] == 0) continue;
    for (long c = 1; c <= deg + 1; ++c) {
      Polynomial q = p.substitute(b, Rational(c));
      if (!q.is_zero()) {
        p = std::move(q);
        point[b] = Rational(c);
        break;
      }
    }
  }
  return point;
}

/// Decision cascade: parity, the non-singular obstruction, a common radical
/// of all closed forms, randomized search, then the symbolic Pfaffian.
inline Verdict symplectic_exists(const LieAlgebra& alg, const SymplecticOptions& opts = {}) {
  Verdict v;
  const std::size_t n = alg.dim();
  if (n % 2 == 1) {
    v.answer = Answer::No;
    v.certificate = Certificate{CertificateKind::OddDimension, {}};
    v.method.push_back("dimension " + std::to_string(n) + " is odd");
    return v;
  }
  v.method.push_back("dimension " + std::to_string(n) + " is even");

  Decomposition dec(alg, Metric::identity(n));
  if (n > 3 * dec.dim_z()) {
    SingularityClass sc = classify_singularity(dec);
    if (sc.kind == Singularity::NonSingular && sc.certainty == Certainty::Proven) {
      v.answer = Answer::No;
      v.certificate = Certificate{CertificateKind::NonSingularObstruction, {}};
      v.method.push_back("non-singular (" + sc.method + ") with dim n > 3 dim z: no closed form of type II");
      return v;
    }
    v.method.push_back("obstruction not applicable: " + std::string(singularity_name(sc.kind)));
  } else {
    v.method.push_back("obstruction not applicable: dim n <= 3 dim z");
  }

  FormSpace closed = closed_space(alg);
  const std::size_t k = closed.dim();
  v.method.push_back("closed 2-forms: dimension " + std::to_string(k));
  auto radical = common_radical(closed);
  if (!radical.empty()) {
    v.answer = Answer::No;
    v.certificate = Certificate{CertificateKind::CommonRadical, radical.front()};
    v.method.push_back("every closed form kills a common nonzero vector");
    return v;
  }
  v.method.push_back("closed forms have no common radical");

  const std::size_t d = n / 2;
  auto samples = sample_parameters(k, d, opts.seed, opts.samples);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    TwoForm f = closed.combination(samples[s]);
    if (!pfaffian(f).is_zero()) {
      v.answer = Answer::Yes;
      v.witness = std::move(f);
      v.method.push_back("random sample " + std::to_string(s + 1) + " of " + std::to_string(samples.size()) +
                         " has nonzero Pfaffian");
      return v;
    }
  }
  v.method.push_back("all " + std::to_string(samples.size()) + " random samples have zero Pfaffian");

  if (k <= opts.max_symbolic_params && n <= opts.max_symbolic_dim) {
    Polynomial pf = pfaffian_polynomial(closed);
    if (pf.is_zero()) {
      v.answer = Answer::No;
      v.certificate = Certificate{CertificateKind::ZeroPfaffian, {}};
      v.method.push_back("Pfaffian of the generic closed form is identically zero");
      return v;
    }
    TwoForm f = closed.combination(nonzero_point(pf, k));
    if (!pfaffian(f).is_zero()) {
      v.answer = Answer::Yes;
      v.witness = std::move(f);
      v.method.push_back("witness located from a nonzero monomial of the Pfaffian polynomial");
      return v;
    }
    v.method.push_back("witness search on the Pfaffian polynomial failed");
  } else {
    v.method.push_back("symbolic Pfaffian skipped (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
  }
  v.answer = Answer::Unknown;
  return v;
}

/// Re-derives each claim of a verdict from scratch.
inline bool check_verdict(const LieAlgebra& alg, const Verdict& v) {
  const std::size_t n = alg.dim();
  switch (v.answer) {
    case Answer::Yes:
      return v.witness && v.witness->dim() == n && is_symplectic(alg, *v.witness);
    case Answer::Unknown:
      return true;
    case Answer::No:
      break;
  }
  if (!v.certificate) return false;
  switch (v.certificate->kind) {
    case CertificateKind::OddDimension:
      return n % 2 == 1;
    case CertificateKind::CommonRadical: {
      const Vector& x = v.certificate->radical;
      if (x.size() != n || is_zero(x)) return false;
      const FormSpace closed = closed_space(alg);
      for (const auto& f : closed.basis())
        if (!is_zero(f.omega() * x)) return false;
      return true;
    }
    case CertificateKind::ZeroPfaffian:
      return n % 2 == 0 && pfaffian_polynomial(closed_space(alg)).is_zero();
    case CertificateKind::NonSingularObstruction: {
      Decomposition dec(alg, Metric::identity(n));
      SingularityClass sc = classify_singularity(dec);
      return sc.kind == Singularity::NonSingular && sc.certainty == Certainty::Proven && n > 3 * dec.dim_z();
    }
  }
  return false;
}

struct TypeTwoReport {
  std::size_t type_two_dim;
  Verdict symplectic;
  bool consistent;  // (type_two_dim > 0) <=> symplectic == Yes
  bool exception;   // inconsistent in dimension <= 6
  std::string note;
};

/// Compares existence of closed type II forms with existence of symplectic
/// forms. In dimension <= 6 the only mismatch is h_2 (+) R.
inline TypeTwoReport type_II_iff_symplectic_report(const LieAlgebra& alg, const SymplecticOptions& opts = {}) {
  if (alg.dim() % 2 == 1) throw Error(Errc::OddDimension, "report needs an even-dimensional algebra");
  Decomposition dec(alg, Metric::identity(alg.dim()));
  TypeTwoReport r{type_II_closed_space(dec).dim(), symplectic_exists(alg, opts), false, false, {}};
  r.consistent = (r.type_two_dim > 0) == (r.symplectic.answer == Answer::Yes);
  if (r.consistent) {
    r.note = "consistent";
  } else if (alg.dim() <= 6) {
    r.exception = true;
    r.note = "exception: closed type II forms exist but no symplectic form";
  } else {
    r.note = "higher-dimensional counterexample: closed type II forms exist but no symplectic form";
  }
  if (r.symplectic.answer == Answer::Unknown) r.note = "undecided";
  return r;
}

}  // namespace nilsym
