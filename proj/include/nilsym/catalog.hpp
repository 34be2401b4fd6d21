#pragma once

// The low-dimensional algebras with their expected invariants, used as
// regression data. All canonical metrics are the identity in the stored basis.

#include <array>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "nilsym/algebra.hpp"
#include "nilsym/error.hpp"
#include "nilsym/forms.hpp"
#include "nilsym/symplectic.hpp"

namespace nilsym {

struct Expected {
  std::size_t center_dim;
  std::size_t commutator_dim;
  std::size_t kerj_dim;
  Singularity singularity;
  bool h_type;
  std::size_t closed_dim;
  std::size_t typeI_dim;
  std::size_t typeII_dim;
  std::size_t exact_dim;
  Answer symplectic;
};

/// Values as printed in the source tables, kept next to the recomputed ones
/// so that disagreements stay visible.
struct Published {
  std::optional<std::size_t> closed_dim;
  std::optional<std::size_t> typeII_dim;
  std::string erratum;  // empty when the printed values reproduce
};

struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  Metric metric;
  Expected expected;
  std::optional<TwoForm> witness;
  bool witness_published = false;
  std::optional<Published> published;
  std::optional<QMatrix> complex_structure;
};

namespace detail {

inline BracketEntry br(std::size_t i, std::size_t j, std::size_t k, long c = 1) { return {i, j, {{k, Rational(c)}}}; }

/// sum of c * e^{ij} with 1-based indices.
inline TwoForm form_of(std::size_t n, std::initializer_list<std::array<long, 3>> terms) {
  TwoForm f = TwoForm::zero(n);
  for (const auto& [i, j, c] : terms)
    f += TwoForm::elementary(n, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), Rational(c));
  return f;
}

inline CatalogEntry make(std::string name, std::string description, std::size_t dim,
                         std::vector<BracketEntry> brackets, Expected expected) {
  LieAlgebra alg(dim, brackets, name);
  validate(alg);
  return {std::move(name), std::move(description), std::move(alg), Metric::identity(dim), expected, {}, false, {}, {}};
}

constexpr auto NS = Singularity::NonSingular;
constexpr auto AN = Singularity::AlmostNonSingular;
constexpr auto SG = Singularity::Singular;

/// [e_{2i-1}, e_{2i}] = e_{2k+1}.
inline CatalogEntry heisenberg(std::size_t k) {
  std::vector<BracketEntry> b;
  for (std::size_t i = 1; i <= k; ++i) b.push_back(br(2 * i - 1, 2 * i, 2 * k + 1));
  const std::size_t n = 2 * k + 1;
  const std::size_t closed = k == 1 ? 3 : 2 * k * (2 * k - 1) / 2;
  const std::size_t type_two = k == 1 ? 2 : 0;
  return make("hn(" + std::to_string(k) + ")", "real Heisenberg algebra of dimension " + std::to_string(n), n,
              std::move(b), {1, 1, 0, NS, true, closed, closed - type_two, type_two, 1, Answer::No});
}

/// v = H with basis 1, i, j, k; z = Im H. c_ab^t = <q_t e_a, e_b>.
inline CatalogEntry quaternionic() {
  // left multiplication by i, j, k on (1, i, j, k): L[q][a] = (index, sign) of q * e_a
  const int L[3][4][2] = {
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},  // i*1 = i, i*i = -1, i*j = k, i*k = -j
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},  // j*1 = j, j*i = -k, j*j = -1, j*k = i
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},  // k*1 = k, k*i = j, k*j = -i, k*k = -1
  };
  std::vector<BracketEntry> b;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t c = a + 1; c < 4; ++c) {
      BracketEntry e{a + 1, c + 1, {}};
      for (std::size_t t = 0; t < 3; ++t)
        if (static_cast<std::size_t>(L[t][a][0]) == c) e.terms.push_back({5 + t, Rational(L[t][a][1])});
      if (!e.terms.empty()) b.push_back(std::move(e));
    }
  return make("hH", "quaternionic Heisenberg algebra of dimension 7", 7, std::move(b),
              {3, 3, 0, NS, true, 14, 6, 8, 3, Answer::No});
}

inline std::vector<CatalogEntry> build_fixed() {
  std::vector<CatalogEntry> out;
  auto add = [&](CatalogEntry e, std::optional<Published> pub = {}) {
    e.published = std::move(pub);
    out.push_back(std::move(e));
    return &out.back();
  };
  auto pub = [](std::size_t closed, std::size_t type_two, std::string erratum = {}) {
    return Published{closed, type_two, std::move(erratum)};
  };

  add(make("h1", "Heisenberg algebra of dimension 3", 3, {br(1, 2, 3)}, {1, 1, 0, NS, true, 3, 1, 2, 1, Answer::No}),
      pub(3, 2));
  add(make("h1+R", "h1 plus a line", 4, {br(1, 2, 3)}, {2, 1, 1, AN, false, 5, 1, 4, 1, Answer::Yes}), pub(5, 4))
      ->witness = form_of(4, {{1, 3, 1}, {2, 4, 1}});
  add(make("h1+R2", "h1 plus a plane", 5, {br(1, 2, 3)}, {3, 1, 2, AN, false, 8, 2, 6, 1, Answer::No}), pub(8, 6));
  add(make("h2", "Heisenberg algebra of dimension 5", 5, {br(1, 2, 5), br(3, 4, 5)},
           {1, 1, 0, NS, true, 6, 6, 0, 1, Answer::No}),
      pub(6, 0));
  add(make("g5", "star algebra", 5, {br(1, 3, 4), br(2, 3, 5)}, {2, 2, 0, SG, false, 8, 3, 5, 2, Answer::No}),
      pub(9, 6, "the triple (e1,e2,e3) forces a15 = a24, so the printed family has one parameter too many"));
  {
    auto* e = add(make("h1+R3", "h1 plus a 3-space", 6, {br(1, 2, 3)}, {4, 1, 3, AN, false, 12, 4, 8, 1, Answer::Yes}),
                  pub(12, 8));
    e->witness = form_of(6, {{1, 3, 1}, {2, 4, 1}, {5, 6, 1}});
    e->witness_published = true;
  }
  add(make("h2+R", "h2 plus a line", 6, {br(1, 2, 5), br(3, 4, 5)}, {2, 1, 1, AN, false, 10, 6, 4, 1, Answer::No}),
      pub(10, 4));
  {
    auto* e = add(make("g5+R", "star algebra plus a line", 6, {br(1, 3, 4), br(2, 3, 5)},
                       {3, 2, 1, SG, false, 11, 3, 8, 2, Answer::Yes}),
                  pub(12, 9, "the triple (e1,e2,e3) forces a15 = a24, so the printed family has one parameter too many"));
    e->witness = form_of(6, {{1, 4, 1}, {2, 5, 1}, {3, 6, 1}});
    e->witness_published = true;
  }
  {
    auto* e = add(make("h1+h1", "sum of two copies of h1", 6, {br(1, 2, 5), br(3, 4, 6)},
                       {2, 2, 0, AN, false, 10, 6, 4, 2, Answer::Yes}),
                  pub(10, 4));
    e->witness = form_of(6, {{1, 5, 1}, {2, 4, 1}, {3, 6, 1}});
    e->witness_published = true;
  }
  {
    auto* e = add(make("f6", "free 2-step algebra on three generators", 6, {br(1, 2, 4), br(1, 3, 5), br(2, 3, 6)},
                       {3, 3, 0, SG, false, 11, 3, 8, 3, Answer::Yes}),
                  pub(11, 8));
    e->witness = form_of(6, {{1, 6, 1}, {2, 5, 2}, {3, 4, 1}});
    e->witness_published = true;
  }
  {
    auto* e = add(make("k6", "k6", 6, {br(1, 4, 5), br(2, 3, 5, -1), br(3, 4, 6)},
                       {2, 2, 0, AN, false, 10, 6, 4, 2, Answer::Yes}),
                  pub(10, 4));
    e->witness = form_of(6, {{1, 6, 1}, {2, 4, 1}, {3, 5, 1}});
    e->witness_published = true;
  }
  {
    // basis X1, X2, Y1, Y2, Z1, Z2
    auto* e = add(make("hC", "complex Heisenberg algebra, real basis X1,X2,Y1,Y2,Z1,Z2", 6,
                       {br(1, 3, 5), br(1, 4, 6), br(2, 3, 6), br(2, 4, 5, -1)},
                       {2, 2, 0, NS, true, 10, 6, 4, 2, Answer::Yes}),
                  pub(10, 4));
    e->witness = form_of(6, {{1, 6, 1}, {2, 5, 1}, {3, 4, 1}});
    e->witness_published = true;
    QMatrix j(6, 6);
    for (std::size_t p = 0; p < 6; p += 2) {
      j(p + 1, p) = 1;   // J e_p = e_{p+1}
      j(p, p + 1) = -1;  // J e_{p+1} = -e_p
    }
    e->complex_structure = j;
  }
  // The bracket list of the dimension-6 enumeration taken literally. Its
  // invariants agree with hC in dimension counts only: Pf j = z6^2 - z5^2.
  add(make("hC-list", "complex Heisenberg algebra as written in the dimension-6 list", 6,
           {br(1, 2, 5), br(1, 4, 6), br(2, 3, 6), br(3, 4, 5, -1)}, {2, 2, 0, AN, false, 10, 6, 4, 2, Answer::Yes}));
  out.push_back(quaternionic());
  // Brackets as printed, V1..V5 = e1..e5, Z1, Z2 = e6, e7. Here V3 + V5 is
  // central, so the true center is 3-dimensional and the algebra is
  // h1 + h1 + R, almost non-singular rather than singular.
  add(make("singular7", "the 7-dimensional example [V1,V2]=Z1, [V3,V4]=Z2=[V4,V5]", 7,
           {br(1, 2, 6), br(3, 4, 7), br(4, 5, 7)}, {3, 2, 1, AN, false, 14, 6, 8, 2, Answer::No}));
  return out;
}

inline const std::vector<CatalogEntry>& fixed_entries() {
  static const std::vector<CatalogEntry> entries = build_fixed();
  return entries;
}

inline std::optional<std::size_t> heisenberg_index(const std::string& name) {
  if (name.size() < 5 || name.rfind("hn(", 0) != 0 || name.back() != ')') return std::nullopt;
  std::size_t k = 0;
  const char* first = name.data() + 3;
  const char* last = name.data() + name.size() - 1;
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc() || ptr != last || k == 0 || k > 64) return std::nullopt;
  return k;
}

}  // namespace detail

namespace catalog {

/// Fixed names; the Heisenberg family is reached as "hn(K)".
inline std::vector<std::string> list() {
  std::vector<std::string> names;
  for (const auto& e : detail::fixed_entries()) names.push_back(e.name);
  names.push_back("hn(k)");
  return names;
}

inline CatalogEntry get(const std::string& name) {
  for (const auto& e : detail::fixed_entries())
    if (e.name == name) return e;
  if (auto k = detail::heisenberg_index(name)) return detail::heisenberg(*k);
  throw Error(Errc::UnknownName, "no catalog entry named '" + name + "'");
}

/// Entries covered by verify_all: the fixed list and hn(1..4).
inline std::vector<CatalogEntry> regression_entries() {
  std::vector<CatalogEntry> out = detail::fixed_entries();
  for (std::size_t k = 1; k <= 4; ++k) out.push_back(detail::heisenberg(k));
  return out;
}

struct FieldCheck {
  std::string entry;
  std::string field;
  std::string expected;
  std::string actual;
  bool pass;
};

struct Report {
  std::vector<FieldCheck> checks;
  std::vector<std::string> errata;
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.pass ? 0 : 1;
    return f;
  }
};

inline void check_entry(const CatalogEntry& e, Report& report, const SymplecticOptions& opts = {}) {
  auto field = [&](std::string name, const auto& want, const auto& got) {
    auto str = [](const auto& x) {
      using T = std::decay_t<decltype(x)>;
      if constexpr (std::is_same_v<T, bool>)
        return std::string(x ? "true" : "false");
      else if constexpr (std::is_same_v<T, Singularity>)
        return std::string(singularity_name(x));
      else if constexpr (std::is_same_v<T, Answer>)
        return std::string(answer_name(x));
      else
        return std::to_string(x);
    };
    report.checks.push_back({e.name, std::move(name), str(want), str(got), want == got});
  };
  const Expected& x = e.expected;
  Decomposition dec(e.algebra, e.metric);
  field("center_dim", x.center_dim, dec.dim_z());
  field("commutator_dim", x.commutator_dim, dec.commutator_basis().size());
  field("kerj_dim", x.kerj_dim, dec.kerj_basis().size());
  SingularityClass sc = classify_singularity(dec);
  field("singularity", x.singularity, sc.kind);
  field("h_type", x.h_type, is_h_type(dec));
  const std::size_t closed = closed_space(e.algebra).dim();
  const std::size_t type_one = type_I_closed_space(dec).dim();
  const std::size_t type_two = type_II_closed_space(dec).dim();
  field("closed_dim", x.closed_dim, closed);
  field("typeI_dim", x.typeI_dim, type_one);
  field("typeII_dim", x.typeII_dim, type_two);
  field("exact_dim", x.exact_dim, exact_space(dec).dim());
  Verdict v = symplectic_exists(e.algebra, opts);
  field("symplectic", x.symplectic, v.answer);
  field("verdict_checks", true, check_verdict(e.algebra, v));
  if (e.witness) field("witness_symplectic", true, is_symplectic(e.algebra, *e.witness));
  if (e.expected.h_type) field("h_type_self_check", true, is_h_type(dec));
  if (e.published) {
    const Published& p = *e.published;
    bool reproduces = (!p.closed_dim || *p.closed_dim == closed) && (!p.typeII_dim || *p.typeII_dim == type_two);
    if (!reproduces)
      report.errata.push_back(e.name + ": printed closed_dim " + std::to_string(p.closed_dim.value_or(0)) +
                              ", typeII_dim " + std::to_string(p.typeII_dim.value_or(0)) + "; computed " +
                              std::to_string(closed) + ", " + std::to_string(type_two) +
                              (p.erratum.empty() ? std::string() : " (" + p.erratum + ")"));
  }
}

inline Report verify_all(const SymplecticOptions& opts = {}) {
  Report report;
  for (const auto& e : regression_entries()) check_entry(e, report, opts);
  return report;
}

}  // namespace catalog

}  // namespace nilsym
