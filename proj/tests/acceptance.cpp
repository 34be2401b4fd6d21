// Acceptance checks. Prints one PASS/FAIL line per criterion. All checks run
// in exact arithmetic, so every tolerance is zero.
//
// Exit status is 0 when the set of failing criteria equals kKnownFailures.
// Those criteria assert printed values that exact computation contradicts;
// the reasons are printed next to them. A known failure that starts passing
// also makes the run fail, so the list cannot go stale.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "nilsym/catalog.hpp"
#include "nilsym/graphs.hpp"
#include "nilsym/symplectic.hpp"
#include "oracles.hpp"

using namespace nilsym;

namespace {

constexpr long kTolerance = 0;  // exact comparisons throughout

const std::map<int, std::string> kKnownFailures{
    {1, "g5 and g5+R: the cyclic condition on (e1,e2,e3) forces w(e4,e2) = w(e5,e1), so type II is 5 and 8, "
        "not the printed 6 and 9"},
    {2, "g5 and g5+R: the same constraint gives closed 8 and 11, not the printed 9 and 12"},
    {10, "the printed form has d w(V1,V2,V4) = <Z1,Z1> = 1, and V3+V5 is central, so dim z = 3 and the "
         "algebra is almost non-singular"},
};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Decomposition identity_dec(const LieAlgebra& a) { return Decomposition(a, Metric::identity(a.dim())); }

const std::vector<std::string> kTableRows{"h1", "h1+R", "h1+R2", "h2", "g5", "h1+R3",
                                          "h2+R", "g5+R", "h1+h1", "f6", "k6", "hC"};

// 1. Published type II dimensions.
void criterion1(Outcome& o) {
  const std::map<std::string, std::size_t> printed{{"h1", 2},   {"h1+R", 4}, {"h1+R2", 6}, {"h2", 0},
                                                   {"g5", 6},   {"h1+R3", 8}, {"h2+R", 4}, {"g5+R", 9},
                                                   {"h1+h1", 4}, {"f6", 8},   {"k6", 4},   {"hC", 4}};
  for (const auto& name : kTableRows) {
    CatalogEntry e = catalog::get(name);
    std::size_t got = type_II_closed_space(Decomposition(e.algebra, e.metric)).dim();
    o.check(got == printed.at(name), name + " typeII " + std::to_string(got) + " vs " +
                                         std::to_string(printed.at(name)));
  }
}

// 2. Closed dimensions against the printed parameter counts, and closed = I + II.
void criterion2(Outcome& o) {
  for (const auto& e : catalog::regression_entries()) {
    Decomposition d(e.algebra, e.metric);
    std::size_t closed = closed_space(e.algebra).dim();
    std::size_t one = type_I_closed_space(d).dim(), two = type_II_closed_space(d).dim();
    o.check(closed == one + two, e.name + " closed != I + II");
    if (e.published && e.published->closed_dim)
      o.check(closed == *e.published->closed_dim,
              e.name + " closed " + std::to_string(closed) + " vs " + std::to_string(*e.published->closed_dim));
  }
}

// 3. Verdicts with validated witnesses and certificates.
void criterion3(Outcome& o) {
  for (const char* name : {"h1+R", "h1+R3", "g5+R", "h1+h1", "f6", "k6", "hC"}) {
    CatalogEntry e = catalog::get(name);
    Verdict v = symplectic_exists(e.algebra);
    o.check(v.answer == Answer::Yes && check_verdict(e.algebra, v), std::string(name) + " verdict");
    if (e.witness_published)
      o.check(e.witness && is_symplectic(e.algebra, *e.witness), std::string(name) + " printed witness");
  }
  CatalogEntry h = catalog::get("h2+R");
  Verdict v = symplectic_exists(h.algebra);
  bool cert = v.certificate && (v.certificate->kind == CertificateKind::CommonRadical ||
                                v.certificate->kind == CertificateKind::ZeroPfaffian);
  o.check(v.answer == Answer::No && cert && check_verdict(h.algebra, v), "h2+R certificate");
}

// 4. Low-dimensional theorem: type II exists iff symplectic, except h2+R.
void criterion4(Outcome& o) {
  std::set<std::string> exceptions;
  for (const auto& e : catalog::regression_entries()) {
    if (e.algebra.dim() % 2 || e.algebra.dim() > 6) continue;
    TypeTwoReport r = type_II_iff_symplectic_report(e.algebra);
    if (!r.consistent) {
      o.check(r.exception, e.name + " mismatch not flagged");
      exceptions.insert(e.name);
    }
  }
  o.check(exceptions == std::set<std::string>{"h2+R"}, "exception set");
}

// 5. Non-singular obstruction on h5, h7, h9.
void criterion5(Outcome& o) {
  for (std::size_t k = 2; k <= 4; ++k) {
    CatalogEntry e = catalog::get("hn(" + std::to_string(k) + ")");
    Decomposition d(e.algebra, e.metric);
    const std::string tag = "h" + std::to_string(2 * k + 1);
    SingularityClass sc = classify_singularity(d);
    o.check(sc.kind == Singularity::NonSingular && sc.certainty == Certainty::Proven, tag + " non-singular");
    o.check(e.algebra.dim() > 3 * d.dim_z(), tag + " dim n > 3 dim z");
    o.check(type_II_closed_space(d).dim() == 0, tag + " typeII");
    Verdict v = symplectic_exists(e.algebra);
    CertificateKind want =
        e.algebra.dim() % 2 ? CertificateKind::OddDimension : CertificateKind::NonSingularObstruction;
    o.check(v.answer == Answer::No && v.certificate && v.certificate->kind == want, tag + " verdict path");
    std::printf("  info: %s dim %zu, %s, typeII_dim %zu, verdict no via %s\n", tag.c_str(), e.algebra.dim(),
                std::string(singularity_name(sc.kind)).c_str(), type_II_closed_space(d).dim(),
                v.certificate ? std::string(certificate_name(v.certificate->kind)).c_str() : "none");
  }
  // The even-dimensional path, on the complex Heisenberg algebra of real dimension 10.
  LieAlgebra hc = oracle::complex_heisenberg(2);
  Verdict v = symplectic_exists(hc);
  bool fired = v.certificate && v.certificate->kind == CertificateKind::NonSingularObstruction;
  std::printf("  info: %s dim 10, typeII_dim %zu, verdict %s via %s\n", hc.name().c_str(),
              type_II_closed_space(identity_dec(hc)).dim(), std::string(answer_name(v.answer)).c_str(),
              fired ? "non_singular_obstruction" : "other");
}

// 6. H-type entries with type II forms.
void criterion6(Outcome& o) {
  std::set<std::string> with_two;
  std::vector<CatalogEntry> entries;
  for (const char* name : {"h1", "h2", "hC", "hH"}) entries.push_back(catalog::get(name));
  for (std::size_t k = 2; k <= 4; ++k) entries.push_back(catalog::get("hn(" + std::to_string(k) + ")"));
  for (const auto& e : entries) {
    Decomposition d(e.algebra, e.metric);
    o.check(is_h_type(d), e.name + " not H-type");
    if (type_II_closed_space(d).dim() > 0) with_two.insert(e.name);
  }
  o.check(with_two == std::set<std::string>{"h1", "hC", "hH"}, "type II set");
}

// 7. Complete graphs.
void criterion7(Outcome& o) {
  LieAlgebra k4 = free_2step(4);
  Decomposition d = identity_dec(k4);
  QMatrix sys = type_two_system(d);
  o.check(sys.cols() == 24, "K4 unknowns");
  o.check(rank(sys) == 4, "K4 rank");
  o.check(type_II_closed_space(d).dim() == 20, "K4 solution dim");
  Verdict v = symplectic_exists(k4);
  o.check(v.answer == Answer::No && v.certificate && v.certificate->kind == CertificateKind::ZeroPfaffian &&
              check_verdict(k4, v),
          "K4 verdict");
  for (std::size_t n = 3; n <= 6; ++n)
    o.check(rank(type_two_system(identity_dec(free_2step(n)))) == binom(n, 3), "K" + std::to_string(n) + " rank");
}

// 8. Pouseele-Tirao against the decision procedure on every graph with <= 4 vertices.
void criterion8(Outcome& o) {
  std::size_t graphs = 0;
  for (std::size_t v = 2; v <= 4; ++v) {
    std::vector<DirectedGraph::Edge> all;
    for (std::size_t i = 1; i <= v; ++i)
      for (std::size_t l = i + 1; l <= v; ++l) all.emplace_back(i, l);
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<DirectedGraph::Edge> edges;
      for (std::size_t b = 0; b < all.size(); ++b)
        if (mask >> b & 1u) edges.push_back(all[b]);
      DirectedGraph g(v, edges);
      LieAlgebra a = graph_algebra(g);
      Verdict verdict = symplectic_exists(a);
      o.check(verdict.answer != Answer::Unknown && check_verdict(a, verdict) &&
                  pt_criterion(g) == (verdict.answer == Answer::Yes),
              std::to_string(v) + " vertices mask " + std::to_string(mask));
      ++graphs;
    }
  }
  std::printf("  info: %zu graphs checked\n", graphs);
}

// 9. Invariant suites.
void criterion9(Outcome& o) {
  std::mt19937_64 rng(9);
  std::vector<CatalogEntry> entries = catalog::regression_entries();
  std::vector<LieAlgebra> randoms;
  for (int t = 0; t < 20; ++t)
    randoms.push_back(oracle::random_two_step(rng, 2 + rng() % 4, 1 + rng() % 3, 60));

  std::vector<std::pair<LieAlgebra, Metric>> cases;
  for (const auto& e : entries) cases.emplace_back(e.algebra, e.metric);
  for (const auto& a : randoms) cases.emplace_back(a, Metric::identity(a.dim()));

  for (const auto& [a, g] : cases) {
    Decomposition d(a, g);
    FormSpace closed = closed_space(a), exact = exact_space(d);
    for (const auto& f : exact.basis()) o.check(closed.contains(f), a.name() + " exact not closed");
    o.check(exact.dim() == d.commutator_basis().size(), a.name() + " exact_dim != commutator_dim");
    std::vector<Vector> images;
    // G_v j(Z) is skew, so its upper triangle determines j(Z)
    for (const auto& z : d.commutator_basis()) images.push_back(TwoForm(d.v_gram() * j_map(d, z)).vectorize());
    o.check(images.empty() || rank(images, images.front().size()) == images.size(),
            a.name() + " j not injective on C(n)");
    TwoForm w(oracle::random_skew(rng, a.dim()));
    FormSplit s = split_form(d, w);
    o.check(s.type_one + s.type_two == w && is_type_one(d, s.type_one) && is_type_two(d, s.type_two),
            a.name() + " split");
    const std::size_t one = type_I_closed_space(d).dim(), two = type_II_closed_space(d).dim();
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      Decomposition r(a, random_metric(a.dim(), seed));
      o.check(type_I_closed_space(r).dim() == one && type_II_closed_space(r).dim() == two &&
                  exact_space(r).dim() == exact.dim(),
              a.name() + " metric seed " + std::to_string(seed));
    }
    // -1 on v and +1 on z is an orthogonal automorphism for any metric
    QMatrix flip = QMatrix::identity(a.dim());
    for (std::size_t k = 0; k < d.dim_v(); ++k) flip(k, k) = -1;
    QMatrix psi = d.adapted_basis() * flip * d.adapted_inverse();
    o.check(is_orthogonal_automorphism(a, g, psi), a.name() + " flip not an automorphism");
    for (const auto& f : type_II_closed_space(d).basis()) {
      TwoForm c = conjugate_form(d, psi, f);
      o.check(is_closed(a, c) && is_type_two(d, c), a.name() + " conjugate type II");
    }
  }

  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 * (1 + rng() % 4);
    QMatrix m = oracle::random_skew(rng, n, 4);
    Rational pf = pfaffian(m);
    o.check(pf * pf == determinant(m) && (pf * pf).mpq() == oracle::determinant(oracle::to_mat(m)),
            "pf^2 = det n=" + std::to_string(n));
  }

  CatalogEntry hc = catalog::get("hC");
  Decomposition dc(hc.algebra, hc.metric);
  const QMatrix& j = *hc.complex_structure;
  for (const auto& f : type_II_closed_space(dc).basis()) {
    QMatrix force = lorentz_force(dc.metric(), f);
    o.check(force * j == -(j * force), "hC anticommutation");
  }
  // J on X and Z with Y fixed is an orthogonal automorphism of hC
  QMatrix psi = j;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 2; c < 4; ++c) psi(r, c) = r == c ? 1 : 0;
  o.check(is_orthogonal_automorphism(hc.algebra, hc.metric, psi), "hC automorphism");
  for (const auto& e : entries) {
    if (!e.witness) continue;
    Decomposition d(e.algebra, e.metric);
    QMatrix flip = QMatrix::identity(e.algebra.dim());
    for (std::size_t k = 0; k < d.dim_v(); ++k) flip(k, k) = -1;
    QMatrix p = d.adapted_basis() * flip * d.adapted_inverse();
    o.check(is_symplectic(e.algebra, conjugate_form(d, p, *e.witness)), e.name + " conjugate witness");
  }
  o.check(is_symplectic(hc.algebra, conjugate_form(dc, psi, *hc.witness)), "hC conjugate witness");
}

// 10. The singular 7-dimensional example.
TwoForm singular7_form(bool with_v4) {
  // basis V1..V5, Z1, Z2; F(V3) = Z2 = -F(V5), optionally F(V4) = Z1
  QMatrix f(7, 7);
  auto map = [&](std::size_t from, std::size_t to, long c) {
    f(to, from) = c;
    f(from, to) = -c;
  };
  map(2, 6, 1);
  map(4, 6, -1);
  if (with_v4) map(3, 5, 1);
  return form_of_force(Metric::identity(7), f);
}

void criterion10(Outcome& o) {
  CatalogEntry e = catalog::get("singular7");
  Decomposition d(e.algebra, e.metric);
  TwoForm w = singular7_form(true);
  o.check(is_closed(e.algebra, w), "form closed");
  o.check(is_type_two(d, w), "form type II");
  SingularityClass sc = classify_singularity(d);
  o.check(sc.kind == Singularity::Singular && sc.certainty == Certainty::Proven,
          "classified " + std::string(singularity_name(sc.kind)));
  o.check(d.dim_z() == 2, "dim z " + std::to_string(d.dim_z()));
  TwoForm variant = singular7_form(false);
  std::printf("  info: variant without F(V4)=Z1: closed %s, type II %s\n", is_closed(e.algebra, variant) ? "yes" : "no",
              is_type_two(d, variant) ? "yes" : "no");
}

}  // namespace

int main() {
  static_assert(kTolerance == 0);
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
  std::set<int> failed;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail << " [exception: " << ex.what() << "]";
    }
    std::printf("criterion %d: %s%s\n", id, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    if (!o.pass) {
      failed.insert(id);
      auto known = kKnownFailures.find(id);
      if (known != kKnownFailures.end()) std::printf("  known failure: %s\n", known->second.c_str());
    }
  }
  bool as_expected = true;
  for (int id : failed)
    if (!kKnownFailures.count(id)) {
      std::printf("unexpected failure: criterion %d\n", id);
      as_expected = false;
    }
  for (const auto& [id, why] : kKnownFailures)
    if (!failed.count(id)) {
      std::printf("known failure now passes: criterion %d (update the list)\n", id);
      as_expected = false;
    }
  std::printf("%zu of %zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  return as_expected ? 0 : 1;
}
