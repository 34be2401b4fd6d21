#pragma once

// Command-line frontend. run() is the whole program minus main(), so tests
// can drive it with in-memory streams.

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilsym/algebra.hpp"
#include "nilsym/catalog.hpp"
#include "nilsym/forms.hpp"
#include "nilsym/graphs.hpp"
#include "nilsym/io.hpp"
#include "nilsym/symplectic.hpp"

namespace nilsym::cli {

using io::json;

enum ExitCode { kOk = 0, kInvalid = 1, kUnknown = 2 };

struct Options {
  bool json = false;
  std::string metric;  // "", a file path, or "random:SEED"
  std::uint64_t seed = SymplecticOptions{}.seed;
};

namespace detail {

inline Metric resolve_metric(const std::string& spec, const LieAlgebra& alg, const std::optional<Metric>& from_file) {
  const std::size_t n = alg.dim();
  if (spec.empty()) return from_file ? *from_file : Metric::identity(n);
  if (spec.rfind("random:", 0) == 0) {
    const std::string digits = spec.substr(7);
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(Errc::Parse, "bad metric seed '" + digits + "'");
    return random_metric(n, seed);
  }
  io::Document doc(io::read_file(spec), spec);
  const json& root = doc.root();
  const json& rows = root.is_object() && root.contains("metric") ? root["metric"] : root;
  const std::string at = root.is_object() ? "/metric" : "";
  QMatrix g = io::detail::rational_matrix(doc, rows, at, n);
  return io::detail::located(doc, at, [&] { return Metric(g); });
}

inline std::string vector_list(const std::vector<Vector>& vs) {
  if (vs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + io::vector_string(vs[i]);
  return out;
}

inline json vectors_json(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(io::vector_json(v));
  return out;
}

inline std::string verdict_line(const Verdict& v) {
  std::string line = "symplectic: " + std::string(answer_name(v.answer));
  if (v.witness) line += ", witness: " + io::form_string(*v.witness);
  if (v.certificate) {
    line += ", certificate: " + std::string(certificate_name(v.certificate->kind));
    if (v.certificate->kind == CertificateKind::CommonRadical) line += " " + io::vector_string(v.certificate->radical);
  }
  return line;
}

inline void print_method(std::ostream& out, const Verdict& v) {
  for (const auto& step : v.method) out << "  - " << step << "\n";
}

struct Analysis {
  LieAlgebra algebra;
  Decomposition dec;
  SingularityClass singularity;
  bool h_type;
  std::size_t closed, type_one, type_two, exact, betti;
  Verdict verdict;
  std::string metric_label;
};

inline Analysis analyze(const LieAlgebra& alg, const Metric& metric, const std::string& metric_label,
                        const SymplecticOptions& sopts) {
  Decomposition dec(alg, metric);
  SingularityClass sc = classify_singularity(dec);
  bool h = is_h_type(dec);
  const std::size_t closed = closed_space(alg).dim();
  const std::size_t one = type_I_closed_space(dec).dim();
  const std::size_t two = type_II_closed_space(dec).dim();
  const std::size_t exact = exact_space(dec).dim();
  return {alg, dec, sc, h, closed, one, two, exact, closed - exact, symplectic_exists(alg, sopts), metric_label};
}

inline json analysis_json(const Analysis& a) {
  const Decomposition& d = a.dec;
  json j;
  j["algebra"] = io::algebra_json(a.algebra, d.metric());
  j["validation"] = {{"two_step", true}};
  j["decomposition"] = {{"metric", a.metric_label},
                        {"dim", d.dim()},
                        {"dim_v", d.dim_v()},
                        {"dim_z", d.dim_z()},
                        {"center", vectors_json(d.center_basis())},
                        {"commutator", vectors_json(d.commutator_basis())},
                        {"kerj", vectors_json(d.kerj_basis())},
                        {"v", vectors_json(d.v_basis())}};
  j["singularity"] = {{"class", std::string(singularity_name(a.singularity.kind))},
                      {"certainty", a.singularity.certainty == Certainty::Proven ? "proven" : "heuristic"},
                      {"method", a.singularity.method}};
  j["h_type"] = a.h_type;
  j["forms"] = {{"closed_dim", a.closed}, {"typeI_dim", a.type_one}, {"typeII_dim", a.type_two}, {"exact_dim", a.exact}};
  j["betti2"] = a.betti;
  j["symplectic"] = io::verdict_json(a.verdict);
  return j;
}

inline void print_analysis(std::ostream& out, const Analysis& a) {
  const Decomposition& d = a.dec;
  out << "algebra: " << (a.algebra.name().empty() ? "(unnamed)" : a.algebra.name()) << " (dim " << d.dim() << ")\n";
  out << "validation: 2-step nilpotent\n";
  out << "metric: " << a.metric_label << "\n";
  out << "decomposition: dim v " << d.dim_v() << ", dim z " << d.dim_z() << "\n";
  out << "  center: " << vector_list(d.center_basis()) << "\n";
  out << "  commutator: " << vector_list(d.commutator_basis()) << "\n";
  out << "  ker j: " << vector_list(d.kerj_basis()) << "\n";
  out << "singularity: " << singularity_name(a.singularity.kind) << " ("
      << (a.singularity.certainty == Certainty::Proven ? "proven" : "heuristic") << "; " << a.singularity.method << ")\n";
  out << "h_type: " << (a.h_type ? "true" : "false") << "\n";
  out << "closed_dim: " << a.closed << "\n";
  out << "typeI_dim: " << a.type_one << "\n";
  out << "typeII_dim: " << a.type_two << "\n";
  out << "exact_dim: " << a.exact << "\n";
  out << "betti2: " << a.betti << "\n";
  out << verdict_line(a.verdict) << "\n";
  print_method(out, a.verdict);
}

inline FormSpace select_space(const std::string& type, const Decomposition& dec) {
  if (type == "all") return closed_space(dec.algebra());
  if (type == "I") return type_I_closed_space(dec);
  if (type == "II") return type_II_closed_space(dec);
  return exact_space(dec);
}

inline json catalog_entry_json(const CatalogEntry& e) {
  const Expected& x = e.expected;
  json j;
  j["name"] = e.name;
  j["description"] = e.description;
  j["algebra"] = io::algebra_json(e.algebra, e.metric);
  j["expected"] = {{"center_dim", x.center_dim},
                   {"commutator_dim", x.commutator_dim},
                   {"kerj_dim", x.kerj_dim},
                   {"singularity", std::string(singularity_name(x.singularity))},
                   {"h_type", x.h_type},
                   {"closed_dim", x.closed_dim},
                   {"typeI_dim", x.typeI_dim},
                   {"typeII_dim", x.typeII_dim},
                   {"exact_dim", x.exact_dim},
                   {"symplectic", std::string(answer_name(x.symplectic))}};
  if (e.witness) {
    j["witness"] = io::form_json(*e.witness);
    j["witness_published"] = e.witness_published;
  }
  if (e.published) {
    json p;
    if (e.published->closed_dim) p["closed_dim"] = *e.published->closed_dim;
    if (e.published->typeII_dim) p["typeII_dim"] = *e.published->typeII_dim;
    if (!e.published->erratum.empty()) p["erratum"] = e.published->erratum;
    j["published"] = p;
  }
  if (e.complex_structure) j["complex_structure"] = io::matrix_json(*e.complex_structure);
  return j;
}

inline void print_catalog_entry(std::ostream& out, const CatalogEntry& e) {
  const Expected& x = e.expected;
  out << e.name << ": " << e.description << " (dim " << e.algebra.dim() << ")\n";
  out << "brackets:";
  auto entries = e.algebra.entries();
  if (entries.empty()) out << " none";
  out << "\n";
  for (const auto& b : entries) {
    std::vector<std::pair<std::string, Rational>> terms;
    for (const auto& t : b.terms) terms.emplace_back("e" + std::to_string(t.k), t.c);
    out << "  [e" << b.i << ", e" << b.j << "] = " << io::combination(terms) << "\n";
  }
  out << "center_dim: " << x.center_dim << "\ncommutator_dim: " << x.commutator_dim << "\nkerj_dim: " << x.kerj_dim
      << "\nsingularity: " << singularity_name(x.singularity) << "\nh_type: " << (x.h_type ? "true" : "false")
      << "\nclosed_dim: " << x.closed_dim << "\ntypeI_dim: " << x.typeI_dim << "\ntypeII_dim: " << x.typeII_dim
      << "\nexact_dim: " << x.exact_dim << "\nsymplectic: " << answer_name(x.symplectic) << "\n";
  if (e.witness) out << "witness: " << io::form_string(*e.witness) << "\n";
  if (e.published && !e.published->erratum.empty())
    out << "erratum: printed closed_dim " << e.published->closed_dim.value_or(0) << ", typeII_dim "
        << e.published->typeII_dim.value_or(0) << "; " << e.published->erratum << "\n";
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

/// Runs the tool on argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic structures and closed 2-forms on 2-step nilpotent Lie algebras", "nilsym"};
  app.require_subcommand(1);
  Options opt;
  auto common = [&](CLI::App* sub, bool with_metric) {
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_option("--seed", opt.seed, "seed for randomized search");
    if (with_metric) sub->add_option("--metric", opt.metric, "metric file or random:SEED");
  };

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "full analysis of an algebra file");
  analyze->add_option("file", file, "algebra JSON")->required();
  common(analyze, true);

  std::string type = "all";
  auto* closed = app.add_subcommand("closed", "basis of a space of closed 2-forms");
  closed->add_option("file", file, "algebra JSON")->required();
  closed->add_option("--type", type, "all, I, II or exact")->check(CLI::IsMember({"all", "I", "II", "exact"}));
  common(closed, true);

  bool strict = false;
  auto* symp = app.add_subcommand("symplectic", "decide existence of a symplectic form");
  symp->add_option("file", file, "algebra JSON")->required();
  symp->add_flag("--strict", strict, "exit 2 when the answer is unknown");
  common(symp, false);

  std::size_t complete = 0;
  auto* graph = app.add_subcommand("graph", "graph algebra and the Pouseele-Tirao criterion");
  auto* graph_file = graph->add_option("file", file, "graph JSON");
  auto* graph_complete = graph->add_option("--complete", complete, "use the complete graph K_N")->check(CLI::Range(2, 64));
  graph_file->excludes(graph_complete);
  common(graph, true);

  auto* cat = app.add_subcommand("catalog", "built-in algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entry names");
  std::string name;
  auto* cat_get = cat->add_subcommand("get", "show one entry");
  cat_get->add_option("name", name, "entry name, or hn(K)")->required();
  auto* cat_verify = cat->add_subcommand("verify", "run the regression table");
  for (auto* s : {cat_list, cat_get, cat_verify}) s->add_flag("--json", opt.json, "emit JSON");
  cat_verify->add_option("--seed", opt.seed, "seed for randomized search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  SymplecticOptions sopts;
  sopts.seed = opt.seed;
  try {
    if (*analyze || *closed) {
      io::AlgebraFile in = io::load_algebra(file);
      Metric metric = detail::resolve_metric(opt.metric, in.algebra, in.metric);
      std::string label = opt.metric.empty() ? (in.metric ? "file" : "identity") : opt.metric;
      if (*analyze) {
        detail::Analysis a = detail::analyze(in.algebra, metric, label, sopts);
        if (opt.json)
          detail::emit(out, detail::analysis_json(a));
        else
          detail::print_analysis(out, a);
        return kOk;
      }
      Decomposition dec(in.algebra, metric);
      FormSpace space = detail::select_space(type, dec);
      if (opt.json) {
        json basis = json::array();
        for (const auto& f : space.basis()) basis.push_back(io::form_json(f));
        detail::emit(out, {{"kind", std::string(form_kind_name(space.kind()))},
                           {"type", type},
                           {"dim", space.dim()},
                           {"basis", basis}});
      } else {
        out << form_kind_name(space.kind()) << ": dim " << space.dim() << "\n";
        for (const auto& f : space.basis()) out << "  " << io::form_string(f) << "\n";
      }
      return kOk;
    }
    if (*symp) {
      io::AlgebraFile in = io::load_algebra(file);
      Verdict v = symplectic_exists(in.algebra, sopts);
      if (opt.json) {
        detail::emit(out, io::verdict_json(v));
      } else {
        out << detail::verdict_line(v) << "\n";
        detail::print_method(out, v);
      }
      return strict && v.answer == Answer::Unknown ? kUnknown : kOk;
    }
    if (*graph) {
      if (file.empty() && complete == 0) throw Error(Errc::Parse, "graph needs a file or --complete N");
      DirectedGraph g = file.empty() ? complete_graph(complete) : io::parse_graph(io::read_file(file), file);
      std::string gname = file.empty() ? "K" + std::to_string(complete) : "L(" + file + ")";
      LieAlgebra alg = graph_algebra(g, gname);
      Metric metric = detail::resolve_metric(opt.metric, alg, std::nullopt);
      detail::Analysis a = detail::analyze(alg, metric, opt.metric.empty() ? "identity" : opt.metric, sopts);
      const bool pt = pt_criterion(g);
      if (opt.json) {
        detail::emit(out, {{"graph", io::graph_json(g)}, {"pt_criterion", pt}, {"analysis", detail::analysis_json(a)}});
      } else {
        out << "pt_criterion: " << (pt ? "true" : "false") << "; typeII_dim: " << a.type_two
            << "; symplectic: " << answer_name(a.verdict.answer) << "\n";
        out << "graph: " << g.vertices() << " vertices, " << g.edge_count() << " edges\n";
        detail::print_analysis(out, a);
      }
      return kOk;
    }
    if (*cat_list) {
      auto names = catalog::list();
      if (opt.json)
        detail::emit(out, names);
      else
        for (const auto& n : names) out << n << "\n";
      return kOk;
    }
    if (*cat_get) {
      CatalogEntry e = catalog::get(name);
      if (opt.json)
        detail::emit(out, detail::catalog_entry_json(e));
      else
        detail::print_catalog_entry(out, e);
      return kOk;
    }
    if (*cat_verify) {
      catalog::Report r = catalog::verify_all(sopts);
      if (opt.json) {
        detail::emit(out, io::report_json(r));
      } else {
        std::string current;
        std::size_t pass = 0, total = 0;
        auto flush = [&] {
          if (!current.empty()) out << current << ": " << pass << "/" << total << " pass\n";
        };
        for (const auto& c : r.checks) {
          if (c.entry != current) {
            flush();
            current = c.entry;
            pass = total = 0;
          }
          ++total;
          pass += c.pass ? 1 : 0;
          if (!c.pass) out << "  FAIL " << c.field << ": expected " << c.expected << ", got " << c.actual << "\n";
        }
        flush();
        for (const auto& e : r.errata) out << "erratum: " << e << "\n";
        if (r.failures() == 0)
          out << "all " << r.checks.size() << " checks pass\n";
        else
          out << r.failures() << " of " << r.checks.size() << " checks fail\n";
      }
      return r.failures() == 0 ? kOk : kInvalid;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace nilsym::cli
