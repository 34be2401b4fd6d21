#pragma once

// JSON input/output for algebras, forms, graphs and verdicts, plus the
// human-readable e^{ij} formatting. Parse errors carry a line number.

#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilsym/algebra.hpp"
#include "nilsym/catalog.hpp"
#include "nilsym/error.hpp"
#include "nilsym/forms.hpp"
#include "nilsym/graphs.hpp"
#include "nilsym/symplectic.hpp"

namespace nilsym::io {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// line tracking

namespace detail {

/// Character iterator that counts newlines as it is advanced.
class LineCountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  LineCountingIterator(const char* p, std::size_t* line) : p_(p), line_(line) {}
  reference operator*() const { return *p_; }
  LineCountingIterator& operator++() {
    if (*p_ == '\n') ++*line_;
    ++p_;
    return *this;
  }
  LineCountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const LineCountingIterator& a, const LineCountingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_;
  std::size_t* line_;
};

/// SAX pass recording the source line of every value, keyed by JSON pointer.
class LineMapper : public nlohmann::json_sax<json> {
 public:
  explicit LineMapper(const std::size_t* line) : line_(line) {}

  std::map<std::string, std::size_t> lines;

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override { return open(false); }
  bool key(string_t& k) override {
    stack_.back().key = escape(k);
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(true); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool array;
    std::size_t index = 0;
    std::string key;
    std::string pointer;
  };

  static std::string escape(const std::string& k) {
    std::string out;
    for (char c : k) {
      if (c == '~')
        out += "~0";
      else if (c == '/')
        out += "~1";
      else
        out += c;
    }
    return out;
  }

  std::string here() const {
    if (stack_.empty()) return "";
    const Frame& f = stack_.back();
    return f.pointer + "/" + (f.array ? std::to_string(f.index) : f.key);
  }
  void advance() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }
  bool value() {
    lines.emplace(here(), *line_);
    advance();
    return true;
  }
  bool open(bool array) {
    std::string p = here();
    lines.emplace(p, *line_);
    stack_.push_back({array, 0, {}, p});
    return true;
  }
  bool close() {
    stack_.pop_back();
    advance();
    return true;
  }

  const std::size_t* line_;
  std::vector<Frame> stack_;
};

}  // namespace detail

/// Parsed JSON document together with the line of each value.
class Document {
 public:
  Document(const std::string& text, std::string source) : source_(std::move(source)) {
    try {
      root_ = json::parse(text);
    } catch (const json::parse_error& e) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      std::string msg = e.what();
      auto cut = msg.find("parse error");
      throw Error(Errc::Parse, source_ + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                                   (cut == std::string::npos ? msg : msg.substr(cut)));
    }
    std::size_t line = 1;
    detail::LineMapper mapper(&line);
    detail::LineCountingIterator first(text.data(), &line), last(text.data() + text.size(), &line);
    json::sax_parse(first, last, &mapper);
    lines_ = std::move(mapper.lines);
  }

  const json& root() const { return root_; }
  const std::string& source() const { return source_; }

  std::size_t line_of(const std::string& pointer) const {
    std::string p = pointer;
    while (true) {
      auto it = lines_.find(p);
      if (it != lines_.end()) return it->second;
      if (p.empty()) return 1;
      p = p.substr(0, p.rfind('/'));
    }
  }

  [[noreturn]] void fail(const std::string& pointer, const std::string& what, Errc code = Errc::Parse) const {
    throw Error(code, source_ + ":" + std::to_string(line_of(pointer)) + ": " + what +
                          (pointer.empty() ? "" : " (at " + pointer + ")"));
  }

 private:
  std::string source_;
  json root_;
  std::map<std::string, std::size_t> lines_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// field helpers

namespace detail {

inline void require_object(const Document& doc, const json& j, const std::string& at,
                           const std::set<std::string>& allowed, const std::set<std::string>& required) {
  if (!j.is_object()) doc.fail(at, "expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) doc.fail(at + "/" + k, "unknown key '" + k + "'");
  for (const auto& k : required)
    if (!j.contains(k)) doc.fail(at, "missing key '" + k + "'");
}

inline std::size_t positive_index(const Document& doc, const json& j, const std::string& at) {
  if (!j.is_number_integer()) doc.fail(at, "expected a positive integer");
  long long v = j.get<long long>();
  if (v < 1) doc.fail(at, "expected a positive integer", Errc::BadIndex);
  return static_cast<std::size_t>(v);
}

inline Rational rational(const Document& doc, const json& j, const std::string& at) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) doc.fail(at, "expected a rational string \"p\" or \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception&) {
    doc.fail(at, "malformed rational '" + j.get<std::string>() + "'");
  }
}

inline QMatrix rational_matrix(const Document& doc, const json& j, const std::string& at, std::size_t n) {
  if (!j.is_array() || j.size() != n) doc.fail(at, "expected " + std::to_string(n) + " rows", Errc::DimensionMismatch);
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rp = at + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != n)
      doc.fail(rp, "expected " + std::to_string(n) + " entries", Errc::DimensionMismatch);
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational(doc, j[r][c], rp + "/" + std::to_string(c));
  }
  return m;
}

/// Re-raise construction errors with the line of the offending node.
template <typename F>
auto located(const Document& doc, const std::string& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    std::string what = e.what();
    auto colon = what.find(": ");
    doc.fail(at, colon == std::string::npos ? what : what.substr(colon + 2), e.code());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// algebras

struct AlgebraFile {
  LieAlgebra algebra;
  std::optional<Metric> metric;
};

inline AlgebraFile parse_algebra(const Document& doc) {
  const json& j = doc.root();
  detail::require_object(doc, j, "", {"name", "dim", "brackets", "metric"}, {"dim"});
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) doc.fail("/name", "expected a string");
    name = j["name"].get<std::string>();
  }
  const std::size_t n = detail::positive_index(doc, j["dim"], "/dim");
  std::vector<BracketEntry> brackets;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) doc.fail("/brackets", "expected an array");
    for (std::size_t b = 0; b < j["brackets"].size(); ++b) {
      const std::string at = "/brackets/" + std::to_string(b);
      const json& e = j["brackets"][b];
      detail::require_object(doc, e, at, {"i", "j", "terms"}, {"i", "j", "terms"});
      BracketEntry entry{detail::positive_index(doc, e["i"], at + "/i"), detail::positive_index(doc, e["j"], at + "/j"),
                         {}};
      if (!e["terms"].is_array()) doc.fail(at + "/terms", "expected an array");
      for (std::size_t t = 0; t < e["terms"].size(); ++t) {
        const std::string tp = at + "/terms/" + std::to_string(t);
        const json& term = e["terms"][t];
        detail::require_object(doc, term, tp, {"k", "c"}, {"k", "c"});
        entry.terms.push_back({detail::positive_index(doc, term["k"], tp + "/k"), detail::rational(doc, term["c"], tp + "/c")});
      }
      // Checked one at a time so the error points at the right entry.
      detail::located(doc, at, [&] { return LieAlgebra(n, {entry}); });
      brackets.push_back(std::move(entry));
    }
  }
  AlgebraFile out{detail::located(doc, "/brackets", [&] { return LieAlgebra(n, brackets, name); }), std::nullopt};
  detail::located(doc, "/brackets", [&] {
    validate(out.algebra);
    return 0;
  });
  if (j.contains("metric")) {
    QMatrix g = detail::rational_matrix(doc, j["metric"], "/metric", n);
    out.metric = detail::located(doc, "/metric", [&] { return Metric(g); });
  }
  return out;
}

inline AlgebraFile parse_algebra(const std::string& text, const std::string& source) {
  return parse_algebra(Document(text, source));
}

inline AlgebraFile load_algebra(const std::string& path) { return parse_algebra(read_file(path), path); }

inline json rational_json(const Rational& r) { return r.str(); }

inline json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

inline json algebra_json(const LieAlgebra& alg, const std::optional<Metric>& metric = std::nullopt) {
  json j;
  j["name"] = alg.name();
  j["dim"] = alg.dim();
  j["brackets"] = json::array();
  for (const auto& e : alg.entries()) {
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back({{"k", t.k}, {"c", rational_json(t.c)}});
    j["brackets"].push_back({{"i", e.i}, {"j", e.j}, {"terms", terms}});
  }
  if (metric && !metric->is_identity()) j["metric"] = matrix_json(metric->gram());
  return j;
}

// ---------------------------------------------------------------------------
// forms

inline json form_json(const TwoForm& f) {
  json entries = json::array();
  for (std::size_t a = 0; a < f.dim(); ++a)
    for (std::size_t b = a + 1; b < f.dim(); ++b)
      if (!f(a, b).is_zero()) entries.push_back({{"i", a + 1}, {"j", b + 1}, {"c", rational_json(f(a, b))}});
  return {{"dim", f.dim()}, {"entries", entries}};
}

inline TwoForm parse_form(const Document& doc, const json& j, const std::string& at = "") {
  detail::require_object(doc, j, at, {"dim", "entries"}, {"dim", "entries"});
  const std::size_t n = detail::positive_index(doc, j["dim"], at + "/dim");
  if (!j["entries"].is_array()) doc.fail(at + "/entries", "expected an array");
  QMatrix m(n, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < j["entries"].size(); ++e) {
    const std::string ep = at + "/entries/" + std::to_string(e);
    const json& x = j["entries"][e];
    detail::require_object(doc, x, ep, {"i", "j", "c"}, {"i", "j", "c"});
    std::size_t i = detail::positive_index(doc, x["i"], ep + "/i");
    std::size_t k = detail::positive_index(doc, x["j"], ep + "/j");
    if (i >= k || k > n) doc.fail(ep, "entries need 1 <= i < j <= dim", Errc::BadIndex);
    if (!seen.emplace(i, k).second) doc.fail(ep, "entry listed twice", Errc::BadIndex);
    Rational c = detail::rational(doc, x["c"], ep + "/c");
    m(i - 1, k - 1) = c;
    m(k - 1, i - 1) = -c;
  }
  return TwoForm(std::move(m));
}

inline TwoForm parse_form(const std::string& text, const std::string& source) {
  Document doc(text, source);
  return parse_form(doc, doc.root());
}

// ---------------------------------------------------------------------------
// graphs

inline DirectedGraph parse_graph(const Document& doc) {
  const json& j = doc.root();
  detail::require_object(doc, j, "", {"vertices", "edges"}, {"vertices", "edges"});
  const std::size_t m = detail::positive_index(doc, j["vertices"], "/vertices");
  if (!j["edges"].is_array()) doc.fail("/edges", "expected an array");
  std::vector<DirectedGraph::Edge> edges;
  for (std::size_t e = 0; e < j["edges"].size(); ++e) {
    const std::string ep = "/edges/" + std::to_string(e);
    const json& x = j["edges"][e];
    if (!x.is_array() || x.size() != 2) doc.fail(ep, "expected a pair [i, l]");
    edges.emplace_back(detail::positive_index(doc, x[0], ep + "/0"), detail::positive_index(doc, x[1], ep + "/1"));
    detail::located(doc, ep, [&] {
      if (edges.back().first > m || edges.back().second > m)
        throw Error(Errc::BadIndex, "edge endpoint exceeds the vertex count");
      if (edges.back().first == edges.back().second) throw Error(Errc::SelfLoop, "self-loop");
      return 0;
    });
  }
  return detail::located(doc, "/edges", [&] { return DirectedGraph(m, edges); });
}

inline DirectedGraph parse_graph(const std::string& text, const std::string& source) {
  return parse_graph(Document(text, source));
}

inline json graph_json(const DirectedGraph& g) {
  json edges = json::array();
  for (const auto& [i, l] : g.edges()) edges.push_back({i, l});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

// ---------------------------------------------------------------------------
// verdicts and reports

inline json verdict_json(const Verdict& v) {
  json j;
  j["answer"] = std::string(answer_name(v.answer));
  if (v.witness) j["witness"] = form_json(*v.witness);
  if (v.certificate) {
    json c{{"kind", std::string(certificate_name(v.certificate->kind))}};
    if (v.certificate->kind == CertificateKind::CommonRadical) c["vector"] = vector_json(v.certificate->radical);
    j["certificate"] = c;
  }
  j["method"] = v.method;
  return j;
}

inline json report_json(const catalog::Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"entry", c.entry}, {"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"checks", checks}, {"errata", r.errata}, {"failures", r.failures()}, {"total", r.checks.size()}};
}

// ---------------------------------------------------------------------------
// human-readable formatting

/// Linear combination of basis symbols, e.g. "e3 - 1/2 e5".
inline std::string combination(const std::vector<std::pair<std::string, Rational>>& terms) {
  std::string out;
  for (const auto& [sym, c] : terms) {
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (mag != Rational(1)) out += mag.str() + " ";
    out += sym;
  }
  return out.empty() ? "0" : out;
}

inline std::string vector_string(const Vector& v) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (std::size_t i = 0; i < v.size(); ++i) terms.emplace_back("e" + std::to_string(i + 1), v[i]);
  return combination(terms);
}

/// Form in e^{ij} notation, e.g. "e^{16} + 2 e^{25} + e^{34}".
inline std::string form_string(const TwoForm& f) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (std::size_t a = 0; a < f.dim(); ++a)
    for (std::size_t b = a + 1; b < f.dim(); ++b) {
      std::string label = f.dim() > 9 ? std::to_string(a + 1) + "," + std::to_string(b + 1)
                                      : std::to_string(a + 1) + std::to_string(b + 1);
      terms.emplace_back("e^{" + label + "}", f(a, b));
    }
  return combination(terms);
}

}  // namespace nilsym::io
