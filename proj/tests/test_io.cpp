#include <gtest/gtest.h>

#include "nilsym/catalog.hpp"
#include "nilsym/io.hpp"

using namespace nilsym;
using io::json;

namespace {

Error parse_error(const std::string& text) {
  try {
    io::parse_algebra(text, "in.json");
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return Error(Errc::Parse, "none");
}

bool same_algebra(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.bracket(i, j) != b.bracket(i, j)) return false;
  return true;
}

}  // namespace

TEST(AlgebraFile, LoadsSampleFiles) {
  io::AlgebraFile h = io::load_algebra("data/h1.json");
  EXPECT_EQ(h.algebra.name(), "h1");
  EXPECT_TRUE(same_algebra(h.algebra, catalog::get("h1").algebra));
  EXPECT_FALSE(h.metric);
  io::AlgebraFile f = io::load_algebra("data/f6_skewed_metric.json");
  ASSERT_TRUE(f.metric);
  EXPECT_EQ(f.metric->gram()(3, 4), Rational(1, 2));
}

TEST(AlgebraFile, CatalogRoundTrip) {
  for (const auto& e : catalog::regression_entries()) {
    std::string text = io::algebra_json(e.algebra, e.metric).dump(2);
    io::AlgebraFile back = io::parse_algebra(text, e.name);
    EXPECT_TRUE(same_algebra(back.algebra, e.algebra)) << e.name;
    EXPECT_EQ(back.algebra.name(), e.name);
    EXPECT_EQ(io::algebra_json(back.algebra, back.metric), io::algebra_json(e.algebra, e.metric)) << e.name;
  }
  Metric g = random_metric(6, 3);
  std::string text = io::algebra_json(catalog::get("f6").algebra, g).dump();
  EXPECT_EQ(io::parse_algebra(text, "x").metric->gram(), g.gram());
}

TEST(AlgebraFile, UnknownKeyReportsLine) {
  try {
    io::load_algebra("data/malformed.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Parse);
    std::string what = e.what();
    EXPECT_NE(what.find("data/malformed.json:6:"), std::string::npos) << what;
    EXPECT_NE(what.find("trems"), std::string::npos) << what;
  }
}

TEST(AlgebraFile, SyntaxErrorReportsLineAndColumn) {
  Error e = parse_error("{\n  \"dim\": 3,\n  \"brackets\": [,]\n}");
  EXPECT_EQ(e.code(), Errc::Parse);
  EXPECT_NE(std::string(e.what()).find("in.json:3:"), std::string::npos) << e.what();
}

TEST(AlgebraFile, MalformedRationals) {
  for (const char* c : {"\"1/0\"", "\"x\"", "\"1/-2\"", "1.5", "\"\"", "\"3/\"", "true"}) {
    std::string text = std::string("{\"dim\": 3, \"brackets\": [{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": ") +
                       c + "}]}]}";
    Error e = parse_error(text);
    EXPECT_EQ(e.code(), Errc::Parse) << c;
  }
  io::AlgebraFile ok = io::parse_algebra(
      "{\"dim\": 3, \"brackets\": [{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": \"-3/6\"}]}]}", "x");
  EXPECT_EQ(ok.algebra.bracket(0, 1)[2], Rational(-1, 2));
}

TEST(AlgebraFile, StructuralErrorsKeepTheirCodes) {
  EXPECT_EQ(parse_error("{\"brackets\": []}").code(), Errc::Parse);
  EXPECT_EQ(parse_error("{\"dim\": 0}").code(), Errc::BadIndex);
  EXPECT_EQ(parse_error("{\"dim\": 3, \"brackets\": [{\"i\": 1, \"j\": 4, \"terms\": [{\"k\": 3, \"c\": 1}]}]}").code(),
            Errc::BadIndex);
  EXPECT_EQ(parse_error("{\"dim\": 3, \"brackets\": [{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": 1}]},"
                        "{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": 2}]}]}")
                .code(),
            Errc::DuplicateBracket);
  EXPECT_EQ(parse_error("{\"dim\": 3, \"brackets\": [{\"i\": 2, \"j\": 1, \"terms\": [{\"k\": 3, \"c\": 1}]}]}").code(),
            Errc::BadIndex);
  // [e1,e2] = e3, [e1,e3] = e4 is 3-step
  EXPECT_EQ(parse_error("{\"dim\": 4, \"brackets\": [{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": 1}]},"
                        "{\"i\": 1, \"j\": 3, \"terms\": [{\"k\": 4, \"c\": 1}]}]}")
                .code(),
            Errc::NotTwoStep);
  EXPECT_EQ(parse_error("{\"dim\": 2, \"metric\": [[1, 0], [0, 0]]}").code(), Errc::DegenerateMetric);
  EXPECT_EQ(parse_error("{\"dim\": 2, \"metric\": [[1, 0]]}").code(), Errc::DimensionMismatch);
  EXPECT_EQ(parse_error("[1, 2]").code(), Errc::Parse);
}

TEST(FormFile, RoundTripAndErrors) {
  TwoForm w = *catalog::get("f6").witness;
  json j = io::form_json(w);
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["entries"].size(), 3u);
  EXPECT_EQ(io::parse_form(j.dump(), "w"), w);
  auto code = [](const std::string& text) {
    try {
      io::parse_form(text, "w");
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::UnknownName;  // sentinel
  };
  EXPECT_EQ(code("{\"dim\": 3, \"entries\": [{\"i\": 2, \"j\": 1, \"c\": 1}]}"), Errc::BadIndex);
  EXPECT_EQ(code("{\"dim\": 3, \"entries\": [{\"i\": 1, \"j\": 4, \"c\": 1}]}"), Errc::BadIndex);
  EXPECT_EQ(code("{\"dim\": 3, \"entries\": [{\"i\": 1, \"j\": 2, \"c\": 1}, {\"i\": 1, \"j\": 2, \"c\": 2}]}"),
            Errc::BadIndex);
  EXPECT_EQ(code("{\"dim\": 3}"), Errc::Parse);
}

TEST(GraphFile, ParseAndErrors) {
  DirectedGraph g = io::parse_graph(io::read_file("data/k4_graph.json"), "k4");
  EXPECT_EQ(g.vertices(), 4u);
  EXPECT_EQ(g.edges(), complete_graph(4).edges());
  EXPECT_EQ(io::parse_graph(io::graph_json(g).dump(), "x").edges(), g.edges());
  auto code = [](const std::string& text) {
    try {
      io::parse_graph(text, "g");
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::UnknownName;
  };
  EXPECT_EQ(code("{\"vertices\": 3, \"edges\": []}"), Errc::NoEdges);
  EXPECT_EQ(code("{\"vertices\": 3, \"edges\": [[1, 1]]}"), Errc::SelfLoop);
  EXPECT_EQ(code("{\"vertices\": 3, \"edges\": [[1, 4]]}"), Errc::BadIndex);
  EXPECT_EQ(code("{\"vertices\": 3, \"edges\": [[1, 2], [2, 1]]}"), Errc::DuplicateEdge);
  EXPECT_EQ(code("{\"vertices\": 3, \"edges\": [[1, 2, 3]]}"), Errc::Parse);
}

TEST(MissingFile, IsAParseError) {
  try {
    io::load_algebra("data/does_not_exist.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Parse);
  }
}

TEST(Json, VerdictShape) {
  Verdict v = symplectic_exists(catalog::get("h2+R").algebra);
  json j = io::verdict_json(v);
  EXPECT_EQ(j["answer"], "no");
  EXPECT_EQ(j["certificate"]["kind"], "common_radical");
  EXPECT_EQ(j["certificate"]["vector"], json({"0", "0", "0", "0", "1", "0"}));
  EXPECT_TRUE(j["method"].is_array());
  json y = io::verdict_json(symplectic_exists(catalog::get("f6").algebra));
  EXPECT_EQ(y["answer"], "yes");
  EXPECT_TRUE(y.contains("witness"));
  EXPECT_FALSE(y.contains("certificate"));
}

TEST(Format, Strings) {
  EXPECT_EQ(io::vector_string({0, 0, 1, 0, Rational(-1, 2)}), "e3 - 1/2 e5");
  EXPECT_EQ(io::vector_string({0, 0}), "0");
  EXPECT_EQ(io::vector_string({-1, 2}), "-e1 + 2 e2");
  EXPECT_EQ(io::form_string(*catalog::get("f6").witness), "e^{16} + 2 e^{25} + e^{34}");
  EXPECT_EQ(io::form_string(TwoForm::elementary(10, 0, 9, -3)), "-3 e^{1,10}");
  EXPECT_EQ(io::form_string(TwoForm::zero(4)), "0");
}
