#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "robinson/copoints.hpp"
#include "robinson/generate.hpp"
#include "robinson/io.hpp"

using namespace robinson;
using namespace fixtures;

namespace {

Error errorOf(const std::string& text) {
  try {
    parseMatrix(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error raised";
  return Error(Errc::ParseError, "");
}

}  // namespace

TEST(ParseMatrix, SquareAndTriangularAgree) {
  const auto a = parseMatrix("0 1 2\n1 0 1\n2 1 0\n");
  const auto b = parseMatrix("# comment\n0, 1, 2\n0 1\n\n0\n");
  EXPECT_EQ(a, flat3());
  EXPECT_EQ(b, flat3());
}

TEST(ParseMatrix, DecimalsShareOneScale) {
  const auto m = parseMatrix("0 1.25 2\n1.25 0 1.5\n2 1.5 0\n");
  EXPECT_EQ(m.scale(), 2);
  EXPECT_EQ(m(0, 1), W(125));
  EXPECT_EQ(m(0, 2), W(200));
  EXPECT_EQ(m(1, 2), W(150));
  EXPECT_EQ(errorOf("0 1.5\n1.25 0\n").code(), Errc::AsymmetricInput);
}

TEST(ParseMatrix, ReportsPositions) {
  const auto bad = errorOf("0 1\n1 x\n");
  EXPECT_EQ(bad.code(), Errc::ParseError);
  EXPECT_EQ(bad.witness(), (std::vector<int>{2, 3}));
  EXPECT_NE(std::string(bad.what()).find("line 2, column 3"), std::string::npos);
  EXPECT_EQ(errorOf("0 -1\n-1 0\n").code(), Errc::NegativeWeight);
  EXPECT_EQ(errorOf("0 1 2\n1 0\n").code(), Errc::ParseError);
  EXPECT_EQ(errorOf("# nothing\n").code(), Errc::EmptyMatrix);
  EXPECT_EQ(errorOf("1 1\n1 0\n").code(), Errc::NonzeroDiagonal);
  EXPECT_EQ(errorOf("0 99999999999999999999\n99999999999999999999 0\n").code(), Errc::ParseError);
}

TEST(ParseMatrix, FormatRoundtrip) {
  const auto m = generateRobinson(9, 3, Profile::Generic);
  EXPECT_EQ(parseMatrix(formatMatrix(m)), m);
  const auto d = parseMatrix("0 0.05\n0.05 0\n");
  EXPECT_EQ(parseMatrix(formatMatrix(d)), d);
}

TEST(Weights, FormatAndParse) {
  EXPECT_EQ(formatWeight(W(150), 2), "1.50");
  EXPECT_EQ(formatWeight(W(5), 2), "0.05");
  EXPECT_EQ(formatWeight(W(7), 0), "7");
  EXPECT_EQ(parseWeight("1.5", 2), W(150));
  EXPECT_THROW(parseWeight("1.555", 2), Error);
  EXPECT_THROW(parseWeight("1.2.3", 3), Error);
}

TEST(Json, PqRoundtrip) {
  const auto text = pqTreeToJson(example12Pq());
  EXPECT_EQ(treeDocumentKind(text), "pq");
  EXPECT_EQ(pqTreeFromJson(text), example12Pq());
}

TEST(Json, MModuleRoundtrip) {
  const auto text = mmoduleTreeToJson(example12Mm(), 0);
  EXPECT_EQ(treeDocumentKind(text), "mmodule");
  EXPECT_TRUE(sameMModuleTree(mmoduleTreeFromJson(text, 0), example12Mm()));
  const auto scaled = mmoduleTreeToJson(SCap({Cap({ML(1), ML(3)}), ML(2)}, 150, 0), 2);
  EXPECT_NE(scaled.find("\"1.50\""), std::string::npos);
  EXPECT_EQ(*mmoduleTreeFromJson(scaled, 2).special, W(150));
}

TEST(Json, DendrogramRoundtrip) {
  const auto m = example12();
  const auto d = buildDendrogram(m, m.all());
  const auto back = dendrogramFromJson(dendrogramToJson(d, 0), 0);
  for (int x = 0; x < 12; ++x)
    for (int y = x + 1; y < 12; ++y) EXPECT_EQ(subdominantDistance(back, x, y), subdominantDistance(d, x, y));
}

TEST(Json, RejectsMalformedDocuments) {
  EXPECT_THROW(pqTreeFromJson("{"), Error);
  EXPECT_THROW(pqTreeFromJson(mmoduleTreeToJson(example12Mm(), 0)), Error);
  EXPECT_THROW(pqTreeFromJson(R"({"kind":"pq","root":{"type":"leaf","point":0}})"), Error);
  EXPECT_THROW(pqTreeFromJson(R"({"kind":"pq","root":{"type":"P","children":[{"type":"leaf","point":1}]}})"),
               Error);
}

TEST(Ascii, Forms) {
  EXPECT_EQ(pqTreeToAscii(Q({L(1), P({L(2), L(3)}), L(4)})), "Q[1 P(2 3) 4]\n");
  EXPECT_EQ(pqTreeToAscii(Q({P({L(2), L(3)}), L(1), L(4)})), "Q[ P(2 3) 1 4 ]\n");
  EXPECT_EQ(mmoduleTreeToAscii(SCap({Cap({ML(1), ML(3)}), ML(2)}, 1, 0), 0), "cap<1>( *cap(1 3) 2 )\n");
  const auto d = buildDendrogram(flat3(), {0, 1, 2});
  EXPECT_EQ(dendrogramToAscii(d, 0), "@1(1 2 3)\n");
}

TEST(Dot, ContainsNodesAndEdges) {
  const auto dot = pqTreeToDot(Q({L(1), P({L(2), L(3)})}));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("->"), std::string::npos);
  EXPECT_NE(mmoduleTreeToDot(example12Mm(), 0).find("digraph"), std::string::npos);
}
