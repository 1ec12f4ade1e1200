#include <gmprod/constructions.hpp>
#include <gmprod/dsl.hpp>
#include <gmprod/graph_io.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>

namespace gmprod
{
namespace
{

using dsl::Expr;

auto error_position(const std::string &src) -> std::pair<std::size_t, std::size_t>
{
  try {
    dsl::parse(src);
  }
  catch (const dsl::ParseError &e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

TEST(Parse, NamedProduct)
{
  auto e = dsl::parse("cartesian(K(4),K(4))");
  EXPECT_EQ(e.kind, Expr::Kind::product);
  EXPECT_EQ(e.type, named_type("cartesian"));
  ASSERT_EQ(e.children.size(), 2u);
  EXPECT_EQ(e.children[0].kind, Expr::Kind::complete);
  EXPECT_EQ(e.children[0].numbers, (std::vector<std::size_t>{4}));
}

TEST(Parse, TypeCodeProduct)
{
  auto e = dsl::parse("prod([000;110;000], Sh, K(2))");
  EXPECT_EQ(e.kind, Expr::Kind::product);
  EXPECT_EQ(e.type, named_type("extended_bipartite_double_kind"));
  EXPECT_EQ(e.children[0].kind, Expr::Kind::shrikhande);
  // K2 * Sh for this type; with Sh as the major coordinate, ebd(Sh) is a relabelling of it
  auto k2_first = dsl::eval("prod([000;110;000], K(2), Sh)");
  EXPECT_EQ(relabel(k2_first, factor_swap_permutation(2, 16)), dsl::eval("ebd(Sh)"));
}

TEST(Parse, NonSimpleTypeIsRejected)
{
  try {
    dsl::parse("prod([100;000;000], K(2), K(2))");
    FAIL();
  }
  catch (const dsl::ParseError &e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
    EXPECT_NE(std::string(e.what()).find("s00"), std::string::npos);
  }
}

TEST(Parse, ErrorPositions)
{
  EXPECT_EQ(error_position("K(4"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(error_position("cartesian(K(4))"), (std::pair<std::size_t, std::size_t>{1, 15}));
  EXPECT_EQ(error_position("K(1,2)"), (std::pair<std::size_t, std::size_t>{1, 4}));
  EXPECT_EQ(error_position("foo(K(2))"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(error_position("strong(K(2),\n  Sh(1))"), (std::pair<std::size_t, std::size_t>{2, 5}));
  EXPECT_EQ(error_position("prod([01;100;000],K(2),K(2))"), (std::pair<std::size_t, std::size_t>{1, 9}));
  EXPECT_EQ(error_position("H(2,4) x"), (std::pair<std::size_t, std::size_t>{1, 8}));
  EXPECT_EQ(error_position("sw(H(2,4), lift(diag, 0))"), (std::pair<std::size_t, std::size_t>{1, 12}));
  EXPECT_EQ(error_position("sw(H(2,4), nowhere)"), (std::pair<std::size_t, std::size_t>{1, 12}));
  EXPECT_EQ(error_position("file(\"x)"), (std::pair<std::size_t, std::size_t>{1, 6}));
  EXPECT_EQ(error_position(""), (std::pair<std::size_t, std::size_t>{1, 1}));
}

TEST(Print, CanonicalForms)
{
  EXPECT_EQ(dsl::print(dsl::parse("cartesian( K(4) , K(4) )")), "prod([010;100;000],K(4),K(4))");
  EXPECT_EQ(dsl::print(dsl::parse("sw(H(4,4), lift(diag, 16))")), "sw(H(4,4),lift(diag,16))");
  EXPECT_EQ(dsl::print(dsl::parse("sw(Sh, file(\"a \\\"b\\\".partition\"))")),
            "sw(Sh,file(\"a \\\"b\\\".partition\"))");
}

TEST(Print, RoundTrip)
{
  for (auto src : {"K(1)", "H(3,4)", "Sh", "Doob(1,2)", "file(\"g.graph\")", "lex(Sh,K(3))",
                   "complement(bd(ebd(K(3))))", "weakmod(orprod(K(2),K(3)),modular(K(2),K(2)))",
                   "sw(sw(H(3,4),lift(diag,4)),lift(lift(file(\"p\"),2),2))"}) {
    auto e = dsl::parse(src);
    EXPECT_EQ(dsl::parse(dsl::print(e)), e) << src;
    EXPECT_EQ(dsl::print(dsl::parse(dsl::print(e))), dsl::print(e)) << src;
  }
}

TEST(Eval, Examples)
{
  EXPECT_EQ(dsl::eval("H(2,4)"), hamming(2, 4));
  EXPECT_EQ(dsl::eval("sw(H(2,4), diag)"), shrikhande());
  EXPECT_EQ(dsl::eval("cartesian(Sh, K(4))"), doob(1, 1));
  EXPECT_EQ(dsl::eval("Doob(1,1)"), doob(1, 1));
  EXPECT_EQ(dsl::eval("complement(K(3))"), empty_graph(3));
  EXPECT_EQ(dsl::eval("bd(K(2))"), bipartite_double(complete_graph(2)));
  EXPECT_EQ(dsl::eval("sw(H(3,4), lift(diag, 4))"), doob(1, 1));
  EXPECT_EQ(dsl::eval("sw(sw(H(2,4), diag), diag)"), hamming(2, 4));
}

TEST(Eval, DiagNeedsSixteenVertices)
{
  EXPECT_THROW(dsl::eval("sw(K(4), diag)"), dsl::EvalError);
  EXPECT_THROW(dsl::eval("sw(H(3,4), lift(diag, 3))"), dsl::EvalError);
  // 16 vertices, but (0,1) sees one diagonal vertex: refused by the switch itself
  EXPECT_THROW(dsl::eval("sw(cartesian(K(4), complement(K(4))), diag)"), GMViolation);
}

TEST(Eval, FilesRelativeToBaseDirectory)
{
  auto dir = std::filesystem::temp_directory_path() / "gmprod-test-dsl";
  std::filesystem::create_directories(dir);
  save_graph((dir / "h.graph").string(), hamming(2, 4));
  save_partition((dir / "d.partition").string(), diagonal_gm_partition_h24());
  EXPECT_EQ(dsl::eval("sw(file(\"h.graph\"), file(\"d.partition\"))", dir), shrikhande());
  EXPECT_THROW(dsl::eval("file(\"missing.graph\")", dir), Error);
  std::filesystem::remove_all(dir);
}

TEST(Eval, Deterministic)
{
  auto a = to_text(dsl::eval("ebd(sw(H(2,4),diag))"));
  auto b = to_text(dsl::eval("ebd(sw(H(2,4),diag))"));
  EXPECT_EQ(a, b);
}

} // namespace
} // namespace gmprod
