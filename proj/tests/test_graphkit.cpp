#include "atlas/error.hpp"
#include "atlas/families.hpp"
#include "atlas/graphkit.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

// Path with `vertices` vertices, star at one end.
BipartiteGraph path(std::size_t vertices) {
  std::string text = "format graph/1\n";
  for (std::size_t i = 0; i < vertices; ++i)
    text += std::string(i % 2 == 0 ? "even" : "odd") + " p" + std::to_string(i) + " -" + (i == 0 ? " *" : "") + "\n";
  for (std::size_t i = 0; i + 1 < vertices; ++i)
    text += "edge p" + std::to_string(i) + " p" + std::to_string(i + 1) + "\n";
  // Dims absent and no index: build directly without PF data.
  BipartiteGraph g;
  for (std::size_t i = 0; i < vertices; i += 2) g.even.push_back({"p" + std::to_string(i), std::nullopt});
  for (std::size_t i = 1; i < vertices; i += 2) g.odd.push_back({"p" + std::to_string(i), std::nullopt});
  g.adjacency.assign(g.even.size(), std::vector<std::uint32_t>(g.odd.size(), 0));
  for (std::size_t i = 0; i + 1 < vertices; ++i) {
    const std::size_t e = (i % 2 == 0 ? i : i + 1) / 2, o = (i % 2 == 0 ? i + 1 : i) / 2;
    g.adjacency[e][o] = 1;
  }
  return g;
}

bool same(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.even.size() != b.even.size() || a.odd.size() != b.odd.size() || a.star != b.star) return false;
  for (std::size_t i = 0; i < a.even.size(); ++i)
    if (a.even[i].label != b.even[i].label || a.even[i].dim != b.even[i].dim) return false;
  for (std::size_t i = 0; i < a.odd.size(); ++i)
    if (a.odd[i].label != b.odd[i].label || a.odd[i].dim != b.odd[i].dim) return false;
  return a.adjacency == b.adjacency;
}

}  // namespace

TEST_CASE("surds") {
  CHECK(Surd::sqrt(Rational(12)).to_string() == "2*sqrt(3)");
  CHECK(Surd::sqrt(Rational(9)).to_string() == "3");
  CHECK(Surd::sqrt(Rational(1, 2)).to_string() == "1/2*sqrt(2)");
  CHECK(Surd::parse("3*sqrt(11)") == Surd(Rational(3), 11));
  CHECK(Surd::parse("sqrt(8)") == Surd(Rational(2), 2));
  CHECK(Surd::parse("5/2") == Surd(Rational(5, 2)));
  CHECK((Surd::sqrt(Rational(2)) * Surd::sqrt(Rational(2))) == Surd::integer(2));
  CHECK(Surd::integer(2) < Surd::sqrt(Rational(5)));
  CHECK_THROWS_AS(Surd::parse("abc"), Error);
}

TEST_CASE("family PF identity") {
  const std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> cases = {
      {{1, 1, 1}, 1}, {{1, 1, 1, 1, 2}, 1}, {{1, 1, 1}, 2}, {{1, 2}, 3}, {{1, 4, 3}, 2}};
  for (const auto& [m, n] : cases) {
    auto g = gbmn(m, n);
    std::int64_t msum = 0;
    for (auto x : m) msum += x * x;
    auto report = pf_check(g, Rational(1 + msum * n));
    CHECK(report.even_exact);
    CHECK(report.odd_exact);
    CHECK(report.numeric_ok);
  }
  CHECK(pf_check(gbmn({1, 1, 1, 1, 2}, 1), Rational(9)).ok());
  CHECK_FALSE(pf_check(gbmn({1, 1, 1, 1, 2}, 1), Rational(10)).even_exact);
  CHECK_THROWS_AS(gbmn({2, 1}, 1), Error);
}

TEST_CASE("star graphs") {
  for (std::uint32_t n = 1; n <= 5; ++n) CHECK(pf_check(star_graph(n), Rational(n)).ok());
  CHECK(graphs_isomorphic(star_graph(2), path(3)).has_value());
  std::string body = emit(star_graph(2), GraphFormat::Dot);
  std::size_t lines = 0;
  for (char c : body) lines += c == '\n';
  CHECK(lines == 5);  // header, 3 body lines, closing brace
}

TEST_CASE("tilde") {
  CHECK(graphs_isomorphic(tilde(gbmn({1}, 1)), path(5)).has_value());
  CHECK(graphs_isomorphic(tilde(gbmn({1}, 2)), gbmn({1, 1, 1}, 1)).has_value());
  auto t = tilde(gbmn({1, 1, 1}, 1));
  CHECK(*t.index == Rational(5));
  CHECK(pf_check(t, Rational(5)).ok());
}

TEST_CASE("principal graphs of Frobenius groups") {
  auto f21 = affine_frobenius(7, 1, {{{2}}});
  auto g = principal_graph(f21);
  CHECK(graphs_isomorphic(g, gbmn({1, 1, 1}, 2)).has_value());
  CHECK(graphs_isomorphic(dual_principal_graph(f21, stabilizer(f21, 0)), gbmn({1, 1, 1}, 2)).has_value());
  auto s9 = principal_graph(sq(9));
  CHECK(graphs_isomorphic(s9, gbmn({1, 1, 1, 1, 2}, 1)).has_value());
  CHECK(pf_check(s9, Rational(9)).ok());
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
    auto h = hq(q);
    CHECK(graphs_isomorphic(principal_graph(h), dual_principal_graph(h, stabilizer(h, 0))).has_value());
  }
}

TEST_CASE("principal graph identities") {
  for (const auto& g : {symmetric(5), alternating(6), pgl2(5), psl2(7), mq(9)}) {
    auto pg = principal_graph(g);
    CHECK(pf_check(pg, Rational(static_cast<std::int64_t>(g.degree()))).ok());
    auto chain = stabilizer_chain(g, {0, 1});
    CHECK(graphs_isomorphic(pg, tilde(dual_principal_graph(chain[0], chain[1]))).has_value());
  }
}

TEST_CASE("non-isomorphic graphs") {
  CHECK_FALSE(graphs_isomorphic(gbmn({1, 1}, 1), gbmn({1, 1, 1}, 1)).has_value());
  CHECK_FALSE(graphs_isomorphic(path(5), star_graph(2)).has_value());
  // Same shape, star moved to a different end-type vertex.
  BipartiteGraph a = gbmn({1, 2}, 1), b = a;
  b.star = 1;
  b.even[0].dim.reset();
  b.even[1].dim.reset();
  for (auto& v : b.even) v.dim.reset();
  for (auto& v : b.odd) v.dim.reset();
  CHECK_FALSE(graphs_isomorphic(a, b).has_value());
}

TEST_CASE("emitters") {
  auto g = gbmn({1, 1, 1, 1, 2}, 1);
  auto back = parse_graph_json(emit(g, GraphFormat::Json));
  CHECK(same(g, back));
  CHECK(emit(g, GraphFormat::Dot).find("label=\"2\"") != std::string::npos);
  CHECK(emit(g, GraphFormat::Text).find("v1_4: 6") != std::string::npos);
  CHECK(emit(g, GraphFormat::Dot) == emit(g, GraphFormat::Dot));
  CHECK_THROWS_AS(parse_graph_json("{}"), Error);
}

TEST_CASE("graph fixture parsing") {
  auto g = parse_graph_fixture(
      "format graph/1\nindex 3\neven a 1 *\neven b -\nodd c -\nedge a c\nedge b c\n"
      "even d -\nodd e -\nedge d e\nedge b e\n");
  CHECK(g.has_dims());
  CHECK(*g.even[1].dim == Surd::integer(2));
  CHECK_THROWS_AS(parse_graph_fixture("format graph/1\neven a 1\n"), Error);
  CHECK_THROWS_AS(parse_graph_fixture("format graph/1\nindex 3\neven a 2 *\nodd c -\nedge a c\n"), Error);
}
