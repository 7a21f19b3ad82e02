#include <set>
#include "atlas/error.hpp"
#include "atlas/families.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

// Oracle: counts images of the first k points directly, independent of stabilizer chains.
bool sharply_transitive_by_tuples(const PermGroup& g, std::size_t k) {
  std::set<std::vector<Point>> images;
  for (const Permutation& e : g.elements()) {
    std::vector<Point> t;
    for (Point i = 0; i < k; ++i) t.push_back(e(i));
    if (!images.insert(t).second) return false;
  }
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= g.degree() - i;
  return images.size() == tuples;
}

}  // namespace

TEST_CASE("symmetric and alternating") {
  CHECK(symmetric(5).order() == 120);
  auto a6 = alternating(6);
  CHECK(a6.order() == 360);
  CHECK(transitivity_profile(a6).k == 4);
  CHECK(perm_conjugacy_iso(alternating(4), hq(4)).has_value());
  CHECK_THROWS_AS(symmetric(13), Error);
}

TEST_CASE("prime powers") {
  CHECK(prime_power(9) == std::pair<std::uint64_t, unsigned>{3, 2});
  CHECK(prime_power(7) == std::pair<std::uint64_t, unsigned>{7, 1});
  CHECK_THROWS_AS(prime_power(12), Error);
}

TEST_CASE("sharply 2-transitive families") {
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 16, 25}) {
    auto g = hq(q);
    CHECK(g.order() == q * (q - 1));
    CHECK(sharply_transitive_by_tuples(g, 2));
  }
  auto s9 = sq(9);
  CHECK(sharply_transitive_by_tuples(s9, 2));
  auto h = stabilizer(s9, 0);
  CHECK(h.order() == 8);
  int involutions = 0;
  bool abelian = true;
  auto elems = h.elements();
  for (const auto& a : elems) {
    if (a.order() == 2) ++involutions;
    for (const auto& b : elems)
      if (a * b != b * a) abelian = false;
  }
  CHECK(involutions == 1);
  CHECK_FALSE(abelian);
  CHECK_THROWS_AS(sq(27), Error);
  CHECK_THROWS_AS(sq(4), Error);
}

TEST_CASE("coincidences") {
  CHECK(perm_conjugacy_iso(hq(3), symmetric(3)).has_value());
  CHECK(perm_conjugacy_iso(pgl2(3), symmetric(4)).has_value());
  CHECK(perm_conjugacy_iso(pgl2(4), alternating(5)).has_value());
  CHECK_FALSE(perm_conjugacy_iso(pgl2(9), mq(9)).has_value());
}

TEST_CASE("sharply 3-transitive families") {
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) CHECK(sharply_transitive_by_tuples(pgl2(q), 3));
  auto m9 = mq(9);
  CHECK(sharply_transitive_by_tuples(m9, 3));
  auto st = restrict_to_complement(stabilizer(m9, 9), {9});
  CHECK(perm_conjugacy_iso(st, sq(9)).has_value());
}

TEST_CASE("PSL2") {
  auto g = psl2(7);
  CHECK(g.order() == 168);
  CHECK(g.degree() == 8);
  auto p = transitivity_profile(g);
  CHECK(p.k == 2);
  CHECK_FALSE(p.sharp);
  CHECK(stabilizer(g, 0).order() == 21);
  CHECK_THROWS_AS(psl2(8), Error);
}

TEST_CASE("semilinear group") {
  auto g = tq(9);
  CHECK(g.order() == 9 * 8 * 2);
  CHECK(stabilizer(g, 0).order() == 16);
  CHECK(tq(7).order() == 42);
}

TEST_CASE("affine constructions") {
  auto s9 = affine_frobenius(3, 2, quaternion_gl2_3(), true);
  CHECK(s9.order() == 72);
  CHECK(perm_conjugacy_iso(s9, sq(9)).has_value());
  auto h7 = affine_frobenius(7, 1, {{{3}}}, true);
  CHECK(perm_conjugacy_iso(h7, hq(7)).has_value());
  CHECK_THROWS_AS(affine_frobenius(3, 2, {{{1, 1}, {1, 1}}}), Error);
  CHECK_THROWS_AS(affine_frobenius(3, 2, {{{1, 1}, {0, 1}}}, true), Error);
}

TEST_CASE("Mathieu groups") {
  auto m11 = mathieu(11);
  CHECK(m11.order() == 7920);
  CHECK(sharply_transitive_by_tuples(m11, 4));
  auto chain = stabilizer_chain(m11, {0, 1, 2, 3});
  CHECK(chain[0].order() == 720);
  CHECK(chain[1].order() == 72);
  CHECK(chain[2].order() == 8);
  CHECK(chain[3].order() == 1);
  auto m12 = mathieu(12);
  CHECK(m12.order() == 95040);
  auto p = transitivity_profile(m12);
  CHECK(p.k == 5);
  CHECK(p.sharp);
}

TEST_CASE("group spec parsing") {
  CHECK(group_from_spec("sym:5").order() == 120);
  CHECK(group_from_spec("h:8").order() == 56);
  CHECK(group_from_spec("affine:p=3,k=2,gens=[[[0,1],[2,0]],[[1,1],[1,2]]]").order() == 72);
  CHECK(group_from_spec("perm:4:(0 1 2 3);(1 3)").order() == 8);
  CHECK_THROWS_AS(group_from_spec("sym:1x"), Error);
  CHECK_THROWS_AS(group_from_spec("foo:3"), Error);
  try {
    group_from_spec("sym:1x");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}
