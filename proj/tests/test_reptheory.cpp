#include <set>
#include <algorithm>

#include "atlas/error.hpp"
#include "atlas/families.hpp"
#include "atlas/reptheory.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

PermGroup quaternion8() {
  // Regular representation of Q8 on 8 points.
  return PermGroup(8, {Permutation::from_cycles(8, "(0 1 2 3)(4 5 6 7)"),
                       Permutation::from_cycles(8, "(0 4 2 6)(1 7 3 5)")});
}

std::vector<std::uint64_t> degrees(const PermGroup& g) { return GroupCharacters(g).table().degrees; }

PermGroup point_stabilizer_restricted(const PermGroup& g, Point x) {
  return restrict_to_complement(stabilizer(g, x), {x});
}

}  // namespace

TEST_CASE("modulus choice") {
  const auto p = choose_modulus(8, 4);
  CHECK(p > 16);
  CHECK((p - 1) % 4 == 0);
  CHECK(p == 17);
}

TEST_CASE("conjugacy classes") {
  auto q8 = quaternion8();
  REQUIRE(q8.order() == 8);
  ElementIndex idx(q8);
  auto cc = conjugacy_classes(q8, idx);
  CHECK(cc.sizes == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
  ElementIndex m11(mathieu(11));
  CHECK(conjugacy_classes(mathieu(11), m11).count() == 10);
  PermGroup trivial(3, {});
  ElementIndex ti(trivial);
  CHECK(conjugacy_classes(trivial, ti).count() == 1);
}

TEST_CASE("class sizes match brute-force conjugation") {
  auto s5 = symmetric(5);
  ElementIndex idx(s5);
  auto cc = conjugacy_classes(s5, idx);
  for (std::size_t c = 0; c < cc.count(); ++c) {
    std::set<Permutation> orbit;
    for (const auto& g : idx.elements()) orbit.insert(conjugate(cc.representatives[c], g));
    CHECK(orbit.size() == cc.sizes[c]);
    CHECK(*orbit.begin() == cc.representatives[c]);
  }
}

TEST_CASE("parallel structure constants equal the serial reference") {
  for (const auto& g : {symmetric(5), mathieu(11), psl2(7)}) {
    ElementIndex idx(g);
    auto cc = conjugacy_classes(g, idx);
    CHECK(class_structure_constants(idx, cc) == class_structure_constants_serial(idx, cc));
  }
}

TEST_CASE("character degrees") {
  CHECK(degrees(quaternion8()) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  CHECK(degrees(symmetric(3)) == std::vector<std::uint64_t>{1, 1, 2});
  CHECK(degrees(symmetric(4)) == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
  CHECK(degrees(alternating(5)) == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
  CHECK(degrees(point_stabilizer_restricted(mathieu(11), 10)) ==
        std::vector<std::uint64_t>{1, 1, 9, 9, 10, 10, 10, 16});
  CHECK(degrees(sq(9)) == std::vector<std::uint64_t>{1, 1, 1, 1, 2, 8});
  CHECK(degrees(PermGroup(3, {})) == std::vector<std::uint64_t>{1});
}

TEST_CASE("column orthogonality") {
  for (const auto& g : {symmetric(4), hq(8), psl2(7)}) {
    GroupCharacters gc(g);
    const auto& t = gc.table();
    const auto& cc = gc.classes();
    const std::uint64_t p = t.modulus;
    for (std::size_t a = 0; a < cc.count(); ++a)
      for (std::size_t b = 0; b < cc.count(); ++b) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < gc.irrep_count(); ++i)
          s = (s + modp::mul(t.values[i][a], t.values[i][cc.inverse_class[b]], p)) % p;
        const std::uint64_t expected = a == b ? (g.order() / cc.sizes[a]) % p : 0;
        CHECK(s == expected);
      }
  }
}

TEST_CASE("restriction matrices") {
  auto a5 = alternating(5);
  const std::uint64_t p = GroupCharacters(a5).modulus();
  GroupCharacters g(a5, p);
  GroupCharacters h(stabilizer(a5, 4), p);
  auto r = restriction_matrix(g, h);
  // Column of the trivial character of H: trivial plus the degree-4 character.
  std::vector<std::uint64_t> column;
  for (const auto& row : r.entries) column.push_back(row[0]);
  CHECK(column == std::vector<std::uint64_t>{1, 0, 0, 1, 0});
  // Induced degree: sum_chi <Res chi, psi> deg chi = [G:H] deg psi.
  for (std::size_t psi = 0; psi < h.irrep_count(); ++psi) {
    std::uint64_t s = 0;
    for (std::size_t chi = 0; chi < g.irrep_count(); ++chi) s += r.entries[chi][psi] * g.degree(chi);
    CHECK(s == 5 * h.degree(psi));
  }
  GroupCharacters same(a5, p);
  auto id = restriction_matrix(g, same);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(id.entries[i][j] == (i == j ? 1u : 0u));
}

TEST_CASE("duals") {
  GroupCharacters z3(PermGroup(3, {Permutation::from_cycles(3, "(0 1 2)")}));
  CHECK(z3.dual(0) == 0);
  CHECK(z3.dual(1) == 2);
  CHECK(z3.dual(2) == 1);
}

TEST_CASE("permutation character norm") {
  CHECK(permutation_character_norm(mathieu(11)) == 2);
  CHECK(permutation_character_norm(affine_frobenius(7, 1, {{{2}}})) == 3);
  CHECK(permutation_character_norm(PermGroup(5, {Permutation::from_cycles(5, "(0 1 2 3 4)")})) == 5);
}
