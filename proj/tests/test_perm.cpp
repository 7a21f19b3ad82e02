#include <algorithm>
#include <set>

#include "atlas/error.hpp"
#include "atlas/perm.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

Permutation cyc(std::size_t n, const char* text) { return Permutation::from_cycles(n, text); }

// Oracle: closure by repeated multiplication, independent of the stabilizer chain.
std::set<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Permutation h = s * g;
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<std::pair<std::size_t, std::vector<Permutation>>> sample_groups() {
  return {
      {5, {cyc(5, "(0 1)"), cyc(5, "(0 1 2 3 4)")}},
      {4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")}},
      {7, {cyc(7, "(0 1 2 3 4 5 6)"), cyc(7, "(1 2 4)(3 6 5)")}},
      {6, {cyc(6, "(0 1 2)"), cyc(6, "(3 4)"), cyc(6, "(0 3)(1 4)(2 5)")}},
      {8, {cyc(8, "(0 1 2 3 4 5 6 7)"), cyc(8, "(1 7)(2 6)(3 5)")}},
      {6, {cyc(6, "(0 1 2 3 4 5)"), cyc(6, "(0 1)")}},
      {3, {}},
  };
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation a = cyc(5, "(0 1 2)");
  Permutation b = cyc(5, "(1 3)");
  CHECK((a * b)(1) == a(b(1)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(a.to_cycles() == "(0 1 2)");
  CHECK(Permutation(4).to_cycles() == "()");
  CHECK(cyc(6, "(0 1)(2 3 4)").order() == 6);
  CHECK(cyc(6, "(0 1)(2 3 4)").cycle_type() == std::vector<std::size_t>{1, 2, 3});
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), Error);
  CHECK_THROWS_AS(cyc(3, "(0 1 5)"), Error);
  CHECK_THROWS_AS(cyc(3, "(0 1"), Error);
}

TEST_CASE("chain order matches closure oracle") {
  for (const auto& [n, gens] : sample_groups()) {
    PermGroup g(n, gens);
    auto oracle = closure(n, gens);
    CHECK(g.order() == oracle.size());
    auto elems = g.elements();
    CHECK(std::set<Permutation>(elems.begin(), elems.end()) == oracle);
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    for (const auto& s : gens) CHECK(g.contains(s));
    CHECK(g.contains(Permutation(n)));
  }
}

TEST_CASE("membership rejects non-members") {
  PermGroup klein(4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")});
  CHECK_FALSE(klein.contains(cyc(4, "(0 1)")));
  CHECK(klein.contains(cyc(4, "(0 3)(1 2)")));
}

TEST_CASE("orbit-stabilizer") {
  for (const auto& [n, gens] : sample_groups()) {
    PermGroup g(n, gens);
    for (Point x = 0; x < n; ++x)
      CHECK(orbit_of(g, x).size() * stabilizer(g, x).order() == g.order());
  }
}

TEST_CASE("orbits of a Frobenius complement") {
  PermGroup g(7, {cyc(7, "(0 1 2 3 4 5 6)"), cyc(7, "(1 2 4)(3 6 5)")});
  PermGroup h = stabilizer(g, 0);
  auto orb = orbits(h, {1, 2, 3, 4, 5, 6});
  REQUIRE(orb.size() == 2);
  CHECK(orb[0] == std::vector<Point>{1, 2, 4});
  CHECK(orb[1] == std::vector<Point>{3, 5, 6});
  CHECK(orbits(PermGroup(3, {})).size() == 3);
}

TEST_CASE("coset action") {
  PermGroup s4(4, {cyc(4, "(0 1)"), cyc(4, "(0 1 2 3)")});
  PermGroup z4(4, {cyc(4, "(0 1 2 3)")});
  PermGroup act = coset_action(s4, z4);
  CHECK(act.degree() == 6);
  CHECK(act.order() == 24);
  CHECK(is_transitive(act));
  CHECK(stabilizer(act, 0).order() == 4);
  CHECK(coset_action(s4, s4).degree() == 1);
  PermGroup d8(4, {cyc(4, "(0 1 2 3)"), cyc(4, "(1 3)")});
  PermGroup refl(4, {cyc(4, "(1 3)")});
  PermGroup d8act = coset_action(d8, refl);
  CHECK(d8act.degree() == 4);
  auto blocks = primitivity_blocks(d8act);
  REQUIRE(blocks.has_value());
  CHECK(blocks->front().size() == 2);
  CHECK_THROWS_AS(coset_action(z4, s4), Error);
}

TEST_CASE("coset action on a point stabilizer is conjugate to the original action") {
  for (const auto& [n, gens] : sample_groups()) {
    PermGroup g(n, gens);
    if (!is_transitive(g) || n > 12) continue;
    PermGroup act = coset_action(g, stabilizer(g, 0));
    CHECK(perm_conjugacy_iso(g, act).has_value());
  }
}

TEST_CASE("transitivity profile") {
  PermGroup s5(5, {cyc(5, "(0 1)"), cyc(5, "(0 1 2 3 4)")});
  auto p = transitivity_profile(s5);
  CHECK(p.k == 5);
  CHECK(p.full_symmetric);
  CHECK(p.conventional_k() == 4);
  PermGroup a4(4, {cyc(4, "(0 1 2)"), cyc(4, "(1 2 3)")});
  auto q = transitivity_profile(a4);
  CHECK(q.k == 2);
  CHECK(q.sharp);
  PermGroup z5(5, {cyc(5, "(0 1 2 3 4)")});
  CHECK(transitivity_profile(z5).k == 1);
  CHECK(transitivity_profile(PermGroup(3, {cyc(3, "(0 1)")})).k == 0);
}

TEST_CASE("2-transitive groups are primitive") {
  for (const auto& [n, gens] : sample_groups()) {
    PermGroup g(n, gens);
    if (!is_transitive(g)) continue;
    if (transitivity_profile(g).k >= 2) CHECK_FALSE(primitivity_blocks(g).has_value());
  }
}

TEST_CASE("Frobenius analysis") {
  PermGroup f21(7, {cyc(7, "(0 1 2 3 4 5 6)"), cyc(7, "(1 2 4)(3 6 5)")});
  auto r = frobenius_analysis(f21);
  REQUIRE(std::holds_alternative<FrobeniusStructure>(r));
  const auto& fs = std::get<FrobeniusStructure>(r);
  CHECK(fs.kernel.order() == 7);
  CHECK(fs.complement.order() == 3);
  CHECK(fs.kernel_elementary_abelian);
  CHECK(fs.kernel_prime == 7);
  CHECK(std::holds_alternative<RegularGroup>(frobenius_analysis(PermGroup(5, {cyc(5, "(0 1 2 3 4)")}))));
  PermGroup s5(5, {cyc(5, "(0 1)"), cyc(5, "(0 1 2 3 4)")});
  CHECK(std::holds_alternative<NotFrobenius>(frobenius_analysis(s5)));
}

TEST_CASE("double cosets") {
  PermGroup f21(7, {cyc(7, "(0 1 2 3 4 5 6)"), cyc(7, "(1 2 4)(3 6 5)")});
  PermGroup h = stabilizer(f21, 0);
  auto dc = double_cosets(f21, h, h);
  CHECK(dc.sizes == std::vector<std::uint64_t>{3, 9, 9});
  CHECK(dc.representatives.front().is_identity());
  auto whole = double_cosets(f21, f21, h);
  CHECK(whole.sizes == std::vector<std::uint64_t>{21});
}

TEST_CASE("stabilizer chain") {
  PermGroup s5(5, {cyc(5, "(0 1)"), cyc(5, "(0 1 2 3 4)")});
  auto chain = stabilizer_chain(s5, {0, 1, 2});
  REQUIRE(chain.size() == 3);
  CHECK(chain[0].order() == 24);
  CHECK(chain[1].order() == 6);
  CHECK(chain[2].order() == 2);
  CHECK_THROWS_AS(stabilizer_chain(s5, {0, 0}), Error);
}

TEST_CASE("conjugacy isomorphism") {
  PermGroup a4(4, {cyc(4, "(0 1 2)"), cyc(4, "(1 2 3)")});
  PermGroup a4b(4, {cyc(4, "(0 3 1)"), cyc(4, "(0 1)(2 3)")});
  auto pi = perm_conjugacy_iso(a4, a4b);
  REQUIRE(pi.has_value());
  for (const auto& g : a4.generators()) CHECK(a4b.contains(conjugate(g, *pi)));
  PermGroup z4(4, {cyc(4, "(0 1 2 3)")});
  PermGroup klein(4, {cyc(4, "(0 1)(2 3)"), cyc(4, "(0 2)(1 3)")});
  CHECK_FALSE(perm_conjugacy_iso(z4, klein).has_value());
}

TEST_CASE("restriction to complement") {
  PermGroup s5(5, {cyc(5, "(0 1)"), cyc(5, "(0 1 2 3 4)")});
  PermGroup r = restrict_to_complement(stabilizer(s5, 2), {2});
  CHECK(r.degree() == 4);
  CHECK(r.order() == 24);
}
