#include <algorithm>
#include <numeric>
#include <set>

#include "atlas/error.hpp"
#include "atlas/families.hpp"
#include "atlas/fusion.hpp"
#include "atlas/reptheory.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace atlas;

namespace {

PermGroup quaternion8() {
  return PermGroup(8, {Permutation::from_cycles(8, "(0 1 2 3)(4 5 6 7)"),
                       Permutation::from_cycles(8, "(0 4 2 6)(1 7 3 5)")});
}

PermGroup affine_7_3() { return group_from_spec("affine:p=7,k=1,gens=[[[2]]]"); }

std::vector<std::size_t> with_tag(const FusionRing& ring, const std::string& tag) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < ring.size(); ++x)
    if (ring.block_tag(x) == tag) out.push_back(x);
  return out;
}

std::vector<std::size_t> orbit_objects(const FusionRing& ring, std::size_t orbit) {
  std::vector<std::size_t> out;
  const std::string prefix = "o" + std::to_string(orbit) + ".";
  for (std::size_t x = 0; x < ring.size(); ++x)
    if (ring.label(x).rfind(prefix, 0) == 0) out.push_back(x);
  return out;
}

// Backtracking search for a bijection between `subset` of `ring` and all of `other` preserving
// dimensions, duals and structure constants.
bool isomorphic_to(const FusionRing& ring, const std::vector<std::size_t>& subset, const FusionRing& other) {
  const std::size_t n = subset.size();
  if (n != other.size()) return false;
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  auto position = [&](std::size_t x) {
    return static_cast<std::size_t>(std::find(subset.begin(), subset.end(), x) - subset.begin());
  };
  auto consistent = [&](std::size_t k) {
    for (std::size_t a = 0; a <= k; ++a)
      for (std::size_t b = 0; b <= k; ++b)
        for (std::size_t c = 0; c <= k; ++c)
          if (ring.N(subset[a], subset[b], subset[c]) != other.N(image[a], image[b], image[c])) return false;
    const std::size_t dual = position(ring.dual(subset[k]));
    if (dual <= k && other.dual(image[k]) != image[dual]) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || !(ring.dim(subset[k]) == other.dim(y))) continue;
      image[k] = y;
      used[y] = true;
      if (consistent(k) && self(self, k + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return search(search, 0);
}

std::vector<std::size_t> all_of(const FusionRing& ring) {
  std::vector<std::size_t> out(ring.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

TEST_CASE("rep ring of S3") {
  const FusionRing ring = rep_ring(symmetric(3));
  REQUIRE(ring.size() == 3);
  CHECK(ring.dim(0) == Surd::integer(1));
  CHECK(ring.dim(1) == Surd::integer(1));
  CHECK(ring.dim(2) == Surd::integer(2));
  CHECK(ring.format(decompose_product(ring, {"chi.2", "chi.2"})) == "chi.0 + chi.1 + chi.2");
  CHECK(ring.format(decompose_product(ring, {"chi.1", "chi.2"})) == "chi.2");
  CHECK(ring.format(decompose_product(ring, {"chi.1", "chi.1"})) == "chi.0");
}

TEST_CASE("rep ring of Q8") {
  const FusionRing ring = rep_ring(quaternion8());
  REQUIRE(ring.size() == 5);
  CHECK(ring.format(decompose_product(ring, {"chi.4", "chi.4"})) == "chi.0 + chi.1 + chi.2 + chi.3");
  for (std::size_t x = 0; x < ring.size(); ++x) CHECK(ring.dual(x) == x);
  const auto subrings = find_subrings(ring);
  // Subgroups of the abelianization Z2 x Z2 give five subrings, plus the whole ring.
  CHECK(subrings.size() == 6);
}

TEST_CASE("rep ring of Z3 has nontrivial duals") {
  const FusionRing ring = rep_ring(PermGroup(3, {Permutation::from_cycles(3, "(0 1 2)")}));
  CHECK(ring.dual(1) == 2);
  CHECK(ring.format(decompose_product(ring, {"chi.1", "chi.2"})) == "chi.0");
}

TEST_CASE("hecke ring of M11") {
  const FusionRing ring = hecke_ring(mathieu(11));
  REQUIRE(ring.size() == 14);
  std::multiset<std::int64_t> dims;
  std::int64_t sum_squares = 0;
  for (std::size_t x = 0; x < ring.size(); ++x) {
    REQUIRE(ring.dim(x).is_rational());
    const auto d = ring.dim(x).coefficient().numerator();
    dims.insert(d);
    sum_squares += d * d;
  }
  CHECK(dims == std::multiset<std::int64_t>{1, 1, 9, 9, 10, 10, 10, 10, 10, 10, 10, 16, 20, 80});
  CHECK(sum_squares == 7920);
  CHECK(ring.check_axioms().ok());
}

TEST_CASE("serial and parallel kernels agree") {
  for (const char* spec : {"mathieu:11", "sym:5", "m:9"}) {
    CAPTURE(spec);
    const PermGroup group = group_from_spec(spec);
    const FusionRing parallel = hecke_ring(group, {true});
    const FusionRing serial = hecke_ring(group, {false});
    CHECK(parallel.constants() == serial.constants());
    CHECK(parallel.labels() == serial.labels());
  }
}

TEST_CASE("hecke ring matches orbital intersection numbers") {
  for (const char* spec : {"sym:5", "alt:5", "psl2:7", "affine:p=7,k=1,gens=[[[2]]]"}) {
    CAPTURE(spec);
    const PermGroup group = group_from_spec(spec);
    const FusionRing ring = hecke_ring(group);
    const std::size_t n = group.degree();
    const auto elements = group.elements();

    // Orbital of each ordered pair, numbered by least pair as the ring does.
    std::vector<long> orbital(n * n, -1);
    std::vector<std::pair<Point, Point>> bases;
    for (std::size_t p = 0; p < n * n; ++p) {
      if (orbital[p] >= 0) continue;
      for (const Permutation& g : elements)
        orbital[g(static_cast<Point>(p / n)) * n + g(static_cast<Point>(p % n))] = static_cast<long>(bases.size());
      bases.emplace_back(static_cast<Point>(p / n), static_cast<Point>(p % n));
    }
    for (std::size_t i = 0; i < bases.size(); ++i)
      for (std::size_t j = 0; j < bases.size(); ++j)
        for (std::size_t k = 0; k < bases.size(); ++k) {
          const auto [x, z] = bases[k];
          std::vector<Point> middle;
          for (Point y = 0; y < n; ++y)
            if (orbital[x * n + y] == static_cast<long>(i) && orbital[y * n + z] == static_cast<long>(j))
              middle.push_back(y);
          // Weighted multiplicities count the middle points; the trivial one counts their orbits.
          const std::size_t first = orbit_objects(ring, i).front(), second = orbit_objects(ring, j).front();
          std::uint64_t weighted = 0;
          std::uint32_t trivial = 0;
          const auto targets = orbit_objects(ring, k);
          const PermGroup stab = x == z ? stabilizer(group, x) : stabilizer(stabilizer(group, x), z);
          const GroupCharacters chars(stab);
          for (std::size_t t = 0; t < targets.size(); ++t) {
            weighted += std::uint64_t{ring.N(first, second, targets[t])} * chars.degree(t);
            if (t == 0) trivial = ring.N(first, second, targets[t]);
          }
          CHECK(weighted == middle.size());
          CHECK(trivial == orbits(stab, middle).size());
        }
  }
}

TEST_CASE("diagonal of the hecke ring is the representation ring of the point stabilizer") {
  for (const char* spec : {"sym:5", "psl2:7", "m:9"}) {
    CAPTURE(spec);
    const PermGroup group = group_from_spec(spec);
    const FusionRing ring = hecke_ring(group);
    const auto diagonal = orbit_objects(ring, 0);
    CHECK(subring_closure(ring, diagonal) == diagonal);
    const FusionRing stab = rep_ring(restrict_to_complement(stabilizer(group, 0), {0}));
    CHECK(isomorphic_to(ring, diagonal, stab));
  }
}

TEST_CASE("Frobenius groups: invertibles fix the off-diagonal objects") {
  for (const char* spec : {"affine:p=7,k=1,gens=[[[2]]]", "h:8", "h:9"}) {
    CAPTURE(spec);
    const FusionRing ring = hecke_ring(group_from_spec(spec));
    for (std::size_t a : orbit_objects(ring, 0)) {
      if (!(ring.dim(a) == Surd::integer(1))) continue;
      for (std::size_t x = 0; x < ring.size(); ++x) {
        if (ring.label(x).rfind("o0.", 0) == 0) continue;
        CHECK(ring.multiply(ring.basis(a), ring.basis(x)) == ring.basis(x));
      }
    }
  }
}

TEST_CASE("inclusion ring blocks") {
  const PermGroup group = affine_7_3();
  const FusionRing ring = inclusion_ring(group);
  REQUIRE(ring.block_names() == std::vector<std::string>{"M", "N"});
  CHECK(isomorphic_to(ring, with_tag(ring, "MM"), rep_ring(group)));
  CHECK(isomorphic_to(ring, with_tag(ring, "NN"), hecke_ring(group)));
  for (std::size_t x : with_tag(ring, "MN")) CHECK(ring.dim(x) == Surd(Rational(1), 7));

  // epsilon epsilon-bar is the permutation character; epsilon-bar epsilon sums the orbitals.
  const std::size_t epsilon = ring.index_of("o1.0");
  CHECK(ring.block_tag(epsilon) == "MN");
  const RingElement down = ring.multiply(ring.basis(epsilon), ring.conjugate(ring.basis(epsilon)));
  const GroupCharacters chars(group);
  const std::uint64_t p = chars.modulus();
  const auto mm = with_tag(ring, "MM");
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> expected, found;
  for (std::size_t r = 0; r < chars.irrep_count(); ++r) {
    std::uint64_t sum = 0;
    for (const Permutation& g : group.elements())
      sum = (sum + modp::mul(g.fixed_point_count() % p, chars.value(r, g.inverse()), p)) % p;
    expected.emplace(chars.degree(r), modp::mul(sum, modp::inv(group.order() % p, p), p));
  }
  for (std::size_t x : mm)
    found.emplace(static_cast<std::uint64_t>(ring.dim(x).coefficient().numerator()), static_cast<std::uint64_t>(down[x]));
  CHECK(expected == found);
  std::int64_t degree_sum = 0;
  for (std::size_t x : mm) degree_sum += down[x] * ring.dim(x).coefficient().numerator();
  CHECK(degree_sum == 7);

  const RingElement up = ring.multiply(ring.conjugate(ring.basis(epsilon)), ring.basis(epsilon));
  CHECK(ring.format(up) == "o3.0 + o4.0 + o5.0");
}

TEST_CASE("inclusion ring of Z7 x| Z3: iota relations") {
  const FusionRing ring = inclusion_ring(affine_7_3());
  const std::size_t iota = ring.index_of("o1.0");
  const RingElement iota_bar = ring.conjugate(ring.basis(iota));
  // iota-bar iota = id + both three-dimensional objects.
  CHECK(ring.format(ring.multiply(iota_bar, ring.basis(iota))) == "o3.0 + o4.0 + o5.0");
  for (const char* rho : {"o4.0", "o5.0"})
    CHECK(ring.format(ring.multiply(ring.basis(iota), ring.basis(ring.index_of(rho)))) == "o1.0 + o1.1 + o1.2");
}

TEST_CASE("subrings of the S5 hecke ring") {
  const FusionRing ring = hecke_ring(symmetric(5));
  const auto subrings = find_subrings(ring);
  REQUIRE(!subrings.empty());
  CHECK(subrings.front() == std::vector<std::size_t>{ring.unit()});
  CHECK(subrings.back() == all_of(ring));
  for (const auto& s : subrings) CHECK(subring_closure(ring, s) == s);
  CHECK(std::find(subrings.begin(), subrings.end(), orbit_objects(ring, 0)) != subrings.end());
}

TEST_CASE("decompose_product errors and json export") {
  const FusionRing ring = rep_ring(symmetric(3));
  CHECK_THROWS_AS(decompose_product(ring, {"chi.9"}), Error);
  CHECK_THROWS_AS(decompose_product(ring, {}), Error);
  const auto j = nlohmann::json::parse(ring_to_json(ring));
  CHECK(j["schema"] == "sector-atlas/ring/1");
  CHECK(j["basis"].size() == 3);
  CHECK(j["units"][0] == "chi.0");
}

TEST_CASE("axiom checker rejects a broken ring") {
  const FusionRing good = rep_ring(symmetric(3));
  auto constants = good.constants();
  constants[(2 * 3 + 2) * 3 + 2] = 2;  // chi.2 squared gains a spurious copy of itself
  const FusionRing bad(good.labels(), {Surd::integer(1), Surd::integer(1), Surd::integer(2)}, {0, 1, 2}, constants,
                       {{0, 0}, {0, 0}, {0, 0}}, {""}, {0});
  const AxiomReport report = bad.check_axioms();
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.dimension);
  CHECK_THROWS_AS(require_axioms(bad, "test"), Error);
}
