#include <set>

#include "atlas/error.hpp"
#include "atlas/gfield.hpp"
#include "doctest.h"

using namespace atlas;

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(25326001));
}

TEST_CASE("moduli") {
  CHECK(FiniteField(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FiniteField(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(FiniteField(7, 1).modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(FiniteField(3, 2).describe() == "GF(3^2; modulus=x^2+1)");
  CHECK_THROWS_AS(FiniteField(9, 1), Error);
  CHECK_THROWS_AS(FiniteField(2, 21), Error);
}

TEST_CASE("field axioms on small fields") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {2, 4}, {3, 3}}) {
    FiniteField f(p, k);
    const auto q = f.size();
    for (FiniteField::Index a = 0; a < q; ++a) {
      CHECK(f.add(a, f.zero_index()) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one_index());
      for (FiniteField::Index b = 0; b < q; ++b) {
        // Index arithmetic agrees with polynomial arithmetic.
        CHECK(f.mul(a, b) == f.index(f.mul(f.element(a), f.element(b))));
        CHECK(f.add(a, b) == f.index(f.add(f.element(a), f.element(b))));
      }
    }
  }
  FiniteField f7(7, 1);
  CHECK(f7.mul(3 * 1u, 5u) == f7.one_index());
  CHECK_THROWS_AS(f7.inv(0u), Error);
}

TEST_CASE("primitive element has full order") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {5, 2}, {3, 4}, {7, 2}}) {
    FiniteField f(p, k);
    const auto g = f.primitive_index();
    std::set<FiniteField::Index> powers;
    for (std::uint64_t e = 0; e + 1 < f.size(); ++e) powers.insert(f.pow(g, e));
    CHECK(powers.size() == f.size() - 1);
    CHECK(f.pow(g, f.size() - 1) == f.one_index());
  }
}

TEST_CASE("Frobenius map") {
  FiniteField f9(3, 2);
  std::size_t fixed = 0;
  for (FiniteField::Index a = 0; a < 9; ++a) {
    CHECK(f9.frobenius(f9.frobenius(a, 1), 1) == a);
    if (f9.frobenius(a, 1) == a) ++fixed;
    for (FiniteField::Index b = 0; b < 9; ++b) {
      CHECK(f9.frobenius(f9.add(a, b), 1) == f9.add(f9.frobenius(a, 1), f9.frobenius(b, 1)));
      CHECK(f9.frobenius(f9.mul(a, b), 1) == f9.mul(f9.frobenius(a, 1), f9.frobenius(b, 1)));
    }
  }
  CHECK(fixed == 3);
  FiniteField f4(2, 2);
  std::size_t moved = 0;
  for (FiniteField::Index a = 0; a < 4; ++a)
    if (f4.frobenius(a, 1) != a) ++moved;
  CHECK(moved == 2);
  CHECK_THROWS_AS(f9.frobenius(1u, 2), Error);
}

TEST_CASE("square test matches squaring oracle") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {2, 2}, {5, 2}, {3, 4}, {2, 6}, {7, 2}}) {
    FiniteField f(p, k);
    std::set<FiniteField::Index> squares;
    for (FiniteField::Index a = 0; a < f.size(); ++a) squares.insert(f.index(f.mul(f.element(a), f.element(a))));
    for (FiniteField::Index a = 0; a < f.size(); ++a) CHECK(f.is_square(a) == (squares.count(a) == 1));
  }
  FiniteField f7(7, 1);
  std::set<std::uint32_t> sq;
  for (FiniteField::Index a = 1; a < 7; ++a)
    if (f7.is_square(a)) sq.insert(f7.element(a).coefficients[0]);
  CHECK(sq == std::set<std::uint32_t>{1, 2, 4});
}
