#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atlas/perm.hpp"

namespace atlas {

/// Square matrix over GF(p), rows of residues.
using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Parsed group description, e.g. "sym:5", "pgl2:7", "affine:p=3,k=2,gens=[[[0,1],[2,0]]]",
/// "perm:4:(0 1 2 3);(1 3)".
struct GroupSpec {
  enum class Kind { Sym, Alt, H, S, T, Pgl2, Psl2, M, Mathieu, Affine, Perm };
  Kind kind = Kind::Sym;
  std::uint64_t n = 0;  ///< degree, q, or Mathieu index
  // affine
  std::uint64_t p = 0;
  unsigned k = 0;
  std::vector<Matrix> matrices;
  // perm
  std::vector<std::string> cycles;
  std::string text;  ///< canonical source string
};

GroupSpec parse_group_spec(const std::string& text);
PermGroup build_group(const GroupSpec& spec);
/// parse_group_spec followed by build_group.
PermGroup group_from_spec(const std::string& text);

PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);

/// q = p^k with p prime, or throws.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

/// Z_p^k extended by the matrix group generated by `matrices`, acting on GF(p)^k.
/// Vectors are indexed with the first coordinate most significant. When
/// `require_free` is set, verifies that the matrix group fixes no nonzero vector.
PermGroup affine_frobenius(std::uint64_t p, unsigned k, const std::vector<Matrix>& matrices,
                           bool require_free = false);

/// x -> a x + b over GF(q); sharply 2-transitive.
PermGroup hq(std::uint64_t q);
/// x -> a x + b for squares a, x -> a x^s + b otherwise (s the involutory automorphism).
PermGroup sq(std::uint64_t q);
/// Full semilinear group x -> a x^f + b with f in Aut(GF(q)).
PermGroup tq(std::uint64_t q);
/// Moebius action on GF(q) plus infinity (point q).
PermGroup pgl2(std::uint64_t q);
PermGroup psl2(std::uint64_t q);
/// Twisted Moebius action: non-square determinants act through x^s.
PermGroup mq(std::uint64_t q);
/// Mathieu group M11 or M12 from embedded generator data.
PermGroup mathieu(unsigned n);

/// Generators of the quaternion group inside GL_2(3).
std::vector<Matrix> quaternion_gl2_3();

}  // namespace atlas
