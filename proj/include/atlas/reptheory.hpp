#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "atlas/perm.hpp"

namespace atlas {

/// Arithmetic modulo a prime below 2^62.
namespace modp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
}  // namespace modp

/// Smallest prime P > 2 * order with P = 1 (mod exponent).
std::uint64_t choose_modulus(std::uint64_t order, std::uint64_t exponent);

struct ConjClasses {
  std::vector<Permutation> representatives;  ///< minimal element of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> class_of;         ///< by ElementIndex position
  std::vector<std::size_t> inverse_class;
  std::vector<std::uint64_t> element_orders;
  std::size_t count() const { return sizes.size(); }
};

/// Classes ordered by (size, representative); the identity class is first.
ConjClasses conjugacy_classes(const PermGroup& group, const ElementIndex& index);

/// a[(r * k + s) * k + t] = #{(x, y) in C_r x C_s : x y = z_t}, z_t the representative of C_t.
std::vector<std::uint64_t> class_structure_constants(const ElementIndex& index, const ConjClasses& classes);
/// Single-threaded reference for class_structure_constants.
std::vector<std::uint64_t> class_structure_constants_serial(const ElementIndex& index,
                                                            const ConjClasses& classes);

struct CharacterTable {
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> degrees;               ///< lifted, row order
  std::vector<std::vector<std::uint64_t>> values;   ///< [irrep][class] residues mod modulus
};

/// A group with its element index, classes and modular character table.
/// Rows are sorted by (degree, value vector); row 0 is the trivial character.
class GroupCharacters {
 public:
  /// modulus 0 chooses one via choose_modulus; a caller-supplied modulus must be
  /// a prime above 2|G| congruent to 1 modulo the exponent.
  explicit GroupCharacters(PermGroup group, std::uint64_t modulus = 0);

  const PermGroup& group() const { return group_; }
  const ElementIndex& elements() const { return index_; }
  const ConjClasses& classes() const { return classes_; }
  const CharacterTable& table() const { return table_; }
  std::uint64_t modulus() const { return table_.modulus; }
  std::uint64_t order() const { return group_.order(); }
  std::size_t irrep_count() const { return table_.degrees.size(); }
  std::uint64_t degree(std::size_t irrep) const { return table_.degrees[irrep]; }

  std::size_t class_of(const Permutation& g) const { return classes_.class_of[index_.index(g)]; }
  std::uint64_t value(std::size_t irrep, const Permutation& g) const {
    return table_.values[irrep][class_of(g)];
  }
  /// Contragredient row, identified by value matching on inverse classes.
  std::size_t dual(std::size_t irrep) const;
  /// Row whose values equal `values` (by class), if any.
  std::optional<std::size_t> find_row(const std::vector<std::uint64_t>& values) const;
  /// <f, chi> = (1/|G|) sum_C |C| f(C) chi(C^-1) for a class function given by class values, lifted
  /// to a non-negative integer below 2^31 (throws if the residue is not small).
  std::uint64_t multiplicity(const std::vector<std::uint64_t>& class_function, std::size_t irrep) const;

 private:
  PermGroup group_;
  ElementIndex index_;
  ConjClasses classes_;
  CharacterTable table_;
};

CharacterTable character_table(const PermGroup& group);

struct RestrictionMatrix {
  std::vector<std::vector<std::uint64_t>> entries;  ///< [irrep of G][irrep of H]
};

/// <Res chi, psi> for H <= G; both tables must share a modulus.
RestrictionMatrix restriction_matrix(const GroupCharacters& group, const GroupCharacters& sub);

/// <theta, theta> for the permutation character theta(g) = #fixed points.
std::uint64_t permutation_character_norm(const PermGroup& group);

/// Least common multiple of element orders.
std::uint64_t group_exponent(const PermGroup& group);

}  // namespace atlas
