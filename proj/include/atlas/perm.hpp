#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace atlas {

using Point = std::uint32_t;

/// Largest group the library will enumerate element by element.
inline constexpr std::uint64_t kEnumerationGuard = 2'000'000;

/// Bijection of {0, ..., n-1}. Products compose right to left:
/// (a * b)(x) = a(b(x)), so groups act on points from the left.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Parses disjoint-cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t fixed_point_count() const;
  std::uint64_t order() const;
  /// Cycle lengths sorted ascending, fixed points included.
  std::vector<std::size_t> cycle_type() const;
  /// Smallest moved point, or nullopt for the identity.
  std::optional<Point> first_moved_point() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// by * element * by^-1.
Permutation conjugate(const Permutation& element, const Permutation& by);

/// Orbit of a root under generators with a transversal: element(p) maps root to p.
class Transversal {
 public:
  Transversal() = default;
  Transversal(std::size_t degree, const std::vector<Permutation>& generators, Point root);

  Point root() const { return root_; }
  bool contains(Point p) const { return p < slot_.size() && slot_[p] >= 0; }
  const std::vector<Point>& orbit() const { return orbit_; }
  /// Element u with u(root) = p.
  const Permutation& element(Point p) const;

 private:
  Point root_ = 0;
  std::vector<Point> orbit_;
  std::vector<long> slot_;
  std::vector<Permutation> elements_;
};

/// Permutation group with a Schreier-Sims stabilizer chain certifying its order.
class PermGroup {
 public:
  PermGroup() = default;
  /// Builds the chain; base points are `base_prefix` followed by smallest moved points.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  std::uint64_t order() const { return order_; }
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order_ == 1; }

  /// All elements in increasing lexicographic order of image arrays.
  std::vector<Permutation> elements() const;

  /// Generators of the pointwise stabilizer of base_prefix[0..k) when the chain
  /// was built with that prefix.
  std::vector<Permutation> level_generators(std::size_t level) const;
  std::size_t level_count() const { return levels_.size(); }

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    Transversal transversal;
  };

  bool sift(Permutation& h, std::size_t from, std::size_t& stopped) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

PermGroup build_group(std::size_t degree, const std::vector<Permutation>& generators);

bool is_subgroup(const PermGroup& sub, const PermGroup& group);

/// G-orbits of `points`, each sorted, listed by minimal element.
std::vector<std::vector<Point>> orbits(const PermGroup& group, const std::vector<Point>& points);
std::vector<std::vector<Point>> orbits(const PermGroup& group);
std::vector<Point> orbit_of(const PermGroup& group, Point x);

PermGroup stabilizer(const PermGroup& group, Point x);
/// [G_{x1}, G_{x1,x2}, ...].
std::vector<PermGroup> stabilizer_chain(const PermGroup& group, const std::vector<Point>& points);

/// Action on left cosets gH by left multiplication; point 0 is the coset H.
PermGroup coset_action(const PermGroup& group, const PermGroup& sub);

bool is_transitive(const PermGroup& group);

struct TransitivityProfile {
  std::size_t k = 0;        ///< largest k with a transitive action on distinct k-tuples
  bool sharp = false;       ///< |G| equals n(n-1)...(n-k+1)
  bool full_symmetric = false;  ///< k equals the degree; sharp at k-1 too
  /// k under the convention that the full symmetric group counts as sharply (n-1)-transitive.
  std::size_t conventional_k() const { return full_symmetric ? k - 1 : k; }
};
TransitivityProfile transitivity_profile(const PermGroup& group);

/// Nullopt when primitive; otherwise a block system with minimal block size.
std::optional<std::vector<std::vector<Point>>> primitivity_blocks(const PermGroup& group);

struct FrobeniusStructure {
  PermGroup kernel;
  PermGroup complement;
  bool kernel_elementary_abelian = false;
  std::uint64_t kernel_prime = 0;  ///< prime exponent when elementary abelian
};
struct RegularGroup {};
struct NotFrobenius {
  std::string reason;
};
using FrobeniusAnalysis = std::variant<FrobeniusStructure, RegularGroup, NotFrobenius>;
FrobeniusAnalysis frobenius_analysis(const PermGroup& group);

struct DoubleCosetDecomposition {
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
};
DoubleCosetDecomposition double_cosets(const PermGroup& group, const PermGroup& left,
                                       const PermGroup& right);

/// Permutation c with c G1 c^{-1} = G2 (as sets), or nullopt. Degree at most 16.
std::optional<Permutation> perm_conjugacy_iso(const PermGroup& first, const PermGroup& second);

/// Restriction of a group fixing `removed` pointwise to the remaining points, relabeled in order.
PermGroup restrict_to_complement(const PermGroup& group, const std::vector<Point>& removed);

/// Element lookup table over an enumerated group.
class ElementIndex {
 public:
  explicit ElementIndex(const PermGroup& group);
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> find(const Permutation& g) const;
  std::size_t index(const Permutation& g) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> lookup_;
};

}  // namespace atlas
