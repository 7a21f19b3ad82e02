#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atlas/perm.hpp"
#include "atlas/surd.hpp"

namespace atlas {

/// Integer combination of basis elements, indexed by basis position.
using RingElement = std::vector<std::int64_t>;

/// Result of checking the based-ring axioms; `violation` names the first failure.
struct AxiomReport {
  bool unit = true;
  bool duality = true;
  bool frobenius = true;
  bool dimension = true;
  bool associativity = true;
  std::string violation;
  bool ok() const { return unit && duality && frobenius && dimension && associativity; }
};

/// Based ring with nonnegative structure constants N(x, y, z) = multiplicity of z in x y.
/// Multi-unit rings (one unit per diagonal block) model bimodule categories of an inclusion:
/// block(x) = (left, right) and x y vanishes unless right(x) = left(y).
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<std::string> labels, std::vector<Surd> dims, std::vector<std::size_t> duals,
             std::vector<std::uint32_t> constants, std::vector<std::pair<std::size_t, std::size_t>> blocks,
             std::vector<std::string> block_names, std::vector<std::size_t> units);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;

  const Surd& dim(std::size_t x) const { return dims_[x]; }
  std::size_t dual(std::size_t x) const { return duals_[x]; }
  std::uint32_t N(std::size_t x, std::size_t y, std::size_t z) const {
    return constants_[(x * size() + y) * size() + z];
  }
  const std::vector<std::uint32_t>& constants() const { return constants_; }

  std::pair<std::size_t, std::size_t> block(std::size_t x) const { return blocks_[x]; }
  const std::vector<std::string>& block_names() const { return block_names_; }
  /// Two-letter block tag such as "MN"; empty names give "".
  std::string block_tag(std::size_t x) const;
  /// units()[b] is the unit of diagonal block b.
  const std::vector<std::size_t>& units() const { return units_; }
  std::size_t unit() const { return units_.front(); }

  RingElement basis(std::size_t x) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement conjugate(const RingElement& a) const;
  /// Dimension of Hom(a, b) for combinations with nonnegative coefficients.
  static std::int64_t pairing(const RingElement& a, const RingElement& b);
  /// "id + 2 mu" style rendering with the ring's labels; "0" for the zero element.
  std::string format(const RingElement& a) const;

  AxiomReport check_axioms() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Surd> dims_;
  std::vector<std::size_t> duals_;
  std::vector<std::uint32_t> constants_;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
  std::vector<std::string> block_names_;
  std::vector<std::size_t> units_;
};

/// Throws ErrorKind::Invariant when any axiom fails.
void require_axioms(const FusionRing& ring, const std::string& what);

/// Rep(G): N = <chi chi', chi''>; labels "chi.r" in character-table row order.
FusionRing rep_ring(const PermGroup& group);

/// Selects the serial reference kernel instead of the OpenMP one.
struct BundleOptions {
  bool parallel = true;
};

/// Ring of group-equivariant bundles on Y x Y under convolution, for a group acting on Y
/// (points 0..degree-1, possibly intransitive). Simple objects are pairs (pair orbit, irrep of
/// the pair stabilizer), labeled "o{orbit}.{irrep}"; pair orbits are numbered by their least
/// pair and represented by it. Each point orbit of Y is one block, named by `block_names`.
FusionRing bundle_ring(const PermGroup& group, const std::vector<std::string>& block_names,
                       BundleOptions options = {});

/// Bundle ring on X for a transitive group: the even part of the group-subgroup inclusion for the
/// point stabilizer of 0. Label o0.r is the diagonal object for irrep r of the stabilizer.
FusionRing hecke_ring(const PermGroup& group, BundleOptions options = {});

/// Bundle ring on {*} + X with * fixed (point 0; X shifted by one). Blocks "M" (*) and "N" (X):
/// MM is Rep(G), NN is hecke_ring(G), MN holds the inclusion bimodule and its twists.
FusionRing inclusion_ring(const PermGroup& group, BundleOptions options = {});

/// Left-to-right product of the labeled basis elements.
RingElement decompose_product(const FusionRing& ring, const std::vector<std::string>& word);

/// Subsets containing the unit of `block` that are closed under duals and product constituents,
/// ordered by (size, members). Requires at most 20 basis elements in the block.
std::vector<std::vector<std::size_t>> find_subrings(const FusionRing& ring, std::size_t block = 0);

/// Closure of a set of basis elements under duals and product constituents.
std::vector<std::size_t> subring_closure(const FusionRing& ring, std::vector<std::size_t> seed);

/// JSON export: schema "sector-atlas/ring/1" with basis, dims, duals, blocks and sparse constants.
std::string ring_to_json(const FusionRing& ring);

}  // namespace atlas
