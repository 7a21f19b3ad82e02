#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atlas/perm.hpp"
#include "atlas/surd.hpp"

namespace atlas {

class GroupCharacters;

struct GraphVertex {
  std::string label;
  std::optional<Surd> dim;
};

/// Bipartite graph with multiplicities, a distinguished even vertex and optional exact dims.
struct BipartiteGraph {
  std::vector<GraphVertex> even;
  std::vector<GraphVertex> odd;
  std::vector<std::vector<std::uint32_t>> adjacency;  ///< [even][odd]
  std::size_t star = 0;
  std::optional<Rational> index;  ///< squared Perron-Frobenius eigenvalue when known

  bool has_dims() const;
  /// Shape, unique labels, star range and connectivity from the star.
  void validate() const;
};

/// The two-parameter family: legs v0_i -- v1_i and complete bipartite v1_i -- v2_j with multiplicity m_i.
BipartiteGraph gbmn(const std::vector<std::uint32_t>& m, std::uint32_t n);
/// One odd vertex joined to n even vertices.
BipartiteGraph star_graph(std::uint32_t n);
/// Appends a pendant edge at every even vertex; parities swap and the pendant of the
/// old distinguished vertex becomes distinguished.
BipartiteGraph tilde(const BipartiteGraph& graph);

/// Exact Perron-Frobenius identities plus a floating-point power-iteration estimate.
struct PfReport {
  bool even_exact = false;   ///< (Delta Delta^T) d_even = index * d_even
  bool odd_exact = false;    ///< Delta^T d_even = sqrt(index) * d_odd
  double eigenvalue_estimate = 0;
  double residual = 0;
  bool numeric_ok = false;   ///< residual below 1e-10
  bool ok() const { return even_exact && odd_exact && numeric_ok; }
};
PfReport pf_check(const BipartiteGraph& graph, Rational index);

/// Even vertices: irreps of the two-point stabilizers G_{0,y} for orbit representatives y of
/// G_0 (y = 0 first); odd vertices: irreps of G_0.
BipartiteGraph principal_graph(const PermGroup& group);
/// Even vertices: irreps of the group; odd vertices: irreps of the subgroup.
BipartiteGraph dual_principal_graph(const PermGroup& group, const PermGroup& sub);

/// Even-to-even and odd-to-odd vertex bijections, or nullopt when not isomorphic.
struct GraphIsomorphism {
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;
};
std::optional<GraphIsomorphism> graphs_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

enum class GraphFormat { Dot, Json, Text };
std::string emit(const BipartiteGraph& graph, GraphFormat format, const std::string& name = "G");
BipartiteGraph parse_graph_json(const std::string& text);

/// Reads the graph fixture format; dims missing from the file are computed from the index.
BipartiteGraph parse_graph_fixture(const std::string& text);
/// Positive eigenvector of Delta Delta^T for the given index, normalized to 1 at the star.
std::optional<std::vector<Rational>> even_pf_vector(const BipartiteGraph& graph, Rational index);
/// Fills all dims from the index (even dims exact rationals, odd dims via Delta^T d / sqrt(index)).
void assign_dims(BipartiteGraph& graph, Rational index);

}  // namespace atlas
