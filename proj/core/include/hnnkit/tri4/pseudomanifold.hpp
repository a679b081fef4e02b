#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hnnkit/presentations/presentation.hpp"

namespace hnnkit::tri4 {

/// A permutation of {0..d}; perm[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse(const Perm& p);
Perm compose(const Perm& f, const Perm& g);  ///< f after g
int parity(const Perm& p);                   ///< 0 even, 1 odd

/// Facet i of a simplex is the one opposite vertex i.
struct Gluing {
  int target = 0;
  Perm perm;  ///< vertex map of the whole simplex; facet i goes to facet perm[i]
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// Simplices of one dimension glued along facets by vertex permutations.
/// Unglued facets are boundary.
class Pseudomanifold {
 public:
  Pseudomanifold() = default;
  Pseudomanifold(int dimension, int simplices);

  int dimension() const { return dim_; }
  int size() const { return static_cast<int>(glue_.size()); }
  const std::optional<Gluing>& gluing(int simplex, int facet) const {
    return glue_[static_cast<std::size_t>(simplex)][static_cast<std::size_t>(facet)];
  }
  /// Sets both sides of a gluing. Throws if either side is already glued
  /// differently.
  void glue(int simplex, int facet, int target, const Perm& perm);
  /// Sets one side only; validate() checks that the other side agrees.
  void set_one_sided(int simplex, int facet, std::optional<Gluing> g);

  /// Checks involutivity, permutation shape and index ranges; throws Error.
  void validate() const;
  std::size_t boundary_facets() const;
  bool is_connected() const;

  friend bool operator==(const Pseudomanifold&, const Pseudomanifold&) = default;

 private:
  int dim_ = 0;
  std::vector<std::vector<std::optional<Gluing>>> glue_;
};

/// Orbits of faces under the gluings. Faces of a simplex are vertex
/// subsets, stored as bit masks.
struct FaceLattice {
  int dimension = 0;
  /// orbit[s][mask] for nonempty masks; -1 for the empty mask.
  std::vector<std::vector<int>> orbit;
  /// Per orbit: its dimension and one representative (simplex, mask).
  std::vector<int> orbit_dimension;
  std::vector<std::pair<int, unsigned>> representative;
  /// Number of raw faces in each orbit.
  std::vector<int> orbit_size;

  std::vector<int> f_vector() const;
  long euler_characteristic() const;
  /// Orbit ids of dimension k in increasing order.
  std::vector<int> orbits_of_dimension(int k) const;
};
FaceLattice face_lattice(const Pseudomanifold& m);

/// Signs +-1 per simplex such that every gluing extends to an odd
/// permutation after correcting by the signs; nullopt if non-orientable.
/// Throws on disconnected input.
std::optional<std::vector<int>> orientation(const Pseudomanifold& m);

/// Dual graph: vertices are simplices, edges are glued facet pairs. Each
/// edge is stored once, from its lexicographically smaller side.
struct DualEdge {
  int from_simplex, from_facet;
  int to_simplex, to_facet;
};
std::vector<DualEdge> dual_edges(const Pseudomanifold& m);

/// Index of the dual edge through (simplex, facet) and whether that side is
/// its source.
struct DualEdgeIndex {
  std::vector<std::vector<int>> edge;      ///< -1 on boundary facets
  std::vector<std::vector<bool>> outgoing;
};
DualEdgeIndex index_dual_edges(const Pseudomanifold& m, const std::vector<DualEdge>& edges);

/// Spanning tree of the dual graph as a set of dual edge indices, found by
/// breadth-first search from simplex 0.
std::vector<int> bfs_spanning_tree(const Pseudomanifold& m, const std::vector<DualEdge>& edges);

/// Fundamental group of the complement of the codimension-3 skeleton,
/// read off the dual 2-skeleton: one generator per dual edge outside the
/// tree, one relator per interior codimension-2 face orbit. For an ideal
/// 4-dimensional triangulation this is pi1 of the manifold minus its
/// vertices.
struct DualSpine {
  pres::Presentation presentation;
  std::vector<DualEdge> edges;
  std::vector<int> tree;
  /// generator_of_edge[e] is the generator index for edge e, or -1 for tree edges.
  std::vector<int> generator_of_edge;
};
DualSpine dual_spine(const Pseudomanifold& m, const std::vector<int>& tree);
inline DualSpine dual_spine(const Pseudomanifold& m) { return dual_spine(m, bfs_spanning_tree(m, dual_edges(m))); }

/// Every spanning tree of the dual graph; throws BudgetExceeded beyond `limit`.
std::vector<std::vector<int>> all_spanning_trees(const Pseudomanifold& m, std::size_t limit = 100000);

/// A combinatorial automorphism: simplex p goes to image[p] with vertex map vertex_map[p].
struct SimplicialMap {
  std::vector<int> image;
  std::vector<Perm> vertex_map;
  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
  friend auto operator<=>(const SimplicialMap&, const SimplicialMap&) = default;
};

SimplicialMap identity_map(const Pseudomanifold& m);
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);  ///< f after g
bool commutes_with_gluings(const Pseudomanifold& m, const SimplicialMap& s);
/// Every automorphism of a connected pseudomanifold, identity first.
std::vector<SimplicialMap> automorphisms(const Pseudomanifold& m);
/// +1 if s preserves the orientation from orientation(), -1 if it reverses
/// it; nullopt if s mixes (cannot happen for automorphisms of connected
/// orientable input).
std::optional<int> orientation_character(const Pseudomanifold& m, const SimplicialMap& s);

/// Images of the dual-spine generators under s, as words in the same generators.
std::vector<pres::Word> induced_on_spine(const Pseudomanifold& m, const DualSpine& spine, const SimplicialMap& s);
/// When H1 of the spine is Z, the scalar by which s acts on it.
std::optional<int> h1_action(const Pseudomanifold& m, const DualSpine& spine, const SimplicialMap& s);

}  // namespace hnnkit::tri4
