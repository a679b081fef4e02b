#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnnkit/abelian_invariants.hpp"
#include "hnnkit/tri4/pseudomanifold.hpp"

namespace hnnkit::tri4 {

/// Facet slot k of a pentachoron is the facet opposite vertex 4 - k, so the
/// slots read (0123), (0124), (0134), (0234), (1234).
int slot_to_facet(int slot);
int facet_to_slot(int facet);

/// Parses the `.tri4` text format into a validated 4-dimensional
/// pseudomanifold. Throws ParseError with a location, or Error for
/// structural problems (non-involutive gluing, identity self-gluing).
Pseudomanifold parse_triangulation(std::string_view text);
std::string format_triangulation(const Pseudomanifold& m);

/// The bundled six-pentachoron triangulation.
std::string_view builtin_text();
Pseudomanifold builtin_triangulation();
/// One pentachoron with two facets identified: a 4-ball with a 1-handle,
/// the exterior of the trivial 2-knot.
Pseudomanifold unknot_exterior();
/// Bundled triangulations by name ("builtin" or "quaternion", "unknot");
/// nullopt for other names.
std::optional<std::string_view> bundled_text(std::string_view name);
Pseudomanifold single_pentachoron();
/// Two pentachora glued along all five facets by the identity.
Pseudomanifold double_pentachoron();

/// Link of a vertex orbit: one tetrahedron per (simplex, vertex) incidence.
/// The tetrahedron's vertices are the simplex's other vertices in
/// increasing order.
struct VertexLink {
  Pseudomanifold link;
  std::vector<std::pair<int, int>> origin;  ///< (simplex, vertex) per tetrahedron
};
VertexLink vertex_link(const Pseudomanifold& m, int vertex_orbit);

/// The automorphism of the link induced by an automorphism of `m` that
/// maps the vertex orbit to itself. Throws otherwise.
SimplicialMap induced_on_link(const VertexLink& l, const SimplicialMap& s);

/// Barycentric subdivision. Simplex (p, flag) has vertices the barycentres
/// of the faces {f[0]}, {f[0], f[1]}, ...; every gluing of the result is
/// the identity on vertex labels.
struct Subdivision {
  Pseudomanifold complex;
  std::vector<std::pair<int, Perm>> origin;
};
Subdivision barycentric_subdivision(const Pseudomanifold& m);
/// s lifted to the subdivision.
SimplicialMap subdivide_map(const Pseudomanifold& m, const Subdivision& sd, const SimplicialMap& s);

/// Integral homology in degrees 0..dim. Requires every gluing to be the
/// identity on labels (true after subdivision), so cells inherit
/// consistent orientations.
std::vector<AbelianInvariants> ordered_homology(const Pseudomanifold& m);
/// Subdivides once, then computes ordered_homology.
std::vector<AbelianInvariants> homology(const Pseudomanifold& m);

struct FixedComponent {
  int dimension = 0;
  long euler_characteristic = 0;
  int vertices = 0;  ///< vertices of the subdivided complex in the component
};
struct FixedPointSet {
  std::vector<FixedComponent> components;
  int subdivisions = 0;
  /// isolated points, i.e. 0-dimensional components
  int points() const;
};
/// Fixed set of an automorphism of finite order, read off the subdivision
/// where a face mapped to itself is fixed pointwise. The same analysis is
/// repeated one level deeper and compared; a mismatch throws.
FixedPointSet fixed_point_set(const Pseudomanifold& m, const SimplicialMap& s);

/// Link pi1 heuristic: dual-spine presentation, Tietze simplified.
struct LinkPi1 {
  pres::Presentation spine;
  pres::Presentation simplified;
  /// one generator and no relators
  bool infinite_cyclic = false;
};
LinkPi1 link_pi1(const Pseudomanifold& link);

/// Two tetrahedra glued into a closed 3-manifold, with a fixed-point free
/// involution swapping them.
Pseudomanifold free_involution_complex();
SimplicialMap free_involution();

}  // namespace hnnkit::tri4
