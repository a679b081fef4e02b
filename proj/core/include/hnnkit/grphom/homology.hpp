#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hnnkit/abelian_invariants.hpp"
#include "hnnkit/fingrp/finite_group.hpp"
#include "hnnkit/grphom/abelian_hom.hpp"
#include "hnnkit/grphom/sparse.hpp"

namespace hnnkit::grphom {

/// Basis of the normalized bar complex in degree k: k-tuples of
/// non-identity elements, indexed in base (n-1) with the first entry most
/// significant.
struct BarBasis {
  int group_order;
  int degree;

  std::size_t size() const;
  std::size_t index(std::span<const fingrp::Element> tuple) const;
  std::vector<fingrp::Element> tuple(std::size_t index) const;
};

/// Boundary d_k : C_k -> C_{k-1} of the normalized bar complex with trivial
/// coefficients. Degree 0 has a single basis element (the empty tuple).
SparseMatrix bar_boundary(const fingrp::FiniteGroup& g, int k);

struct HomologyOptions {
  /// Largest number of cells allowed in C_{k+1}.
  std::size_t max_cells = 200000;
  /// Reuse results for the same multiplication table and degree.
  bool cache = true;
};

/// H_k(G; Z) together with cycle representatives of a generating set.
struct HomologyGroup {
  int degree = 0;
  int group_order = 0;
  AbelianInvariants invariants;
  /// Orders of the generators below (0 = infinite); one per generator.
  std::vector<Integer> orders;
  /// Cycles in C_k representing the generators.
  std::vector<SparseVector> representatives;
  /// Reduction of C_k modulo boundaries, used to express classes.
  std::shared_ptr<const CokernelReducer> reducer;

  /// Coordinates of the class of a cycle against `orders`.
  std::vector<Integer> coordinates(const SparseVector& cycle) const;
};

HomologyGroup homology(const fingrp::FiniteGroup& g, int k, HomologyOptions options = {});
/// Drops every memoized homology group.
void clear_homology_cache();

/// The chain map (g_1,...,g_k) -> (f g_1,...,f g_k) on homology, as a matrix
/// against the generators of `source` and `target`.
AbelianHom induced_map(const fingrp::FiniteHom& f, const HomologyGroup& source, const HomologyGroup& target);

/// For H of exponent p (prime): rows are the coordinates of each cycle in
/// `cycles` against the basis of H given by `basis`, over Z/p. Returns
/// nullopt when `basis` does not map to a basis of H.
std::optional<std::vector<std::vector<int>>> coordinates_in_basis(const HomologyGroup& h,
                                                                  const std::vector<SparseVector>& basis,
                                                                  const std::vector<SparseVector>& cycles, int p);

/// Image of a cycle under the chain map induced by f.
SparseVector push_forward(const fingrp::FiniteHom& f, int degree, const SparseVector& cycle);

/// The 2-cycle [a|b] - [b|a] for commuting a, b.
SparseVector commutator_cycle(const fingrp::FiniteGroup& g, fingrp::Element a, fingrp::Element b);

/// Imported homology values not computed by this library.
struct KnownFact {
  std::string group;
  int degree;
  AbelianInvariants value;
  std::string provenance;
};
const std::vector<KnownFact>& known_facts();
std::optional<KnownFact> known_fact(const std::string& group, int degree);

}  // namespace hnnkit::grphom
