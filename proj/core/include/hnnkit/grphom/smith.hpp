#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hnnkit/grphom/int_matrix.hpp"

namespace hnnkit::grphom {

/// Which unimodular transforms to accumulate alongside the diagonal.
struct SmithOptions {
  bool left = false;          ///< U and U^{-1}
  bool right = false;         ///< V
};

/// Smith normal form U * A * V = D with d_1 | d_2 | ... | d_r and zeros after.
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> diagonal;   ///< length min(rows, cols), non-negative
  std::size_t rank = 0;
  std::optional<IntMatrix> left;          ///< U, rows x rows
  std::optional<IntMatrix> left_inverse;  ///< U^{-1}
  std::optional<IntMatrix> right;         ///< V, cols x cols

  /// The nonzero diagonal entries, including units.
  std::vector<Integer> invariant_factors() const;
  /// Nonzero diagonal entries greater than one.
  std::vector<Integer> torsion() const;
  /// Rank of the cokernel Z^rows / im A.
  std::size_t cokernel_free_rank() const { return rows - rank; }
  /// The diagonal matrix D as a rows x cols matrix.
  IntMatrix diagonal_matrix() const;
};

SmithForm smith_normal_form(IntMatrix a, SmithOptions options = {});

inline SmithForm smith_normal_form_with_transforms(IntMatrix a) {
  return smith_normal_form(std::move(a), SmithOptions{true, true});
}

}  // namespace hnnkit::grphom
