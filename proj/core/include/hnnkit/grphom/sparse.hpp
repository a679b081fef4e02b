#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hnnkit/abelian_invariants.hpp"
#include "hnnkit/grphom/int_matrix.hpp"

namespace hnnkit::grphom {

/// Sparse vector as (index, value) pairs; indices unique, values nonzero.
using SparseVector = std::vector<std::pair<std::int32_t, Integer>>;

/// Column-oriented sparse matrix with machine-size entries (boundary
/// matrices of chain complexes fit comfortably).
class SparseMatrix {
 public:
  using Entry = std::pair<std::int32_t, std::int64_t>;

  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  /// Adds `value` to entry (row, col); zero results are dropped.
  void add(std::size_t row, std::size_t col, std::int64_t value);
  const std::vector<Entry>& column(std::size_t col) const { return columns_[col]; }
  std::size_t nonzeros() const;

  /// A * x for a sparse x indexed by columns.
  SparseVector apply(const SparseVector& x) const;
  /// Dense copy; only sensible for small matrices.
  IntMatrix to_dense() const;
  /// this * other (used to check d o d = 0).
  bool product_is_zero(const SparseMatrix& other) const;

 private:
  std::size_t rows_;
  std::vector<std::vector<Entry>> columns_;
};

/// Cokernel Z^rows / im(A) of a sparse integer matrix, computed by
/// eliminating unit pivots (Markowitz order) and taking a dense Smith form
/// of the residual core. Row operations are logged so that any vector of
/// Z^rows can be carried into cokernel coordinates afterwards.
class CokernelReducer {
 public:
  explicit CokernelReducer(const SparseMatrix& a);

  std::size_t rows() const { return rows_; }
  /// Rank of A over Q.
  std::size_t rank() const { return pivots_ + core_rank_; }
  /// Number of unit pivots eliminated before the dense phase.
  std::size_t unit_pivots() const { return pivots_; }
  /// Dimensions of the dense core handed to the Smith form.
  std::pair<std::size_t, std::size_t> core_shape() const { return core_shape_; }
  /// True when entries outgrew 64 bits and the elimination ran on big integers.
  bool used_big_integers() const { return big_; }

  AbelianInvariants cokernel() const;

  /// Orders of the cokernel generators (0 = infinite). Units are dropped.
  const std::vector<Integer>& generator_orders() const { return orders_; }
  /// A vector of Z^rows representing generator i.
  SparseVector generator(std::size_t i) const;
  /// Coordinates of the class of x against generator_orders(); entries are
  /// reduced modulo the generator order where it is finite.
  std::vector<Integer> coordinates(const SparseVector& x) const;

 private:
  template <class T>
  struct Step {
    std::int32_t pivot_row;
    std::int32_t unit;
    std::vector<std::pair<std::int32_t, T>> column;
  };
  template <class T>
  void eliminate(const SparseMatrix& a);
  template <class T>
  void forward(std::vector<Integer>& x, const std::vector<Step<T>>& log) const;

  std::size_t rows_;
  std::size_t pivots_ = 0;
  std::size_t core_rank_ = 0;
  std::pair<std::size_t, std::size_t> core_shape_{0, 0};
  bool big_ = false;
  std::vector<Step<std::int64_t>> small_log_;
  std::vector<Step<Integer>> big_log_;

  // Surviving rows, split into those meeting the core and those that are zero.
  std::vector<std::int32_t> core_rows_;
  std::vector<std::int32_t> zero_rows_;
  std::vector<Integer> core_diagonal_;  // length core_rows_.size(), 0 past rank
  IntMatrix left_;                      // U of the core Smith form
  IntMatrix left_inverse_;

  // Generator bookkeeping: slot index into [core slots..., zero rows...].
  std::vector<std::size_t> generator_slots_;
  std::vector<Integer> orders_;
};

}  // namespace hnnkit::grphom
