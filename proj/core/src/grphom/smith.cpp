#include "hnnkit/grphom/smith.hpp"

#include <algorithm>

namespace hnnkit::grphom {

namespace {

// Applies elementary operations to A and mirrors them on the requested
// transforms so that U * A_original * V == A_current at every step.
class SmithWorker {
 public:
  SmithWorker(IntMatrix a, SmithOptions options) : a_(std::move(a)), options_(options) {
    if (options_.left) {
      u_ = IntMatrix::identity(a_.rows());
      u_inv_ = IntMatrix::identity(a_.rows());
    }
    if (options_.right) v_ = IntMatrix::identity(a_.cols());
  }

  SmithForm run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
      if (!reduce_at(t)) break;
    }
    SmithForm form;
    form.rows = m;
    form.cols = n;
    form.rank = t;
    form.diagonal.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) form.diagonal[i] = a_(i, i);
    if (options_.left) {
      form.left = std::move(u_);
      form.left_inverse = std::move(u_inv_);
    }
    if (options_.right) form.right = std::move(v_);
    return form;
  }

 private:
  void row_add(std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    a_.add_row_multiple(target, source, q);
    if (options_.left) {
      u_.add_row_multiple(target, source, q);
      u_inv_.add_col_multiple(source, target, -q);
    }
  }
  void col_add(std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    a_.add_col_multiple(target, source, q);
    if (options_.right) v_.add_col_multiple(target, source, q);
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_rows(i, j);
    if (options_.left) {
      u_.swap_rows(i, j);
      u_inv_.swap_cols(i, j);
    }
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    a_.swap_cols(i, j);
    if (options_.right) v_.swap_cols(i, j);
  }
  void row_negate(std::size_t i) {
    a_.negate_row(i);
    if (options_.left) {
      u_.negate_row(i);
      u_inv_.negate_col(i);
    }
  }

  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    std::size_t best_r = m, best_c = n;
    Integer best;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c) {
        const Integer& x = a_(r, c);
        if (x == 0) continue;
        Integer ax = abs_value(x);
        if (best_r == m || ax < best) {
          best = ax;
          best_r = r;
          best_c = c;
          if (best == 1) goto found;
        }
      }
    if (best_r == m) return false;
  found:
    row_swap(t, best_r);
    col_swap(t, best_c);
    return true;
  }

  bool reduce_at(std::size_t t) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    if (!place_pivot(t)) return false;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a_(r, t) == 0) continue;
        Integer q = a_(r, t) / a_(t, t);
        row_add(r, t, -q);
        if (a_(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a_(t, c) == 0) continue;
        Integer q = a_(t, c) / a_(t, t);
        col_add(c, t, -q);
        if (a_(t, c) != 0) clean = false;
      }
      if (!clean) {
        place_pivot(t);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t r = t + 1; r < m && divisible; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a_(r, c) != 0 && a_(r, c) % a_(t, t) != 0) {
            row_add(t, r, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a_(t, t) < 0) row_negate(t);
    return true;
  }

  IntMatrix a_;
  SmithOptions options_;
  IntMatrix u_, u_inv_, v_;
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  return {diagonal.begin(), diagonal.begin() + static_cast<std::ptrdiff_t>(rank)};
}

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i)
    if (diagonal[i] > 1) out.push_back(diagonal[i]);
  return out;
}

IntMatrix SmithForm::diagonal_matrix() const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

SmithForm smith_normal_form(IntMatrix a, SmithOptions options) {
  return SmithWorker(std::move(a), options).run();
}

}  // namespace hnnkit::grphom
