#include "hnnkit/grphom/sparse.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "hnnkit/grphom/smith.hpp"

namespace hnnkit::grphom {

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (value == 0) return;
  auto& c = columns_[col];
  for (auto it = c.begin(); it != c.end(); ++it) {
    if (it->first == static_cast<std::int32_t>(row)) {
      it->second += value;
      if (it->second == 0) c.erase(it);
      return;
    }
  }
  c.emplace_back(static_cast<std::int32_t>(row), value);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  std::unordered_map<std::int32_t, Integer> acc;
  for (const auto& [j, v] : x)
    for (const auto& [r, a] : columns_[static_cast<std::size_t>(j)]) acc[r] += v * a;
  SparseVector out;
  for (auto& [r, v] : acc)
    if (v != 0) out.emplace_back(r, std::move(v));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& [r, v] : columns_[c]) m(static_cast<std::size_t>(r), c) = v;
  return m;
}

bool SparseMatrix::product_is_zero(const SparseMatrix& other) const {
  if (other.rows() != cols()) throw std::invalid_argument("SparseMatrix: dimension mismatch");
  for (std::size_t c = 0; c < other.cols(); ++c) {
    SparseVector x;
    for (const auto& [r, v] : other.column(c)) x.emplace_back(r, v);
    if (!apply(x).empty()) return false;
  }
  return true;
}

namespace {

struct Overflow {};

inline void sub_product(std::int64_t& x, std::int64_t f, std::int64_t v) {
  std::int64_t p;
  if (__builtin_mul_overflow(f, v, &p) || __builtin_sub_overflow(x, p, &x)) throw Overflow{};
}
inline void sub_product(Integer& x, const Integer& f, const Integer& v) { x -= f * v; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

}  // namespace

CokernelReducer::CokernelReducer(const SparseMatrix& a) : rows_(a.rows()) {
  try {
    eliminate<std::int64_t>(a);
  } catch (const Overflow&) {
    small_log_.clear();
    big_ = true;
    eliminate<Integer>(a);
  }
}

template <class T>
void CokernelReducer::eliminate(const SparseMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::unordered_map<std::int32_t, T>> row(m);
  std::vector<std::vector<std::int32_t>> col(n);
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [r, v] : a.column(c)) {
      row[static_cast<std::size_t>(r)].emplace(static_cast<std::int32_t>(c), T(v));
      col[c].push_back(r);
    }
  std::vector<char> row_alive(m, 1), col_alive(n, 1);

  using Item = std::pair<std::size_t, std::int32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t c = 0; c < n; ++c)
    if (!col[c].empty()) heap.emplace(col[c].size(), static_cast<std::int32_t>(c));

  auto erase_from_col = [&](std::int32_t c, std::int32_t r) {
    auto& v = col[static_cast<std::size_t>(c)];
    auto it = std::find(v.begin(), v.end(), r);
    if (it != v.end()) {
      *it = v.back();
      v.pop_back();
    }
  };

  std::vector<Step<T>> log;
  std::vector<std::pair<std::int32_t, T>> pivot_row;
  std::vector<std::int32_t> touched;
  while (!heap.empty()) {
    auto [count, c] = heap.top();
    heap.pop();
    const auto cu = static_cast<std::size_t>(c);
    if (!col_alive[cu] || col[cu].size() != count || count == 0) continue;

    // Markowitz: the unit entry of this column on the shortest row.
    std::int32_t best = -1;
    std::size_t best_len = 0;
    for (std::int32_t r : col[cu]) {
      const T& v = row[static_cast<std::size_t>(r)].at(c);
      if (!is_unit(v)) continue;
      std::size_t len = row[static_cast<std::size_t>(r)].size();
      if (best < 0 || len < best_len || (len == best_len && r < best)) {
        best = r;
        best_len = len;
      }
    }
    if (best < 0) continue;  // re-queued if a later update touches this column

    const auto pr = static_cast<std::size_t>(best);
    const std::int32_t unit = row[pr].at(c) == 1 ? 1 : -1;
    Step<T> step{best, unit, {}};
    for (std::int32_t r : col[cu])
      if (r != best) step.column.emplace_back(r, row[static_cast<std::size_t>(r)].at(c));
    std::sort(step.column.begin(), step.column.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    pivot_row.clear();
    for (const auto& [j, v] : row[pr])
      if (j != c) pivot_row.emplace_back(j, v);

    touched.clear();
    for (const auto& [r, av] : step.column) {
      auto& target = row[static_cast<std::size_t>(r)];
      T f = av;
      if (unit < 0) f = -f;
      for (const auto& [j, v] : pivot_row) {
        auto it = target.find(j);
        if (it == target.end()) {
          T x = 0;
          sub_product(x, f, v);
          target.emplace(j, std::move(x));
          col[static_cast<std::size_t>(j)].push_back(r);
        } else {
          sub_product(it->second, f, v);
          if (it->second == 0) {
            target.erase(it);
            erase_from_col(j, r);
          }
        }
        touched.push_back(j);
      }
      target.erase(c);
    }
    for (const auto& [j, v] : row[pr]) {
      if (j == c) continue;
      erase_from_col(j, best);
      touched.push_back(j);
    }
    row[pr].clear();
    row_alive[pr] = 0;
    col[cu].clear();
    col_alive[cu] = 0;
    log.push_back(std::move(step));

    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::int32_t j : touched) {
      const auto ju = static_cast<std::size_t>(j);
      if (col_alive[ju] && !col[ju].empty()) heap.emplace(col[ju].size(), j);
    }
  }

  pivots_ = log.size();
  if constexpr (std::is_same_v<T, std::int64_t>)
    small_log_ = std::move(log);
  else
    big_log_ = std::move(log);

  // Residual core.
  std::vector<std::int32_t> core_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (col_alive[c] && !col[c].empty()) core_cols.push_back(static_cast<std::int32_t>(c));
  core_rows_.clear();
  zero_rows_.clear();
  for (std::size_t r = 0; r < m; ++r) {
    if (!row_alive[r]) continue;
    (row[r].empty() ? zero_rows_ : core_rows_).push_back(static_cast<std::int32_t>(r));
  }
  std::unordered_map<std::int32_t, std::size_t> col_index;
  for (std::size_t i = 0; i < core_cols.size(); ++i) col_index[core_cols[i]] = i;
  IntMatrix core(core_rows_.size(), core_cols.size());
  for (std::size_t i = 0; i < core_rows_.size(); ++i)
    for (const auto& [j, v] : row[static_cast<std::size_t>(core_rows_[i])]) core(i, col_index.at(j)) = Integer(v);
  core_shape_ = {core.rows(), core.cols()};

  SmithForm s = smith_normal_form(std::move(core), SmithOptions{true, false});
  core_rank_ = s.rank;
  core_diagonal_.assign(core_rows_.size(), 0);
  for (std::size_t i = 0; i < s.rank; ++i) core_diagonal_[i] = s.diagonal[i];
  left_ = std::move(*s.left);
  left_inverse_ = std::move(*s.left_inverse);

  generator_slots_.clear();
  orders_.clear();
  for (std::size_t i = 0; i < core_rows_.size(); ++i) {
    if (core_diagonal_[i] == 1) continue;
    generator_slots_.push_back(i);
    orders_.push_back(core_diagonal_[i]);
  }
  // Finite orders first, in divisibility order, then free generators.
  std::vector<std::size_t> perm(orders_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    bool fx = orders_[x] == 0, fy = orders_[y] == 0;
    return fx != fy ? fy : false;
  });
  std::vector<std::size_t> slots;
  std::vector<Integer> orders;
  for (std::size_t i : perm) {
    slots.push_back(generator_slots_[i]);
    orders.push_back(orders_[i]);
  }
  for (std::size_t i = 0; i < zero_rows_.size(); ++i) {
    slots.push_back(core_rows_.size() + i);
    orders.push_back(0);
  }
  generator_slots_ = std::move(slots);
  orders_ = std::move(orders);
}

AbelianInvariants CokernelReducer::cokernel() const { return AbelianInvariants::from_diagonal(orders_); }

template <class T>
void CokernelReducer::forward(std::vector<Integer>& x, const std::vector<Step<T>>& log) const {
  for (const auto& step : log) {
    const Integer& f = x[static_cast<std::size_t>(step.pivot_row)];
    if (f == 0) continue;
    Integer uf = step.unit > 0 ? f : Integer(-f);
    for (const auto& [r, a] : step.column) x[static_cast<std::size_t>(r)] -= Integer(a) * uf;
  }
}

std::vector<Integer> CokernelReducer::coordinates(const SparseVector& v) const {
  std::vector<Integer> x(rows_);
  for (const auto& [r, a] : v) x[static_cast<std::size_t>(r)] += a;
  if (big_)
    forward(x, big_log_);
  else
    forward(x, small_log_);

  std::vector<Integer> slot(core_rows_.size() + zero_rows_.size());
  for (std::size_t i = 0; i < core_rows_.size(); ++i) {
    Integer s = 0;
    for (std::size_t k = 0; k < core_rows_.size(); ++k) {
      const Integer& y = x[static_cast<std::size_t>(core_rows_[k])];
      if (y != 0) s += left_(i, k) * y;
    }
    slot[i] = std::move(s);
  }
  for (std::size_t i = 0; i < zero_rows_.size(); ++i)
    slot[core_rows_.size() + i] = x[static_cast<std::size_t>(zero_rows_[i])];

  std::vector<Integer> out(orders_.size());
  for (std::size_t g = 0; g < orders_.size(); ++g) {
    out[g] = slot[generator_slots_[g]];
    if (orders_[g] != 0) out[g] = mod_floor(out[g], orders_[g]);
  }
  return out;
}

SparseVector CokernelReducer::generator(std::size_t i) const {
  const std::size_t s = generator_slots_.at(i);
  SparseVector out;
  if (s >= core_rows_.size()) {
    out.emplace_back(zero_rows_[s - core_rows_.size()], Integer(1));
    return out;
  }
  // Pivot-row entries of the lift are zero, so the transformed coordinates
  // are already a preimage in the original basis.
  for (std::size_t k = 0; k < core_rows_.size(); ++k)
    if (left_inverse_(k, s) != 0) out.emplace_back(core_rows_[k], left_inverse_(k, s));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace hnnkit::grphom
