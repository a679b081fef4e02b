#include "hnnkit/fingrp/todd_coxeter.hpp"

#include <algorithm>

#include "hnnkit/error.hpp"

namespace hnnkit::fingrp {

namespace {

// HLT enumeration with lookahead. Column 2g is generator g, column 2g+1 its
// inverse.
class Enumerator {
 public:
  Enumerator(const pres::Presentation& p, CosetOptions options) : cap_(options.max_cosets) {
    cols_ = 2 * p.generator_count();
    for (const auto& r : p.relators()) {
      std::vector<int> cols;
      for (pres::Letter l : r.letters()) cols.push_back(2 * pres::generator_of(l) + (l < 0 ? 1 : 0));
      relator_length_ += cols.size();
      relators_.push_back(std::move(cols));
    }
    if (cap_ < 1) throw BudgetExceeded("coset limit is zero");
    table_.reserve(cap_ * static_cast<std::size_t>(std::max(cols_, 1)));
    new_coset();
  }

  void run() {
    std::size_t headroom = relator_length_ + static_cast<std::size_t>(cols_) + 1;
    for (int alpha = 0; alpha < count_; ++alpha) {
      if (!live(alpha)) continue;
      if (static_cast<std::size_t>(count_) + headroom > cap_) {
        lookahead();
        alpha = compact(alpha);
        if (static_cast<std::size_t>(count_) + headroom > cap_)
          throw BudgetExceeded("coset enumeration exceeded " + std::to_string(cap_) + " cosets");
        if (!live(alpha)) continue;
      }
      for (const auto& r : relators_) {
        scan_and_fill(alpha, r);
        if (!live(alpha)) break;
      }
      if (!live(alpha)) continue;
      for (int x = 0; x < cols_; ++x)
        if (entry(alpha, x) < 0) define(alpha, x);
    }
    compact(0);
  }

  int size() const { return count_; }
  int entry(int c, int x) const { return table_[static_cast<std::size_t>(c * cols_ + x)]; }
  int columns() const { return cols_; }
  CosetStats stats;

 private:
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int& slot(int c, int x) { return table_[static_cast<std::size_t>(c * cols_ + x)]; }

  int new_coset() {
    int c = count_++;
    table_.resize(static_cast<std::size_t>(count_ * cols_), -1);
    parent_.push_back(c);
    ++stats.defined;
    ++live_;
    stats.peak = std::max(stats.peak, static_cast<std::size_t>(live_));
    return c;
  }

  void define(int c, int x) {
    if (static_cast<std::size_t>(count_) >= cap_) throw BudgetExceeded("coset enumeration exceeded " + std::to_string(cap_) + " cosets");
    int d = new_coset();
    slot(c, x) = d;
    slot(d, x ^ 1) = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < cols_; ++x) {
        int f = entry(e, x);
        if (f < 0) continue;
        slot(f, x ^ 1) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, entry(e1, x), queue);
        } else if (entry(f1, x ^ 1) >= 0) {
          merge(e1, entry(f1, x ^ 1), queue);
        } else {
          slot(e1, x) = f1;
          slot(f1, x ^ 1) = e1;
        }
      }
    }
  }

  // Scans r at coset a; returns false if the scan is incomplete. With
  // fill=true missing entries are defined so the scan always completes.
  bool scan(int a, const std::vector<int>& r, bool fill) {
    if (r.empty()) return true;
    int n = static_cast<int>(r.size());
    int f = a, i = 0;
    int b = a, j = n - 1;
    while (true) {
      while (i <= j && entry(f, r[static_cast<std::size_t>(i)]) >= 0) f = entry(f, r[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != a) coincidence(f, a);
        return true;
      }
      while (j >= i && entry(b, r[static_cast<std::size_t>(j)] ^ 1) >= 0) b = entry(b, r[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        // Deduction.
        int x = r[static_cast<std::size_t>(i)];
        slot(f, x) = b;
        slot(b, x ^ 1) = f;
        return true;
      }
      if (!fill) return false;
      define(f, r[static_cast<std::size_t>(i)]);
    }
  }

  void scan_and_fill(int a, const std::vector<int>& r) { scan(a, r, true); }

  void lookahead() {
    ++stats.lookaheads;
    for (int c = 0; c < count_; ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan(c, r, false);
      }
    }
  }

  // Renumbers live cosets consecutively; returns the new index of the first
  // live coset at or after `alpha`.
  int compact(int alpha) {
    std::vector<int> index(static_cast<std::size_t>(count_), -1);
    int next = 0;
    for (int c = 0; c < count_; ++c)
      if (live(c)) index[static_cast<std::size_t>(c)] = next++;
    std::vector<int> table(static_cast<std::size_t>(next * cols_), -1);
    for (int c = 0; c < count_; ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        int t = entry(c, x);
        if (t >= 0) table[static_cast<std::size_t>(index[static_cast<std::size_t>(c)] * cols_ + x)] = index[static_cast<std::size_t>(rep(t))];
      }
    }
    int new_alpha = next;
    for (int c = alpha; c < count_; ++c)
      if (live(c)) {
        new_alpha = index[static_cast<std::size_t>(c)];
        break;
      }
    table_ = std::move(table);
    count_ = next;
    live_ = next;
    parent_.resize(static_cast<std::size_t>(next));
    for (int c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    return new_alpha;
  }

  std::size_t cap_;
  int cols_ = 0;
  std::vector<std::vector<int>> relators_;
  std::size_t relator_length_ = 0;
  std::vector<int> table_;
  std::vector<int> parent_;
  int count_ = 0;
  int live_ = 0;
};

}  // namespace

FiniteGroup from_presentation(const pres::Presentation& p, CosetOptions options, CosetStats* stats) {
  Enumerator e(p, options);
  e.run();
  int n = e.size(), cols = e.columns();
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < cols; ++x)
      if (e.entry(c, x) < 0) throw Error("coset table incomplete after enumeration");

  // Standardize: breadth-first order from coset 0, recording the tree edge
  // that first reaches each coset.
  std::vector<int> order{0}, label(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1),
      via(static_cast<std::size_t>(n), -1);
  label[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int c = order[i];
    for (int x = 0; x < cols; ++x) {
      int d = e.entry(c, x);
      if (label[static_cast<std::size_t>(d)] >= 0) continue;
      label[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
      parent[static_cast<std::size_t>(order.size())] = static_cast<int>(i);
      via[static_cast<std::size_t>(order.size())] = x;
      order.push_back(d);
    }
  }
  if (static_cast<int>(order.size()) != n) throw Error("coset table is not connected");
  auto act = [&](int element, int x) { return label[static_cast<std::size_t>(e.entry(order[static_cast<std::size_t>(element)], x))]; };

  // Cosets of the trivial subgroup are the group elements; j = parent(j)*s
  // gives mul(i, j) = mul(i, parent(j)) * s.
  std::vector<Element> table(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    table[static_cast<std::size_t>(i * n)] = i;
    for (int j = 1; j < n; ++j)
      table[static_cast<std::size_t>(i * n + j)] =
          act(table[static_cast<std::size_t>(i * n + parent[static_cast<std::size_t>(j)])], via[static_cast<std::size_t>(j)]);
  }
  std::vector<Element> gens;
  for (int g = 0; g < p.generator_count(); ++g) gens.push_back(act(0, 2 * g));
  if (stats) {
    *stats = e.stats;
    stats->index = static_cast<std::size_t>(n);
  }
  return FiniteGroup(std::move(table), std::move(gens), p.generator_names(), p);
}

}  // namespace hnnkit::fingrp
