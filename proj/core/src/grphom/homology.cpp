#include "hnnkit/grphom/homology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hnnkit/embedded_data.hpp"
#include "hnnkit/error.hpp"

namespace hnnkit::grphom {

using fingrp::Element;

std::size_t BarBasis::size() const {
  std::size_t s = 1;
  for (int i = 0; i < degree; ++i) s *= static_cast<std::size_t>(group_order - 1);
  return s;
}

std::size_t BarBasis::index(std::span<const Element> tuple) const {
  std::size_t idx = 0;
  for (Element e : tuple) idx = idx * static_cast<std::size_t>(group_order - 1) + static_cast<std::size_t>(e - 1);
  return idx;
}

std::vector<Element> BarBasis::tuple(std::size_t index) const {
  std::vector<Element> t(static_cast<std::size_t>(degree));
  const std::size_t base = static_cast<std::size_t>(group_order - 1);
  for (int i = degree; i-- > 0;) {
    t[static_cast<std::size_t>(i)] = static_cast<Element>(index % base) + 1;
    index /= base;
  }
  return t;
}

SparseMatrix bar_boundary(const fingrp::FiniteGroup& g, int k) {
  if (k < 1) throw Error("bar boundary degree must be positive");
  const int n = g.order();
  BarBasis source{n, k}, target{n, k - 1};
  SparseMatrix d(target.size(), n == 1 ? 0 : source.size());
  if (n == 1) return d;
  std::vector<Element> face(static_cast<std::size_t>(k - 1));
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto t = source.tuple(col);
    // Face 0 drops g_1; face k drops g_k; face i multiplies g_i g_{i+1}.
    for (int i = 0; i <= k; ++i) {
      bool degenerate = false;
      std::size_t w = 0;
      for (int j = 0; j < k; ++j) {
        if (i == 0 && j == 0) continue;
        if (i == k && j == k - 1) continue;
        if (i > 0 && i < k && j == i) continue;
        Element e = t[static_cast<std::size_t>(j)];
        if (i > 0 && i < k && j == i - 1) e = g.mul(e, t[static_cast<std::size_t>(i)]);
        if (e == 0) degenerate = true;
        face[w++] = e;
      }
      if (degenerate) continue;
      d.add(target.index(face), col, (i % 2 == 0) ? 1 : -1);
    }
  }
  return d;
}

std::vector<Integer> HomologyGroup::coordinates(const SparseVector& cycle) const {
  auto all = reducer->coordinates(cycle);
  all.resize(orders.size());
  return all;
}

namespace {

HomologyGroup compute_homology(const fingrp::FiniteGroup& g, int k);

// Results keyed by multiplication table and degree. Entries are immutable
// and share their reducer, so handing out copies is cheap.
struct HomologyCache {
  std::mutex mutex;
  std::map<std::pair<std::vector<fingrp::Element>, int>, HomologyGroup> entries;
};

HomologyCache& homology_cache() {
  static HomologyCache cache;
  return cache;
}

}  // namespace

HomologyGroup homology(const fingrp::FiniteGroup& g, int k, HomologyOptions options) {
  if (k < 0) throw Error("homology degree must be non-negative");
  const int n = g.order();
  BarBasis next{n, k + 1};
  if (n > 1 && next.size() > options.max_cells)
    throw BudgetExceeded("H_" + std::to_string(k) + " of a group of order " + std::to_string(n) + " needs " +
                         std::to_string(next.size()) + " cells (budget " + std::to_string(options.max_cells) + ")");
  if (!options.cache) return compute_homology(g, k);
  auto& cache = homology_cache();
  auto key = std::pair(g.table(), k);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
  }
  HomologyGroup h = compute_homology(g, k);
  std::lock_guard lock(cache.mutex);
  return cache.entries.emplace(std::move(key), std::move(h)).first->second;
}

void clear_homology_cache() {
  auto& cache = homology_cache();
  std::lock_guard lock(cache.mutex);
  cache.entries.clear();
}

namespace {

HomologyGroup compute_homology(const fingrp::FiniteGroup& g, int k) {
  const int n = g.order();

  SparseMatrix d_next = bar_boundary(g, k + 1);
  std::size_t rank_in = 0;
  if (k >= 1) {
    SparseMatrix d_k = bar_boundary(g, k);
    if (!d_k.product_is_zero(d_next)) throw Error("bar complex boundary does not square to zero");
    rank_in = CokernelReducer(d_k).rank();
  }
  auto reducer = std::make_shared<const CokernelReducer>(d_next);

  HomologyGroup h;
  h.degree = k;
  h.group_order = n;
  h.reducer = reducer;
  const auto& orders = reducer->generator_orders();
  std::size_t finite = 0;
  while (finite < orders.size() && orders[finite] != 0) ++finite;
  const std::size_t free_rank = orders.size() - finite - rank_in;
  if (k > 0 && free_rank > 0) throw Error("finite group with free homology in positive degree");
  // Torsion classes of the cokernel are cycles; in degree 0 the free class
  // (the empty tuple) is a cycle as well.
  const std::size_t kept = k == 0 ? orders.size() : finite;
  for (std::size_t i = 0; i < kept; ++i) {
    h.orders.push_back(orders[i]);
    h.representatives.push_back(reducer->generator(i));
  }
  if (k > 0) {
    SparseMatrix d_k = bar_boundary(g, k);
    for (const auto& z : h.representatives)
      if (!d_k.apply(z).empty()) throw Error("homology representative is not a cycle");
  }
  h.invariants = AbelianInvariants::from_diagonal(h.orders);
  return h;
}

}  // namespace

SparseVector push_forward(const fingrp::FiniteHom& f, int degree, const SparseVector& cycle) {
  BarBasis sb{f.source->order(), degree}, tb{f.target->order(), degree};
  std::map<std::int32_t, Integer> image;
  for (const auto& [idx, v] : cycle) {
    auto t = sb.tuple(static_cast<std::size_t>(idx));
    bool degenerate = false;
    for (auto& e : t) {
      e = f(e);
      if (e == 0) degenerate = true;
    }
    if (!degenerate) image[static_cast<std::int32_t>(tb.index(t))] += v;
  }
  SparseVector z;
  for (auto& [idx, v] : image)
    if (v != 0) z.emplace_back(idx, std::move(v));
  return z;
}

AbelianHom induced_map(const fingrp::FiniteHom& f, const HomologyGroup& source, const HomologyGroup& target) {
  if (source.degree != target.degree) throw Error("induced map between different degrees");
  if (source.group_order != f.source->order() || target.group_order != f.target->order())
    throw Error("induced map: homology computed for different groups");
  AbelianHom out{source.orders, target.orders, IntMatrix(target.orders.size(), source.orders.size())};
  for (std::size_t j = 0; j < source.representatives.size(); ++j) {
    auto coords = target.coordinates(push_forward(f, source.degree, source.representatives[j]));
    for (std::size_t i = 0; i < coords.size(); ++i) out.matrix(i, j) = coords[i];
  }
  return out;
}

std::optional<std::vector<std::vector<int>>> coordinates_in_basis(const HomologyGroup& h,
                                                                  const std::vector<SparseVector>& basis,
                                                                  const std::vector<SparseVector>& cycles, int p) {
  const std::size_t m = h.orders.size();
  if (basis.size() != m) return std::nullopt;
  for (const auto& d : h.orders)
    if (d != p) throw Error("coordinates_in_basis needs an elementary abelian group of the given exponent");
  auto residues = [&](const SparseVector& z) {
    std::vector<int> r;
    for (const auto& c : h.coordinates(z)) r.push_back(static_cast<int>(mod_floor(c, p)));
    return r;
  };
  // Solve B x = y over Z/p where column i of B holds the coordinates of basis[i].
  std::vector<std::vector<int>> mat(m, std::vector<int>(m + cycles.size()));
  for (std::size_t i = 0; i < m; ++i) {
    auto r = residues(basis[i]);
    for (std::size_t row = 0; row < m; ++row) mat[row][i] = r[row];
  }
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    auto r = residues(cycles[j]);
    for (std::size_t row = 0; row < m; ++row) mat[row][m + j] = r[row];
  }
  auto inverse_mod = [p](int a) {
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    return 0;
  };
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && mat[piv][col] == 0) ++piv;
    if (piv == m) return std::nullopt;
    std::swap(mat[piv], mat[col]);
    const int inv = inverse_mod(mat[col][col]);
    for (auto& v : mat[col]) v = v * inv % p;
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || mat[row][col] == 0) continue;
      const int f = mat[row][col];
      for (std::size_t c = 0; c < mat[row].size(); ++c) mat[row][c] = ((mat[row][c] - f * mat[col][c]) % p + p) % p;
    }
  }
  std::vector<std::vector<int>> out(cycles.size(), std::vector<int>(m));
  for (std::size_t j = 0; j < cycles.size(); ++j)
    for (std::size_t row = 0; row < m; ++row) out[j][row] = mat[row][m + j];
  return out;
}

SparseVector commutator_cycle(const fingrp::FiniteGroup& g, Element a, Element b) {
  if (g.mul(a, b) != g.mul(b, a)) throw Error("commutator cycle needs commuting elements");
  if (a == 0 || b == 0 || a == b) return {};
  BarBasis basis{g.order(), 2};
  std::vector<Element> ab{a, b}, ba{b, a};
  SparseVector z{{static_cast<std::int32_t>(basis.index(ab)), Integer(1)}, {static_cast<std::int32_t>(basis.index(ba)), Integer(-1)}};
  std::sort(z.begin(), z.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return z;
}

const std::vector<KnownFact>& known_facts() {
  static const std::vector<KnownFact> facts = [] {
    std::vector<KnownFact> out;
    std::istringstream in{std::string(data::known_facts_txt)};
    std::string line;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> fields;
      std::size_t pos = 0;
      for (int i = 0; i < 3; ++i) {
        std::size_t bar = line.find('|', pos);
        fields.push_back(trim(line.substr(pos, bar - pos)));
        pos = bar + 1;
      }
      fields.push_back(trim(line.substr(pos)));
      out.push_back(KnownFact{fields[0], std::stoi(fields[1]), parse_abelian_invariants(fields[2]), fields[3]});
    }
    return out;
  }();
  return facts;
}

std::optional<KnownFact> known_fact(const std::string& group, int degree) {
  for (const auto& f : known_facts())
    if (f.group == group && f.degree == degree) return f;
  return std::nullopt;
}

}  // namespace hnnkit::grphom
