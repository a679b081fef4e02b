#include "hnnkit/tri4/pseudomanifold.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "hnnkit/error.hpp"
#include "hnnkit/grphom/integer.hpp"
#include "hnnkit/grphom/smith.hpp"

namespace hnnkit::tri4 {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[static_cast<std::size_t>(g[i])];
  return h;
}

int parity(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions & 1;
}

namespace {

bool is_perm(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

unsigned map_mask(const Perm& p, unsigned mask) {
  unsigned out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (mask >> i & 1u) out |= 1u << p[i];
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

}  // namespace

Pseudomanifold::Pseudomanifold(int dimension, int simplices)
    : dim_(dimension),
      glue_(static_cast<std::size_t>(simplices), std::vector<std::optional<Gluing>>(static_cast<std::size_t>(dimension + 1))) {
  if (dimension < 1 || dimension > 6) throw Error("pseudomanifold: unsupported dimension");
}

void Pseudomanifold::glue(int simplex, int facet, int target, const Perm& perm) {
  if (simplex < 0 || simplex >= size() || target < 0 || target >= size()) throw Error("glue: simplex out of range");
  if (!is_perm(perm, dim_ + 1)) throw Error("glue: not a permutation");
  Gluing g{target, perm}, back{simplex, inverse(perm)};
  auto& a = glue_[static_cast<std::size_t>(simplex)][static_cast<std::size_t>(facet)];
  auto& b = glue_[static_cast<std::size_t>(target)][static_cast<std::size_t>(perm[static_cast<std::size_t>(facet)])];
  if ((a && *a != g) || (b && *b != back)) throw Error("glue: facet already glued");
  a = g;
  b = back;
}

void Pseudomanifold::set_one_sided(int simplex, int facet, std::optional<Gluing> g) {
  glue_.at(static_cast<std::size_t>(simplex)).at(static_cast<std::size_t>(facet)) = std::move(g);
}

void Pseudomanifold::validate() const {
  const int n = dim_ + 1;
  for (int p = 0; p < size(); ++p)
    for (int i = 0; i < n; ++i) {
      const auto& g = gluing(p, i);
      if (!g) continue;
      const std::string where = "simplex " + std::to_string(p) + " facet " + std::to_string(i);
      if (g->target < 0 || g->target >= size()) throw Error(where + ": target out of range");
      if (!is_perm(g->perm, n)) throw Error(where + ": vertex map is not a permutation");
      const int j = g->perm[static_cast<std::size_t>(i)];
      if (g->target == p && j == i && g->perm == identity_perm(n))
        throw Error(where + ": facet glued to itself by the identity");
      const auto& back = gluing(g->target, j);
      if (!back || back->target != p || back->perm != inverse(g->perm))
        throw Error(where + ": gluing is not reciprocated by simplex " + std::to_string(g->target) + " facet " +
                    std::to_string(j));
    }
}

std::size_t Pseudomanifold::boundary_facets() const {
  std::size_t count = 0;
  for (const auto& row : glue_)
    for (const auto& g : row) count += !g;
  return count;
}

bool Pseudomanifold::is_connected() const {
  if (size() == 0) return true;
  UnionFind uf(static_cast<std::size_t>(size()));
  int parts = size();
  for (int p = 0; p < size(); ++p)
    for (const auto& g : glue_[static_cast<std::size_t>(p)])
      if (g && uf.unite(p, g->target)) --parts;
  return parts == 1;
}

std::vector<int> FaceLattice::f_vector() const {
  std::vector<int> f(static_cast<std::size_t>(dimension + 1), 0);
  for (int d : orbit_dimension) ++f[static_cast<std::size_t>(d)];
  return f;
}

long FaceLattice::euler_characteristic() const {
  long chi = 0;
  for (int d : orbit_dimension) chi += d % 2 == 0 ? 1 : -1;
  return chi;
}

std::vector<int> FaceLattice::orbits_of_dimension(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < orbit_dimension.size(); ++i)
    if (orbit_dimension[i] == k) out.push_back(static_cast<int>(i));
  return out;
}

FaceLattice face_lattice(const Pseudomanifold& m) {
  const int n = m.dimension() + 1;
  const unsigned masks = 1u << n;
  UnionFind uf(static_cast<std::size_t>(m.size()) * masks);
  auto id = [&](int s, unsigned mask) { return static_cast<int>(static_cast<unsigned>(s) * masks + mask); };
  for (int p = 0; p < m.size(); ++p)
    for (int i = 0; i < n; ++i) {
      const auto& g = m.gluing(p, i);
      if (!g) continue;
      const unsigned facet = (masks - 1) & ~(1u << i);
      for (unsigned sub = facet; sub; sub = (sub - 1) & facet) uf.unite(id(p, sub), id(g->target, map_mask(g->perm, sub)));
    }
  FaceLattice f;
  f.dimension = m.dimension();
  f.orbit.assign(static_cast<std::size_t>(m.size()), std::vector<int>(masks, -1));
  std::vector<int> label(static_cast<std::size_t>(m.size()) * masks, -1);
  for (int p = 0; p < m.size(); ++p)
    for (unsigned mask = 1; mask < masks; ++mask) {
      int root = uf.find(id(p, mask));
      int& l = label[static_cast<std::size_t>(root)];
      if (l < 0) {
        l = static_cast<int>(f.orbit_dimension.size());
        f.orbit_dimension.push_back(std::popcount(mask) - 1);
        f.representative.emplace_back(p, mask);
        f.orbit_size.push_back(0);
      }
      f.orbit[static_cast<std::size_t>(p)][mask] = l;
      ++f.orbit_size[static_cast<std::size_t>(l)];
    }
  return f;
}

std::optional<std::vector<int>> orientation(const Pseudomanifold& m) {
  if (!m.is_connected()) throw Error("orientation: triangulation is disconnected");
  std::vector<int> sign(static_cast<std::size_t>(m.size()), 0);
  if (m.size() == 0) return sign;
  sign[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int i = 0; i <= m.dimension(); ++i) {
      const auto& g = m.gluing(p, i);
      if (!g) continue;
      // An odd extension is compatible with equal signs.
      const int want = parity(g->perm) ? sign[static_cast<std::size_t>(p)] : -sign[static_cast<std::size_t>(p)];
      int& s = sign[static_cast<std::size_t>(g->target)];
      if (s == 0) {
        s = want;
        queue.push_back(g->target);
      } else if (s != want) {
        return std::nullopt;
      }
    }
  }
  return sign;
}

std::vector<DualEdge> dual_edges(const Pseudomanifold& m) {
  std::vector<DualEdge> edges;
  for (int p = 0; p < m.size(); ++p)
    for (int i = 0; i <= m.dimension(); ++i) {
      const auto& g = m.gluing(p, i);
      if (!g) continue;
      const int q = g->target, j = g->perm[static_cast<std::size_t>(i)];
      if (q == p && j == i) throw Error("dual graph: a facet is folded onto itself");
      if (std::pair(p, i) < std::pair(q, j)) edges.push_back({p, i, q, j});
    }
  return edges;
}

DualEdgeIndex index_dual_edges(const Pseudomanifold& m, const std::vector<DualEdge>& edges) {
  DualEdgeIndex idx;
  const auto n = static_cast<std::size_t>(m.dimension() + 1);
  idx.edge.assign(static_cast<std::size_t>(m.size()), std::vector<int>(n, -1));
  idx.outgoing.assign(static_cast<std::size_t>(m.size()), std::vector<bool>(n, false));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& d = edges[e];
    idx.edge[static_cast<std::size_t>(d.from_simplex)][static_cast<std::size_t>(d.from_facet)] = static_cast<int>(e);
    idx.outgoing[static_cast<std::size_t>(d.from_simplex)][static_cast<std::size_t>(d.from_facet)] = true;
    idx.edge[static_cast<std::size_t>(d.to_simplex)][static_cast<std::size_t>(d.to_facet)] = static_cast<int>(e);
  }
  return idx;
}

std::vector<int> bfs_spanning_tree(const Pseudomanifold& m, const std::vector<DualEdge>& edges) {
  const auto idx = index_dual_edges(m, edges);
  std::vector<bool> seen(static_cast<std::size_t>(m.size()), false);
  std::vector<int> tree;
  if (m.size() == 0) return tree;
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int i = 0; i <= m.dimension(); ++i) {
      const auto& g = m.gluing(p, i);
      if (!g || seen[static_cast<std::size_t>(g->target)]) continue;
      seen[static_cast<std::size_t>(g->target)] = true;
      tree.push_back(idx.edge[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)]);
      queue.push_back(g->target);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

namespace {

// Parent crossings of a rooted spanning tree: for each simplex, the
// (simplex, facet) step leading to it from its parent.
struct RootedTree {
  std::vector<std::pair<int, int>> from_parent;  // (-1, -1) at the root
  std::vector<int> parent;
};

RootedTree root_tree(const Pseudomanifold& m, const std::vector<DualEdge>& edges, const std::vector<int>& tree) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(m.size()));
  for (int e : tree) {
    const auto& d = edges[static_cast<std::size_t>(e)];
    adj[static_cast<std::size_t>(d.from_simplex)].emplace_back(d.from_facet, d.to_simplex);
    adj[static_cast<std::size_t>(d.to_simplex)].emplace_back(d.to_facet, d.from_simplex);
  }
  RootedTree t;
  t.from_parent.assign(static_cast<std::size_t>(m.size()), {-1, -1});
  t.parent.assign(static_cast<std::size_t>(m.size()), -2);
  t.parent[0] = -1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (auto [facet, q] : adj[static_cast<std::size_t>(p)]) {
      if (t.parent[static_cast<std::size_t>(q)] != -2) continue;
      t.parent[static_cast<std::size_t>(q)] = p;
      t.from_parent[static_cast<std::size_t>(q)] = {p, facet};
      queue.push_back(q);
    }
  }
  for (int p = 0; p < m.size(); ++p)
    if (t.parent[static_cast<std::size_t>(p)] == -2) throw Error("spanning tree does not reach every simplex");
  return t;
}

// Crossings (simplex, exit facet) from the root down to p.
std::vector<std::pair<int, int>> path_from_root(const RootedTree& t, int p) {
  std::vector<std::pair<int, int>> path;
  while (t.parent[static_cast<std::size_t>(p)] >= 0) {
    path.push_back(t.from_parent[static_cast<std::size_t>(p)]);
    p = t.parent[static_cast<std::size_t>(p)];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// The crossing back through the same facet from the other side.
std::pair<int, int> reverse_crossing(const Pseudomanifold& m, std::pair<int, int> c) {
  const auto& g = m.gluing(c.first, c.second);
  return {g->target, g->perm[static_cast<std::size_t>(c.second)]};
}

pres::Letter crossing_letter(const DualEdgeIndex& idx, const std::vector<int>& gen, std::pair<int, int> c) {
  const int e = idx.edge[static_cast<std::size_t>(c.first)][static_cast<std::size_t>(c.second)];
  const int g = gen[static_cast<std::size_t>(e)];
  if (g < 0) return 0;
  return pres::letter(g, !idx.outgoing[static_cast<std::size_t>(c.first)][static_cast<std::size_t>(c.second)]);
}

pres::Word read_crossings(const DualEdgeIndex& idx, const std::vector<int>& gen, const std::vector<std::pair<int, int>>& cs) {
  std::vector<pres::Letter> letters;
  for (auto c : cs)
    if (auto l = crossing_letter(idx, gen, c)) letters.push_back(l);
  return pres::Word(letters);
}

}  // namespace

DualSpine dual_spine(const Pseudomanifold& m, const std::vector<int>& tree) {
  DualSpine spine;
  spine.edges = dual_edges(m);
  spine.tree = tree;
  std::sort(spine.tree.begin(), spine.tree.end());
  if (static_cast<int>(spine.tree.size()) != m.size() - 1) throw Error("dual spine: tree has the wrong size");
  root_tree(m, spine.edges, spine.tree);  // validates the tree

  spine.generator_of_edge.assign(spine.edges.size(), -1);
  int gens = 0;
  for (std::size_t e = 0; e < spine.edges.size(); ++e)
    if (!std::binary_search(spine.tree.begin(), spine.tree.end(), static_cast<int>(e)))
      spine.generator_of_edge[e] = gens++;
  const auto idx = index_dual_edges(m, spine.edges);

  const auto lattice = face_lattice(m);
  std::vector<pres::Word> relators;
  const int n = m.dimension() + 1;
  for (int o : lattice.orbits_of_dimension(m.dimension() - 2)) {
    auto [p0, mask0] = lattice.representative[static_cast<std::size_t>(o)];
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!(mask0 >> v & 1u)) {
        u = v;
        break;
      }
    struct State {
      int simplex;
      unsigned mask;
      int exit;
      bool operator==(const State&) const = default;
    };
    const State start{p0, mask0, u};
    State s = start;
    std::vector<std::pair<int, int>> crossings;
    bool boundary = false;
    do {
      const auto& g = m.gluing(s.simplex, s.exit);
      if (!g) {
        boundary = true;
        break;
      }
      crossings.emplace_back(s.simplex, s.exit);
      const unsigned mask = map_mask(g->perm, s.mask);
      const int entry = g->perm[static_cast<std::size_t>(s.exit)];
      int other = -1;
      for (int v = 0; v < n; ++v)
        if (!(mask >> v & 1u) && v != entry) other = v;
      s = State{g->target, mask, other};
    } while (!(s == start));
    if (boundary) continue;
    relators.push_back(read_crossings(idx, spine.generator_of_edge, crossings));
  }
  std::vector<std::string> names;
  for (int i = 0; i < gens; ++i) names.push_back("g" + std::to_string(i));
  spine.presentation = pres::Presentation(names, relators);
  return spine;
}

std::vector<std::vector<int>> all_spanning_trees(const Pseudomanifold& m, std::size_t limit) {
  const auto edges = dual_edges(m);
  std::vector<std::vector<int>> out;
  const std::size_t need = static_cast<std::size_t>(std::max(0, m.size() - 1));
  std::vector<int> chosen;
  std::function<void(std::size_t, UnionFind)> rec = [&](std::size_t next, UnionFind uf) {
    if (chosen.size() == need) {
      if (out.size() >= limit) throw BudgetExceeded("spanning trees: limit reached");
      out.push_back(chosen);
      return;
    }
    if (edges.size() - next < need - chosen.size()) return;
    for (std::size_t e = next; e < edges.size(); ++e) {
      UnionFind copy = uf;
      if (!copy.unite(edges[e].from_simplex, edges[e].to_simplex)) continue;
      chosen.push_back(static_cast<int>(e));
      rec(e + 1, copy);
      chosen.pop_back();
    }
  };
  rec(0, UnionFind(static_cast<std::size_t>(m.size())));
  return out;
}

SimplicialMap identity_map(const Pseudomanifold& m) {
  SimplicialMap s;
  for (int p = 0; p < m.size(); ++p) {
    s.image.push_back(p);
    s.vertex_map.push_back(identity_perm(m.dimension() + 1));
  }
  return s;
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  for (std::size_t p = 0; p < g.image.size(); ++p) {
    const auto q = static_cast<std::size_t>(g.image[p]);
    h.image.push_back(f.image[q]);
    h.vertex_map.push_back(compose(f.vertex_map[q], g.vertex_map[p]));
  }
  return h;
}

bool commutes_with_gluings(const Pseudomanifold& m, const SimplicialMap& s) {
  if (static_cast<int>(s.image.size()) != m.size()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(m.size()), false);
  for (int q : s.image) {
    if (q < 0 || q >= m.size() || hit[static_cast<std::size_t>(q)]) return false;
    hit[static_cast<std::size_t>(q)] = true;
  }
  for (int p = 0; p < m.size(); ++p) {
    const auto& vm = s.vertex_map[static_cast<std::size_t>(p)];
    for (int i = 0; i <= m.dimension(); ++i) {
      const auto& g = m.gluing(p, i);
      const auto& h = m.gluing(s.image[static_cast<std::size_t>(p)], vm[static_cast<std::size_t>(i)]);
      if (g.has_value() != h.has_value()) return false;
      if (!g) continue;
      // s o g = h o s on the glued facet.
      if (h->target != s.image[static_cast<std::size_t>(g->target)]) return false;
      if (compose(s.vertex_map[static_cast<std::size_t>(g->target)], g->perm) != compose(h->perm, vm)) return false;
    }
  }
  return true;
}

std::vector<SimplicialMap> automorphisms(const Pseudomanifold& m) {
  if (!m.is_connected()) throw Error("automorphisms: triangulation is disconnected");
  std::vector<SimplicialMap> out;
  if (m.size() == 0) return out;
  const int n = m.dimension() + 1;
  Perm pi = identity_perm(n);
  std::vector<Perm> perms;
  do perms.push_back(pi);
  while (std::next_permutation(pi.begin(), pi.end()));

  for (int q0 = 0; q0 < m.size(); ++q0)
    for (const auto& p0 : perms) {
      SimplicialMap s;
      s.image.assign(static_cast<std::size_t>(m.size()), -1);
      s.vertex_map.assign(static_cast<std::size_t>(m.size()), {});
      s.image[0] = q0;
      s.vertex_map[0] = p0;
      std::deque<int> queue{0};
      bool ok = true;
      while (ok && !queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        const auto& vm = s.vertex_map[static_cast<std::size_t>(p)];
        for (int i = 0; ok && i < n; ++i) {
          const auto& g = m.gluing(p, i);
          const auto& h = m.gluing(s.image[static_cast<std::size_t>(p)], vm[static_cast<std::size_t>(i)]);
          if (g.has_value() != h.has_value()) {
            ok = false;
            break;
          }
          if (!g) continue;
          const Perm want = compose(compose(h->perm, vm), inverse(g->perm));
          auto& img = s.image[static_cast<std::size_t>(g->target)];
          if (img < 0) {
            img = h->target;
            s.vertex_map[static_cast<std::size_t>(g->target)] = want;
            queue.push_back(g->target);
          } else if (img != h->target || s.vertex_map[static_cast<std::size_t>(g->target)] != want) {
            ok = false;
          }
        }
      }
      if (ok && commutes_with_gluings(m, s)) out.push_back(std::move(s));
    }
  const auto id = identity_map(m);
  std::stable_partition(out.begin(), out.end(), [&](const SimplicialMap& s) { return s == id; });
  return out;
}

std::optional<int> orientation_character(const Pseudomanifold& m, const SimplicialMap& s) {
  auto signs = orientation(m);
  if (!signs) return std::nullopt;
  std::optional<int> c;
  for (int p = 0; p < m.size(); ++p) {
    const int v = (*signs)[static_cast<std::size_t>(p)] * (*signs)[static_cast<std::size_t>(s.image[static_cast<std::size_t>(p)])] *
                  (parity(s.vertex_map[static_cast<std::size_t>(p)]) ? -1 : 1);
    if (c && *c != v) return std::nullopt;
    c = v;
  }
  return c;
}

std::vector<pres::Word> induced_on_spine(const Pseudomanifold& m, const DualSpine& spine, const SimplicialMap& s) {
  const auto idx = index_dual_edges(m, spine.edges);
  const auto tree = root_tree(m, spine.edges, spine.tree);
  std::vector<pres::Word> images(static_cast<std::size_t>(spine.presentation.generator_count()));
  for (std::size_t e = 0; e < spine.edges.size(); ++e) {
    const int g = spine.generator_of_edge[e];
    if (g < 0) continue;
    const auto& d = spine.edges[e];
    // The loop root -> from -> to -> root, crossing by crossing.
    std::vector<std::pair<int, int>> loop = path_from_root(tree, d.from_simplex);
    loop.emplace_back(d.from_simplex, d.from_facet);
    auto back = path_from_root(tree, d.to_simplex);
    for (auto it = back.rbegin(); it != back.rend(); ++it) loop.push_back(reverse_crossing(m, *it));
    for (auto& c : loop)
      c = {s.image[static_cast<std::size_t>(c.first)], s.vertex_map[static_cast<std::size_t>(c.first)][static_cast<std::size_t>(c.second)]};
    // Tree edges read as the identity, so the base point shift costs nothing.
    images[static_cast<std::size_t>(g)] = read_crossings(idx, spine.generator_of_edge, loop);
  }
  return images;
}

std::optional<int> h1_action(const Pseudomanifold& m, const DualSpine& spine, const SimplicialMap& s) {
  const auto& p = spine.presentation;
  const auto gens = static_cast<std::size_t>(p.generator_count());
  grphom::IntMatrix r(std::max<std::size_t>(p.relators().size(), 1), gens);
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (std::size_t g = 0; g < gens; ++g) r(i, g) = p.relators()[i].exponent_sum(static_cast<int>(g));
  auto snf = grphom::smith_normal_form(r, {false, true});
  if (gens - snf.rank != 1) return std::nullopt;
  std::vector<Integer> chi(gens);
  for (std::size_t g = 0; g < gens; ++g) chi[g] = (*snf.right)(g, gens - 1);
  auto eval = [&](const pres::Word& w) {
    Integer v = 0;
    for (pres::Letter l : w.letters()) v += l > 0 ? chi[static_cast<std::size_t>(pres::generator_of(l))] : -chi[static_cast<std::size_t>(pres::generator_of(l))];
    return v;
  };
  const auto images = induced_on_spine(m, spine, s);
  std::optional<int> lambda;
  for (std::size_t g = 0; g < gens; ++g) {
    const Integer a = chi[g], b = eval(images[g]);
    if (a == 0) {
      if (b != 0) return std::nullopt;
      continue;
    }
    if (b != a && b != -a) return std::nullopt;
    const int l = b == a ? 1 : -1;
    if (lambda && *lambda != l) return std::nullopt;
    lambda = l;
  }
  return lambda;
}

}  // namespace hnnkit::tri4
