#include "hnnkit/tri4/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "hnnkit/embedded_data.hpp"
#include "hnnkit/error.hpp"
#include "hnnkit/grphom/sparse.hpp"
#include "hnnkit/presentations/tietze.hpp"

namespace hnnkit::tri4 {

namespace {

constexpr int kVertices = 5;

// Vertices of the facet opposite `missing`, ascending.
std::vector<int> facet_vertices(int n, int missing) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (i != missing) v.push_back(i);
  return v;
}

class LineParser {
 public:
  LineParser(std::string_view line, int number) : s_(line), line_(number) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, static_cast<int>(pos_) + 1); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    skip_space();
    if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  long number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("number too large");
    }
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  // Four vertex labels in parentheses.
  std::vector<int> tuple() {
    expect('(');
    std::vector<int> t;
    for (int i = 0; i < 4; ++i) {
      skip_space();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a vertex label");
      const int v = s_[pos_] - '0';
      if (v >= kVertices) fail("vertex label out of range: " + std::to_string(v));
      if (std::find(t.begin(), t.end(), v) != t.end()) fail("repeated vertex label in facet tuple");
      t.push_back(v);
      ++pos_;
    }
    expect(')');
    return t;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

}  // namespace

int slot_to_facet(int slot) { return 4 - slot; }
int facet_to_slot(int facet) { return 4 - facet; }

Pseudomanifold parse_triangulation(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int number = 0;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (char c : line)
      if (static_cast<unsigned char>(c) > 127) throw ParseError("non-ASCII character", number, 1);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) lines.emplace_back(number, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("missing 'pentachora: N' header", 0, 0);

  LineParser header(lines[0].second, lines[0].first);
  header.expect_word("pentachora");
  header.expect(':');
  const long n = header.number();
  if (!header.at_end()) header.fail("unexpected text after header");
  if (n < 1 || n > 1000000) header.fail("pentachoron count out of range");
  if (static_cast<long>(lines.size()) - 1 != n) {
    const auto& [ln, l] = lines.size() > static_cast<std::size_t>(n) + 1 ? lines[static_cast<std::size_t>(n) + 1] : lines.back();
    throw ParseError("expected " + std::to_string(n) + " pentachoron rows, found " + std::to_string(lines.size() - 1), ln,
                     1);
    (void)l;
  }

  Pseudomanifold m(4, static_cast<int>(n));
  for (long p = 0; p < n; ++p) {
    const auto& [ln, line] = lines[static_cast<std::size_t>(p) + 1];
    LineParser row(line, ln);
    if (row.number() != p) row.fail("rows must be numbered 0.." + std::to_string(n - 1) + " in order");
    for (int slot = 0; slot < kVertices; ++slot) {
      row.expect('|');
      const int facet = slot_to_facet(slot);
      if (row.peek('-')) {
        row.expect('-');
        continue;
      }
      const long target = row.number();
      if (target >= n) row.fail("pentachoron index out of range: " + std::to_string(target));
      const auto images = row.tuple();
      Perm perm(kVertices);
      const auto verts = facet_vertices(kVertices, facet);
      std::vector<bool> used(kVertices, false);
      for (int i = 0; i < 4; ++i) {
        perm[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = images[static_cast<std::size_t>(i)];
        used[static_cast<std::size_t>(images[static_cast<std::size_t>(i)])] = true;
      }
      perm[static_cast<std::size_t>(facet)] = static_cast<int>(std::find(used.begin(), used.end(), false) - used.begin());
      m.set_one_sided(static_cast<int>(p), facet, Gluing{static_cast<int>(target), perm});
    }
    if (!row.at_end()) row.fail("unexpected text after the fifth slot");
  }
  m.validate();
  return m;
}

std::string format_triangulation(const Pseudomanifold& m) {
  if (m.dimension() != 4) throw Error("format_triangulation: not 4-dimensional");
  std::ostringstream out;
  out << "pentachora: " << m.size() << '\n';
  for (int p = 0; p < m.size(); ++p) {
    out << p;
    for (int slot = 0; slot < kVertices; ++slot) {
      const int facet = slot_to_facet(slot);
      out << " | ";
      const auto& g = m.gluing(p, facet);
      if (!g) {
        out << '-';
        continue;
      }
      out << g->target << " (";
      for (int v : facet_vertices(kVertices, facet)) out << g->perm[static_cast<std::size_t>(v)];
      out << ')';
    }
    out << '\n';
  }
  return out.str();
}

std::string_view builtin_text() { return data::quaternion_knot_tri4; }

Pseudomanifold builtin_triangulation() { return parse_triangulation(builtin_text()); }

Pseudomanifold unknot_exterior() { return parse_triangulation(data::unknot_exterior_tri4); }

std::optional<std::string_view> bundled_text(std::string_view name) {
  if (name == "builtin" || name == "quaternion") return builtin_text();
  if (name == "unknot") return data::unknot_exterior_tri4;
  return std::nullopt;
}

Pseudomanifold single_pentachoron() { return Pseudomanifold(4, 1); }

Pseudomanifold double_pentachoron() {
  Pseudomanifold m(4, 2);
  for (int f = 0; f < kVertices; ++f) m.glue(0, f, 1, identity_perm(kVertices));
  return m;
}

VertexLink vertex_link(const Pseudomanifold& m, int vertex_orbit) {
  const auto lattice = face_lattice(m);
  if (vertex_orbit < 0 || vertex_orbit >= static_cast<int>(lattice.orbit_dimension.size()) ||
      lattice.orbit_dimension[static_cast<std::size_t>(vertex_orbit)] != 0)
    throw Error("vertex_link: not a vertex orbit");
  const int n = m.dimension() + 1;
  VertexLink l;
  std::map<std::pair<int, int>, int> index;
  for (int p = 0; p < m.size(); ++p)
    for (int v = 0; v < n; ++v)
      if (lattice.orbit[static_cast<std::size_t>(p)][1u << v] == vertex_orbit) {
        index[{p, v}] = static_cast<int>(l.origin.size());
        l.origin.emplace_back(p, v);
      }
  l.link = Pseudomanifold(m.dimension() - 1, static_cast<int>(l.origin.size()));
  // local index of simplex vertex x in the link tetrahedron at v
  auto local = [](int v, int x) { return x < v ? x : x - 1; };
  for (std::size_t t = 0; t < l.origin.size(); ++t) {
    const auto [p, v] = l.origin[t];
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      const auto& g = m.gluing(p, w);
      if (!g) continue;
      const int v2 = g->perm[static_cast<std::size_t>(v)];
      Perm perm(static_cast<std::size_t>(n - 1));
      for (int x = 0; x < n; ++x)
        if (x != v) perm[static_cast<std::size_t>(local(v, x))] = local(v2, g->perm[static_cast<std::size_t>(x)]);
      l.link.set_one_sided(static_cast<int>(t), local(v, w), Gluing{index.at({g->target, v2}), perm});
    }
  }
  l.link.validate();
  return l;
}

SimplicialMap induced_on_link(const VertexLink& l, const SimplicialMap& s) {
  std::map<std::pair<int, int>, int> index;
  for (std::size_t t = 0; t < l.origin.size(); ++t) index[l.origin[t]] = static_cast<int>(t);
  auto local = [](int v, int x) { return x < v ? x : x - 1; };
  SimplicialMap out;
  for (const auto& [p, v] : l.origin) {
    const auto& vm = s.vertex_map[static_cast<std::size_t>(p)];
    const int q = s.image[static_cast<std::size_t>(p)], v2 = vm[static_cast<std::size_t>(v)];
    auto it = index.find({q, v2});
    if (it == index.end()) throw Error("induced_on_link: automorphism moves the vertex orbit");
    Perm perm(vm.size() - 1);
    for (int x = 0; x < static_cast<int>(vm.size()); ++x)
      if (x != v) perm[static_cast<std::size_t>(local(v, x))] = local(v2, vm[static_cast<std::size_t>(x)]);
    out.image.push_back(it->second);
    out.vertex_map.push_back(std::move(perm));
  }
  if (!commutes_with_gluings(l.link, out)) throw Error("induced_on_link: result is not an automorphism");
  return out;
}

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int perm_rank(const std::vector<Perm>& perms, const Perm& p) {
  return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
}

}  // namespace

Subdivision barycentric_subdivision(const Pseudomanifold& m) {
  const int n = m.dimension() + 1;
  const auto perms = all_perms(n);
  const int per = static_cast<int>(perms.size());
  Subdivision sd;
  sd.complex = Pseudomanifold(m.dimension(), m.size() * per);
  for (int p = 0; p < m.size(); ++p)
    for (const auto& f : perms) sd.origin.emplace_back(p, f);
  const Perm id = identity_perm(n);
  for (int p = 0; p < m.size(); ++p)
    for (int r = 0; r < per; ++r) {
      const int s = p * per + r;
      const Perm& f = perms[static_cast<std::size_t>(r)];
      // Facet k < dim drops the barycentre of {f0..fk}: swap f[k] and f[k+1].
      for (int k = 0; k + 1 < n; ++k) {
        Perm g = f;
        std::swap(g[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k + 1)]);
        sd.complex.set_one_sided(s, k, Gluing{p * per + perm_rank(perms, g), id});
      }
      // The last facet lies in the facet of p opposite f[dim].
      const auto& g = m.gluing(p, f.back());
      if (g) sd.complex.set_one_sided(s, n - 1, Gluing{g->target * per + perm_rank(perms, compose(g->perm, f)), id});
    }
  sd.complex.validate();
  return sd;
}

SimplicialMap subdivide_map(const Pseudomanifold& m, const Subdivision& sd, const SimplicialMap& s) {
  const int n = m.dimension() + 1;
  const auto perms = all_perms(n);
  const int per = static_cast<int>(perms.size());
  SimplicialMap out;
  for (const auto& [p, f] : sd.origin) {
    out.image.push_back(s.image[static_cast<std::size_t>(p)] * per +
                        perm_rank(perms, compose(s.vertex_map[static_cast<std::size_t>(p)], f)));
    out.vertex_map.push_back(identity_perm(n));
  }
  return out;
}

namespace {

// Cells of an ordered complex: the face orbits, with the faces of each
// listed by position.
struct OrderedCells {
  FaceLattice lattice;
  std::vector<std::vector<int>> of_dimension;  // orbit ids per dimension
  std::vector<int> position;                   // orbit id -> index within its dimension
};

OrderedCells ordered_cells(const Pseudomanifold& m) {
  for (int p = 0; p < m.size(); ++p)
    for (int i = 0; i <= m.dimension(); ++i)
      if (const auto& g = m.gluing(p, i); g && g->perm != identity_perm(m.dimension() + 1))
        throw Error("ordered complex required: subdivide first");
  OrderedCells c;
  c.lattice = face_lattice(m);
  c.of_dimension.resize(static_cast<std::size_t>(m.dimension() + 1));
  c.position.resize(c.lattice.orbit_dimension.size());
  for (std::size_t o = 0; o < c.lattice.orbit_dimension.size(); ++o) {
    auto& list = c.of_dimension[static_cast<std::size_t>(c.lattice.orbit_dimension[o])];
    c.position[o] = static_cast<int>(list.size());
    list.push_back(static_cast<int>(o));
  }
  return c;
}

// Faces of the cell (p, mask) one dimension down, with boundary signs.
template <class F>
void for_each_facet(const OrderedCells& c, int p, unsigned mask, F&& f) {
  int i = 0;
  for (unsigned bits = mask; bits; bits &= bits - 1, ++i) {
    const unsigned v = bits & (~bits + 1);
    f(c.lattice.orbit[static_cast<std::size_t>(p)][mask & ~v], i % 2 == 0 ? 1 : -1);
  }
}

}  // namespace

std::vector<AbelianInvariants> ordered_homology(const Pseudomanifold& m) {
  const auto c = ordered_cells(m);
  const int d = m.dimension();
  std::vector<std::size_t> rank(static_cast<std::size_t>(d + 2), 0);
  std::vector<AbelianInvariants> coker(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d + 1; ++k) {
    // boundary from dimension k to k - 1
    const std::size_t rows = k == 0 ? 0 : c.of_dimension[static_cast<std::size_t>(k - 1)].size();
    const std::size_t cols = k > d ? 0 : c.of_dimension[static_cast<std::size_t>(k)].size();
    if (k > 0) {
      grphom::SparseMatrix a(rows, cols);
      for (std::size_t j = 0; j < cols; ++j) {
        const auto [p, mask] = c.lattice.representative[static_cast<std::size_t>(c.of_dimension[static_cast<std::size_t>(k)][j])];
        for_each_facet(c, p, mask, [&](int orbit, int sign) {
          a.add(static_cast<std::size_t>(c.position[static_cast<std::size_t>(orbit)]), j, sign);
        });
      }
      grphom::CokernelReducer r(a);
      rank[static_cast<std::size_t>(k)] = r.rank();
      coker[static_cast<std::size_t>(k - 1)] = r.cokernel();
    } else {
      rank[0] = 0;
    }
  }
  std::vector<AbelianInvariants> h(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    auto& out = h[static_cast<std::size_t>(k)];
    out.divisors = coker[static_cast<std::size_t>(k)].divisors;
    out.free_rank = c.of_dimension[static_cast<std::size_t>(k)].size() - rank[static_cast<std::size_t>(k + 1)] -
                    rank[static_cast<std::size_t>(k)];
  }
  return h;
}

std::vector<AbelianInvariants> homology(const Pseudomanifold& m) {
  return ordered_homology(barycentric_subdivision(m).complex);
}

int FixedPointSet::points() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(), [](const FixedComponent& c) { return c.dimension == 0; }));
}

namespace {

// On an ordered complex with an order-preserving automorphism, a face
// orbit mapped to itself is fixed pointwise.
std::vector<FixedComponent> fixed_components(const Pseudomanifold& m, const SimplicialMap& s) {
  const auto c = ordered_cells(m);
  const auto& lat = c.lattice;
  const std::size_t cells = lat.orbit_dimension.size();
  std::vector<bool> fixed(cells, false);
  for (std::size_t o = 0; o < cells; ++o) {
    const auto [p, mask] = lat.representative[o];
    const int q = s.image[static_cast<std::size_t>(p)];
    unsigned image = 0;
    for (int v = 0; v <= m.dimension(); ++v)
      if (mask >> v & 1u) image |= 1u << s.vertex_map[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)];
    fixed[o] = lat.orbit[static_cast<std::size_t>(q)][image] == static_cast<int>(o);
  }
  std::vector<int> parent(cells);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (std::size_t o = 0; o < cells; ++o) {
    if (!fixed[o]) continue;
    const auto [p, mask] = lat.representative[o];
    for_each_facet(c, p, mask, [&](int face, int) {
      if (face < 0) return;
      if (!fixed[static_cast<std::size_t>(face)]) throw Error("fixed_point_set: fixed cell with a moved face");
      parent[static_cast<std::size_t>(find(face))] = find(static_cast<int>(o));
    });
  }
  std::map<int, FixedComponent> by_root;
  for (std::size_t o = 0; o < cells; ++o) {
    if (!fixed[o]) continue;
    auto& comp = by_root[find(static_cast<int>(o))];
    const int dim = lat.orbit_dimension[o];
    comp.dimension = std::max(comp.dimension, dim);
    comp.euler_characteristic += dim % 2 == 0 ? 1 : -1;
    comp.vertices += dim == 0;
  }
  std::vector<FixedComponent> out;
  for (auto& [root, comp] : by_root) out.push_back(comp);
  std::sort(out.begin(), out.end(), [](const FixedComponent& a, const FixedComponent& b) {
    return std::tie(a.dimension, a.euler_characteristic) < std::tie(b.dimension, b.euler_characteristic);
  });
  return out;
}

bool same_shape(const std::vector<FixedComponent>& a, const std::vector<FixedComponent>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].dimension != b[i].dimension || a[i].euler_characteristic != b[i].euler_characteristic) return false;
  return true;
}

}  // namespace

FixedPointSet fixed_point_set(const Pseudomanifold& m, const SimplicialMap& s) {
  if (!commutes_with_gluings(m, s)) throw Error("fixed_point_set: not an automorphism");
  const auto sd1 = barycentric_subdivision(m);
  const auto s1 = subdivide_map(m, sd1, s);
  FixedPointSet out;
  out.components = fixed_components(sd1.complex, s1);
  out.subdivisions = 1;
  const auto sd2 = barycentric_subdivision(sd1.complex);
  const auto again = fixed_components(sd2.complex, subdivide_map(sd1.complex, sd2, s1));
  if (!same_shape(out.components, again)) throw Error("fixed_point_set: result changed under further subdivision");
  return out;
}

LinkPi1 link_pi1(const Pseudomanifold& link) {
  LinkPi1 out;
  out.spine = dual_spine(link).presentation;
  out.simplified = pres::tietze_simplify(out.spine).presentation;
  out.infinite_cyclic = out.simplified.generator_count() == 1 && out.simplified.relators().empty();
  return out;
}

Pseudomanifold free_involution_complex() {
  // A two-tetrahedron RP^3. The swap below is a deck transformation of
  // its cover by L(4,1).
  Pseudomanifold m(3, 2);
  m.glue(0, 0, 1, {1, 2, 3, 0});
  m.glue(0, 1, 1, {3, 0, 1, 2});
  m.glue(0, 2, 1, {1, 2, 3, 0});
  m.glue(0, 3, 1, {3, 0, 1, 2});
  m.validate();
  return m;
}

SimplicialMap free_involution() { return SimplicialMap{{1, 0}, {identity_perm(4), identity_perm(4)}}; }

}  // namespace hnnkit::tri4
