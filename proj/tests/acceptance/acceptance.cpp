// Acceptance runner: one PASS/FAIL line per criterion. Expected values and
// time limits are fixed here; a criterion passes only if its values match and
// it finishes within its limit.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hnnkit/census/census.hpp"
#include "hnnkit/error.hpp"
#include "hnnkit/fingrp/catalog.hpp"
#include "hnnkit/fingrp/todd_coxeter.hpp"
#include "hnnkit/grphom/homology.hpp"
#include "hnnkit/grphom/smith.hpp"
#include "hnnkit/hnn/automorphisms.hpp"
#include "hnnkit/hnn/certificate.hpp"
#include "hnnkit/hnn/identify.hpp"
#include "hnnkit/presentations/tietze.hpp"
#include "hnnkit/tri4/triangulation.hpp"

using namespace hnnkit;
using Clock = std::chrono::steady_clock;

namespace {

// Collects sub-checks of one criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& observed, const B& expected, const std::string& what) {
    if (!(observed == expected)) {
      std::ostringstream s;
      s << what << " (observed " << observed << ", expected " << expected << ")";
      failures_.push_back(s.str());
    }
  }
  void within(double seconds, double limit, const std::string& what) {
    if (seconds > limit) {
      std::ostringstream s;
      s << what << " took " << seconds << " s, limit " << limit << " s";
      failures_.push_back(s.str());
    }
  }
  void info(const std::string& text) { info_.push_back(text); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    for (const auto& i : info_) out += (out.empty() ? "" : "; ") + i;
    return out;
  }

 private:
  std::vector<std::string> failures_, info_;
};

template <class F>
double timed(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const hnn::HnnData& pi() {
  static const hnn::HnnData d = hnn::quaternion_extension();
  return d;
}

std::string perm_text(const tri4::Perm& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}

AbelianInvariants z() { return AbelianInvariants{1, {}}; }

// 1
void fvector(Check& c) {
  std::vector<int> f;
  const double s = timed([&] { f = tri4::face_lattice(tri4::parse_triangulation(tri4::builtin_text())).f_vector(); });
  c.require(f == std::vector<int>{1, 3, 12, 15, 6}, "f-vector is not (1, 3, 12, 15, 6)");
  c.within(s, 1.0, "parse and face lattice");
}

// 2
void link_check(Check& c) {
  const auto m = tri4::builtin_triangulation();
  tri4::VertexLink l;
  std::vector<AbelianInvariants> h;
  const double s = timed([&] {
    l = tri4::vertex_link(m, tri4::face_lattice(m).orbits_of_dimension(0).at(0));
    h = tri4::homology(l.link);
  });
  c.equal(l.link.size(), 30, "link tetrahedra");
  c.require(h == std::vector<AbelianInvariants>{z(), z(), z(), z()}, "link homology is not (Z, Z, Z, Z)");
  c.within(s, 10.0, "vertex link");
}

// 3
void symmetry(Check& c) {
  const auto m = tri4::builtin_triangulation();
  std::vector<tri4::SimplicialMap> autos;
  const double s = timed([&] { autos = tri4::automorphisms(m); });
  c.equal(autos.size(), 2u, "automorphism count");
  if (autos.size() != 2) return;
  const auto& a = autos[1];
  auto entry = [&](int p) {
    return std::to_string(a.image[static_cast<std::size_t>(p)]) + "(" + perm_text(a.vertex_map[static_cast<std::size_t>(p)]) + ")";
  };
  c.equal(entry(0), "2(24103)", "image of pentachoron 0");
  c.equal(entry(1), "3(23041)", "image of pentachoron 1");
  c.equal(entry(4), "5(42130)", "image of pentachoron 4");
  c.require(tri4::compose(a, a) == tri4::identity_map(m), "not an involution");
  c.equal(tri4::orientation_character(m, a).value_or(0), -1, "orientation character");
  c.equal(tri4::h1_action(m, tri4::dual_spine(m), a).value_or(0), -1, "action on H1");
  c.within(s, 60.0, "automorphism search");
}

// 4
void fixed_points(Check& c) {
  const auto m = tri4::builtin_triangulation();
  tri4::FixedPointSet fp;
  const double s = timed([&] {
    const auto l = tri4::vertex_link(m, 0);
    fp = tri4::fixed_point_set(l.link, tri4::induced_on_link(l, tri4::automorphisms(m).at(1)));
  });
  c.equal(fp.components.size(), 4u, "fixed components");
  c.equal(fp.points(), 4, "isolated fixed points");
  c.within(s, 60.0, "fixed point set");
}

// 5
void fundamental_group(Check& c) {
  const auto m = tri4::builtin_triangulation();
  hnn::Identification id;
  AbelianInvariants ab;
  bool trace_ok = false;
  const double s = timed([&] {
    const auto spine = tri4::dual_spine(m);
    ab = pres::abelian_invariants(spine.presentation);
    const auto simple = pres::tietze_simplify(spine.presentation);
    trace_ok = pres::trace_is_consistent(simple.trace);
    id = hnn::identify(pi(), simple.presentation);
  });
  c.equal(ab, z(), "abelianization");
  c.require(trace_ok, "Tietze trace does not replay");
  c.require(id.forward_is_hom && id.forward_onto, "no verified epimorphism onto the HNN model");
  c.info("certification: " + hnn::to_string(id.status));
  c.within(s, 60.0, "pi1 pipeline");
}

// 6
void orders(Check& c) {
  const std::vector<std::pair<const char*, int>> expected{
      {"Q(8)", 8}, {"Q(16)", 16}, {"M16", 16}, {"D8xZ/2", 16}, {"Z/7:Z/3", 21}};
  for (const auto& [name, order] : expected) {
    int got = 0;
    const double s = timed([&] {
      got = fingrp::from_presentation(pres::parse_presentation(fingrp::find_catalog_entry(name)->presentation)).order();
    });
    c.equal(got, order, std::string("order of ") + name);
    c.within(s, 1.0, std::string("enumeration of ") + name);
  }
}

// 7
void homology_table(Check& c) {
  const std::vector<std::tuple<const char*, int, const char*, double>> expected{
      {"Q(16)", 2, "0", 30.0},         {"A4", 2, "Z/2", 30.0},   {"M16", 2, "0", 30.0},
      {"D8xZ/2", 2, "Z/2 + Z/2 + Z/2", 30.0}, {"D8", 2, "Z/2", 30.0}, {"Q(8)", 3, "Z/8", 30.0},
      {"Q(16)", 3, "Z/16", 900.0}};
  for (const auto& [name, k, value, limit] : expected) {
    std::string got;
    const double s = timed([&] { got = grphom::homology(*fingrp::catalog_group(name), k).invariants.to_string(); });
    c.equal(got, value, "H" + std::to_string(k) + "(" + name + ")");
    c.within(s, limit, "H" + std::to_string(k) + "(" + name + ")");
  }
}

// 8
void induced_maps(Check& c) {
  using grphom::SparseVector;
  const double s = timed([&] {
    auto cg = fingrp::catalog_group("(Z/2)^3");
    auto b = fingrp::catalog_group("D8xZ/2");
    auto d8 = fingrp::catalog_group("D8");
    auto hom = [](fingrp::GroupPtr src, fingrp::GroupPtr dst, std::vector<const char*> images) {
      std::vector<fingrp::Element> imgs;
      for (const char* w : images) imgs.push_back(dst->element(w));
      return fingrp::FiniteHom{src, dst, *fingrp::extend_to_hom(*src, src->generators(), imgs, *dst)};
    };
    const auto hb = grphom::homology(*b, 2);
    const auto hd8 = grphom::homology(*d8, 2);
    // Basis of H2(D8xZ/2): the D8 class, then the commutator classes of
    // (a, b) and (x, b).
    std::vector<SparseVector> f{grphom::push_forward(hom(d8, b, {"a", "x"}), 2, hd8.representatives.at(0)),
                                grphom::commutator_cycle(*b, b->element("a"), b->element("b")),
                                grphom::commutator_cycle(*b, b->element("x"), b->element("b"))};
    // e_i is the commutator class of the two other generators of (Z/2)^3.
    const auto x = cg->element("a"), y = cg->element("b"), w = cg->element("c");
    std::vector<SparseVector> e{grphom::commutator_cycle(*cg, y, w), grphom::commutator_cycle(*cg, x, w),
                                grphom::commutator_cycle(*cg, x, y)};
    auto images = [&](const fingrp::FiniteHom& j) {
      std::vector<SparseVector> out;
      for (const auto& cyc : e) out.push_back(grphom::push_forward(j, 2, cyc));
      return grphom::coordinates_in_basis(hb, f, out, 2);
    };
    using M = std::vector<std::vector<int>>;
    const auto j = images(hom(cg, b, {"a^2", "b", "x"}));
    const auto jt = images(hom(cg, b, {"a*x", "a^2", "b"}));
    c.require(j.has_value() && *j == M{{0, 0, 1}, {1, 0, 0}, {0, 0, 0}}, "H2(j) is not (f3, f1, 0)");
    c.require(jt.has_value() && *jt == M{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}}, "H2(j~) is not (0, f2 + f3, f1)");
  });
  c.within(s, 60.0, "induced maps");
}

// 9
void certificates(Check& c) {
  const double s = timed([&] {
    const auto q = hnn::knot_group_certificate(pi());
    c.equal(hnn::to_string(q.overall), "pass", "Q(16) certificate");
    c.require(q.euler == hnn::Rational(-1, 16), "Euler characteristic is not -1/16");
    auto g = fingrp::catalog_group("Z/7:Z/3");
    hnn::HnnData d(g, "Z/7:Z/3", {g->element("a")}, {g->element("a^2")});
    c.equal(hnn::to_string(hnn::knot_group_certificate(d).overall), "pass", "Z/7:Z/3 certificate");
  });
  c.within(s, 60.0, "certificates");
}

// 10
void census_run(Check& c) {
  census::CensusReport rep;
  const double s = timed([&] { rep = census::run_catalog(); });
  auto row = [&](const std::string& name) -> const census::BaseReport* {
    for (const auto& b : rep.bases)
      if (b.base == name) return &b;
    return nullptr;
  };
  for (const auto& b : rep.bases)
    if (b.order < 16 && !b.abelian) c.equal(b.hits.size(), 0u, "hits for " + b.base);
  const auto* q = row("Q(16)");
  c.require(q && q->classes.size() == 1, "Q(16) does not give exactly one class");
  for (const char* name : {"M16", "(Z/2)^2:Z/4", "Q8xZ/2", "D8oZ/4"}) {
    const auto* r = row(name);
    c.require(r && r->hits.empty(), std::string(name) + " has hits");
  }
  const auto* dz = row("D8xZ/2");
  auto g = fingrp::catalog_group("D8xZ/2");
  hnn::HnnData ex(g, "D8xZ/2", {g->element("a^2"), g->element("b"), g->element("x")},
                  {g->element("a*x"), g->element("a^2"), g->element("b")});
  std::vector<fingrp::Element> phi;
  for (auto e : ex.associated().elements) phi.push_back(ex.phi_of(e));
  const auto enc = census::encode(ex.associated(), phi);
  bool found = false;
  if (dz)
    for (const auto& h : dz->hits) found = found || h.encoding == enc;
  c.require(found, "D8xZ/2 hits do not include the reference example");
  auto cgroup = std::make_shared<const fingrp::FiniteGroup>(fingrp::subgroup_as_group(*g, ex.associated()));
  const auto other = fingrp::generated_subgroup(*g, std::vector<fingrp::Element>{g->element("a^2"), g->element("b"), g->element("a*x")});
  int onto = 0;
  for (const auto& f : fingrp::homomorphisms(cgroup, g, {.injective_only = true})) onto += f.image() == other;
  c.equal(onto, 168, "injections onto the other cube");
  c.within(s, 1800.0, "full catalog");
}

// 11
void out_pipeline(Check& c) {
  const auto& d = pi();
  const double s = timed([&] {
    const auto gens = hnn::quaternion_automorphisms(d);
    auto named = [&](const char* n) -> const hnn::EndoSpec& {
      for (const auto& g : gens)
        if (g.name == n) return g;
      throw Error("missing generator");
    };
    const auto &f = named("f"), &g = named("g"), &h = named("h");
    for (const auto& a : gens) c.require(hnn::verify_automorphism(d, a).ok(), a.name + " is not an automorphism");
    const auto id = hnn::identity_endo(d);
    auto rel = [&](const hnn::EndoSpec& x, const hnn::EndoSpec& y, const char* what) {
      c.require(hnn::same_map(d, x, y), std::string(what) + " fails");
    };
    rel(hnn::compose(d, f, f), id, "f^2 = id");
    rel(hnn::compose(d, g, g), id, "g^2 = id");
    rel(hnn::compose(d, f, g), hnn::compose(d, g, f), "fg = gf");
    rel(hnn::compose(d, f, h), hnn::compose(d, h, f), "fh = hf");
    const auto gh = hnn::compose(d, g, h);
    rel(hnn::compose(d, gh, gh), id, "(gh)^2 = id");
    const auto h2 = hnn::compose(d, h, h);
    rel(h2, hnn::conjugation(d, hnn::parse_word(d, "a")), "h^2 = conj_a");
    const auto h4 = hnn::compose(d, h2, h2);
    rel(hnn::compose(d, h4, h4), id, "h^8 = id");
    const auto og = hnn::out_group(d, gens);
    c.equal(og.order(), 8, "order of <f, g, h> in Out");
    c.equal(og.exponent(), 2, "exponent of <f, g, h> in Out");
  });
  c.within(s, 300.0, "Out pipeline");
}

// 12
void mayer_vietoris(Check& c) {
  std::vector<hnn::MayerVietoris> mv;
  const double s = timed([&] {
    for (int k : {1, 3, 4}) mv.push_back(hnn::mayer_vietoris(pi(), k));
  });
  c.require(mv[0].exact && *mv[0].exact == z(), "H1 is not Z");
  c.require((mv[1].exact && !mv[1].exact->is_trivial()) || !mv[1].cokernel.is_trivial(), "H3 could be zero");
  const auto& h4 = mv[2];
  c.require(h4.exact && h4.exact->free_rank == 0 && h4.exact->divisors.size() <= 1 && 8 % h4.exact->torsion_order() == 0,
            "H4 is not cyclic of order dividing 8");
  c.require(!h4.imported_facts.empty(), "H4 does not flag its imported fact");
  if (mv[1].exact) c.info("H3 = " + mv[1].exact->to_string());
  if (h4.exact) c.info("H4 = " + h4.exact->to_string() + " (imported: H4(Q(16)) = 0)");
  c.within(s, 1.0, "Mayer-Vietoris with homology from criterion 7");
}

// 13
pres::Word random_free_word(std::mt19937& rng, int gens, int length) {
  std::vector<pres::Letter> letters;
  for (int i = 0; i < length; ++i) letters.push_back(pres::letter(static_cast<int>(rng() % static_cast<unsigned>(gens)), rng() % 2));
  return pres::Word(letters);
}

void properties(Check& c) {
  const double s = timed([&] {
    // Britton reduction.
    std::mt19937 rng(2024);
    const auto& d = pi();
    std::uniform_int_distribution<int> elem(0, d.base().order() - 1), len(0, 8);
    int bad_idem = 0, bad_inverse = 0;
    for (int i = 0; i < 10000; ++i) {
      hnn::HnnWord w;
      w.b = {elem(rng)};
      for (int k = len(rng); k > 0; --k) {
        w.t.push_back(rng() % 2 ? 1 : -1);
        w.b.push_back(elem(rng));
      }
      const auto r = hnn::reduce(d, w);
      bad_idem += !(hnn::reduce(d, r) == r) || r.t_length() > w.t_length();
      bad_inverse += !hnn::multiply(d, w, hnn::inverse(d, w)).is_identity();
    }
    c.equal(bad_idem, 0, "reduce not idempotent");
    c.equal(bad_inverse, 0, "w w^-1 not reduced to the identity");

    // d o d = 0 on the bar complexes.
    int complexes = 0;
    for (const auto& e : fingrp::catalog()) {
      auto g = fingrp::catalog_group(e.name);
      const int top = g->order() > 16 ? 2 : g->order() <= 12 ? 4 : 3;
      for (int k = 1; k < top; ++k, ++complexes)
        c.require(grphom::bar_boundary(*g, k).product_is_zero(grphom::bar_boundary(*g, k + 1)),
                  "d o d != 0 for " + e.name);
    }
    c.info(std::to_string(complexes) + " bar complexes");

    // Smith normal form transforms.
    int bad_snf = 0;
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t r = 1 + rng() % 6, k = 1 + rng() % 6;
      grphom::IntMatrix a(r, k);
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < k; ++y) a(x, y) = entry(rng);
      const auto f = grphom::smith_normal_form_with_transforms(a);
      bool ok = *f.left * a * *f.right == f.diagonal_matrix() && *f.left * *f.left_inverse == grphom::IntMatrix::identity(r);
      const auto inv = f.invariant_factors();
      for (std::size_t t = 1; t < inv.size(); ++t) ok = ok && inv[t] % inv[t - 1] == 0;
      bad_snf += !ok;
    }
    c.equal(bad_snf, 0, "SNF transform mismatches");

    // Tietze moves preserve abelian invariants.
    using pres::MoveKind;
    using pres::TietzeMove;
    const char* bases[] = {"< a, b, c | a^2*b^-3, b*c*b^-1*c^-1, a^4*c^6 >", "< a, b, c | c*a*b*a^-1, a^3*b^2, [a,b]^2 >",
                           "< a, t | a^8, a^-2*t*a*t*a^2*t^-2, a^4*t^-1*a^-4*t >"};
    int bad_trace = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      auto p = pres::parse_presentation(bases[trial % 3]);
      const auto base = pres::abelian_invariants(p);
      for (int step = 0; step < 6 && !p.relators().empty(); ++step) {
        const auto rels = p.relators();
        const std::size_t i = rng() % rels.size();
        TietzeMove m;
        switch (rng() % 4) {
          case 0: {
            const auto w = random_free_word(rng, p.generator_count(), 3);
            m = {MoveKind::AddRelator, 0, -1, w * rels[i] * w.inverse() * rels[rng() % rels.size()].inverse(), "random", {}};
            break;
          }
          case 1:
            m = {MoveKind::ReplaceRelator, i, -1, rels[i].inverse().rotated(rng() % rels[i].size()), "random", {}};
            break;
          case 2: {
            const auto w = random_free_word(rng, p.generator_count(), 2);
            p = pres::apply_move(p, TietzeMove{MoveKind::AddRelator, 0, -1, w * rels[i] * w.inverse(), "random", {}});
            m = {MoveKind::RemoveRelator, p.relators().size() - 1, -1, {}, "random", {}};
            break;
          }
          default: {
            m = {MoveKind::ReplaceRelator, i, -1, rels[i], "random", {}};
            for (int g = 0; g < p.generator_count() && p.generator_count() > 1; ++g) {
              if (rels[i].occurrences(g) != 1) continue;
              const auto& ls = rels[i].letters();
              std::size_t pos = 0;
              while (pres::generator_of(ls[pos]) != g) ++pos;
              const auto rot = rels[i].rotated(pos);
              const pres::Word rest(std::span<const pres::Letter>(rot.letters().data() + 1, rot.size() - 1));
              m = {MoveKind::EliminateGenerator, i, g, rot[0] > 0 ? rest.inverse() : rest, "random", {}};
              break;
            }
          }
        }
        p = pres::apply_move(p, m);
        if (!p.relators().empty() && !(pres::abelian_invariants(p) == base)) {
          ++bad_trace;
          break;
        }
      }
    }
    c.equal(bad_trace, 0, "Tietze traces changing abelian invariants");
  });
  c.within(s, 300.0, "property suites");
}

}  // namespace

int main(int argc, char** argv) {
  // --known-failure N declares a criterion expected to fail; the exit status
  // is 0 only if the failing set equals the declared set.
  std::set<int> known;
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--known-failure") known.insert(std::stoi(argv[i + 1]));
  std::set<int> failing;
  const std::vector<std::tuple<int, const char*, std::function<void(Check&)>>> criteria{
      {1, "fixture parses with f-vector (1, 3, 12, 15, 6)", fvector},
      {2, "vertex link: 30 tetrahedra, homology (Z, Z, Z, Z)", link_check},
      {3, "one nontrivial symmetry, the reference map, orientation-reversing, -1 on H1", symmetry},
      {4, "the symmetry fixes 4 isolated points on the link", fixed_points},
      {5, "dual-spine pi1 has abelianization Z and maps onto the HNN model", fundamental_group},
      {6, "coset enumeration orders 8, 16, 16, 16, 21", orders},
      {7, "group homology table", homology_table},
      {8, "H2 induced maps into D8xZ/2", induced_maps},
      {9, "knot-group certificates for Q(16) and Z/7:Z/3", certificates},
      {10, "census of bases of order at most 16", census_run},
      {11, "Out pipeline: f, g, h and their relations; order 8, exponent 2", out_pipeline},
      {12, "Mayer-Vietoris: H1 = Z, H3 != 0, H4 cyclic of order dividing 8", mayer_vietoris},
      {13, "property suites", properties},
  };
  int failed = 0;
  for (const auto& [id, title, run] : criteria) {
    Check c;
    double seconds = 0;
    try {
      seconds = timed([&] { run(c); });
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    failed += !c.ok();
    if (!c.ok()) failing.insert(id);
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << title << "  ["
              << std::fixed << std::setprecision(2) << seconds << " s]";
    if (const auto s = c.summary(); !s.empty()) std::cout << "  " << s;
    std::cout << std::endl;
  }
  std::cout << (13 - failed) << " of 13 criteria passed" << std::endl;
  if (!known.empty()) {
    std::cout << "declared known failures:";
    for (int k : known) std::cout << ' ' << k;
    std::cout << (failing == known ? " (matched)" : " (mismatch)") << std::endl;
  }
  return failing == known ? 0 : 1;
}
