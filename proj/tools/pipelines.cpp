#include "pipelines.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hnnkit/census/census.hpp"
#include "hnnkit/error.hpp"
#include "hnnkit/fingrp/catalog.hpp"
#include "hnnkit/hnn/automorphisms.hpp"
#include "hnnkit/hnn/certificate.hpp"
#include "hnnkit/hnn/identify.hpp"
#include "hnnkit/presentations/tietze.hpp"
#include "hnnkit/tri4/triangulation.hpp"

namespace hnnkit::cli {

namespace {

struct Loaded {
  tri4::Pseudomanifold m;
  bool quaternion = false;  ///< the bundled knot exterior
  bool unknot = false;
};

Loaded load(const Options& o, Report& r) {
  r.input("input", o.input);
  std::string text;
  if (auto bundled = tri4::bundled_text(o.input)) {
    text = std::string(*bundled);
  } else {
    std::ifstream in(o.input);
    if (!in) throw Error("cannot read " + o.input);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Loaded l{tri4::parse_triangulation(text)};
  l.quaternion = l.m == tri4::builtin_triangulation();
  l.unknot = l.m == tri4::unknot_exterior();
  return l;
}

std::string rational(const hnn::Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string perm_text(const tri4::Perm& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}

Json homology_list(const std::vector<AbelianInvariants>& h) {
  Json j = Json::array();
  for (const auto& g : h) j.push_back(g.to_string());
  return j;
}

const hnn::HnnData& quaternion_model() {
  static const hnn::HnnData d = hnn::quaternion_extension();
  return d;
}

}  // namespace

Report verify_triangulation(const Options& o) {
  Report r("verify-tri");
  const auto l = [&] {
    Stopwatch s(r, "parse");
    return load(o, r);
  }();
  const auto& m = l.m;
  const bool fixture = l.quaternion;
  r.value("pentachora", m.size());
  r.value("boundary facets", m.boundary_facets());

  const auto lattice = face_lattice(m);
  const Json fv = lattice.f_vector();
  r.value("euler characteristic", lattice.euler_characteristic());
  if (fixture)
    r.expect("f-vector", "f-vector (v, e, t, tet, pent) = (1, 3, 12, 15, 6)", Json{1, 3, 12, 15, 6}, fv);
  else
    r.value("f-vector", fv);

  if (!m.is_connected()) {
    r.note("disconnected triangulation: orientation, automorphisms and pi1 skipped");
    return r;
  }
  const auto signs = tri4::orientation(m);
  if (fixture)
    r.expect("orientable", "triangulation is orientable", true, signs.has_value());
  else
    r.value("orientable", signs.has_value());

  // Vertex links.
  std::optional<tri4::VertexLink> link;
  {
    Stopwatch s(r, "vertex links");
    Json links = Json::array();
    for (int v : lattice.orbits_of_dimension(0)) {
      auto vl = tri4::vertex_link(m, v);
      const auto h = tri4::homology(vl.link);
      const auto pi = tri4::link_pi1(vl.link);
      links.push_back({{"orbit", v},
                       {"tetrahedra", vl.link.size()},
                       {"closed", vl.link.boundary_facets() == 0},
                       {"homology", homology_list(h)},
                       {"pi1", pres::format_presentation(pi.simplified)}});
      if (!link) link = std::move(vl);
    }
    r.value("vertex links", links);
  }
  if (fixture) {
    r.expect("link size", "vertex link has 30 tetrahedra", 30, link->link.size());
    r.expect("link homology", "link homology is (Z, Z, Z, Z)", Json{"Z", "Z", "Z", "Z"},
             homology_list(tri4::homology(link->link)));
    const auto pi = tri4::link_pi1(link->link);
    r.value("link S1xS2 heuristic",
            pi.infinite_cyclic ? "pi1 simplifies to <x | >, consistent with S1xS2" : "inconclusive");
  }

  // Symmetries.
  std::vector<tri4::SimplicialMap> autos;
  {
    Stopwatch s(r, "automorphisms");
    autos = tri4::automorphisms(m);
  }
  bool all_commute = true;
  for (const auto& a : autos) all_commute = all_commute && tri4::commutes_with_gluings(m, a);
  r.claim("automorphisms commute", "every automorphism found commutes with every gluing", true, all_commute, all_commute);
  if (fixture)
    r.expect("automorphism count", "exactly 2 combinatorial automorphisms", 2, autos.size());
  else
    r.value("automorphisms", autos.size());

  if (fixture && autos.size() == 2) {
    const auto& s = autos[1];
    const Json reference = {{"0", "2 (24103)"}, {"1", "3 (23041)"}, {"4", "5 (42130)"}};
    Json seen;
    for (int p : {0, 1, 4})
      seen[std::to_string(p)] = std::to_string(s.image[static_cast<std::size_t>(p)]) + " (" +
                                perm_text(s.vertex_map[static_cast<std::size_t>(p)]) + ")";
    r.expect("reference symmetry", "nontrivial symmetry: 0->2 (24103), 1->3 (23041), 4->5 (42130)", reference, seen);
    r.expect("involution", "the symmetry is an involution", true, tri4::compose(s, s) == tri4::identity_map(m));
    r.expect("orientation", "the symmetry reverses orientation", -1, tri4::orientation_character(m, s).value_or(0));
    const auto spine = tri4::dual_spine(m);
    r.expect("H1 action", "the symmetry acts as -1 on H1", -1, tri4::h1_action(m, spine, s).value_or(0));

    tri4::FixedPointSet fp;
    {
      Stopwatch sw(r, "fixed points");
      fp = tri4::fixed_point_set(link->link, tri4::induced_on_link(*link, s));
    }
    Json comps = Json::array();
    for (const auto& c : fp.components) comps.push_back({{"dimension", c.dimension}, {"euler", c.euler_characteristic}});
    r.value("fixed components on the link", comps);
    r.expect("fixed points", "fixed set on the link is 4 isolated points", 4,
             fp.components.size() == static_cast<std::size_t>(fp.points()) ? fp.points() : -1);
    r.value("conclusion", "every knot with this exterior is strongly +amphicheiral", Provenance::imported);
    r.imported("an orientation-reversing involution of the exterior acting by -1 on H1 and fixing four points "
               "on the boundary S1xS2 extends over the knot (classification of involutions of S1xS2)");
  }
  return r;
}

Report pi1(const Options& o) {
  Report r("pi1");
  const auto l = load(o, r);
  tri4::DualSpine spine;
  pres::SimplifyResult simplified;
  {
    Stopwatch s(r, "spine and Tietze");
    spine = tri4::dual_spine(l.m);
    simplified = pres::tietze_simplify(spine.presentation);
  }
  r.value("spine generators", spine.presentation.generator_count());
  r.value("spine relators", spine.presentation.relators().size());
  const auto ab = pres::abelian_invariants(spine.presentation).to_string();
  r.value("simplified", pres::format_presentation(simplified.presentation));
  const bool trace_ok = pres::trace_is_consistent(simplified.trace);
  r.claim("Tietze trace", "simplification trace replays with verified certificates", true, trace_ok, trace_ok);

  if (l.unknot) {
    r.expect("abelianization", "abelianization is Z", "Z", ab);
    const bool z = simplified.presentation.generator_count() == 1 && simplified.presentation.relators().empty();
    r.claim("pi1", "pi1 simplifies to Z", "< x | >", pres::format_presentation(simplified.presentation), z);
  }
  if (!l.quaternion) {
    if (!l.unknot) r.value("abelianization", ab);
    return r;
  }

  r.expect("abelianization", "abelianization is Z", "Z", ab);
  const auto& d = quaternion_model();
  hnn::Identification id;
  {
    Stopwatch s(r, "identification");
    id = hnn::identify(d, simplified.presentation);
  }
  Json forward = Json::object();
  for (std::size_t i = 0; i < id.forward.size(); ++i)
    forward[simplified.presentation.generator_names()[i]] = hnn::to_string(d, id.forward[i]);
  Json backward = Json::object();
  for (std::size_t i = 0; i < id.backward.size(); ++i)
    backward[d.generator_names()[i]] = simplified.presentation.format_word(id.backward[i]);
  r.value("map to the HNN model", forward);
  r.value("map back", backward);
  r.claim("epimorphism", "verified epimorphism onto B *_C phi with B = Q(16)", true,
          id.forward_is_hom && id.forward_onto, id.forward_is_hom && id.forward_onto);
  r.value("certification status", hnn::to_string(id.status));
  if (!id.note.empty()) r.note(id.note);

  // HNN structure.
  const auto c_label = fingrp::isomorphism_label(*d.c_group());
  const auto img_label = fingrp::isomorphism_label(fingrp::subgroup_as_group(d.base(), d.image()));
  r.expect("base", "base group is Q(16)", "Q(16)", fingrp::isomorphism_label(d.base()));
  r.expect("associated subgroups", "C and phi(C) are both Q(8)", Json{"Q(8)", "Q(8)"}, Json{c_label, img_label});
  const bool b_relation = hnn::is_identity(d, hnn::parse_word(d, "t*a^2*t^-1*b^-1"));
  r.claim("b = t a^2 t^-1", "b = t a^2 t^-1 holds in the model", true, b_relation, b_relation);
  r.value("model presentation", pres::format_presentation(d.presentation()));
  return r;
}

Report analyze(const Options& o) {
  Report r("analyze");
  grphom::HomologyOptions hopt;
  hopt.max_cells = o.budget;
  r.input("budget", o.budget);
  const auto& d = quaternion_model();

  {
    Stopwatch s(r, "certificate");
    const auto c = hnn::knot_group_certificate(d, hopt);
    r.value("H1 condition", hnn::to_string(c.h1));
    r.value("H2 condition", hnn::to_string(c.h2));
    r.value("normal closure", hnn::to_string(c.normal_closure));
    r.expect("certificate", "Q(16) datum passes the knot-group certificate", "pass", hnn::to_string(c.overall));
    r.expect("euler", "virtual Euler characteristic is -1/16", "-1/16", rational(c.euler));
    for (const auto& f : c.imported_facts) r.imported(f);
  }
  {
    Stopwatch s(r, "metacyclic example");
    auto z = fingrp::catalog_group("Z/7:Z/3");
    hnn::HnnData e(z, "Z/7:Z/3", {z->element("a")}, {z->element("a^2")});
    const auto c = hnn::knot_group_certificate(e, hopt);
    r.expect("metacyclic", "Z/7:Z/3 with phi(a) = a^2 passes the certificate", "pass", hnn::to_string(c.overall));
  }
  {
    Stopwatch s(r, "satellite");
    const auto sat = hnn::satellite_obstruction(d);
    Json cases = Json::array();
    for (const auto& c : sat.cases)
      cases.push_back({{"q", c.q}, {"H", c.h_label}, {"survives", c.survives}, {"reason", c.reason}});
    r.value("satellite cases", cases);
    Json mer = Json::object();
    for (const auto& [label, found] : sat.meridianal_tests) mer[label] = found;
    r.value("meridianal automorphism found", mer);
    r.expect("satellite", "pi is not properly a satellite group", "not properly a satellite group", sat.conclusion);
  }
  {
    Stopwatch s(r, "Mayer-Vietoris");
    Json table = Json::object();
    for (int k = 1; k <= 4; ++k) {
      const auto mv = hnn::mayer_vietoris(d, k, hopt);
      const auto prov = mv.imported_facts.empty() ? Provenance::computed : Provenance::imported;
      for (const auto& f : mv.imported_facts) r.imported(f);
      table[std::to_string(k)] = mv.summary;
      if (k == 1)
        r.expect("H1", "H1(pi) = Z", "Z", mv.exact ? mv.exact->to_string() : "?", prov);
      if (k == 3) {
        const bool nonzero = !mv.cokernel.is_trivial() || (mv.exact && !mv.exact->is_trivial());
        r.claim("H3", "H3(pi) is nonzero", "nonzero", mv.exact ? mv.exact->to_string() : mv.cokernel.to_string(),
                nonzero, prov);
      }
      if (k == 4) {
        bool ok = false;
        std::string seen = "?";
        if (mv.exact) {
          seen = mv.exact->to_string();
          const auto order = mv.exact->torsion_order();
          ok = mv.exact->free_rank == 0 && mv.exact->divisors.size() <= 1 && 8 % order == 0;
        }
        r.claim("H4", "H4(pi) is cyclic of order dividing 8", "cyclic, order | 8", seen, ok, prov);
      }
    }
    r.value("Mayer-Vietoris", table);
  }
  return r;
}

Report census(const Options& o) {
  Report r("census");
  census::CensusOptions copt;
  copt.jobs = o.jobs;
  copt.homology.max_cells = o.budget;
  r.input("budget", o.budget);
  census::CensusReport rep;
  {
    Stopwatch s(r, "catalog");
    rep = census::run_catalog(copt);
  }
  Json rows = Json::array();
  auto row = [&](const std::string& name) -> const census::BaseReport& {
    for (const auto& b : rep.bases)
      if (b.base == name) return b;
    throw Error("census: no row " + name);
  };
  bool small_clean = true;
  std::set<std::string> with_hits;
  for (const auto& b : rep.bases) {
    rows.push_back({{"base", b.base},
                    {"order", b.order},
                    {"hits", b.hits.size()},
                    {"classes", b.classes.size()},
                    {"phi", b.phi_total},
                    {"exclusion", b.exclusion}});
    if (b.order < 16 && !b.abelian && !b.hits.empty()) small_clean = false;
    if (!b.hits.empty()) with_hits.insert(b.base);
  }
  r.value("rows", rows);
  r.claim("below 16", "no nonabelian base of order < 16 gives a knot group", true, small_clean, small_clean);
  r.expect("nonempty rows", "only Q(16) and D8xZ/2 have hits", Json{"D8xZ/2", "Q(16)"}, Json(with_hits));
  r.expect("Q(16) classes", "Q(16) gives exactly one class", 1, row("Q(16)").classes.size());
  for (const char* name : {"M16", "(Z/2)^2:Z/4", "Q8xZ/2", "D8oZ/4"})
    r.expect(std::string(name) + " empty", std::string(name) + " gives no hits", 0, row(name).hits.size());

  const auto& dz = row("D8xZ/2");
  auto g = fingrp::catalog_group("D8xZ/2");
  std::vector<fingrp::Element> cg{g->element("a^2"), g->element("b"), g->element("x")};
  std::vector<fingrp::Element> im{g->element("a*x"), g->element("a^2"), g->element("b")};
  hnn::HnnData example(g, "D8xZ/2", cg, im);
  std::vector<fingrp::Element> phi;
  for (auto c : example.associated().elements) phi.push_back(example.phi_of(c));
  const auto enc = census::encode(example.associated(), phi);
  const bool has_example =
      std::any_of(dz.hits.begin(), dz.hits.end(), [&](const census::CensusHit& h) { return h.encoding == enc; });
  r.claim("D8xZ/2", "D8xZ/2 has hits, including C = <a^2, b, x>, phi = (ax, a^2, b)", true,
          !dz.hits.empty() && has_example, !dz.hits.empty() && has_example);

  const auto c = example.associated();
  const auto other = fingrp::generated_subgroup(*g, std::vector<fingrp::Element>{g->element("a^2"), g->element("b"), g->element("a*x")});
  auto cgroup = std::make_shared<const fingrp::FiniteGroup>(fingrp::subgroup_as_group(*g, c));
  std::size_t onto = 0;
  for (const auto& f : fingrp::homomorphisms(cgroup, g, {.injective_only = true}))
    if (f.image() == other) ++onto;
  r.expect("168", "injections of (Z/2)^3 onto the other elementary abelian subgroup", 168, onto);
  for (const auto& f : rep.imported_facts) r.imported(f);
  for (const auto& q : rep.open_questions) r.note(q);
  return r;
}

Report out(const Options&) {
  Report r("out");
  const auto& d = quaternion_model();
  const auto gens = hnn::quaternion_automorphisms(d);
  auto named = [&](const std::string& n) -> const hnn::EndoSpec& {
    for (const auto& g : gens)
      if (g.name == n) return g;
    throw Error("no automorphism " + n);
  };
  const auto &f = named("f"), &g = named("g"), &h = named("h");
  for (const auto& a : gens) {
    const bool ok = hnn::verify_automorphism(d, a).ok();
    r.claim(a.name + " automorphism", a.name + " is an automorphism (relators hold, inverse verified)", true, ok, ok);
  }
  const auto id = hnn::identity_endo(d);
  auto rel = [&](const std::string& text, const hnn::EndoSpec& x, const hnn::EndoSpec& y) {
    const bool ok = hnn::same_map(d, x, y);
    r.claim(text, text + " by word reduction", true, ok, ok);
  };
  rel("f^2 = id", hnn::compose(d, f, f), id);
  rel("g^2 = id", hnn::compose(d, g, g), id);
  rel("fg = gf", hnn::compose(d, f, g), hnn::compose(d, g, f));
  rel("fh = hf", hnn::compose(d, f, h), hnn::compose(d, h, f));
  const auto gh = hnn::compose(d, g, h);
  rel("(gh)^2 = id", hnn::compose(d, gh, gh), id);
  const auto h2 = hnn::compose(d, h, h);
  rel("h^2 = conj_a", h2, hnn::conjugation(d, hnn::parse_word(d, "a")));
  const auto h4 = hnn::compose(d, h2, h2);
  rel("h^8 = id", hnn::compose(d, h4, h4), id);

  hnn::OutGroup og;
  {
    Stopwatch s(r, "out group");
    og = hnn::out_group(d, gens);
  }
  r.expect("Out order", "<f, g, h> has order 8 in Out(pi)", 8, og.order());
  r.expect("Out exponent", "<f, g, h> has exponent 2 in Out(pi)", 2, og.exponent());
  r.value("abelian", og.is_abelian());
  const auto fg = hnn::compose(d, f, g);
  if (auto u = hnn::inner_by_base(d, fg))
    r.note("fg is conjugation by the base element " + d.base().name_of(*u) +
           ", so f and g have the same image in Out(pi)");
  r.note("the order is computed modulo conjugation by base elements (the base-normalizer assumption)");

  const auto ht = hnn::to_word(d, hnn::reduce(d, h.t_image));
  const int t_index = d.presentation().generator_count() - 1;
  r.expect("h on H1", "h acts by -1 on H1(pi) = Z", -1, ht.exponent_sum(t_index));

  const auto cands = hnn::stable_letter_candidates(d);
  int valid = 0, inner = 0;
  for (const auto& c : cands) {
    valid += c.map.has_value();
    inner += c.inner_by.has_value();
  }
  r.value("t -> w t candidates", cands.size());
  r.value("candidates giving automorphisms", valid);
  r.value("candidates that are inner", inner);
  return r;
}

}  // namespace hnnkit::cli
