#include "hnnkit/hnn/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hnnkit/error.hpp"
#include "hnnkit/fingrp/catalog.hpp"

namespace hnnkit::hnn {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unknown: break;
  }
  return "unknown";
}

namespace {

Verdict verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

std::string fact_text(const grphom::KnownFact& f) {
  return "H_" + std::to_string(f.degree) + "(" + f.group + ") = " + f.value.to_string() + " [" + f.provenance + "]";
}

}  // namespace

grphom::AbelianHom difference_map(const HnnData& d, const grphom::HomologyGroup& c, const grphom::HomologyGroup& b) {
  return grphom::induced_map(d.j(), c, b) - grphom::induced_map(d.phi(), c, b);
}

BaseHomology base_homology(const HnnData& d, grphom::HomologyOptions options) {
  return BaseHomology{grphom::homology(d.base(), 1, options), grphom::homology(d.base(), 2, options),
                      grphom::homology(*d.c_group(), 1, options), grphom::homology(*d.c_group(), 2, options)};
}

KnotGroupCertificate knot_group_certificate(const HnnData& d, grphom::HomologyOptions options) {
  KnotGroupCertificate cert;
  cert.euler = Rational(1, d.base().order()) - Rational(1, d.c_group()->order());
  BaseHomology h;
  try {
    h = base_homology(d, options);
  } catch (const BudgetExceeded& e) {
    // Normal closure and the Euler characteristic need no homology.
    std::vector<Element> rel;
    for (Element c : d.associated().elements) rel.push_back(d.base().mul(d.base().inv(c), d.phi_of(c)));
    cert.normal_closure = verdict(fingrp::normal_closure(d.base(), rel).order() == static_cast<std::size_t>(d.base().order()));
    cert.overall = cert.normal_closure == Verdict::fail ? Verdict::fail : Verdict::unknown;
    cert.note = e.what();
    return cert;
  }
  return knot_group_certificate(d, h);
}

KnotGroupCertificate knot_group_certificate(const HnnData& d, const BaseHomology& h) {
  const auto& b = d.base();
  KnotGroupCertificate cert;
  cert.euler = Rational(1, b.order()) - Rational(1, d.c_group()->order());
  cert.h1 = verdict(grphom::is_isomorphism(difference_map(d, h.c1, h.b1)));
  cert.h2 = verdict(grphom::is_surjective(difference_map(d, h.c2, h.b2)));

  std::vector<Element> rel;
  for (Element c : d.associated().elements) rel.push_back(b.mul(b.inv(c), d.phi_of(c)));
  const bool n_is_b = fingrp::normal_closure(b, rel).order() == static_cast<std::size_t>(b.order());
  cert.normal_closure = verdict(n_is_b);
  if (cert.h1 == Verdict::pass && !n_is_b && fingrp::is_solvable(b))
    throw Error("knot group certificate: H1 condition holds for a solvable base but N != B");

  const bool all = cert.h1 == Verdict::pass && cert.h2 == Verdict::pass && n_is_b;
  cert.overall = verdict(all);
  return cert;
}

MayerVietoris mayer_vietoris(const HnnData& d, int k, grphom::HomologyOptions options) {
  if (k < 1) throw Error("Mayer-Vietoris: degree must be at least 1");
  MayerVietoris mv;
  mv.degree = k;

  auto compute = [&](const fingrp::FiniteGroup& g, int degree) -> std::optional<grphom::HomologyGroup> {
    try {
      return grphom::homology(g, degree, options);
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  };

  // coker(H_k(C) -> H_k(B))
  auto hb = compute(d.base(), k);
  if (hb) {
    if (hb->invariants.is_trivial()) {
      mv.cokernel = {};
    } else {
      auto hc = compute(*d.c_group(), k);
      if (!hc) throw BudgetExceeded("Mayer-Vietoris: H_" + std::to_string(k) + " of the associated subgroup is out of budget");
      mv.cokernel = grphom::cokernel(difference_map(d, *hc, *hb));
    }
  } else {
    auto fact = grphom::known_fact(d.base_name(), k);
    if (!fact) throw Error("Mayer-Vietoris: H_" + std::to_string(k) + "(" + d.base_name() + ") is neither computable nor known");
    if (!fact->value.is_trivial())
      throw Error("Mayer-Vietoris: imported H_" + std::to_string(k) + " is nonzero and the map is not computable");
    mv.cokernel = {};
    mv.imported_facts.push_back(fact_text(*fact));
  }

  // ker(H_{k-1}(C) -> H_{k-1}(B)); in degree 0 the difference map vanishes.
  if (k == 1) {
    mv.kernel = AbelianInvariants{1, {}};
  } else {
    auto hc = compute(*d.c_group(), k - 1);
    auto hb1 = compute(d.base(), k - 1);
    if (!hc || !hb1) throw BudgetExceeded("Mayer-Vietoris: degree " + std::to_string(k - 1) + " homology is out of budget");
    mv.kernel = grphom::kernel(difference_map(d, *hc, *hb1));
  }

  const std::string hk = "H_" + std::to_string(k);
  if (mv.kernel.is_trivial()) {
    mv.exact = mv.cokernel;
  } else if (mv.cokernel.is_trivial()) {
    mv.exact = mv.kernel;
  } else if (mv.kernel.divisors.empty()) {
    // A free quotient splits off.
    AbelianInvariants sum = mv.cokernel;
    sum.free_rank += mv.kernel.free_rank;
    mv.exact = sum;
  }
  if (mv.exact) {
    mv.summary = hk + " = " + mv.exact->to_string();
  } else {
    mv.summary = hk + " is an extension of " + mv.kernel.to_string() + " by " + mv.cokernel.to_string();
  }
  return mv;
}

SatelliteReport satellite_obstruction(const HnnData& d) {
  const auto& b = d.base();
  SatelliteReport rep;

  // A central involution of the extension: central in B, inside C, fixed by phi.
  const auto z = fingrp::center(b);
  for (Element x : z.elements)
    if (b.element_order(x) == 2 && d.in_c(x) && d.phi_of(x) == x) rep.central_involution = true;

  std::set<int> orders;
  for (Element x = 0; x < b.order(); ++x) orders.insert(b.element_order(x));
  rep.element_orders.assign(orders.begin(), orders.end());

  // Candidate vertex groups: non-cyclic subgroups of B up to isomorphism.
  struct Candidate {
    std::string label;
    fingrp::GroupPtr group;
  };
  std::vector<Candidate> finite;
  std::set<std::string> seen;
  auto subgroups = fingrp::all_subgroups(b);
  for (const auto& s : subgroups) {
    auto g = std::make_shared<const fingrp::FiniteGroup>(fingrp::subgroup_as_group(b, s));
    std::string label = fingrp::isomorphism_label(*g);
    if (seen.insert(label).second) finite.push_back({label, g});
  }

  const Rational chi_pi = Rational(1, b.order()) - Rational(1, d.c_group()->order());
  std::set<std::string> g_prime_needed;
  int survivors = 0, survivor_q = 0;
  for (int q : rep.element_orders) {
    // chi(H) >= 1/q + chi(pi), from chi(pi) = chi(G) + chi(H) - 1/q and chi(G) <= 0.
    const Rational bound = Rational(1, q) + chi_pi;
    if (bound.numerator() <= 0) {
      rep.cases.push_back({q, "-", 0, bound, true, "bound does not force H finite"});
      ++survivors;
      continue;
    }
    for (const auto& c : finite) {
      SatelliteCase sc{q, c.label, c.group->order(), bound, false, {}};
      bool has_q = false, cyclic = false;
      for (Element x = 0; x < c.group->order(); ++x) {
        has_q |= c.group->element_order(x) == q;
        cyclic |= c.group->element_order(x) == c.group->order();
      }
      if (cyclic) {
        sc.reason = "H cyclic";
      } else if (!has_q) {
        sc.reason = "no element of order q";
      } else if (Rational(1, c.group->order()) < bound) {
        sc.reason = "chi(H) = " + rational_text(Rational(1, c.group->order())) + " < " + rational_text(bound);
      } else {
        sc.survives = true;
        const Rational chi_g = chi_pi - Rational(1, c.group->order()) + Rational(1, q);
        sc.reason = "chi(G) = " + rational_text(chi_g);
        ++survivors;
        if (chi_g.numerator() == 0) {
          survivor_q = q;
        } else {
          survivor_q = -1;  // G' would not be forced finite
        }
      }
      rep.cases.push_back(std::move(sc));
    }
  }

  bool all_blocked = survivor_q > 0 || survivors == 0;
  if (survivors > 0 && survivor_q > 0) {
    // chi(G) = 0 makes G' finite, hence a finite subgroup of B containing the
    // order-q amalgamated subgroup.
    for (const auto& c : finite) {
      bool has_q = false;
      for (Element x = 0; x < c.group->order(); ++x) has_q |= c.group->element_order(x) == survivor_q;
      if (!has_q) continue;
      const bool m = fingrp::has_meridianal_automorphism(c.group).found;
      rep.meridianal_tests.emplace_back(c.label, m);
      if (m) all_blocked = false;
    }
  }
  if (survivors > 1 && survivor_q > 0) {
    // Several survivors are handled by the same G' argument only if they share q.
    std::set<int> qs;
    for (const auto& c : rep.cases)
      if (c.survives) qs.insert(c.q);
    if (qs.size() > 1) all_blocked = false;
  }

  rep.obstruction_complete = rep.central_involution && all_blocked;
  rep.conclusion = rep.obstruction_complete ? "not properly a satellite group" : "inconclusive";
  return rep;
}

}  // namespace hnnkit::hnn
