#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hnnkit/census/census.hpp"
#include "hnnkit/fingrp/catalog.hpp"

using namespace hnnkit;
using namespace hnnkit::census;
using fingrp::Element;

namespace {

const CensusReport& full() {
  static const CensusReport r = run_catalog();
  return r;
}

const BaseReport& row(const std::string& name) {
  for (const auto& b : full().bases)
    if (b.base == name) return b;
  throw std::runtime_error("no row " + name);
}

// The triple with C generated by `gens` and phi given on those generators.
std::vector<int> datum(const std::string& base, const std::vector<std::string>& gens, const std::vector<std::string>& images) {
  auto g = fingrp::catalog_group(base);
  std::vector<Element> x, y;
  for (const auto& s : gens) x.push_back(g->element(s));
  for (const auto& s : images) y.push_back(g->element(s));
  hnn::HnnData d(g, base, x, y);
  std::vector<Element> phi;
  for (Element c : d.associated().elements) phi.push_back(d.phi_of(c));
  return encode(d.associated(), phi);
}

bool has_hit(const BaseReport& r, const std::vector<int>& enc) {
  return std::any_of(r.hits.begin(), r.hits.end(), [&](const CensusHit& h) { return h.encoding == enc; });
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST(Census, NoNonabelianBaseBelowSixteen) {
  for (const auto& b : full().bases)
    if (b.order < 16) EXPECT_TRUE(b.hits.empty()) << b.base;
}

TEST(Census, OnlyQ16AndD8xZ2HaveHits) {
  std::set<std::string> with_hits;
  for (const auto& b : full().bases)
    if (!b.hits.empty()) with_hits.insert(b.base);
  EXPECT_EQ(with_hits, (std::set<std::string>{"Q(16)", "D8xZ/2"}));
}

TEST(Census, Q16HitsFormOneClass) {
  const auto& q = row("Q(16)");
  ASSERT_FALSE(q.hits.empty());
  EXPECT_EQ(q.classes.size(), 1u);
  // The datum in the t c t^-1 = phi(c) convention, and the parameterised form
  // with j(x) = a^2, j(y) = b, phi(x) = ab, phi(y) = a^2.
  EXPECT_TRUE(has_hit(q, datum("Q(16)", {"a^2", "a*b"}, {"b", "a^2"})));
  EXPECT_TRUE(has_hit(q, datum("Q(16)", {"a^2", "b"}, {"a*b", "a^2"})));
}

TEST(Census, D8xZ2ContainsTheExample) {
  const auto& r = row("D8xZ/2");
  EXPECT_TRUE(has_hit(r, datum("D8xZ/2", {"a^2", "b", "x"}, {"a*x", "a^2", "b"})));
}

TEST(Census, D8xZ2IsomorphismsOntoTheOtherCube) {
  auto g = fingrp::catalog_group("D8xZ/2");
  const std::vector<Element> cg{g->element("a^2"), g->element("b"), g->element("x")};
  const std::vector<Element> og{g->element("a^2"), g->element("b"), g->element("a*x")};
  const auto c = fingrp::generated_subgroup(*g, cg);
  const auto other = fingrp::generated_subgroup(*g, og);
  ASSERT_EQ(c.order(), 8u);
  ASSERT_NE(c, other);
  auto cgroup = std::make_shared<const fingrp::FiniteGroup>(fingrp::subgroup_as_group(*g, c));
  int onto = 0;
  for (const auto& phi : fingrp::homomorphisms(cgroup, g, {.injective_only = true}))
    if (phi.image() == other) ++onto;
  EXPECT_EQ(onto, 168);
}

TEST(Census, D8xZ2ClassCount) {
  // Pinned after cross-checking against the unfiltered enumeration below.
  EXPECT_EQ(row("D8xZ/2").classes.size(), 1u);
  EXPECT_EQ(row("D8xZ/2").hits.size(), 128u);
}

TEST(Census, ExclusionReasons) {
  EXPECT_TRUE(contains(row("D8").exclusion, "H2(j) - H2(phi) is never surjective"));
  EXPECT_TRUE(contains(row("D12").exclusion, "H2(j) - H2(phi) is never surjective"));
  EXPECT_TRUE(contains(row("A4").exclusion, "H2(j) - H2(phi) is never surjective"));
  EXPECT_TRUE(contains(row("(Z/2)^2:Z/4").exclusion, "H2(j) - H2(phi) is never surjective"));
  EXPECT_TRUE(contains(row("M16").exclusion, "no phi with H1(j) - H1(phi) an isomorphism"));
  EXPECT_EQ(row("Q(8)").exclusion, "no proper subgroup with abelianization Z/2 + Z/2");
  EXPECT_EQ(row("Q8xZ/2").exclusion, "no proper subgroup with abelianization Z/2 + Z/2 + Z/2");
  EXPECT_EQ(row("D8oZ/4").exclusion, "no proper subgroup with abelianization Z/2 + Z/2 + Z/2");
  // Bases whose abelianization is cyclic of even order fail the H1 condition.
  for (const char* name : {"S3", "D10", "D14", "Z/3:Z/4"})
    EXPECT_TRUE(contains(row(name).exclusion, "no phi with H1(j) - H1(phi) an isomorphism")) << name;
  EXPECT_EQ(row("M16").subgroup_candidates, 1u);
}

TEST(Census, PartitionIsValidAndIdempotent) {
  for (const auto& b : full().bases) {
    std::size_t total = 0;
    for (const auto& c : b.classes) total += c.orbit_size;
    EXPECT_EQ(total, b.hits.size()) << b.base;
    if (b.hits.empty()) continue;
    auto again = canonicalize(fingrp::catalog_group(b.base), b.hits);
    ASSERT_EQ(again.size(), b.classes.size());
    for (std::size_t i = 0; i < again.size(); ++i)
      EXPECT_EQ(again[i].representative.encoding, b.classes[i].representative.encoding);
    for (const auto& h : b.hits) {
      EXPECT_EQ(h.certificate.normal_closure, hnn::Verdict::pass);
      EXPECT_TRUE(fingrp::is_solvable(*fingrp::catalog_group(b.base)));
    }
  }
}

TEST(Census, ParallelRunMatchesSerial) {
  CensusOptions opts;
  opts.jobs = 4;
  auto g = fingrp::catalog_group("D8xZ/2");
  auto par = enumerate_base("D8xZ/2", g, opts);
  const auto& ser = row("D8xZ/2");
  ASSERT_EQ(par.hits.size(), ser.hits.size());
  for (std::size_t i = 0; i < par.hits.size(); ++i) EXPECT_EQ(par.hits[i].encoding, ser.hits[i].encoding);
  EXPECT_EQ(par.phi_total, ser.phi_total);
}

// Independent path: no abelianization filter, and classes counted by
// union-find over single equivalence moves.
TEST(Census, UnfilteredEnumerationAgrees) {
  CensusOptions opts;
  opts.unfiltered = true;
  for (const char* name : {"Q(16)", "D8xZ/2", "D8", "M16"}) {
    auto g = fingrp::catalog_group(name);
    auto raw = enumerate_base(name, g, opts);
    const auto& filtered = row(name);
    ASSERT_EQ(raw.hits.size(), filtered.hits.size()) << name;
    for (std::size_t i = 0; i < raw.hits.size(); ++i) EXPECT_EQ(raw.hits[i].encoding, filtered.hits[i].encoding);

    std::map<std::vector<int>, std::size_t> id;
    for (const auto& h : raw.hits) id.emplace(h.encoding, id.size());
    std::vector<std::size_t> parent(id.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto key = [](std::vector<std::pair<Element, Element>> p) {
      std::sort(p.begin(), p.end());
      fingrp::Subgroup c;
      std::vector<Element> phi;
      for (auto [x, y] : p) {
        c.elements.push_back(x);
        phi.push_back(y);
      }
      return encode(c, phi);
    };
    const auto auts = fingrp::automorphisms(g);
    for (const auto& h : raw.hits) {
      std::vector<std::pair<Element, Element>> p;
      for (std::size_t i = 0; i < h.c.elements.size(); ++i) p.emplace_back(h.c.elements[i], h.phi[i]);
      std::vector<std::vector<int>> moves;
      for (Element u = 0; u < g->order(); ++u) {
        auto q = p;
        for (auto& [x, y] : q) y = g->conj(u, y);
        moves.push_back(key(q));
      }
      for (const auto& a : auts) {
        auto q = p;
        for (auto& [x, y] : q) x = a(x), y = a(y);
        moves.push_back(key(q));
      }
      auto q = p;
      for (auto& [x, y] : q) std::swap(x, y);
      moves.push_back(key(q));
      for (const auto& m : moves) {
        auto it = id.find(m);
        ASSERT_NE(it, id.end()) << name;
        parent[find(it->second)] = find(id.at(h.encoding));
      }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
    EXPECT_EQ(roots.size(), filtered.classes.size()) << name;
  }
}
