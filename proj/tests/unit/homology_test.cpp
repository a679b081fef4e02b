#include <gtest/gtest.h>

#include "hnnkit/error.hpp"
#include "hnnkit/fingrp/catalog.hpp"
#include "hnnkit/grphom/homology.hpp"

using namespace hnnkit;
using namespace hnnkit::grphom;
using fingrp::catalog_group;
using fingrp::Element;

namespace {

std::string h(const char* group, int k) { return homology(*catalog_group(group), k).invariants.to_string(); }

// Finite abelian A (x) B from invariants: sum of gcd(d_i, e_j).
AbelianInvariants tensor(const AbelianInvariants& a, const AbelianInvariants& b) {
  std::vector<Integer> out;
  for (const auto& d : a.divisors)
    for (const auto& e : b.divisors) out.push_back(gcd(d, e));
  return AbelianInvariants::from_diagonal(out);
}

AbelianInvariants direct_sum(std::initializer_list<AbelianInvariants> parts) {
  std::vector<Integer> out;
  for (const auto& p : parts) out.insert(out.end(), p.divisors.begin(), p.divisors.end());
  return AbelianInvariants::from_diagonal(out);
}

fingrp::FiniteHom hom(fingrp::GroupPtr src, fingrp::GroupPtr dst, std::vector<const char*> images) {
  std::vector<Element> imgs;
  for (const char* w : images) imgs.push_back(dst->element(w));
  auto map = fingrp::extend_to_hom(*src, src->generators(), imgs, *dst);
  EXPECT_TRUE(map.has_value());
  return {src, dst, *map};
}

}  // namespace

TEST(BarComplex, BoundarySquaresToZero) {
  for (const auto& e : fingrp::catalog()) {
    auto g = catalog_group(e.name);
    int top = g->order() <= 12 ? 4 : 3;
    if (g->order() > 16) top = 2;
    for (int k = 1; k < top; ++k)
      EXPECT_TRUE(bar_boundary(*g, k).product_is_zero(bar_boundary(*g, k + 1))) << e.name << " k=" << k;
  }
}

TEST(BarComplex, BasisIndexRoundTrip) {
  BarBasis b{7, 3};
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b.index(b.tuple(i)), i);
}

TEST(Homology, FirstHomologyIsAbelianization) {
  for (const auto& e : fingrp::catalog()) {
    auto g = catalog_group(e.name);
    EXPECT_EQ(homology(*g, 1).invariants, fingrp::abelianization(*g)) << e.name;
  }
}

TEST(Homology, DegreeZeroIsZ) { EXPECT_EQ(h("S3", 0), "Z"); }

TEST(Homology, TrivialGroup) {
  EXPECT_EQ(h("Z/1", 1), "0");
  EXPECT_EQ(h("Z/1", 2), "0");
}

TEST(Homology, SchurMultipliers) {
  EXPECT_EQ(h("A4", 2), "Z/2");
  EXPECT_EQ(h("M16", 2), "0");
  EXPECT_EQ(h("D8xZ/2", 2), "Z/2 + Z/2 + Z/2");
  EXPECT_EQ(h("D8", 2), "Z/2");
  EXPECT_EQ(h("Q(16)", 2), "0");
  EXPECT_EQ(h("(Z/2)^2", 2), "Z/2");
  for (int n = 1; n <= 16; ++n) EXPECT_EQ(h(("Z/" + std::to_string(n)).c_str(), 2), "0") << n;
}

TEST(Homology, CyclicGroupsInOddDegree) {
  for (int n : {2, 3, 5, 6}) EXPECT_EQ(h(("Z/" + std::to_string(n)).c_str(), 3), "Z/" + std::to_string(n));
}

TEST(Homology, ThirdHomologyOfQ8) { EXPECT_EQ(h("Q(8)", 3), "Z/8"); }

TEST(Homology, KunnethInDegreeTwo) {
  // H2(A x B) = H2(A) + H2(B) + H1(A) (x) H1(B)
  struct Case {
    const char* product;
    const char* a;
    const char* b;
  };
  for (const Case& c : {Case{"D8xZ/2", "D8", "Z/2"}, Case{"Q8xZ/2", "Q(8)", "Z/2"}, Case{"Z/2xZ/4", "Z/2", "Z/4"},
                        Case{"(Z/2)^3", "(Z/2)^2", "Z/2"}, Case{"Z/4xZ/4", "Z/4", "Z/4"}, Case{"Z/2xZ/6", "Z/2", "Z/6"}}) {
    auto ga = catalog_group(c.a), gb = catalog_group(c.b);
    auto expected = direct_sum({homology(*ga, 2).invariants, homology(*gb, 2).invariants,
                                tensor(fingrp::abelianization(*ga), fingrp::abelianization(*gb))});
    EXPECT_EQ(homology(*catalog_group(c.product), 2).invariants, expected) << c.product;
  }
}

TEST(Homology, RepresentativesAreCycles) {
  auto g = catalog_group("D8xZ/2");
  auto hg = homology(*g, 2);
  auto d = bar_boundary(*g, 2);
  for (const auto& z : hg.representatives) EXPECT_TRUE(d.apply(z).empty());
  for (std::size_t i = 0; i < hg.representatives.size(); ++i) {
    auto c = hg.coordinates(hg.representatives[i]);
    for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[j], i == j ? 1 : 0);
  }
}

TEST(Homology, BudgetIsEnforced) {
  HomologyOptions tight;
  tight.max_cells = 1000;
  EXPECT_THROW(homology(*catalog_group("Q(16)"), 3, tight), BudgetExceeded);
}

TEST(InducedMap, IdentityIsIdentity) {
  for (const char* name : {"A4", "D8", "(Z/2)^3"}) {
    auto g = catalog_group(name);
    auto hg = homology(*g, 2);
    auto f = induced_map(fingrp::identity_hom(g), hg, hg);
    AbelianHom id{hg.orders, hg.orders, IntMatrix::identity(hg.orders.size())};
    EXPECT_TRUE(equal_as_maps(f, id)) << name;
  }
}

TEST(InducedMap, Functoriality) {
  // Z/2 -> (Z/2)^2 -> D8xZ/2 and V -> D8 -> D8xZ/2 in degrees 1 and 2.
  auto v = catalog_group("(Z/2)^2");
  auto d8 = catalog_group("D8");
  auto b = catalog_group("D8xZ/2");
  auto f = hom(v, d8, {"a^2", "x"});
  auto g = hom(d8, b, {"a", "x"});
  auto gf = fingrp::compose(g, f);
  for (int k : {1, 2}) {
    auto hv = homology(*v, k), hd = homology(*d8, k), hb = homology(*b, k);
    EXPECT_TRUE(equal_as_maps(induced_map(gf, hv, hb), compose(induced_map(g, hd, hb), induced_map(f, hv, hd)))) << k;
  }
  // Automorphisms of Q(8) compose functorially on H1.
  auto q8 = catalog_group("Q(8)");
  auto auts = fingrp::automorphisms(q8);
  auto h1 = homology(*q8, 1);
  for (std::size_t i = 0; i < auts.size(); i += 5)
    for (std::size_t j = 0; j < auts.size(); j += 7)
      EXPECT_TRUE(equal_as_maps(induced_map(fingrp::compose(auts[i], auts[j]), h1, h1),
                                compose(induced_map(auts[i], h1, h1), induced_map(auts[j], h1, h1))));
}

TEST(InducedMap, ElementaryAbelianIntoD8xZ2) {
  auto c = catalog_group("(Z/2)^3");
  auto b = catalog_group("D8xZ/2");
  auto d8 = catalog_group("D8");
  auto hb = homology(*b, 2);
  auto hd8 = homology(*d8, 2);
  ASSERT_EQ(hd8.representatives.size(), 1u);
  auto d8_in_b = hom(d8, b, {"a", "x"});
  std::vector<SparseVector> f{push_forward(d8_in_b, 2, hd8.representatives[0]),
                              commutator_cycle(*b, b->element("a"), b->element("b")),
                              commutator_cycle(*b, b->element("x"), b->element("b"))};
  // e_i comes from the subgroup spanned by the other two basis vectors.
  auto ca = c->element("a"), cb = c->element("b"), cc = c->element("c");
  std::vector<SparseVector> e{commutator_cycle(*c, cb, cc), commutator_cycle(*c, ca, cc), commutator_cycle(*c, ca, cb)};
  auto images = [&](const fingrp::FiniteHom& j) {
    std::vector<SparseVector> out;
    for (const auto& z : e) out.push_back(push_forward(j, 2, z));
    return *coordinates_in_basis(hb, f, out, 2);
  };
  using M = std::vector<std::vector<int>>;
  EXPECT_EQ(images(hom(c, b, {"a^2", "b", "x"})), (M{{0, 0, 1}, {1, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(images(hom(c, b, {"a*x", "a^2", "b"})), (M{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}}));
  // And the e_i really form a basis of H2 of the source.
  EXPECT_TRUE(coordinates_in_basis(homology(*c, 2), e, e, 2).has_value());
}

TEST(InducedMap, Q8IntoQ16InjectiveInDegreeThree) {
  auto q16 = catalog_group("Q(16)");
  auto h16 = homology(*q16, 3);
  EXPECT_EQ(h16.invariants.to_string(), "Z/16");
  for (const char* gens : {"a^2,a*b", "a^2,b"}) {
    std::vector<Element> s;
    std::string text = gens;
    auto comma = text.find(',');
    s.push_back(q16->element(text.substr(0, comma)));
    s.push_back(q16->element(text.substr(comma + 1)));
    auto sub = fingrp::generated_subgroup(*q16, s);
    auto group = std::make_shared<const fingrp::FiniteGroup>(fingrp::subgroup_as_group(*q16, sub));
    auto inc = fingrp::inclusion(q16, group, sub);
    auto hsub = homology(*group, 3);
    EXPECT_EQ(hsub.invariants.to_string(), "Z/8");
    EXPECT_TRUE(is_injective(induced_map(inc, hsub, h16))) << gens;
  }
}

TEST(KnownFacts, QuaternionDegreeFour) {
  auto f = known_fact("Q(16)", 4);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(f->value.is_trivial());
  EXPECT_FALSE(f->provenance.empty());
  EXPECT_TRUE(known_fact("Q(8)", 4).has_value());
  EXPECT_FALSE(known_fact("D8", 4).has_value());
}
