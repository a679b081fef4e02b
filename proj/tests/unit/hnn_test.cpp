#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "hnnkit/fingrp/catalog.hpp"
#include "hnnkit/fingrp/todd_coxeter.hpp"
#include "hnnkit/hnn/automorphisms.hpp"
#include "hnnkit/hnn/certificate.hpp"

using namespace hnnkit;
using namespace hnnkit::hnn;

namespace {

const HnnData& pi() {
  static const HnnData d = quaternion_extension();
  return d;
}

HnnWord w(const char* text) { return parse_word(pi(), text); }

HnnWord random_word(std::mt19937& rng, int t_letters) {
  std::uniform_int_distribution<int> elem(0, pi().base().order() - 1), sign(0, 1);
  HnnWord x;
  x.b = {elem(rng)};
  for (int i = 0; i < t_letters; ++i) {
    x.t.push_back(sign(rng) ? 1 : -1);
    x.b.push_back(elem(rng));
  }
  return x;
}

const EndoSpec& named(const std::vector<EndoSpec>& v, const std::string& n) {
  for (const auto& e : v)
    if (e.name == n) return e;
  throw std::runtime_error("missing " + n);
}

}  // namespace

TEST(HnnReduce, RelationsCollapse) {
  EXPECT_TRUE(reduce(pi(), w("t*a^2*t^-1*b^-1")).is_identity());
  EXPECT_TRUE(reduce(pi(), w("t*a*b*t^-1*a^-2")).is_identity());
  EXPECT_TRUE(reduce(pi(), w("a^8")).is_identity());
  EXPECT_TRUE(reduce(pi(), w("a^4*t^-1*a^-4*t")).is_identity());
}

TEST(HnnReduce, NoPinchKeepsLength) {
  EXPECT_EQ(reduce(pi(), w("t*a*t^-1")).t_length(), 2u);
  EXPECT_EQ(reduce(pi(), w("t^-1*a*t")).t_length(), 2u);  // a is not in phi(C)
  EXPECT_EQ(reduce(pi(), w("t^-1*b*t")), reduce(pi(), w("a^2")));
}

TEST(HnnReduce, PresentationOfTheExtension) {
  const auto p = pi().presentation();
  EXPECT_EQ(p.generator_names(), (std::vector<std::string>{"a", "b", "t"}));
  for (const auto& r : p.relators()) EXPECT_TRUE(is_identity(pi(), from_word(pi(), r)));
}

TEST(HnnReduce, IdempotentShrinkingAndSound) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    HnnWord x = random_word(rng, trial % 7);
    HnnWord r = reduce(pi(), x);
    EXPECT_EQ(reduce(pi(), r), r);
    EXPECT_LE(r.t_length(), x.t_length());
    EXPECT_TRUE(multiply(pi(), x, inverse(pi(), x)).is_identity());
  }
}

TEST(HnnReduce, Associative) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    HnnWord x = random_word(rng, 3), y = random_word(rng, 2), z = random_word(rng, 3);
    EXPECT_EQ(multiply(pi(), multiply(pi(), x, y), z), multiply(pi(), x, multiply(pi(), y, z)));
  }
}

TEST(HnnReduce, InsertingARelatorChangesNothing) {
  std::mt19937 rng(3);
  const auto rels = pi().presentation().relators();
  for (int trial = 0; trial < 1000; ++trial) {
    HnnWord x = random_word(rng, trial % 5);
    std::vector<pres::Letter> letters = to_word(pi(), x).letters();
    const auto& r = rels[static_cast<std::size_t>(trial) % rels.size()];
    std::size_t at = std::uniform_int_distribution<std::size_t>(0, letters.size())(rng);
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(at), r.letters().begin(), r.letters().end());
    EXPECT_EQ(reduce(pi(), from_word(pi(), pres::Word(letters))), reduce(pi(), x));
  }
}

// Adding t^m = 1 gives a finite quotient (orders 1 and 2 for m = 1, 2; 2016
// for m = 6). Words equal in the extension stay equal there. Checked on
// every word of t-length at most 2.
TEST(HnnReduce, AgreesWithFiniteQuotients) {
  const auto& d = pi();
  const int n = d.base().order();
  for (int m : {1, 2, 6}) {
    auto p = d.presentation();
    auto rels = p.relators();
    rels.push_back(pres::Word::generator(2, m));
    auto q = fingrp::from_presentation(pres::Presentation(p.generator_names(), rels));
    if (m == 6) {
      // B embeds, so the quotient also separates all t-free words.
      std::set<fingrp::Element> images;
      for (int x = 0; x < n; ++x) images.insert(q.evaluate(d.base().word_of(x)));
      EXPECT_EQ(images.size(), static_cast<std::size_t>(n));
    }

    std::map<HnnWord, fingrp::Element> seen;
    std::size_t words = 0;
    auto check = [&](const HnnWord& x) {
      ++words;
      const auto value = q.evaluate(to_word(d, x));
      auto [it, fresh] = seen.emplace(reduce(d, x), value);
      if (!fresh) EXPECT_EQ(it->second, value);
    };
    for (int b0 = 0; b0 < n; ++b0) {
      check(HnnWord{{b0}, {}});
      for (int e1 : {1, -1})
        for (int b1 = 0; b1 < n; ++b1) {
          check(HnnWord{{b0, b1}, {e1}});
          for (int e2 : {1, -1})
            for (int b2 = 0; b2 < n; ++b2) check(HnnWord{{b0, b1, b2}, {e1, e2}});
        }
    }
    EXPECT_EQ(words, static_cast<std::size_t>(n + 2 * n * n + 4 * n * n * n));
    EXPECT_LT(seen.size(), words);  // the rewriting actually identifies words
  }
}

TEST(HnnReduce, TextRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    HnnWord x = reduce(pi(), random_word(rng, trial % 4));
    EXPECT_EQ(reduce(pi(), parse_word(pi(), to_string(pi(), x))), x);
  }
}

TEST(HnnAutomorphisms, GeneratorsAreAutomorphisms) {
  for (const auto& f : quaternion_automorphisms(pi())) {
    auto c = verify_automorphism(pi(), f);
    EXPECT_TRUE(c.ok()) << f.name;
  }
  // f is its own inverse.
  const auto gens = quaternion_automorphisms(pi());
  EXPECT_TRUE(verify_automorphism(pi(), named(gens, "f"), named(gens, "f")).ok());
}

TEST(HnnAutomorphisms, BrokenSpecFails) {
  EndoSpec bad{"bad", {w("a"), w("b")}, w("a*t")};
  auto c = verify_automorphism(pi(), bad);
  EXPECT_FALSE(c.relators_hold);
  ASSERT_TRUE(c.failing_relator.has_value());
  // The relation t a^2 t^-1 = b goes to a t a^2 t^-1 a^-1 b^-1 = a b a^-1 b^-1, nontrivial.
  EXPECT_FALSE(is_identity(pi(), w("a*t*a^2*t^-1*a^-1*b^-1")));
}

TEST(HnnAutomorphisms, Relations) {
  const auto& d = pi();
  const auto gens = quaternion_automorphisms(d);
  const auto &f = named(gens, "f"), &g = named(gens, "g"), &h = named(gens, "h");
  const auto id = identity_endo(d);
  EXPECT_TRUE(same_map(d, compose(d, f, f), id));
  EXPECT_TRUE(same_map(d, compose(d, g, g), id));
  EXPECT_TRUE(same_map(d, compose(d, f, g), compose(d, g, f)));
  EXPECT_TRUE(same_map(d, compose(d, f, h), compose(d, h, f)));
  const auto gh = compose(d, g, h);
  EXPECT_TRUE(same_map(d, compose(d, gh, gh), id));
  const auto h2 = compose(d, h, h);
  EXPECT_TRUE(same_map(d, h2, conjugation(d, w("a"))));
  EXPECT_TRUE(same_map(d, compose(d, compose(d, h2, h2), compose(d, h2, h2)), id));
}

// fg(t) = a^5 t. With u = a^-1 b, u^-1 = a^3 b lies in C, so
// t u^-1 = phi(a^3 b) t = b a^2 t and u t u^-1 = a^-1 b^2 a^2 t = a^5 t.
TEST(HnnAutomorphisms, FgIsConjugationByABaseElement) {
  const auto& d = pi();
  const auto gens = quaternion_automorphisms(d);
  const auto fg = compose(d, named(gens, "f"), named(gens, "g"));
  EXPECT_EQ(reduce(d, fg.t_image), reduce(d, w("a^5*t")));
  EXPECT_TRUE(same_map(d, fg, conjugation(d, w("a^-1*b"))));
  ASSERT_TRUE(inner_by_base(d, fg).has_value());
}

TEST(HnnAutomorphisms, OutGroupOfTheGenerators) {
  const auto& d = pi();
  auto out = out_group(d, quaternion_automorphisms(d));
  // f and g differ by an inner automorphism, so only f and h survive.
  EXPECT_EQ(out.order(), 4);
  EXPECT_EQ(out.exponent(), 2);
  EXPECT_TRUE(out.is_abelian());
  EXPECT_EQ(out_group(d, {identity_endo(d)}).order(), 1);
}

TEST(HnnAutomorphisms, StableLetterCandidates) {
  const auto& d = pi();
  auto cands = stable_letter_candidates(d);
  ASSERT_EQ(cands.size(), 16u);
  int valid = 0, inner = 0;
  const auto c = d.associated();
  for (const auto& cand : cands) {
    if (cand.map) {
      ++valid;
      EXPECT_EQ(cand.exponents.size(), 1u);  // at most one choice of (i, j)
    }
    if (cand.inner_by) {
      ++inner;
      EXPECT_TRUE(c.contains(*cand.inner_by));
    }
  }
  EXPECT_EQ(valid, 8);
  EXPECT_EQ(inner, 4);
}

TEST(HnnAutomorphisms, HReversesTheMeridian) {
  // h sends t to a word of exponent sum -1 in t, so it acts by -1 on H1 = Z.
  const auto gens = quaternion_automorphisms(pi());
  const auto ht = to_word(pi(), reduce(pi(), named(gens, "h").t_image));
  EXPECT_EQ(ht.exponent_sum(2), -1);
}

TEST(KnotGroupCertificate, QuaternionExtension) {
  auto c = knot_group_certificate(pi());
  EXPECT_EQ(c.h1, Verdict::pass);
  EXPECT_EQ(c.h2, Verdict::pass);
  EXPECT_EQ(c.normal_closure, Verdict::pass);
  EXPECT_EQ(c.overall, Verdict::pass);
  EXPECT_EQ(c.euler, Rational(-1, 16));
}

TEST(KnotGroupCertificate, MetacyclicBase) {
  auto z = fingrp::catalog_group("Z/7:Z/3");
  HnnData d(z, "Z/7:Z/3", {z->element("a")}, {z->element("a^2")});
  auto c = knot_group_certificate(d);
  EXPECT_EQ(c.overall, Verdict::pass);
  EXPECT_EQ(c.euler, Rational(1, 21) - Rational(1, 3));
}

TEST(KnotGroupCertificate, TrivialBaseIsTheUnknot) {
  auto one = fingrp::catalog_group("Z/1");
  HnnData d(one, "Z/1", {}, {});
  auto c = knot_group_certificate(d);
  EXPECT_EQ(c.overall, Verdict::pass);
  EXPECT_EQ(c.euler.numerator(), 0);
}

TEST(KnotGroupCertificate, DihedralBaseFailsOnH2) {
  auto d8 = fingrp::catalog_group("D8");
  const auto& g = *d8;
  int admissible = 0;
  for (const auto& s : fingrp::all_subgroups(g)) {
    if (s.order() == 1 || s.order() == 8) continue;
    auto c = std::make_shared<const fingrp::FiniteGroup>(fingrp::subgroup_as_group(g, s));
    for (const auto& phi : fingrp::homomorphisms(c, d8, {.injective_only = true})) {
      std::vector<fingrp::Element> gens, images;
      for (auto x : c->generators()) {
        gens.push_back(s.elements[static_cast<std::size_t>(x)]);
        images.push_back(phi(x));
      }
      HnnData d(d8, "D8", gens, images);
      auto cert = knot_group_certificate(d);
      EXPECT_EQ(cert.euler + Rational(1, c->order()) - Rational(1, 8), Rational(0));
      if (cert.h1 != Verdict::pass) continue;
      ++admissible;
      EXPECT_EQ(cert.h2, Verdict::fail);
      EXPECT_EQ(cert.overall, Verdict::fail);
    }
  }
  EXPECT_GT(admissible, 0);
}

TEST(MayerVietoris, LowDegrees) {
  auto h1 = mayer_vietoris(pi(), 1);
  ASSERT_TRUE(h1.exact.has_value());
  EXPECT_EQ(*h1.exact, (AbelianInvariants{1, {}}));
  auto h2 = mayer_vietoris(pi(), 2);
  ASSERT_TRUE(h2.exact.has_value());
  EXPECT_TRUE(h2.exact->is_trivial());
}

TEST(MayerVietoris, DegreeFourUsesImportedFact) {
  auto h4 = mayer_vietoris(pi(), 4);
  ASSERT_EQ(h4.imported_facts.size(), 1u);
  EXPECT_TRUE(h4.cokernel.is_trivial());
  ASSERT_TRUE(h4.exact.has_value());
  ASSERT_LE(h4.exact->divisors.size(), 1u);
  EXPECT_EQ(h4.exact->free_rank, 0u);
  EXPECT_EQ(8 % static_cast<int>(h4.exact->torsion_order()), 0);
}

TEST(Satellite, QuaternionExtensionIsNotASatellite) {
  auto r = satellite_obstruction(pi());
  EXPECT_TRUE(r.central_involution);
  EXPECT_EQ(r.element_orders, (std::vector<int>{1, 2, 4, 8}));
  int survivors = 0;
  for (const auto& c : r.cases)
    if (c.survives) {
      ++survivors;
      EXPECT_EQ(c.q, 8);
      EXPECT_EQ(c.h_label, "Q(16)");
    }
  EXPECT_EQ(survivors, 1);
  ASSERT_EQ(r.meridianal_tests.size(), 2u);
  for (const auto& [label, found] : r.meridianal_tests) EXPECT_FALSE(found) << label;
  EXPECT_TRUE(r.obstruction_complete);
}
