#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hnnkit/error.hpp"
#include "hnnkit/presentations/presentation.hpp"
#include "hnnkit/presentations/tietze.hpp"

using namespace hnnkit;
using namespace hnnkit::pres;

namespace {

const char* kFourRelator = "< a, t | a^8, a^-2*t*a*t*a^2*t^-2, a^2*t*a*t*a^-2*t^-2, a^4*t^-1*a^-4*t >";

Word random_word(std::mt19937& rng, int gens, int length) {
  std::vector<Letter> letters;
  for (int i = 0; i < length; ++i) letters.push_back(letter(static_cast<int>(rng() % static_cast<unsigned>(gens)), rng() % 2));
  return Word(letters);
}

}  // namespace

TEST(Word, FreeReductionIsIdempotentAndShortening) {
  std::mt19937 rng(1);
  for (int i = 0; i < 500; ++i) {
    std::vector<Letter> raw;
    for (int k = 0; k < 12; ++k) raw.push_back(letter(static_cast<int>(rng() % 3), rng() % 2));
    auto once = free_reduce(raw);
    EXPECT_LE(once.size(), raw.size());
    EXPECT_EQ(free_reduce(once), once);
  }
}

TEST(Word, InverseAndCyclicForms) {
  Word w{1, 2, -1};
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(w.cyclically_reduced(), Word{2});
  Word u{1, 1, 2};
  EXPECT_EQ(u.rotated(1).cyclic_canonical(), u.cyclic_canonical());
  EXPECT_EQ(u.inverse().cyclic_canonical(), u.cyclic_canonical());
}

TEST(Presentation, ParseAndFormatRoundTrip) {
  auto p = parse_presentation(kFourRelator);
  EXPECT_EQ(p.generator_count(), 2);
  EXPECT_EQ(p.relators().size(), 4u);
  EXPECT_EQ(parse_presentation(format_presentation(p)), p);
  auto q = parse_presentation("< a, b | a^4 = b^2 = (a*b)^2, [a,b]^2 >");
  EXPECT_EQ(q.relators().size(), 3u);
  EXPECT_EQ(parse_presentation(format_presentation(q)), q);
}

TEST(Presentation, ParseErrorsCarryPosition) {
  try {
    parse_presentation("< a, b |\n a^2, c >");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 0);
  }
  EXPECT_THROW(parse_presentation("< a | a^ >"), ParseError);
}

TEST(Presentation, AbelianInvariants) {
  EXPECT_EQ(abelian_invariants(parse_presentation(kFourRelator)).to_string(), "Z");
  EXPECT_EQ(abelian_invariants(parse_presentation("< a | a^8 >")).to_string(), "Z/8");
  EXPECT_EQ(abelian_invariants(parse_presentation("< a, b | a^4 = b^2 = (a*b)^2 >")).to_string(), "Z/2 + Z/2");
  EXPECT_EQ(abelian_invariants(parse_presentation("< a, b | >")).to_string(), "Z^2");
}

TEST(Tietze, DuplicateRelatorRemoved) {
  auto p = parse_presentation("< a, b | a^3, b^2, a^3, a^-3 >");
  auto r = tietze_simplify(p);
  EXPECT_TRUE(trace_is_consistent(r.trace));
  EXPECT_EQ(r.presentation.total_length(), 5u);
}

TEST(Tietze, EliminatesGeneratorDefinedByRelator) {
  auto r = tietze_simplify(parse_presentation("< a, b | a*b >"));
  EXPECT_EQ(r.presentation.generator_count(), 1);
  EXPECT_TRUE(r.presentation.relators().empty());
  ASSERT_EQ(r.trace.forward.size(), 2u);
  EXPECT_EQ(r.trace.forward[1], Word{-1});
  EXPECT_TRUE(trace_is_consistent(r.trace));
}

TEST(Tietze, ThirdRelatorIsCertifiedConsequence) {
  auto p = parse_presentation(kFourRelator);
  std::vector<Word> others{p.relators()[0], p.relators()[1], p.relators()[3]};
  auto search = prove_consequence(others, p.relators()[2], 200000);
  ASSERT_TRUE(search.proven);
  EXPECT_TRUE(verify_consequence(others, p.relators()[2], search.certificate));

  // Removing it leaves the three-relator form tat^-1 = a^2 t^2 a^-2 t^-2, a^8, a^4 t = t a^4.
  auto three = apply_move(p, TietzeMove{MoveKind::RemoveRelator, 2, -1, {}, "consequence", {}});
  auto expected = parse_presentation("< a, t | t*a*t^-1 = a^2*t^2*a^-2*t^-2, a^8, a^4*t = t*a^4 >");
  std::set<Word> got, want;
  for (const auto& r : three.relators()) got.insert(r.cyclic_canonical());
  for (const auto& r : expected.relators()) want.insert(r.cyclic_canonical());
  EXPECT_EQ(got, want);
}

TEST(Tietze, FourRelatorPresentationSimplifiesWithCertificates) {
  auto p = parse_presentation(kFourRelator);
  auto r = tietze_simplify(p);
  EXPECT_TRUE(trace_is_consistent(r.trace));
  EXPECT_EQ(r.presentation.generator_count(), 2);
  EXPECT_LE(r.presentation.relators().size(), 3u);
  for (const auto& m : r.trace.moves)
    if (m.reason.find("consequence") != std::string::npos) EXPECT_FALSE(m.certificate.empty());
  EXPECT_EQ(abelian_invariants(r.presentation), abelian_invariants(p));
}

TEST(Tietze, CorruptedCertificateIsRejected) {
  auto r = tietze_simplify(parse_presentation(kFourRelator));
  ASSERT_FALSE(r.trace.moves.empty());
  for (auto& m : r.trace.moves)
    if (!m.certificate.empty()) {
      m.certificate.front().sign = -m.certificate.front().sign;
      break;
    }
  EXPECT_FALSE(trace_is_consistent(r.trace));
}

TEST(Tietze, InvariantsStableUnderRandomMoves) {
  std::mt19937 rng(9);
  const char* bases[] = {"< a, b, c | a^2*b^-3, b*c*b^-1*c^-1, a^4*c^6 >", "< a, b, c | c*a*b*a^-1, a^3*b^2, [a,b]^2 >",
                         "< a, t | a^8, a^-2*t*a*t*a^2*t^-2, a^4*t^-1*a^-4*t >"};
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = parse_presentation(bases[trial % 3]);
    const auto base = abelian_invariants(p);
    for (int step = 0; step < 6; ++step) {
      const auto& rels = p.relators();
      TietzeMove m;
      const std::size_t i = rng() % rels.size();
      switch (rng() % 4) {
        case 0: {  // append a product of conjugates of relators
          Word c = random_word(rng, p.generator_count(), 3);
          m = {MoveKind::AddRelator, 0, -1, c * rels[i] * c.inverse() * rels[rng() % rels.size()].inverse(), "random", {}};
          break;
        }
        case 1: {  // replace by a rotated inverse
          m = {MoveKind::ReplaceRelator, i, -1, rels[i].inverse().rotated(rng() % rels[i].size()), "random", {}};
          break;
        }
        case 2: {  // remove a relator that equals a conjugate of another
          Word c = random_word(rng, p.generator_count(), 2);
          p = apply_move(p, TietzeMove{MoveKind::AddRelator, 0, -1, c * rels[i] * c.inverse(), "random", {}});
          m = {MoveKind::RemoveRelator, p.relators().size() - 1, -1, {}, "random", {}};
          break;
        }
        default: {  // eliminate a generator occurring exactly once in relator i
          m.kind = MoveKind::ReplaceRelator;
          m.relator = i;
          m.word = rels[i];
          for (int g = 0; g < p.generator_count() && p.generator_count() > 1; ++g) {
            if (rels[i].occurrences(g) != 1) continue;
            const auto& ls = rels[i].letters();
            std::size_t pos = 0;
            while (generator_of(ls[pos]) != g) ++pos;
            Word rot = rels[i].rotated(pos);  // g^e * rest
            Word rest(std::span<const Letter>(rot.letters().data() + 1, rot.size() - 1));
            m = {MoveKind::EliminateGenerator, i, g, rot[0] > 0 ? rest.inverse() : rest, "random", {}};
            break;
          }
        }
      }
      p = apply_move(p, m);
      if (p.relators().empty()) break;
      ASSERT_EQ(abelian_invariants(p), base) << trial << ":" << step;
    }
  }
}

TEST(VerifyHom, IdentityImagesAlwaysPass) {
  auto p = parse_presentation(kFourRelator);
  std::vector<Word> images(2);
  EXPECT_TRUE(verify_hom(p, images, free_group_identity).ok);
}
