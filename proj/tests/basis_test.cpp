#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sepdec/basis.hpp"
#include "test_support.hpp"

namespace sepdec {
namespace {

const Alphabet kAB{'a', 'b'};
const Alphabet kA{'a'};

Morphism parity() { return transition_monoid(to_min_dfa("(aa)*", kA)).morphism; }

TEST(Builtin, AlphabetTestingHasFourClasses) {
  Basis at = builtin_basis("at", kAB);
  ASSERT_EQ(at.num_classes(), 4u);
  EXPECT_EQ(at.class_of(""), at.class_of(""));
  std::set<ClassId> seen{at.class_of(""), at.class_of("a"), at.class_of("b"), at.class_of("ab")};
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_EQ(at.class_of("aab"), at.class_of("ba"));
  EXPECT_EQ(at.class_of("aaa"), at.class_of("a"));
  EXPECT_EQ(at.witness(at.class_of("bab")), "ab");
}

TEST(Builtin, StZeroHasOneClass) {
  Basis st0 = builtin_basis("st0", kAB);
  EXPECT_EQ(st0.num_classes(), 1u);
  EXPECT_EQ(st0.class_of("abba"), st0.class_of(""));
}

TEST(Builtin, DotDepthZeroSeparatesEmptyWord) {
  Basis dd0 = builtin_basis("dd0", kA);
  ASSERT_EQ(dd0.num_classes(), 2u);
  EXPECT_NE(dd0.class_of(""), dd0.class_of("a"));
  EXPECT_EQ(dd0.class_of("a"), dd0.class_of("aa"));
  ClassId p = dd0.class_of("a");
  EXPECT_EQ(dd0.multiply(p, p), p);
}

TEST(Builtin, UnknownNameThrows) { EXPECT_THROW(builtin_basis("st9", kAB), Error); }

TEST(FromMorphism, Examples) {
  EXPECT_EQ(from_morphism(parity()).num_classes(), 2u);
  EXPECT_EQ(from_morphism(trivial_morphism(kAB)).class_morphism(),
            builtin_basis("st0", kAB).class_morphism());
  Basis at = builtin_basis("at", kAB);
  EXPECT_EQ(from_morphism(at.class_morphism()).class_morphism(), at.class_morphism());
}

TEST(CompatibleMorphism, WithStZeroIsIsomorphic) {
  Morphism eta = transition_monoid(to_min_dfa("(ab)*", kAB)).morphism;
  CompatibleMorphism alpha = compatible_morphism(eta, builtin_basis("st0", kAB));
  EXPECT_EQ(alpha.morphism.size(), eta.size());
  for (Element s = 0; s < alpha.morphism.size(); ++s) EXPECT_EQ(alpha.class_of(s), 0u);
}

TEST(CompatibleMorphism, ParityTimesDotDepthZero) {
  Basis dd0 = builtin_basis("dd0", kA);
  CompatibleMorphism alpha = compatible_morphism(parity(), dd0);
  ASSERT_EQ(alpha.morphism.size(), 3u);
  Element s = alpha.morphism("a");  // (1, p)
  EXPECT_EQ(alpha.original[s], parity()("a"));
  EXPECT_EQ(alpha.class_of(s), dd0.class_of("a"));
}

TEST(ReachPairs, ParityOverStZero) {
  Morphism eta = parity();
  ReachPairs r(builtin_basis("st0", kA), eta);
  EXPECT_EQ(r.pairs(), (std::vector<std::pair<ClassId, Element>>{{0, 0}, {0, 1}}));
}

TEST(ReachPairs, TrivialOverAlphabetTesting) {
  Basis at = builtin_basis("at", kAB);
  ReachPairs r(at, trivial_morphism(kAB));
  EXPECT_EQ(r.pairs(), (std::vector<std::pair<ClassId, Element>>{{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
}

TEST(ReachPairs, EmptyClassImageIsIdentity) {
  Basis at = builtin_basis("at", kAB);
  Morphism eta = transition_monoid(to_min_dfa("(ab)*", kAB)).morphism;
  ElementSet img = ReachPairs(at, eta).class_image(at.class_of(""));
  ElementSet expected(eta.size(), false);
  expected[eta.target().identity()] = true;
  EXPECT_EQ(img, expected);
}

// Properties against word sampling.
TEST(Properties, ReachPairsIsTheImageOfTheProduct) {
  std::mt19937_64 rng(11);
  for (const char* name : {"st0", "dd0", "at"}) {
    Basis b = builtin_basis(name, kAB);
    for (int i = 0; i < 8; ++i) {
      Morphism eta =
          transition_monoid(to_min_dfa(testing::random_regex(kAB, 3 + i % 6, rng), kAB)).morphism;
      ReachPairs r(b, eta);
      for (int k = 0; k < 200; ++k) {
        std::string w = testing::random_word(kAB, 10, rng);
        EXPECT_TRUE(r.contains(b.class_of(w), eta(w)));
      }
      // Every pair has a witness word: BFS over words up to the pair count.
      std::set<std::pair<ClassId, Element>> found;
      for (const auto& w : testing::words_up_to(kAB, 8)) found.emplace(b.class_of(w), eta(w));
      EXPECT_EQ(std::vector(found.begin(), found.end()), r.pairs());
      for (ClassId d = 0; d < b.num_classes(); ++d) {
        ElementSet img = r.class_image(d);
        EXPECT_NE(std::find(img.begin(), img.end(), true), img.end());
      }
    }
  }
}

TEST(Properties, CompatibleMorphismProjections) {
  std::mt19937_64 rng(12);
  for (const char* name : {"st0", "dd0", "at"}) {
    Basis b = builtin_basis(name, kAB);
    for (int i = 0; i < 8; ++i) {
      Morphism eta =
          transition_monoid(to_min_dfa(testing::random_regex(kAB, 3 + i % 6, rng), kAB)).morphism;
      CompatibleMorphism alpha = compatible_morphism(eta, b);
      for (int k = 0; k < 200; ++k) {
        std::string w = testing::random_word(kAB, 10, rng);
        Element s = alpha.morphism(w);
        EXPECT_EQ(alpha.original[s], eta(w));
        EXPECT_EQ(alpha.class_of(s), b.class_of(w));
      }
    }
  }
}

}  // namespace
}  // namespace sepdec
