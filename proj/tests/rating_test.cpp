#include <gtest/gtest.h>

#include <random>

#include "sepdec/rating.hpp"
#include "test_support.hpp"

namespace sepdec {
namespace {

const Alphabet kAB{'a', 'b'};
const Alphabet kA{'a'};

RatingValue set_of(std::initializer_list<Element> xs) {
  RatingValue r;
  for (Element x : xs) r = r + RatingValue::singleton(x);
  return r;
}

/// Recognizing morphisms of random languages with at most `max_size` elements.
std::vector<Morphism> small_monoids(std::size_t max_size, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Morphism> out;
  while (out.size() < count) {
    Morphism m = transition_monoid(to_min_dfa(testing::random_regex(kAB, 5, rng), kAB)).morphism;
    if (m.size() <= max_size) out.push_back(m);
  }
  return out;
}

TEST(Order, Examples) {
  EXPECT_TRUE(leq(RatingValue{}, set_of({0, 2})));
  EXPECT_TRUE(leq(set_of({1}), set_of({1, 2})));
  EXPECT_FALSE(leq(set_of({1, 2}), set_of({1})));
}

TEST(Downclose, Examples) {
  EXPECT_TRUE(downclose({}).empty());
  EXPECT_TRUE(downclose({}).materialize().empty());

  const std::vector<RatingValue> xy{set_of({0, 1})};
  EXPECT_EQ(downclose(xy).materialize(),
            (std::vector<RatingValue>{{}, set_of({0}), set_of({1}), set_of({0, 1})}));

  Downset d = Downset::of({set_of({0, 1}), set_of({2})});
  EXPECT_TRUE(d.contains(set_of({0})));
  EXPECT_FALSE(d.contains(set_of({0, 2})));
}

TEST(Downset, InsertKeepsAnAntichain) {
  Downset d;
  EXPECT_TRUE(d.insert(set_of({0})));
  EXPECT_TRUE(d.insert(set_of({0, 1})));
  EXPECT_FALSE(d.insert(set_of({1})));
  EXPECT_EQ(d.maximal(), std::vector<RatingValue>{set_of({0, 1})});
  EXPECT_EQ(meet(d, Downset::of({set_of({1, 2})})), Downset::of({set_of({1})}));
}

TEST(Imprint, Examples) {
  RatingMap rho(transition_monoid(to_min_dfa("(aa)*", kA)).morphism);
  const Element even = rho.eta()("");
  const Element odd = rho.eta()("a");

  const std::vector<Dfa> everything{Dfa::universal(kA)};
  EXPECT_EQ(imprint(rho, everything), Downset::of({set_of({even, odd})}));
  EXPECT_EQ(imprint(rho, everything).materialize().size(), 4u);

  EXPECT_TRUE(imprint(rho, std::span<const Dfa>{}).empty());

  const std::vector<Dfa> parts{to_min_dfa("(aa)*", kA), to_min_dfa("a(aa)*", kA)};
  EXPECT_EQ(imprint(rho, parts).materialize(),
            Downset::of({set_of({even}), set_of({odd})}).materialize());
  EXPECT_EQ(imprint(rho, parts).materialize().size(), 3u);
}

TEST(RatingMap, BaseGuard) {
  Morphism m = transition_monoid(to_min_dfa("(ab)*", kAB)).morphism;
  EXPECT_THROW(RatingMap(m, 4), GuardError);
  EXPECT_NO_THROW(RatingMap(m, 6));
}

TEST(SemiringLaws, ExhaustiveUpToFourElements) {
  for (const Morphism& m : small_monoids(4, 12, 21)) {
    RatingSemiring r(m.target());
    const std::uint64_t count = std::uint64_t{1} << m.size();
    for (std::uint64_t x = 0; x < count; ++x) {
      RatingValue a{x};
      EXPECT_EQ(r.multiply(a, r.one()), a);
      EXPECT_EQ(r.multiply(r.one(), a), a);
      EXPECT_EQ(r.multiply(a, r.zero()), r.zero());
      EXPECT_EQ(r.multiply(r.zero(), a), r.zero());
      EXPECT_EQ(a + a, a);
      for (std::uint64_t y = 0; y < count; ++y) {
        RatingValue b{y};
        EXPECT_EQ(a + b, b + a);
        for (std::uint64_t z = 0; z < count; ++z) {
          RatingValue c{z};
          ASSERT_EQ(r.multiply(r.multiply(a, b), c), r.multiply(a, r.multiply(b, c)));
          ASSERT_EQ(r.multiply(a, b + c), r.multiply(a, b) + r.multiply(a, c));
          ASSERT_EQ(r.multiply(b + c, a), r.multiply(b, a) + r.multiply(c, a));
        }
      }
    }
  }
}

TEST(OrderCompatibility, ExhaustiveUpToThreeElements) {
  for (const Morphism& m : small_monoids(3, 10, 22)) {
    RatingSemiring r(m.target());
    const std::uint64_t count = std::uint64_t{1} << m.size();
    for (std::uint64_t x = 0; x < count; ++x)
      for (std::uint64_t y = 0; y < count; ++y) {
        if (!leq(RatingValue{x}, RatingValue{y})) continue;
        for (std::uint64_t z = 0; z < count; ++z) {
          EXPECT_TRUE(leq(r.multiply({x}, {z}), r.multiply({y}, {z})));
          EXPECT_TRUE(leq(r.multiply({z}, {x}), r.multiply({z}, {y})));
        }
      }
  }
}

TEST(OrderCompatibility, RandomizedOnLargerMonoids) {
  std::mt19937_64 rng(23);
  for (const Morphism& m : small_monoids(16, 10, 24)) {
    RatingSemiring r(m.target());
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << m.size()) - 1);
    for (int i = 0; i < 500; ++i) {
      RatingValue y{pick(rng)};
      RatingValue x{y.bits & pick(rng)};
      RatingValue z{pick(rng)};
      EXPECT_TRUE(leq(r.multiply(x, z), r.multiply(y, z)));
      EXPECT_TRUE(leq(r.multiply(z, x), r.multiply(z, y)));
    }
  }
}

TEST(RatingMap, MultiplicativeOnConcatenation) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 40; ++i) {
    Dfa k1 = to_min_dfa(testing::random_regex(kAB, 1 + i % 6, rng), kAB);
    Dfa k2 = to_min_dfa(testing::random_regex(kAB, 1 + (i * 5) % 6, rng), kAB);
    Dfa probe = to_min_dfa(testing::random_regex(kAB, 5, rng), kAB);
    RatingMap rho(transition_monoid(probe).morphism, 64);
    EXPECT_EQ(rho.of_language(concatenate(k1, k2)),
              rho.semiring().multiply(rho.of_language(k1), rho.of_language(k2)));
    EXPECT_EQ(rho.of_language(union_of(k1, k2)), rho.of_language(k1) + rho.of_language(k2));
  }
}

TEST(RatingMap, WordsAreSingletons) {
  RatingMap rho(transition_monoid(to_min_dfa("(ab)*", kAB)).morphism);
  EXPECT_EQ(rho.of_word(""), rho.semiring().one());
  EXPECT_EQ(rho.of_word("ab"), rho.semiring().multiply(rho.of_letter(0), rho.of_letter(1)));
}

}  // namespace
}  // namespace sepdec
