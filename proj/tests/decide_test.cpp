#include <gtest/gtest.h>

#include <random>
#include <map>

#include "sepdec/decide.hpp"
#include "sepdec/oracles.hpp"
#include "test_support.hpp"

namespace sepdec {
namespace {

const Alphabet kAB{'a', 'b'};
const Alphabet kA{'a'};

Dfa dfa(std::string_view r, const Alphabet& a = kAB) { return to_min_dfa(r, a); }

DecideOptions engines_only() {
  DecideOptions o;
  o.overlap_precheck = false;
  o.guards.max_n = 64;
  return o;
}

/// Distinct random languages over {a,b}.
std::vector<Dfa> corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Dfa> out;
  while (out.size() < count) {
    Dfa d = dfa(to_string(testing::random_regex(kAB, 4 + out.size() % 5, rng)));
    bool fresh = true;
    for (const Dfa& e : out) fresh &= !(d == e);
    if (fresh) out.push_back(d);
  }
  return out;
}

TEST(Separation, EmptyIsAlwaysSeparable) {
  for (Level l : kAllLevels) {
    EXPECT_EQ(separation(dfa("~"), dfa("(ab)*"), l).answer, Answer::Separable);
    EXPECT_EQ(separation(dfa("~"), Dfa::universal(kAB), l).answer, Answer::Separable);
  }
}

TEST(Separation, ParityAtStOne) {
  Verdict v = separation(dfa("(aa)*", kA), dfa("a(aa)*", kA), Level::St1);
  EXPECT_EQ(v.answer, Answer::Inseparable);
  ASSERT_TRUE(v.bad_value.has_value());
  const Element even = v.eta(""), odd = v.eta("a");
  EXPECT_EQ(*v.bad_value, RatingValue::singleton(even) + RatingValue::singleton(odd));
}

TEST(Separation, ParityAtEveryLevel) {
  for (Level l : kAllLevels)
    EXPECT_EQ(separation(dfa("(aa)*", kA), dfa("a(aa)*", kA), l).answer, Answer::Inseparable)
        << to_string(l);
}

TEST(Separation, HalfLevelIsNotSymmetric) {
  Dfa bstar = dfa("b*");
  Dfa has_a = dfa("(a|b)*a(a|b)*");
  EXPECT_EQ(separation(bstar, has_a, Level::StHalf).answer, Answer::Inseparable);
  EXPECT_EQ(separation(has_a, bstar, Level::StHalf).answer, Answer::Separable);
}

TEST(Separation, AbStarAtStTwo) {
  Dfa l = dfa("(ab)*");
  EXPECT_EQ(separation(l, complement(l), Level::St2).answer, Answer::Separable);
}

// {ε} ∪ (aA* ∩ A*b ∩ ¬(A*aaA*) ∩ ¬(A*bbA*)), each piece a marked product of
// alphabet classes, equals (ab)*.
TEST(Separation, AbStarCertificate) {
  Dfa cert = union_of(
      dfa("_"), intersect(intersect(dfa("a(a|b)*"), dfa("(a|b)*b")),
                          intersect(complement(dfa("(a|b)*a(a(a|b)*)")),
                                    complement(dfa("(a|b)*b(b(a|b)*)")))));
  EXPECT_TRUE(equal(cert, dfa("(ab)*")));
}

TEST(Separation, BadValueMeetsBothInputs) {
  for (Level l : kAllLevels) {
    Verdict v = separation(dfa("(ab)*"), dfa("(ab)*b"), l, engines_only());
    if (v.answer != Answer::Inseparable) continue;
    ASSERT_TRUE(v.bad_value);
    EXPECT_TRUE(v.bad_value->intersects(to_rating(v.accepting[0])));
    EXPECT_TRUE(v.bad_value->intersects(to_rating(v.accepting[1])));
  }
}

TEST(Separation, AlphabetMismatch) {
  EXPECT_THROW(separation(dfa("a*", kA), dfa("b*"), Level::St1), AlphabetError);
}

TEST(Separation, MonoidGuard) {
  DecideOptions o;
  o.guards.max_monoid = 4;
  try {
    separation(dfa("(ab)*"), dfa("b(ab)*"), Level::St1, o);
    FAIL() << "expected GuardError";
  } catch (const GuardError& e) {
    EXPECT_EQ(e.guard(), "max-monoid");
  }
}

TEST(Separation, OverlapPrecheck) {
  Verdict v = separation(dfa("a*"), dfa("(a|b)*a"), Level::St1);
  EXPECT_EQ(v.answer, Answer::Inseparable);
  EXPECT_TRUE(v.diagnostics.overlap_precheck);
  EXPECT_EQ(*v.bad_value, RatingValue::singleton(v.eta("a")));
}

TEST(Covering, Examples) {
  const std::vector<Dfa> parities{dfa("(aa)*", kA), dfa("a(aa)*", kA)};
  EXPECT_EQ(covering(Dfa::universal(kA), parities, Level::St1).answer, Answer::Uncoverable);
  EXPECT_EQ(covering(dfa("~", kA), parities, Level::St1).answer, Answer::Coverable);

  Dfa has_a = dfa("(a|b)*a(a|b)*");
  const std::vector<Dfa> halves{dfa("b*"), has_a};
  EXPECT_EQ(covering(Dfa::universal(kAB), halves, Level::St1).answer, Answer::Coverable);
}

TEST(Covering, SingletonMatchesSeparation) {
  for (const Dfa& l : corpus(15, 51)) {
    const std::vector<Dfa> other{complement(l)};
    bool cov = is_positive(covering(l, other, Level::St1, engines_only()).answer);
    bool sep = is_positive(separation(l, complement(l), Level::St1, engines_only()).answer);
    EXPECT_EQ(cov, sep);
  }
}

TEST(Covering, PolLevelsRejected) {
  const std::vector<Dfa> langs{dfa("b*")};
  EXPECT_THROW(covering(dfa("a*"), langs, Level::StHalf), UnsupportedError);
}

TEST(Membership, Examples) {
  EXPECT_EQ(membership(dfa("(a|b)*a(a|b)*"), Level::St1).answer, Answer::Member);
  EXPECT_EQ(membership(dfa("(ab)*"), Level::St1).answer, Answer::NonMember);
  EXPECT_EQ(membership(dfa("(a|b)*a(a|b)*"), Level::StHalf).answer, Answer::Member);
  EXPECT_EQ(membership(dfa("(ab)*"), Level::St2).answer, Answer::Member);
  EXPECT_EQ(membership(dfa("(ab)*"), Level::Dd1).answer, Answer::Member);
  EXPECT_EQ(membership(dfa("((a|b)(a|b))*"), Level::St2).answer, Answer::NonMember);
  EXPECT_EQ(membership(dfa("((a|b)(a|b))*"), Level::Dd1).answer, Answer::NonMember);
}

TEST(Membership, CustomBasisFromParity) {
  // With the length-parity congruence as basis, even length is a basis language.
  Basis parity = from_morphism(transition_monoid(dfa("((a|b)(a|b))*")).morphism, "parity");
  EXPECT_EQ(membership(dfa("((a|b)(a|b))*"), LevelSpec{Operator::BPol, parity}).answer,
            Answer::Member);
  EXPECT_EQ(membership(dfa("((a|b)(a|b))*"), LevelSpec{Operator::Pol, parity}).answer,
            Answer::Member);
}

// Corpus properties.
TEST(Properties, BooleanLevelsAreSymmetric) {
  auto langs = corpus(16, 52);
  for (std::size_t i = 0; i + 1 < langs.size(); i += 2)
    for (Level l : {Level::St1, Level::St2, Level::Dd1})
      EXPECT_EQ(separation(langs[i], langs[i + 1], l).answer,
                separation(langs[i + 1], langs[i], l).answer);
}

TEST(Properties, OverlapImpliesInseparableForEngines) {
  auto langs = corpus(16, 53);
  for (std::size_t i = 0; i + 1 < langs.size(); ++i) {
    if (is_empty(intersect(langs[i], langs[i + 1]))) continue;
    for (Level l : kAllLevels)
      EXPECT_EQ(separation(langs[i], langs[i + 1], l, engines_only()).answer,
                Answer::Inseparable);
  }
}

TEST(Properties, HierarchyIsMonotone) {
  auto langs = corpus(24, 54);
  for (std::size_t i = 0; i < langs.size(); ++i) {
    const Dfa& l1 = langs[i];
    const Dfa l2 = i % 2 ? complement(l1) : langs[(i + 1) % langs.size()];
    std::map<Level, bool> sep;
    for (Level l : kAllLevels) sep[l] = is_positive(separation(l1, l2, l, engines_only()).answer);
    EXPECT_LE(sep[Level::StHalf], sep[Level::St1]);
    EXPECT_LE(sep[Level::St1], sep[Level::Dd1]);
    EXPECT_LE(sep[Level::Dd1], sep[Level::St2]);
    EXPECT_LE(sep[Level::DdHalf], sep[Level::Dd1]);
    EXPECT_LE(sep[Level::StHalf], sep[Level::PolAt]);
    EXPECT_LE(sep[Level::StHalf], sep[Level::DdHalf]);
    EXPECT_LE(sep[Level::PolAt], sep[Level::St2]);
  }
}

TEST(Properties, MembershipMatchesOracles) {
  for (const Dfa& l : corpus(30, 55)) {
    bool st1 = membership(l, Level::St1).answer == Answer::Member;
    EXPECT_EQ(st1, oracles::is_j_trivial(transition_monoid(l).morphism.target()));
    bool half = membership(l, Level::StHalf).answer == Answer::Member;
    EXPECT_EQ(half, oracles::is_upward_closed(l));
  }
}

TEST(Properties, SubwordSeparatorImpliesStOne) {
  auto langs = corpus(20, 56);
  for (std::size_t i = 0; i + 1 < langs.size(); ++i)
    for (std::size_t k = 0; k <= 3; ++k)
      if (oracles::k_subword_separable(langs[i], langs[i + 1], k)) {
        EXPECT_EQ(separation(langs[i], langs[i + 1], Level::St1).answer, Answer::Separable);
        break;
      }
}

}  // namespace
}  // namespace sepdec
