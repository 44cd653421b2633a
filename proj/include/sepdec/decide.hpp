#ifndef SEPDEC_DECIDE_HPP
#define SEPDEC_DECIDE_HPP

// Separation, covering and membership for Pol(C) and BPol(C), reduced to
// optimal imprint computations.
//
// Boolean levels: L1 is separable from L2 iff no T in the universal optimal
// imprint meets both accepting sets. If K separates, {K, A* \ K} is a cover
// of A* whose pieces each miss L1 or L2, and the optimal imprint lies below
// it. Conversely the pieces of an optimal cover of A* that meet L1 miss L2,
// and their union is a separator.
//
// Pol levels: with alpha = eta x class, L1 is separable from L2 iff for
// every s whose eta-component accepts L1, no T in P(s) meets F2. A separator
// K covers each alpha^-1(s) inside L1 by itself; conversely the union over
// those s of the pieces of optimal covers is a separator, since every piece
// has its rating in P(s) and Pol(C) is a lattice.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepdec/algebra.hpp"
#include "sepdec/automata.hpp"
#include "sepdec/basis.hpp"
#include "sepdec/bpol_fixpoint.hpp"
#include "sepdec/guards.hpp"
#include "sepdec/pol_fixpoint.hpp"
#include "sepdec/rating.hpp"

namespace sepdec {

enum class Operator { Pol, BPol };

enum class Level { StHalf, St1, PolAt, St2, DdHalf, Dd1 };

inline constexpr std::array<Level, 6> kAllLevels{Level::StHalf, Level::St1,    Level::PolAt,
                                                 Level::St2,    Level::DdHalf, Level::Dd1};

inline Operator level_operator(Level l) {
  switch (l) {
    case Level::StHalf:
    case Level::PolAt:
    case Level::DdHalf: return Operator::Pol;
    default: return Operator::BPol;
  }
}

/// BPol levels are Boolean algebras; Pol levels are only lattices.
inline bool closed_under_complement(Level l) { return level_operator(l) == Operator::BPol; }

inline std::string_view level_basis(Level l) {
  switch (l) {
    case Level::StHalf:
    case Level::St1: return "st0";
    case Level::PolAt:
    case Level::St2: return "at";  // level 2 of Straubing-Thérien is BPol(AT)
    case Level::DdHalf:
    case Level::Dd1: return "dd0";
  }
  return "st0";
}

inline std::string_view to_string(Level l) {
  switch (l) {
    case Level::StHalf: return "st_half";
    case Level::St1: return "st1";
    case Level::PolAt: return "pol_at";
    case Level::St2: return "st2";
    case Level::DdHalf: return "dd_half";
    case Level::Dd1: return "dd1";
  }
  return "";
}

inline Level parse_level(std::string_view s) {
  for (Level l : kAllLevels)
    if (to_string(l) == s) return l;
  throw Error("unknown level '" + std::string(s) + "'");
}

/// An operator applied to a basis; the built-in levels are instances.
struct LevelSpec {
  Operator op;
  Basis basis;

  static LevelSpec of(Level l, const Alphabet& a) {
    return {level_operator(l), builtin_basis(level_basis(l), a)};
  }
};

enum class Answer { Separable, Inseparable, Coverable, Uncoverable, Member, NonMember };

inline std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Separable: return "Separable";
    case Answer::Inseparable: return "Inseparable";
    case Answer::Coverable: return "Coverable";
    case Answer::Uncoverable: return "Uncoverable";
    case Answer::Member: return "Member";
    case Answer::NonMember: return "NonMember";
  }
  return "";
}

inline bool is_positive(Answer a) {
  return a == Answer::Separable || a == Answer::Coverable || a == Answer::Member;
}

struct Diagnostics {
  std::size_t monoid_size = 0;     // |N|, the target of eta
  std::size_t pointed_size = 0;    // |M| for Pol levels
  std::size_t classes = 0;
  std::size_t outer_iterations = 0;
  std::vector<std::size_t> frontier_sizes;
  std::vector<std::size_t> set_sizes;
  std::size_t pol_processed = 0;
  bool overlap_precheck = false;   // answered by a common word, engines skipped
};

struct Verdict {
  Answer answer = Answer::Separable;
  /// For negative answers: a rating value meeting every accepting set.
  std::optional<RatingValue> bad_value;
  Diagnostics diagnostics;

  Morphism eta;
  std::vector<ElementSet> accepting;
  std::optional<SatSet> bpol;
  std::optional<PointedImprint> pol;
  std::optional<CompatibleMorphism> alpha;
  std::optional<Basis> basis;
};

struct DecideOptions {
  Guards guards;
  /// Answer Inseparable directly when the inputs share a word.
  bool overlap_precheck = true;
  bool trim_initial = false;
};

namespace detail {

inline bool meets_all(RatingValue t, std::span<const RatingValue> sets) {
  for (RatingValue f : sets)
    if (!t.intersects(f)) return false;
  return true;
}

inline std::optional<std::string> common_word(const Dfa& l1, const Dfa& l2) {
  Dfa both = intersect(l1, l2);
  // BFS for a shortest accepted word.
  std::vector<std::string> word(both.size());
  std::vector<bool> seen(both.size(), false);
  std::vector<State> queue{both.initial()};
  seen[both.initial()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    State q = queue[i];
    if (both.accepting(q)) return word[q];
    for (std::size_t a = 0; a < both.alphabet().size(); ++a) {
      State t = both.next(q, a);
      if (!seen[t]) {
        seen[t] = true;
        word[t] = word[q] + both.alphabet()[a];
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

/// Finds T in the imprint meeting every accepting set (Boolean levels) and
/// fills the verdict's engine data.
inline std::optional<RatingValue> bpol_bad_value(Verdict& v, const Basis& basis,
                                                 const RatingMap& rho,
                                                 std::span<const RatingValue> sets,
                                                 const DecideOptions& o) {
  BPolStats stats;
  BPolOptions bo;
  bo.guards = o.guards;
  bo.trim_initial = o.trim_initial;
  SatSet p = bpol_imprint(basis, rho, bo, &stats);
  v.diagnostics.outer_iterations = stats.outer_iterations;
  v.diagnostics.frontier_sizes = stats.frontier_sizes;
  v.diagnostics.set_sizes = stats.set_sizes;
  std::optional<RatingValue> bad;
  const Downset universal = p.universal();
  for (RatingValue t : universal.maximal())
    if (meets_all(t, sets)) {
      bad = t;
      break;
    }
  v.bpol = std::move(p);
  return bad;
}

}  // namespace detail

/// Is L1 separable from L2 by a language of the given level?
inline Verdict separation(const Dfa& l1, const Dfa& l2, const LevelSpec& level,
                          const DecideOptions& o = {}) {
  require_same_alphabet(l1.alphabet(), l2.alphabet());
  require_same_alphabet(l1.alphabet(), level.basis.alphabet());
  const std::array<Dfa, 2> inputs{l1, l2};
  JointRecognizer joint = joint_transition_monoid(inputs, o.guards.max_monoid);

  Verdict v;
  v.eta = joint.morphism;
  v.accepting = joint.accepting;
  v.basis = level.basis;
  v.diagnostics.monoid_size = joint.morphism.size();
  v.diagnostics.classes = level.basis.num_classes();

  if (o.overlap_precheck) {
    if (auto w = detail::common_word(l1, l2)) {
      v.answer = Answer::Inseparable;
      v.bad_value = RatingValue::singleton(joint.morphism(*w));
      v.diagnostics.overlap_precheck = true;
      return v;
    }
  }

  RatingMap rho(joint.morphism, o.guards.max_n);
  const RatingValue f1 = to_rating(joint.accepting[0]);
  const RatingValue f2 = to_rating(joint.accepting[1]);

  std::optional<RatingValue> bad;
  if (level.op == Operator::BPol) {
    const std::array<RatingValue, 2> sets{f1, f2};
    bad = detail::bpol_bad_value(v, level.basis, rho, sets, o);
  } else {
    CompatibleMorphism alpha = compatible_morphism(joint.morphism, level.basis,
                                                   o.guards.max_monoid);
    PolOptions po;
    po.guards = o.guards;
    PolStats stats;
    PointedImprint p = pol_saturate(alpha, level.basis, rho, po, &stats);
    v.diagnostics.pointed_size = alpha.morphism.size();
    v.diagnostics.pol_processed = stats.processed;
    for (Element s = 0; s < alpha.morphism.size() && !bad; ++s) {
      if (!f1.contains(alpha.original[s])) continue;
      for (RatingValue t : p.at(s).maximal())
        if (t.intersects(f2)) {
          bad = t;
          break;
        }
    }
    v.pol = std::move(p);
    v.alpha = std::move(alpha);
  }
  v.answer = bad ? Answer::Inseparable : Answer::Separable;
  v.bad_value = bad;
  return v;
}

inline Verdict separation(const Dfa& l1, const Dfa& l2, Level level,
                          const DecideOptions& o = {}) {
  return separation(l1, l2, LevelSpec::of(level, l1.alphabet()), o);
}

/// Is there a cover of L0 by languages of the (Boolean) level in which every
/// piece misses some member of `langs`?
inline Verdict covering(const Dfa& l0, std::span<const Dfa> langs, const LevelSpec& level,
                        const DecideOptions& o = {}) {
  if (level.op != Operator::BPol)
    throw UnsupportedError("covering is only supported at Boolean (BPol) levels");
  require_same_alphabet(l0.alphabet(), level.basis.alphabet());
  std::vector<Dfa> inputs{l0};
  inputs.insert(inputs.end(), langs.begin(), langs.end());
  JointRecognizer joint = joint_transition_monoid(inputs, o.guards.max_monoid);

  Verdict v;
  v.eta = joint.morphism;
  v.accepting = joint.accepting;
  v.basis = level.basis;
  v.diagnostics.monoid_size = joint.morphism.size();
  v.diagnostics.classes = level.basis.num_classes();

  RatingMap rho(joint.morphism, o.guards.max_n);
  std::vector<RatingValue> sets;
  for (const ElementSet& f : joint.accepting) sets.push_back(to_rating(f));
  std::optional<RatingValue> bad = detail::bpol_bad_value(v, level.basis, rho, sets, o);
  v.answer = bad ? Answer::Uncoverable : Answer::Coverable;
  v.bad_value = bad;
  return v;
}

inline Verdict covering(const Dfa& l0, std::span<const Dfa> langs, Level level,
                        const DecideOptions& o = {}) {
  return covering(l0, langs, LevelSpec::of(level, l0.alphabet()), o);
}

/// L belongs to the level iff it is separable from its complement.
inline Verdict membership(const Dfa& l, const LevelSpec& level, const DecideOptions& o = {}) {
  Verdict v = separation(l, complement(l), level, o);
  v.answer = is_positive(v.answer) ? Answer::Member : Answer::NonMember;
  return v;
}

inline Verdict membership(const Dfa& l, Level level, const DecideOptions& o = {}) {
  return membership(l, LevelSpec::of(level, l.alphabet()), o);
}

}  // namespace sepdec

#endif  // SEPDEC_DECIDE_HPP
