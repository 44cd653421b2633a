#ifndef SEPDEC_ORACLES_HPP
#define SEPDEC_ORACLES_HPP

// Independent ground truth for special cases, used by the test suites:
// J-triviality (piecewise testable languages), upward closure under the
// subword order (shuffle ideals), k-subword separability, and a literal
// enumeration of R[S] with all four rules.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sepdec/algebra.hpp"
#include "sepdec/automata.hpp"
#include "sepdec/basis.hpp"
#include "sepdec/bpol_fixpoint.hpp"
#include "sepdec/rating.hpp"

namespace sepdec::oracles {

/// Principal two-sided ideals MxM and the J-class partition.
struct JStructure {
  std::vector<std::vector<bool>> ideal;  // ideal[x][y] iff y in MxM
  std::vector<std::size_t> j_class;      // J-class index of each element

  explicit JStructure(const FiniteMonoid& m) {
    const std::size_t n = m.size();
    ideal.assign(n, std::vector<bool>(n, false));
    for (Element x = 0; x < n; ++x)
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) ideal[x][m.multiply(m.multiply(a, x), b)] = true;
    std::map<std::vector<bool>, std::size_t> classes;
    for (Element x = 0; x < n; ++x)
      j_class.push_back(classes.emplace(ideal[x], classes.size()).first->second);
  }

  std::size_t num_classes() const {
    std::size_t k = 0;
    for (std::size_t c : j_class) k = std::max(k, c + 1);
    return k;
  }
};

/// Every J-class is a singleton.
inline bool is_j_trivial(const FiniteMonoid& m) {
  return JStructure(m).num_classes() == m.size();
}

/// Same property via antisymmetry of the J-preorder (x <=_J y iff x in MyM).
inline bool is_j_trivial_by_order(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  auto below = [&](Element x, Element y) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (m.multiply(m.multiply(a, y), b) == x) return true;
    return false;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (below(x, y) && below(y, x)) return false;
  return true;
}

/// L equals its upward closure for the subword order.
inline bool is_upward_closed(const Dfa& d) {
  Nfa nfa = to_nfa(d);
  for (State q = 0; q < d.size(); ++q)
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) nfa.add_edge(q, a, q);
  return equal(d, nfa.determinize());
}

inline constexpr std::size_t kMaxSubwordLength = 6;

/// True iff no class of the k-subword equivalence (same subwords of length
/// at most k) meets both L1 and L2. Such a k gives a piecewise testable
/// separator; the converse needs some k, not a given one.
inline bool k_subword_separable(const Dfa& l1, const Dfa& l2, std::size_t k,
                                std::size_t max_profiles = 1u << 20) {
  require_same_alphabet(l1.alphabet(), l2.alphabet());
  if (k > kMaxSubwordLength)
    throw Error("k-subword oracle supports k <= " + std::to_string(kMaxSubwordLength));
  const std::size_t s = l1.alphabet().size();

  // Index the words of length <= k; extend[i*s+a] is the index of word_i·a.
  std::vector<std::size_t> length{0};
  std::vector<long> extend;
  for (std::size_t i = 0; i < length.size(); ++i)
    for (std::size_t a = 0; a < s; ++a) {
      if (length[i] < k) {
        extend.push_back(static_cast<long>(length.size()));
        length.push_back(length[i] + 1);
      } else {
        extend.push_back(-1);
      }
    }
  const std::size_t words = length.size();
  using Profile = std::vector<bool>;
  auto act = [&](const Profile& p, std::size_t a) {
    Profile out = p;
    for (std::size_t i = 0; i < words; ++i)
      if (p[i] && extend[i * s + a] >= 0) out[static_cast<std::size_t>(extend[i * s + a])] = true;
    return out;
  };
  Profile start(words, false);
  start[0] = true;

  auto touched = [&](const Dfa& d) {
    std::map<std::pair<Profile, State>, bool> seen;
    std::vector<std::pair<Profile, State>> stack{{start, d.initial()}};
    seen[stack.back()] = true;
    std::map<Profile, bool> out;
    while (!stack.empty()) {
      auto [p, q] = stack.back();
      stack.pop_back();
      if (d.accepting(q)) out[p] = true;
      for (std::size_t a = 0; a < s; ++a) {
        std::pair<Profile, State> next{act(p, a), d.next(q, a)};
        if (seen.emplace(next, true).second) {
          if (seen.size() > max_profiles)
            throw GuardError("max-profiles", "k-subword profile space too large");
          stack.push_back(std::move(next));
        }
      }
    }
    return out;
  };
  auto t1 = touched(l1);
  auto t2 = touched(l2);
  for (const auto& [p, unused] : t1)
    if (t2.count(p)) return false;
  return true;
}

inline constexpr std::size_t kNaiveMaxBase = 3;

/// R[S] computed literally: every triple (D, q, U) with q in R and U a subset
/// of R, closed under trivial elements, extended downset, multiplication and
/// S-restricted closure. Requires |N| <= 3, so |R| <= 8.
class NaiveRbpol {
public:
  NaiveRbpol(const SatSet& s, const Basis& basis, const RatingMap& rho)
      : classes_(basis.num_classes()) {
    const std::size_t n = rho.eta().size();
    if (n > kNaiveMaxBase)
      throw GuardError("max-n", "naive R[S] enumeration needs |N| <= 3");
    const std::size_t r = std::size_t{1} << n;  // |R|
    rsize_ = r;
    const RatingSemiring& sr = rho.semiring();
    const FiniteMonoid& cm = basis.class_morphism().target();

    // Rating values are indexed by their bit pattern.
    std::vector<std::size_t> rmul(r * r);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y) rmul[x * r + y] = sr.multiply({x}, {y}).bits;
    auto umul = [&](std::uint32_t u, std::uint32_t v) {
      std::uint32_t out = 0;
      for (std::size_t x = 0; x < r; ++x)
        if ((u >> x) & 1U)
          for (std::size_t y = 0; y < r; ++y)
            if ((v >> y) & 1U) out |= std::uint32_t{1} << rmul[x * r + y];
      return out;
    };
    auto downclosure = [&](std::uint32_t u) {
      std::uint32_t out = 0;
      for (std::size_t x = 0; x < r; ++x)
        if ((u >> x) & 1U)
          for (std::size_t y = 0; y < r; ++y)
            if ((y & ~x) == 0) out |= std::uint32_t{1} << y;
      return out;
    };
    std::vector<std::uint32_t> s_mask(classes_, 0);
    for (ClassId d = 0; d < classes_; ++d)
      for (std::size_t x = 0; x < r; ++x)
        if (s.contains(d, {x})) s_mask[d] |= std::uint32_t{1} << x;

    const std::size_t u_count = std::size_t{1} << r;
    present_.assign(classes_ * r * u_count, false);
    std::vector<std::array<std::uint32_t, 3>> all;
    std::vector<std::array<std::uint32_t, 3>> work;
    auto add = [&](std::uint32_t d, std::uint32_t q, std::uint32_t u) {
      std::size_t id = (d * r + q) * u_count + u;
      if (!present_[id]) {
        present_[id] = true;
        work.push_back({d, q, u});
      }
    };
    ReachPairs reach(basis, rho.eta());
    for (auto [d, x] : reach.pairs()) {
      std::uint32_t q = std::uint32_t{1} << x;
      add(d, q, std::uint32_t{1} << q);
    }
    while (!work.empty()) {
      auto [d, q, u] = work.back();
      work.pop_back();
      all.push_back({d, q, u});
      // Extended downset.
      std::uint32_t down = downclosure(u);
      for (std::uint32_t v = down;; v = (v - 1) & down) {
        add(d, q, v);
        if (v == 0) break;
      }
      // Multiplication with everything found so far (both sides).
      const std::size_t count = all.size();
      for (std::size_t i = 0; i < count; ++i) {
        auto [d2, q2, u2] = all[i];
        add(cm.multiply(d, d2), static_cast<std::uint32_t>(rmul[q * r + q2]), umul(u, u2));
        add(cm.multiply(d2, d), static_cast<std::uint32_t>(rmul[q2 * r + q]), umul(u2, u));
      }
      // S-restricted closure.
      if (cm.is_idempotent(d) && rmul[q * r + q] == q && umul(u, u) == u)
        add(d, q, umul(umul(u, s_mask[d]), u));
    }
  }

  bool member(ClassId d, RatingValue q, std::span<const RatingValue> v) const {
    if (d >= classes_ || q.bits >= rsize_) return false;
    std::uint32_t mask = 0;
    for (RatingValue x : v) {
      if (x.bits >= rsize_) return false;
      mask |= std::uint32_t{1} << x.bits;
    }
    return present_[(d * rsize_ + q.bits) * (std::size_t{1} << rsize_) + mask];
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (bool b : present_) n += b;
    return n;
  }

private:
  std::size_t classes_;
  std::size_t rsize_ = 0;
  std::vector<bool> present_;
};

inline bool naive_rbpol_member(const SatSet& s, const Basis& basis, const RatingMap& rho,
                               ClassId d, RatingValue q, std::span<const RatingValue> v) {
  return NaiveRbpol(s, basis, rho).member(d, q, v);
}

}  // namespace sepdec::oracles

#endif  // SEPDEC_ORACLES_HPP
