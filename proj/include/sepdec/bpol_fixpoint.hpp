#ifndef SEPDEC_BPOL_FIXPOINT_HPP
#define SEPDEC_BPOL_FIXPOINT_HPP

// Greatest BPol(C)-saturated subset of (A*/~C) x R for a nice multiplicative
// rating map rho. It equals the class-pointed BPol(C)-optimal imprint: for
// every class D, P(D) is the optimal imprint of D.
//
// Outer loop (greatest fixpoint): S_0 = classes x R, and S_{n+1} keeps the
// pairs (D, r) of S_n for which there are r_1..r_k with r <= r_1+...+r_k and
// every (D, r_i, {r_1+...+r_k}) in R[S_n].
//
// Inner loop (least fixpoint): R[S] is the least set of triples (D, q, U)
// containing (class(w), rho(w), {rho(w)}) and closed under extended downset,
// componentwise multiplication, and, for triples of idempotents (E, f, F),
// the triple (E, f, F·S(E)·F).
//
// The frontier stores R[S] modulo extended downset: only the downward
// closure of U is kept, and a triple dominated by another with the same
// (D, q) is dropped. Membership (D, q, V) holds iff V is contained in the
// downward closure of some stored U. For the closure rule on a stored triple
// (E, f, U) with E and f idempotent, X = ↓U^k is taken for the least k with
// ↓U^k = ↓U^2k; if U^p is the literal idempotent power of U then
// X = ↓U^kp = ↓U^p, so ↓(X·S(E)·X) = ↓(U^p·S(E)·U^p), and any literally
// idempotent F <= U satisfies F = F^k <= X. This is checked against the
// literal four-rule enumeration in oracles.hpp.
//
// Second components q are always rho(w) = {eta(w)}, i.e. singletons, so the
// frontier indexes them by the element eta(w).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sepdec/basis.hpp"
#include "sepdec/guards.hpp"
#include "sepdec/rating.hpp"

namespace sepdec {

/// Downward closed subset of (A*/~C) x R, one antichain per class.
class SatSet {
public:
  SatSet() = default;
  explicit SatSet(std::size_t num_classes) : rows_(num_classes) {}

  /// classes x R
  static SatSet full(std::size_t num_classes, const RatingSemiring& semiring) {
    SatSet s(num_classes);
    for (Downset& d : s.rows_) d.insert(semiring.full());
    return s;
  }

  std::size_t num_classes() const noexcept { return rows_.size(); }
  const Downset& at(ClassId d) const { return rows_[d]; }
  Downset& at(ClassId d) { return rows_[d]; }

  bool contains(ClassId d, RatingValue r) const { return rows_[d].contains(r); }

  bool subset_of(const SatSet& o) const {
    for (std::size_t d = 0; d < rows_.size(); ++d)
      if (!rows_[d].subset_of(o.rows_[d])) return false;
    return true;
  }

  /// Union over all classes: the universal optimal imprint.
  Downset universal() const {
    Downset out;
    for (const Downset& d : rows_) out.insert_all(d);
    return out;
  }

  std::size_t generator_count() const {
    std::size_t n = 0;
    for (const Downset& d : rows_) n += d.maximal().size();
    return n;
  }

  friend bool operator==(const SatSet&, const SatSet&) = default;

private:
  std::vector<Downset> rows_;
};

struct FrontierTriple {
  ClassId cls;
  Element q;  // the rating value {q}
  Downset u;
};

/// R[S] modulo extended downset.
class Frontier {
public:
  Frontier(std::size_t num_classes, std::size_t num_elements)
      : num_elements_(num_elements), buckets_(num_classes * num_elements) {}

  std::size_t num_classes() const noexcept { return buckets_.size() / num_elements_; }
  std::size_t num_elements() const noexcept { return num_elements_; }

  /// Stored U components for (D, {q}); pairwise incomparable.
  const std::vector<Downset>& bucket(ClassId d, Element q) const {
    return buckets_[d * num_elements_ + q];
  }

  /// Extended-downset membership of (D, q, V).
  bool member(ClassId d, RatingValue q, std::span<const RatingValue> v) const {
    if (q.count() != 1) return false;
    const Element x = q.elements().front();
    for (const Downset& u : bucket(d, x))
      if (std::all_of(v.begin(), v.end(), [&](RatingValue r) { return u.contains(r); }))
        return true;
    return false;
  }

  /// Every stored triple, in (class, q, U) order.
  std::vector<FrontierTriple> triples() const {
    std::vector<FrontierTriple> out;
    for (std::size_t i = 0; i < buckets_.size(); ++i) {
      std::vector<Downset> sorted = buckets_[i];
      std::sort(sorted.begin(), sorted.end());
      for (Downset& u : sorted)
        out.push_back({static_cast<ClassId>(i / num_elements_),
                       static_cast<Element>(i % num_elements_), std::move(u)});
    }
    return out;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& b : buckets_) n += b.size();
    return n;
  }

  /// Inserts unless dominated; drops stored triples it dominates.
  bool insert(ClassId d, Element q, const Downset& u) {
    auto& b = buckets_[d * num_elements_ + q];
    for (const Downset& w : b)
      if (u.subset_of(w)) return false;
    std::erase_if(b, [&](const Downset& w) { return w.subset_of(u); });
    b.push_back(u);
    return true;
  }

  bool holds(ClassId d, Element q, const Downset& u) const {
    const auto& b = bucket(d, q);
    return std::find(b.begin(), b.end(), u) != b.end();
  }

private:
  std::size_t num_elements_;
  std::vector<std::vector<Downset>> buckets_;
};

struct FrontierOptions {
  std::optional<std::uint64_t> shuffle_seed;
  Guards guards;
};

/// Least ↓-idempotent power of U: ↓U^k for the least k with ↓U^k = ↓U^2k.
inline Downset downset_idempotent_power(const RatingSemiring& semiring, const Downset& u) {
  Downset p = u;
  while (true) {
    Downset sq = multiply(semiring, p, p);
    if (sq == p) return p;
    p = multiply(semiring, p, u);
  }
}

inline Frontier rbpol_frontier(const SatSet& s, const Basis& basis, const RatingMap& rho,
                               const FrontierOptions& options = {}) {
  require_same_alphabet(basis.alphabet(), rho.alphabet());
  if (s.num_classes() != basis.num_classes())
    throw Error("saturation set and basis disagree on the number of classes");
  const Morphism& c = basis.class_morphism();
  const Morphism& eta = rho.eta();
  const FiniteMonoid& cm = c.target();
  const FiniteMonoid& nm = eta.target();
  const RatingSemiring& semiring = rho.semiring();
  Deadline deadline(options.guards.wall_ms);

  Frontier frontier(basis.num_classes(), eta.size());
  std::deque<FrontierTriple> work;
  std::size_t inserted = 0;
  auto add = [&](ClassId d, Element q, Downset u) {
    if (frontier.insert(d, q, u)) {
      if (++inserted > options.guards.max_frontier)
        throw GuardError("max-frontier", "frontier exceeded " +
                                             std::to_string(options.guards.max_frontier) +
                                             " triples");
      work.push_back({d, q, std::move(u)});
    }
  };

  auto seed = [&](ClassId d, Element q) {
    add(d, q, Downset::of({RatingValue::singleton(q)}));
  };
  seed(cm.identity(), nm.identity());
  for (std::size_t a = 0; a < c.alphabet().size(); ++a) seed(c.letter(a), eta.letter(a));

  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  std::size_t processed = 0;
  while (!work.empty()) {
    FrontierTriple t;
    if (options.shuffle_seed) {
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(rng);
      t = std::move(work[i]);
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      t = std::move(work.front());
      work.pop_front();
    }
    if (!frontier.holds(t.cls, t.q, t.u)) continue;
    if ((++processed & 255) == 0) deadline.check();

    if (cm.is_idempotent(t.cls) && nm.is_idempotent(t.q)) {
      Downset x = downset_idempotent_power(semiring, t.u);
      add(t.cls, t.q, multiply(semiring, multiply(semiring, x, s.at(t.cls)), x));
    }
    for (ClassId d = 0; d < frontier.num_classes(); ++d)
      for (Element q = 0; q < frontier.num_elements(); ++q) {
        const std::vector<Downset> others = frontier.bucket(d, q);
        for (const Downset& u : others) {
          add(cm.multiply(t.cls, d), nm.multiply(t.q, q), multiply(semiring, t.u, u));
          add(cm.multiply(d, t.cls), nm.multiply(q, t.q), multiply(semiring, u, t.u));
        }
      }
  }
  return frontier;
}

inline bool rbpol_member(const Frontier& f, ClassId d, RatingValue q,
                         std::span<const RatingValue> v) {
  return f.member(d, q, v);
}

namespace detail {

/// Maximal t such that every x in t has a frontier triple (D, {x}, U) with
/// t in ↓U. Branches on a violating element x of the current bound X:
/// either x is dropped, or t lies below X ∩ u for a generator u of the
/// downset attached to x.
inline Downset good_sums(const Frontier& f, ClassId d) {
  const std::size_t n = f.num_elements();
  RatingValue domain;
  std::vector<Downset> reach(n);  // union of the U components for each x
  for (Element x = 0; x < n; ++x) {
    for (const Downset& u : f.bucket(d, x)) reach[x].insert_all(u);
    if (!f.bucket(d, x).empty()) domain.bits |= std::uint64_t{1} << x;
  }

  Downset good;
  std::unordered_set<std::uint64_t> visited;
  std::vector<RatingValue> stack{domain};
  while (!stack.empty()) {
    RatingValue bound = stack.back();
    stack.pop_back();
    if (!visited.insert(bound.bits).second || good.contains(bound)) continue;
    std::optional<Element> bad;
    for (Element x : bound.elements())
      if (!reach[x].contains(bound)) {
        bad = x;
        break;
      }
    if (!bad) {
      good.insert(bound);
      continue;
    }
    stack.push_back({bound.bits & ~(std::uint64_t{1} << *bad)});
    for (RatingValue u : reach[*bad].maximal())
      if (u.contains(*bad)) stack.push_back({bound.bits & u.bits});
  }
  return good;
}

}  // namespace detail

/// One outer iteration: the pairs of S satisfying the saturation condition
/// with respect to the given frontier (which must be rbpol_frontier(S)).
inline SatSet saturation_step(const SatSet& s, const Frontier& frontier) {
  SatSet next(s.num_classes());
  for (ClassId d = 0; d < s.num_classes(); ++d)
    next.at(d) = meet(s.at(d), detail::good_sums(frontier, d));
  return next;
}

inline SatSet saturation_step(const SatSet& s, const Basis& basis, const RatingMap& rho,
                              const FrontierOptions& options = {}) {
  return saturation_step(s, rbpol_frontier(s, basis, rho, options));
}

struct BPolStats {
  std::size_t outer_iterations = 0;
  std::vector<std::size_t> frontier_sizes;  // one per outer iteration
  std::vector<std::size_t> set_sizes;       // antichain generators of S_n, n >= 0
};

struct BPolOptions {
  /// Start from ↓{eta(D)} per class instead of classes x R.
  bool trim_initial = false;
  std::optional<std::uint64_t> shuffle_seed;
  Guards guards;
  /// Receives every S_n, including S_0 and the fixpoint.
  std::vector<SatSet>* history = nullptr;
};

inline SatSet bpol_imprint(const Basis& basis, const RatingMap& rho,
                           const BPolOptions& options = {}, BPolStats* stats = nullptr) {
  require_same_alphabet(basis.alphabet(), rho.alphabet());
  const RatingSemiring& semiring = rho.semiring();
  Deadline deadline(options.guards.wall_ms);

  SatSet current = SatSet::full(basis.num_classes(), semiring);
  if (options.trim_initial) {
    ReachPairs reach(basis, rho.eta());
    for (ClassId d = 0; d < basis.num_classes(); ++d) {
      current.at(d) = Downset();
      current.at(d).insert(to_rating(reach.class_image(d)));
    }
  }

  BPolStats local;
  local.set_sizes.push_back(current.generator_count());
  if (options.history) options.history->push_back(current);
  FrontierOptions fopts{options.shuffle_seed, options.guards};
  while (true) {
    deadline.check();
    Frontier frontier = rbpol_frontier(current, basis, rho, fopts);
    local.frontier_sizes.push_back(frontier.size());
    ++local.outer_iterations;
    SatSet next = saturation_step(current, frontier);
    local.set_sizes.push_back(next.generator_count());
    if (options.history) options.history->push_back(next);
    if (next == current) break;
    current = std::move(next);
  }
  if (stats) *stats = std::move(local);
  return current;
}

}  // namespace sepdec

#endif  // SEPDEC_BPOL_FIXPOINT_HPP
