#ifndef SEPDEC_RATING_HPP
#define SEPDEC_RATING_HPP

// The rating set R = 2^N of a morphism eta: A* -> N, seen as an idempotent
// semiring (union, elementwise product), and the nice multiplicative rating
// map rho(K) = eta(K). Downward closed subsets of R are stored as antichains
// of their maximal elements.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sepdec/algebra.hpp"
#include "sepdec/automata.hpp"
#include "sepdec/error.hpp"

namespace sepdec {

inline constexpr std::size_t kDefaultMaxRatingBase = 16;
inline constexpr std::size_t kHardMaxRatingBase = 64;

/// Element of R = 2^N as a bitset over the elements of N.
struct RatingValue {
  std::uint64_t bits = 0;

  static constexpr RatingValue singleton(Element x) { return {std::uint64_t{1} << x}; }

  constexpr bool empty() const noexcept { return bits == 0; }
  constexpr bool contains(Element x) const noexcept { return (bits >> x) & 1U; }
  constexpr std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits));
  }
  constexpr bool intersects(RatingValue o) const noexcept { return (bits & o.bits) != 0; }

  /// Semiring addition.
  friend constexpr RatingValue operator+(RatingValue a, RatingValue b) {
    return {a.bits | b.bits};
  }
  /// Canonical order: r <= s iff r + s = s.
  friend constexpr bool leq(RatingValue r, RatingValue s) { return (r.bits & ~s.bits) == 0; }

  friend constexpr auto operator<=>(RatingValue, RatingValue) = default;

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::uint64_t b = bits; b; b &= b - 1)
      out.push_back(static_cast<Element>(std::countr_zero(b)));
    return out;
  }
};

inline RatingValue to_rating(const ElementSet& s) {
  if (s.size() > kHardMaxRatingBase)
    throw GuardError("max-n", "rating base exceeds 64 elements");
  RatingValue r;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) r.bits |= std::uint64_t{1} << i;
  return r;
}

/// Multiplicative structure of R, derived from the monoid N.
class RatingSemiring {
public:
  explicit RatingSemiring(const FiniteMonoid& n) : monoid_(n) {
    if (n.size() > kHardMaxRatingBase)
      throw GuardError("max-n", "rating base exceeds 64 elements");
    const std::size_t s = n.size();
    product_bits_.resize(s * s);
    for (Element x = 0; x < s; ++x)
      for (Element y = 0; y < s; ++y)
        product_bits_[x * s + y] = std::uint64_t{1} << n.multiply(x, y);
  }

  std::size_t base_size() const noexcept { return monoid_.size(); }
  const FiniteMonoid& monoid() const noexcept { return monoid_; }

  RatingValue zero() const { return {}; }
  RatingValue one() const { return RatingValue::singleton(monoid_.identity()); }
  RatingValue full() const {
    return {monoid_.size() == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << monoid_.size()) - 1};
  }

  /// {xy | x in r, y in s}
  RatingValue multiply(RatingValue r, RatingValue s) const {
    const std::size_t n = monoid_.size();
    std::uint64_t out = 0;
    for (std::uint64_t a = r.bits; a; a &= a - 1) {
      const std::size_t x = static_cast<std::size_t>(std::countr_zero(a));
      const std::uint64_t* row = &product_bits_[x * n];
      for (std::uint64_t b = s.bits; b; b &= b - 1) out |= row[std::countr_zero(b)];
    }
    return {out};
  }

  RatingValue multiply(RatingValue r, RatingValue s, RatingValue t) const {
    return multiply(multiply(r, s), t);
  }

  bool is_idempotent(RatingValue r) const { return multiply(r, r) == r; }

  RatingValue idempotent_power(RatingValue r) const {
    RatingValue p = r;
    while (!is_idempotent(p)) p = multiply(p, r);
    return p;
  }

private:
  FiniteMonoid monoid_;
  std::vector<std::uint64_t> product_bits_;
};

/// A downward closed subset of R, stored as the sorted antichain of its
/// maximal elements. Value type; copies are independent.
class Downset {
public:
  Downset() = default;

  static Downset of(std::span<const RatingValue> values) {
    Downset d;
    for (RatingValue v : values) d.insert(v);
    return d;
  }
  static Downset of(std::initializer_list<RatingValue> values) {
    return of(std::span<const RatingValue>(values.begin(), values.size()));
  }

  bool contains(RatingValue r) const {
    return std::any_of(max_.begin(), max_.end(), [&](RatingValue m) { return leq(r, m); });
  }

  /// Adds r (and everything below it). Returns false when r was already present.
  bool insert(RatingValue r) {
    if (contains(r)) return false;
    std::erase_if(max_, [&](RatingValue m) { return leq(m, r); });
    max_.insert(std::lower_bound(max_.begin(), max_.end(), r), r);
    return true;
  }

  /// Adds every element of another downset. Returns true if anything changed.
  bool insert_all(const Downset& o) {
    bool changed = false;
    for (RatingValue r : o.max_) changed |= insert(r);
    return changed;
  }

  bool empty() const noexcept { return max_.empty(); }

  /// Maximal elements, sorted by bit pattern.
  const std::vector<RatingValue>& maximal() const noexcept { return max_; }

  bool subset_of(const Downset& o) const {
    return std::all_of(max_.begin(), max_.end(), [&](RatingValue r) { return o.contains(r); });
  }

  /// Intersection of two downsets.
  friend Downset meet(const Downset& a, const Downset& b) {
    Downset out;
    for (RatingValue x : a.max_)
      for (RatingValue y : b.max_) out.insert({x.bits & y.bits});
    return out;
  }

  /// Every member, for small bases only.
  std::vector<RatingValue> materialize() const {
    std::vector<RatingValue> out;
    for (RatingValue m : max_)
      for (std::uint64_t sub = m.bits;; sub = (sub - 1) & m.bits) {
        out.push_back({sub});
        if (sub == 0) break;
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Downset&, const Downset&) = default;
  friend auto operator<=>(const Downset& a, const Downset& b) { return a.max_ <=> b.max_; }

private:
  std::vector<RatingValue> max_;
};

inline bool leq(const Downset& a, const Downset& b) { return a.subset_of(b); }

inline Downset downclose(std::span<const RatingValue> values) { return Downset::of(values); }

/// ↓(U·V) for downsets U, V given by their antichains.
inline Downset multiply(const RatingSemiring& r, const Downset& u, const Downset& v) {
  Downset out;
  for (RatingValue x : u.maximal())
    for (RatingValue y : v.maximal()) out.insert(r.multiply(x, y));
  return out;
}

/// The nice multiplicative rating map rho(K) = eta(K) into 2^N.
class RatingMap {
public:
  explicit RatingMap(Morphism eta, std::size_t max_base = kDefaultMaxRatingBase)
      : eta_(std::move(eta)), semiring_((check(eta_, max_base), eta_.target())) {}

  const Morphism& eta() const noexcept { return eta_; }
  const RatingSemiring& semiring() const noexcept { return semiring_; }
  const Alphabet& alphabet() const noexcept { return eta_.alphabet(); }

  RatingValue of_word(std::string_view w) const { return RatingValue::singleton(eta_(w)); }
  RatingValue of_letter(std::size_t a) const { return RatingValue::singleton(eta_.letter(a)); }
  RatingValue of_language(const Dfa& d) const { return to_rating(language_image(eta_, d)); }

private:
  static void check(const Morphism& eta, std::size_t max_base) {
    if (eta.size() > std::min(max_base, kHardMaxRatingBase))
      throw GuardError("max-n", "rating base has " + std::to_string(eta.size()) +
                                    " elements, limit is " + std::to_string(max_base));
  }

  Morphism eta_;
  RatingSemiring semiring_;
};

/// ↓{ rho(K) | K in cover }
inline Downset imprint(const RatingMap& rho, std::span<const Dfa> cover) {
  Downset out;
  for (const Dfa& k : cover) out.insert(rho.of_language(k));
  return out;
}

}  // namespace sepdec

#endif  // SEPDEC_RATING_HPP
