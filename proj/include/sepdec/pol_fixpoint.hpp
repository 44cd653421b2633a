#ifndef SEPDEC_POL_FIXPOINT_HPP
#define SEPDEC_POL_FIXPOINT_HPP

// Least Pol(C)-saturated subset of M x R for a C-compatible morphism
// alpha: A* -> M and the nice multiplicative rating map rho. It is the
// alpha-pointed Pol(C)-optimal rho-imprint.
//
// The set is closed under: trivial elements (alpha(w), rho(w)); downset in
// the R component; componentwise multiplication; and, for every pair of
// idempotents (e, f), the element (e, f·rho(class(e))·f).
//
// Each P(s) is kept as an antichain. Multiplication is monotone, and if
// (e, f) is present with f idempotent and f <= g for a stored g, then
// f <= g^omega and f·rho·f <= g^omega·rho·g^omega. So it is enough to
// multiply stored generators and to apply the closure rule to idempotent
// powers of stored generators.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "sepdec/basis.hpp"
#include "sepdec/guards.hpp"
#include "sepdec/rating.hpp"

namespace sepdec {

/// Downward closed subset of M x R, one antichain per element of M.
class PointedImprint {
public:
  PointedImprint() = default;
  explicit PointedImprint(std::size_t num_elements) : rows_(num_elements) {}

  std::size_t num_elements() const noexcept { return rows_.size(); }
  const Downset& at(Element s) const { return rows_[s]; }
  Downset& at(Element s) { return rows_[s]; }

  bool contains(Element s, RatingValue r) const { return rows_[s].contains(r); }

  /// Union over all elements.
  Downset universal() const {
    Downset out;
    for (const Downset& d : rows_) out.insert_all(d);
    return out;
  }

  friend bool operator==(const PointedImprint&, const PointedImprint&) = default;

private:
  std::vector<Downset> rows_;
};

struct PolStats {
  std::size_t processed = 0;  // worklist pops
  std::size_t generators = 0; // final antichain sizes summed
};

struct PolOptions {
  /// When set, the worklist is processed in a pseudo-random order drawn from
  /// this seed instead of FIFO. The result must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
  Guards guards;
};

inline PointedImprint pol_saturate(const CompatibleMorphism& alpha, const Basis& basis,
                                   const RatingMap& rho, const PolOptions& options = {},
                                   PolStats* stats = nullptr) {
  require_same_alphabet(alpha.morphism.alphabet(), rho.alphabet());
  require_same_alphabet(basis.alphabet(), rho.alphabet());
  const FiniteMonoid& m = alpha.morphism.target();
  const RatingSemiring& semiring = rho.semiring();
  const std::size_t size = m.size();
  Deadline deadline(options.guards.wall_ms);

  // rho(class) is loop invariant.
  ReachPairs reach(basis, rho.eta());
  std::vector<RatingValue> class_rating(basis.num_classes());
  for (ClassId c = 0; c < basis.num_classes(); ++c)
    class_rating[c] = to_rating(reach.class_image(c));

  PointedImprint result(size);
  std::deque<std::pair<Element, RatingValue>> work;
  std::size_t inserted = 0;
  auto add = [&](Element s, RatingValue r) {
    if (result.at(s).insert(r)) {
      if (++inserted > options.guards.max_frontier)
        throw GuardError("max-frontier", "Pol saturation exceeded " +
                                             std::to_string(options.guards.max_frontier) +
                                             " generated pairs");
      work.emplace_back(s, r);
    }
  };

  const Element one = m.identity();
  add(one, RatingValue::singleton(alpha.original[one]));
  for (std::size_t a = 0; a < alpha.morphism.alphabet().size(); ++a) {
    Element s = alpha.morphism.letter(a);
    add(s, RatingValue::singleton(alpha.original[s]));
  }

  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  PolStats local;
  while (!work.empty()) {
    std::pair<Element, RatingValue> item;
    if (options.shuffle_seed) {
      std::size_t i = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(rng);
      item = work[i];
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      item = work.front();
      work.pop_front();
    }
    auto [s, r] = item;
    // Dominated since it was queued: whatever dominates it is processed too.
    if (!std::binary_search(result.at(s).maximal().begin(), result.at(s).maximal().end(), r))
      continue;
    ++local.processed;
    if ((local.processed & 1023) == 0) deadline.check();

    if (m.is_idempotent(s)) {
      RatingValue f = semiring.idempotent_power(r);
      add(s, semiring.multiply(f, class_rating[alpha.cls[s]], f));
    }
    for (Element t = 0; t < size; ++t) {
      const std::vector<RatingValue> row = result.at(t).maximal();
      for (RatingValue q : row) {
        add(m.multiply(s, t), semiring.multiply(r, q));
        add(m.multiply(t, s), semiring.multiply(q, r));
      }
    }
  }
  for (Element s = 0; s < size; ++s) local.generators += result.at(s).maximal().size();
  if (stats) *stats = local;
  return result;
}

}  // namespace sepdec

#endif  // SEPDEC_POL_FIXPOINT_HPP
