#ifndef SEPDEC_BASIS_HPP
#define SEPDEC_BASIS_HPP

// Finite quotient-closed Boolean algebras, represented by a surjective
// morphism onto a finite monoid: the languages of the algebra are exactly
// the unions of classes of the induced congruence.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sepdec/algebra.hpp"
#include "sepdec/error.hpp"

namespace sepdec {

using ClassId = Element;

class Basis {
public:
  Basis(std::string name, Morphism class_morphism)
      : name_(std::move(name)), class_morphism_(std::move(class_morphism)) {}

  const std::string& name() const noexcept { return name_; }
  const Morphism& class_morphism() const noexcept { return class_morphism_; }
  const Alphabet& alphabet() const noexcept { return class_morphism_.alphabet(); }

  std::size_t num_classes() const noexcept { return class_morphism_.size(); }

  /// The class of a word.
  ClassId class_of(std::string_view word) const { return class_morphism_(word); }

  /// Shortest word of a class.
  const std::string& witness(ClassId c) const { return class_morphism_.label(c); }

  ClassId multiply(ClassId c, ClassId d) const {
    return class_morphism_.target().multiply(c, d);
  }

private:
  std::string name_;
  Morphism class_morphism_;
};

/// Basis whose classes are the elements of m's (image-restricted) target.
inline Basis from_morphism(const Morphism& m, std::string name = "custom") {
  // Morphisms are image-restricted on construction; rebuilding normalizes
  // element order so equal congruences give equal bases.
  return Basis(std::move(name),
               restrict_to_image(m.alphabet(), m.target(), m.letter_images(),
                                 std::max<std::size_t>(m.size(), 1)));
}

/// Built-in bases: "st0" = {∅, A*}, "dd0" = {∅, {ε}, A+, A*},
/// "at" = alphabet testable languages (class of w = set of letters of w).
inline Basis builtin_basis(std::string_view name, const Alphabet& alphabet) {
  if (name == "st0") return Basis("st0", trivial_morphism(alphabet));
  if (name == "dd0") {
    auto act = [](bool, std::size_t) { return true; };
    return Basis("dd0", generate_morphism(alphabet, false, act));
  }
  if (name == "at") {
    if (alphabet.size() > 16)
      throw GuardError("max-monoid", "alphabet too large for the at basis");
    auto act = [](std::uint32_t letters, std::size_t a) {
      return letters | (std::uint32_t{1} << a);
    };
    return Basis("at", generate_morphism(alphabet, std::uint32_t{0}, act,
                                         std::size_t{1} << alphabet.size()));
  }
  throw Error("unknown basis '" + std::string(name) + "'");
}

/// Product of a morphism with the class morphism of a basis. Every element s
/// of the target carries its class (the second projection), and the first
/// projection recovers the original morphism.
struct CompatibleMorphism {
  Morphism morphism;
  std::vector<Element> original;  // first projection
  std::vector<ClassId> cls;       // second projection

  ClassId class_of(Element s) const { return cls[s]; }
};

inline CompatibleMorphism compatible_morphism(const Morphism& eta, const Basis& basis,
                                              std::size_t max_size = kDefaultMaxMonoid) {
  ProductMorphism p = product(eta, basis.class_morphism(), max_size);
  return {std::move(p.morphism), std::move(p.left), std::move(p.right)};
}

/// The set { (class(w), eta(w)) | w in A* } together with, for each class D,
/// eta(D) as an element set.
class ReachPairs {
public:
  ReachPairs(const Basis& basis, const Morphism& eta) : num_elements_(eta.size()) {
    require_same_alphabet(basis.alphabet(), eta.alphabet());
    const std::size_t nc = basis.num_classes();
    const std::size_t n = eta.size();
    present_.assign(nc * n, false);
    const Morphism& c = basis.class_morphism();
    std::vector<std::pair<ClassId, Element>> stack;
    auto visit = [&](ClassId d, Element x) {
      if (!present_[d * n + x]) {
        present_[d * n + x] = true;
        stack.emplace_back(d, x);
      }
    };
    visit(c.target().identity(), eta.target().identity());
    while (!stack.empty()) {
      auto [d, x] = stack.back();
      stack.pop_back();
      for (std::size_t a = 0; a < eta.alphabet().size(); ++a)
        visit(c.target().multiply(d, c.letter(a)), eta.target().multiply(x, eta.letter(a)));
    }
    for (std::size_t d = 0; d < nc; ++d)
      for (std::size_t x = 0; x < n; ++x)
        if (present_[d * n + x]) pairs_.emplace_back(static_cast<ClassId>(d),
                                                     static_cast<Element>(x));
  }

  bool contains(ClassId d, Element x) const { return present_[d * num_elements_ + x]; }

  /// Sorted list of reachable pairs.
  const std::vector<std::pair<ClassId, Element>>& pairs() const noexcept { return pairs_; }

  /// eta(D): the images of the words of class D.
  ElementSet class_image(ClassId d) const {
    ElementSet out(num_elements_, false);
    for (std::size_t x = 0; x < num_elements_; ++x) out[x] = contains(d, static_cast<Element>(x));
    return out;
  }

private:
  std::size_t num_elements_;
  std::vector<bool> present_;
  std::vector<std::pair<ClassId, Element>> pairs_;
};

inline ReachPairs reach_pairs(const Basis& basis, const Morphism& eta) {
  return ReachPairs(basis, eta);
}

}  // namespace sepdec

#endif  // SEPDEC_BASIS_HPP
