#ifndef SEPDEC_ALGEBRA_HPP
#define SEPDEC_ALGEBRA_HPP

// Finite monoids given by dense multiplication tables, morphisms from A*
// into them, and the transition monoid of a complete DFA.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepdec/automata.hpp"
#include "sepdec/error.hpp"

namespace sepdec {

using Element = std::uint32_t;

/// Membership vector over the elements of a monoid.
using ElementSet = std::vector<bool>;

inline constexpr std::size_t kDefaultMaxMonoid = 512;

class FiniteMonoid {
public:
  FiniteMonoid() : size_(1), table_{0}, identity_(0) {}

  FiniteMonoid(std::size_t size, std::vector<Element> table, Element identity)
      : size_(size), table_(std::move(table)), identity_(identity) {
    if (size_ == 0) throw Error("a monoid has at least one element");
    if (table_.size() != size_ * size_) throw Error("multiplication table has the wrong size");
    if (identity_ >= size_) throw Error("identity out of range");
    for (Element e : table_)
      if (e >= size_) throw Error("multiplication table entry out of range");
  }

  std::size_t size() const noexcept { return size_; }
  Element identity() const noexcept { return identity_; }

  Element multiply(Element x, Element y) const { return table_[x * size_ + y]; }

  const std::vector<Element>& table() const noexcept { return table_; }

  bool is_idempotent(Element x) const { return multiply(x, x) == x; }

  /// Exhaustive check of associativity and of the identity law.
  bool is_valid() const {
    for (Element x = 0; x < size_; ++x) {
      if (multiply(identity_, x) != x || multiply(x, identity_) != x) return false;
      for (Element y = 0; y < size_; ++y)
        for (Element z = 0; z < size_; ++z)
          if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) return false;
    }
    return true;
  }

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

private:
  std::size_t size_;
  std::vector<Element> table_;
  Element identity_;
};

/// Least k >= 1 power of x that is idempotent (x^omega).
inline Element idempotent_power(const FiniteMonoid& m, Element x) {
  Element p = x;
  while (!m.is_idempotent(p)) p = m.multiply(p, x);
  return p;
}

inline std::vector<Element> idempotents(const FiniteMonoid& m) {
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x)
    if (m.is_idempotent(x)) out.push_back(x);
  return out;
}

/// A morphism A* -> M given by its letter images. Every element of the
/// target is the image of some word (targets are always image-restricted),
/// and `label(x)` is the shortlex-least such word.
class Morphism {
public:
  Morphism() = default;
  Morphism(Alphabet alphabet, FiniteMonoid target, std::vector<Element> letter_image,
           std::vector<std::string> labels)
      : alphabet_(std::move(alphabet)),
        target_(std::move(target)),
        letter_image_(std::move(letter_image)),
        labels_(std::move(labels)) {
    if (letter_image_.size() != alphabet_.size())
      throw Error("one letter image per letter is required");
    for (Element e : letter_image_)
      if (e >= target_.size()) throw Error("letter image out of range");
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const FiniteMonoid& target() const noexcept { return target_; }
  std::size_t size() const noexcept { return target_.size(); }

  Element letter(std::size_t a) const { return letter_image_[a]; }
  const std::vector<Element>& letter_images() const noexcept { return letter_image_; }

  Element operator()(std::string_view word) const {
    Element x = target_.identity();
    for (char c : word) x = target_.multiply(x, letter_image_[alphabet_.index_of(c)]);
    return x;
  }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const Morphism&, const Morphism&) = default;

private:
  Alphabet alphabet_;
  FiniteMonoid target_;
  std::vector<Element> letter_image_;
  std::vector<std::string> labels_;
};

/// Closes the identity value under right action by letters (breadth first,
/// letters in alphabet order) and returns the resulting morphism. `Value`
/// must be totally ordered. Optionally reports the value of each element.
template <class Value, class RightAct>
Morphism generate_morphism(const Alphabet& alphabet, Value identity, RightAct act,
                           std::size_t max_size = kDefaultMaxMonoid,
                           std::vector<Value>* values_out = nullptr) {
  const std::size_t k = alphabet.size();
  std::map<Value, Element> index;
  std::vector<Value> values;
  std::vector<std::string> labels;
  std::vector<Element> cayley;  // right Cayley graph, cayley[x*k+a] = x·a

  auto intern = [&](Value v, const std::string& label) {
    auto [it, inserted] = index.emplace(std::move(v), static_cast<Element>(values.size()));
    if (inserted) {
      if (values.size() >= max_size)
        throw GuardError("max-monoid", "monoid exceeds " + std::to_string(max_size) +
                                           " elements");
      values.push_back(it->first);
      labels.push_back(label);
    }
    return it->second;
  };

  intern(std::move(identity), "");
  for (std::size_t x = 0; x < values.size(); ++x)
    for (std::size_t a = 0; a < k; ++a) {
      Value next = act(values[x], a);
      std::string label = labels[x] + alphabet[a];
      cayley.push_back(intern(std::move(next), label));
    }

  const std::size_t n = values.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Element z = static_cast<Element>(x);
      for (char c : labels[y]) z = cayley[z * k + alphabet.index_of(c)];
      table[x * n + y] = z;
    }

  std::vector<Element> letters(k);
  for (std::size_t a = 0; a < k; ++a) letters[a] = cayley[a];  // identity is element 0
  if (values_out) *values_out = std::move(values);
  return Morphism(alphabet, FiniteMonoid(n, std::move(table), 0), std::move(letters),
                  std::move(labels));
}

/// A morphism together with an accepting subset of its target.
struct RecognizedLanguage {
  Morphism morphism;
  ElementSet accepting;

  bool contains(std::string_view word) const { return accepting[morphism(word)]; }
};

/// Image-restricted product of the transition monoids of several complete
/// DFAs, with one accepting set per automaton.
struct JointRecognizer {
  Morphism morphism;
  std::vector<ElementSet> accepting;
};

inline JointRecognizer joint_transition_monoid(std::span<const Dfa> dfas,
                                               std::size_t max_size = kDefaultMaxMonoid) {
  if (dfas.empty()) throw Error("at least one automaton is required");
  const Alphabet& alphabet = dfas[0].alphabet();
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const Dfa& d : dfas) {
    require_same_alphabet(alphabet, d.alphabet());
    offset.push_back(total);
    total += d.size();
  }
  using Transformation = std::vector<State>;
  Transformation identity(total);
  for (const Dfa& d : dfas)
    for (State q = 0; q < d.size(); ++q) identity[offset[&d - dfas.data()] + q] = q;

  auto act = [&](const Transformation& t, std::size_t a) {
    Transformation out(t.size());
    for (std::size_t i = 0; i < dfas.size(); ++i)
      for (State q = 0; q < dfas[i].size(); ++q)
        out[offset[i] + q] = dfas[i].next(t[offset[i] + q], a);
    return out;
  };
  std::vector<Transformation> values;
  JointRecognizer out;
  out.morphism = generate_morphism(alphabet, identity, act, max_size, &values);
  for (std::size_t i = 0; i < dfas.size(); ++i) {
    ElementSet acc(values.size());
    for (std::size_t x = 0; x < values.size(); ++x)
      acc[x] = dfas[i].accepting(values[x][offset[i] + dfas[i].initial()]);
    out.accepting.push_back(std::move(acc));
  }
  return out;
}

/// Transition monoid of a complete DFA: the distinct state transformations
/// induced by words. The accepting set holds transformations mapping the
/// initial state to an accepting one.
inline RecognizedLanguage transition_monoid(const Dfa& d,
                                            std::size_t max_size = kDefaultMaxMonoid) {
  JointRecognizer j = joint_transition_monoid(std::span<const Dfa>(&d, 1), max_size);
  return {std::move(j.morphism), std::move(j.accepting[0])};
}

/// Image-restricted direct product with its two projections.
struct ProductMorphism {
  Morphism morphism;
  std::vector<Element> left;
  std::vector<Element> right;
};

inline ProductMorphism product(const Morphism& m1, const Morphism& m2,
                               std::size_t max_size = kDefaultMaxMonoid) {
  require_same_alphabet(m1.alphabet(), m2.alphabet());
  using Pair = std::pair<Element, Element>;
  auto act = [&](const Pair& p, std::size_t a) {
    return Pair{m1.target().multiply(p.first, m1.letter(a)),
                m2.target().multiply(p.second, m2.letter(a))};
  };
  std::vector<Pair> values;
  ProductMorphism out;
  out.morphism = generate_morphism(m1.alphabet(),
                                   Pair{m1.target().identity(), m2.target().identity()},
                                   act, max_size, &values);
  for (const Pair& p : values) {
    out.left.push_back(p.first);
    out.right.push_back(p.second);
  }
  return out;
}

/// { m(w) | w in L(d) }, by reachability in the product of d with the right
/// Cayley action of m.
inline ElementSet language_image(const Morphism& m, const Dfa& d) {
  require_same_alphabet(m.alphabet(), d.alphabet());
  const std::size_t n = m.size();
  std::vector<bool> seen(d.size() * n, false);
  std::vector<std::pair<State, Element>> stack{{d.initial(), m.target().identity()}};
  seen[d.initial() * n + m.target().identity()] = true;
  ElementSet image(n, false);
  while (!stack.empty()) {
    auto [q, x] = stack.back();
    stack.pop_back();
    if (d.accepting(q)) image[x] = true;
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      State q2 = d.next(q, a);
      Element x2 = m.target().multiply(x, m.letter(a));
      if (!seen[q2 * n + x2]) {
        seen[q2 * n + x2] = true;
        stack.emplace_back(q2, x2);
      }
    }
  }
  return image;
}

/// Trivial morphism onto the one-element monoid.
inline Morphism trivial_morphism(const Alphabet& alphabet) {
  return Morphism(alphabet, FiniteMonoid(), std::vector<Element>(alphabet.size(), 0), {""});
}

/// Rebuilds a morphism from raw letter images into a table-given monoid,
/// restricting the target to the image. Used for user-supplied monoids.
inline Morphism restrict_to_image(const Alphabet& alphabet, const FiniteMonoid& monoid,
                                  const std::vector<Element>& letter_image,
                                  std::size_t max_size = kDefaultMaxMonoid) {
  if (letter_image.size() != alphabet.size())
    throw Error("one letter image per letter is required");
  for (Element e : letter_image)
    if (e >= monoid.size()) throw Error("letter image out of range");
  auto act = [&](Element x, std::size_t a) { return monoid.multiply(x, letter_image[a]); };
  return generate_morphism(alphabet, monoid.identity(), act, max_size);
}

}  // namespace sepdec

#endif  // SEPDEC_ALGEBRA_HPP
