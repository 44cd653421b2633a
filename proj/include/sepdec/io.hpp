#ifndef SEPDEC_IO_HPP
#define SEPDEC_IO_HPP

// JSON encodings: alphabets, DFA tables, monoid dumps (also the format of
// custom bases), rating values and imprint dumps.
//
// DFA table:   {"states": n, "delta": [[q, ...], ...], "initial": q, "accepting": [q, ...]}
//              with delta[state][letter index].
// Monoid dump: {"alphabet": [...], "size": n, "identity": e, "table": [[...], ...],
//               "letter_images": [...], "labels": [...]}; labels are optional on input.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sepdec/algebra.hpp"
#include "sepdec/automata.hpp"
#include "sepdec/basis.hpp"
#include "sepdec/bpol_fixpoint.hpp"
#include "sepdec/error.hpp"
#include "sepdec/pol_fixpoint.hpp"
#include "sepdec/rating.hpp"

namespace sepdec {

using Json = nlohmann::json;

/// Input document violates the query schema. `pointer()` is a JSON pointer
/// (RFC 6901) to the offending value.
class SchemaError : public Error {
public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
  /// A regex that does not parse; `position` is the character offset.
  SchemaError(std::string pointer, const std::string& what, std::size_t position)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)), position_(position) {}

  const std::string& pointer() const noexcept { return pointer_; }
  const std::optional<std::size_t>& position() const noexcept { return position_; }

private:
  std::string pointer_;
  std::optional<std::size_t> position_;
};

namespace io {

inline std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return pointer + "/" + escaped;
}

inline std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

inline const Json& require(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(pointer, key), "missing required field");
  return *it;
}

inline std::size_t as_index(const Json& j, const std::string& pointer, std::size_t bound) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw SchemaError(pointer, "expected a non-negative integer");
  auto v = j.get<std::uint64_t>();
  if (v >= bound)
    throw SchemaError(pointer, "value " + std::to_string(v) + " out of range (< " +
                                   std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

inline const Json& as_array(const Json& j, const std::string& pointer, std::size_t size) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array");
  if (j.size() != size)
    throw SchemaError(pointer, "expected " + std::to_string(size) + " entries, got " +
                                   std::to_string(j.size()));
  return j;
}

inline Alphabet alphabet_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array of one-character strings");
  std::vector<char> letters;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string() || j[i].get<std::string>().size() != 1)
      throw SchemaError(child(pointer, i), "expected a one-character string");
    letters.push_back(j[i].get<std::string>()[0]);
  }
  try {
    return Alphabet(std::move(letters));
  } catch (const AlphabetError& e) {
    throw SchemaError(pointer, e.what());
  }
}

inline Json to_json(const Alphabet& a) {
  Json out = Json::array();
  for (char c : a.letters()) out.push_back(std::string(1, c));
  return out;
}

inline Dfa dfa_from_json(const Json& j, const Alphabet& alphabet, const std::string& pointer) {
  const Json& states_j = require(j, "states", pointer);
  if (!states_j.is_number_integer() || states_j.get<std::int64_t>() < 1)
    throw SchemaError(child(pointer, "states"), "expected a positive integer");
  const auto n = states_j.get<std::size_t>();
  const std::string dp = child(pointer, "delta");
  const Json& delta_j = as_array(require(j, "delta", pointer), dp, n);
  std::vector<State> delta;
  for (std::size_t q = 0; q < n; ++q) {
    const Json& row = as_array(delta_j[q], child(dp, q), alphabet.size());
    for (std::size_t a = 0; a < alphabet.size(); ++a)
      delta.push_back(static_cast<State>(as_index(row[a], child(child(dp, q), a), n)));
  }
  const State initial =
      static_cast<State>(as_index(require(j, "initial", pointer), child(pointer, "initial"), n));
  const std::string ap = child(pointer, "accepting");
  const Json& acc_j = require(j, "accepting", pointer);
  if (!acc_j.is_array()) throw SchemaError(ap, "expected an array of states");
  std::vector<bool> accepting(n, false);
  for (std::size_t i = 0; i < acc_j.size(); ++i) accepting[as_index(acc_j[i], child(ap, i), n)] = true;
  return minimize(Dfa(alphabet, n, std::move(delta), initial, std::move(accepting)));
}

inline Json to_json(const Dfa& d) {
  Json delta = Json::array();
  Json accepting = Json::array();
  for (State q = 0; q < d.size(); ++q) {
    Json row = Json::array();
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) row.push_back(d.next(q, a));
    delta.push_back(std::move(row));
    if (d.accepting(q)) accepting.push_back(q);
  }
  return {{"states", d.size()}, {"delta", delta}, {"initial", d.initial()},
          {"accepting", accepting}};
}

inline Json monoid_to_json(const Morphism& m) {
  const FiniteMonoid& t = m.target();
  Json table = Json::array();
  for (Element x = 0; x < t.size(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < t.size(); ++y) row.push_back(t.multiply(x, y));
    table.push_back(std::move(row));
  }
  return {{"alphabet", to_json(m.alphabet())}, {"size", t.size()},
          {"identity", t.identity()},          {"table", table},
          {"letter_images", m.letter_images()}, {"labels", m.labels()}};
}

/// Reads a monoid dump; the target is checked and restricted to its image.
inline Morphism monoid_from_json(const Json& j, const Alphabet& alphabet,
                                 const std::string& pointer,
                                 std::size_t max_size = kDefaultMaxMonoid) {
  if (j.contains("alphabet") &&
      !(alphabet_from_json(j["alphabet"], child(pointer, "alphabet")) == alphabet))
    throw SchemaError(child(pointer, "alphabet"), "alphabet differs from the query alphabet");
  const Json& size_j = require(j, "size", pointer);
  if (!size_j.is_number_integer() || size_j.get<std::int64_t>() < 1)
    throw SchemaError(child(pointer, "size"), "expected a positive integer");
  const auto n = size_j.get<std::size_t>();
  if (n > max_size)
    throw GuardError("max-monoid", "custom monoid has " + std::to_string(n) +
                                       " elements, limit is " + std::to_string(max_size));
  const std::string tp = child(pointer, "table");
  const Json& table_j = as_array(require(j, "table", pointer), tp, n);
  std::vector<Element> table;
  for (std::size_t x = 0; x < n; ++x) {
    const Json& row = as_array(table_j[x], child(tp, x), n);
    for (std::size_t y = 0; y < n; ++y)
      table.push_back(static_cast<Element>(as_index(row[y], child(child(tp, x), y), n)));
  }
  const auto identity = static_cast<Element>(
      as_index(require(j, "identity", pointer), child(pointer, "identity"), n));
  FiniteMonoid monoid(n, std::move(table), identity);
  if (!monoid.is_valid())
    throw SchemaError(tp, "table is not associative or identity is not neutral");
  const std::string lp = child(pointer, "letter_images");
  const Json& li_j = as_array(require(j, "letter_images", pointer), lp, alphabet.size());
  std::vector<Element> images;
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    images.push_back(static_cast<Element>(as_index(li_j[a], child(lp, a), n)));
  return restrict_to_image(alphabet, monoid, images, max_size);
}

/// Sorted element indices.
inline Json to_json(RatingValue r) {
  Json out = Json::array();
  for (Element x : r.elements()) out.push_back(x);
  return out;
}

inline Json to_json(const Downset& d) {
  Json out = Json::array();
  for (RatingValue r : d.maximal()) out.push_back(to_json(r));
  return out;
}

/// Shortest witness words of the elements of a rating value.
inline Json witnesses(RatingValue r, const Morphism& eta) {
  Json out = Json::array();
  for (Element x : r.elements()) out.push_back(eta.label(x));
  return out;
}

inline Json bpol_dump(const SatSet& p, const Basis& basis) {
  Json classes = Json::array();
  for (ClassId d = 0; d < p.num_classes(); ++d)
    classes.push_back({{"class", d}, {"witness", basis.witness(d)}, {"maximal", to_json(p.at(d))}});
  return {{"basis", basis.name()}, {"classes", classes}, {"universal", to_json(p.universal())}};
}

inline Json pol_dump(const PointedImprint& p, const CompatibleMorphism& alpha) {
  Json elements = Json::array();
  for (Element s = 0; s < p.num_elements(); ++s)
    elements.push_back({{"element", s},
                        {"witness", alpha.morphism.label(s)},
                        {"class", alpha.cls[s]},
                        {"image", alpha.original[s]},
                        {"maximal", to_json(p.at(s))}});
  return {{"elements", elements}, {"universal", to_json(p.universal())}};
}

}  // namespace io
}  // namespace sepdec

#endif  // SEPDEC_IO_HPP
