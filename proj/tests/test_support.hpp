#ifndef SEPDEC_TEST_SUPPORT_HPP
#define SEPDEC_TEST_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "sepdec/automata.hpp"

namespace sepdec::testing {

/// All words of length at most `max_len`, shortlex order.
inline std::vector<std::string> words_up_to(const Alphabet& a, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (char c : a.letters()) out.push_back(out[i] + c);
  }
  return out;
}

inline std::string random_word(const Alphabet& a, std::size_t max_len, std::mt19937_64& rng) {
  std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::string w;
  for (std::size_t i = 0; i < len; ++i)
    w += a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)];
  return w;
}

/// Random regex AST with exactly `size` nodes (size >= 1).
inline Regex random_regex(const Alphabet& a, std::size_t size, std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  if (size <= 1) {
    std::size_t k = pick(a.size() + 2);
    if (k == a.size()) return Regex::epsilon();
    if (k == a.size() + 1) return pick(4) == 0 ? Regex::empty() : Regex::literal(a[pick(a.size())]);
    return Regex::literal(a[k]);
  }
  if (size == 2) return Regex::star(random_regex(a, 1, rng));
  std::size_t kind = pick(5);
  if (kind == 0) return Regex::star(random_regex(a, size - 1, rng));
  std::size_t left = 1 + pick(size - 2);
  Regex l = random_regex(a, left, rng);
  Regex r = random_regex(a, size - 1 - left, rng);
  return kind <= 2 ? Regex::concat(std::move(l), std::move(r))
                   : Regex::alt(std::move(l), std::move(r));
}

}  // namespace sepdec::testing

#endif  // SEPDEC_TEST_SUPPORT_HPP
