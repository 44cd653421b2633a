#ifndef SEPDEC_AUTOMATA_HPP
#define SEPDEC_AUTOMATA_HPP

// Regular expressions, NFAs and complete minimal DFAs over an explicit,
// ordered alphabet. Words are std::string with one character per letter.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepdec/error.hpp"

namespace sepdec {

using State = std::uint32_t;

class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<char> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (letters_[i] == letters_[j])
          throw AlphabetError(std::string("duplicate letter '") + letters_[i] + "'");
      if (letters_[i] == '_' || letters_[i] == '~' || letters_[i] == '(' ||
          letters_[i] == ')' || letters_[i] == '|' || letters_[i] == '*' ||
          letters_[i] == ' ')
        throw AlphabetError(std::string("reserved character '") + letters_[i] +
                            "' cannot be a letter");
    }
  }
  Alphabet(std::initializer_list<char> letters)
      : Alphabet(std::vector<char>(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<char>& letters() const noexcept { return letters_; }

  bool contains(char c) const noexcept {
    return std::find(letters_.begin(), letters_.end(), c) != letters_.end();
  }

  std::size_t index_of(char c) const {
    auto it = std::find(letters_.begin(), letters_.end(), c);
    if (it == letters_.end())
      throw AlphabetError(std::string("letter '") + c + "' is not in the alphabet");
    return static_cast<std::size_t>(it - letters_.begin());
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<char> letters_;
};

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (a != b)
    throw AlphabetError("operands are defined over different alphabets");
}

// ---------------------------------------------------------------------------
// Regex

struct Regex {
  enum class Kind { Empty, Epsilon, Literal, Union, Concat, Star };

  Kind kind = Kind::Empty;
  char letter = 0;
  std::vector<Regex> children;

  static Regex empty() { return {}; }
  static Regex epsilon() { return {Kind::Epsilon, 0, {}}; }
  static Regex literal(char c) { return {Kind::Literal, c, {}}; }
  static Regex alt(Regex l, Regex r) {
    return {Kind::Union, 0, {std::move(l), std::move(r)}};
  }
  static Regex concat(Regex l, Regex r) {
    return {Kind::Concat, 0, {std::move(l), std::move(r)}};
  }
  static Regex star(Regex r) { return {Kind::Star, 0, {std::move(r)}}; }

  /// Number of AST nodes.
  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.size();
    return n;
  }

  friend bool operator==(const Regex&, const Regex&) = default;
};

/// Fully parenthesized rendering that parses back to the same tree.
inline std::string to_string(const Regex& r) {
  switch (r.kind) {
    case Regex::Kind::Empty: return "~";
    case Regex::Kind::Epsilon: return "_";
    case Regex::Kind::Literal: return std::string(1, r.letter);
    case Regex::Kind::Union:
      return "(" + to_string(r.children[0]) + "|" + to_string(r.children[1]) + ")";
    case Regex::Kind::Concat:
      return "(" + to_string(r.children[0]) + to_string(r.children[1]) + ")";
    case Regex::Kind::Star: return "(" + to_string(r.children[0]) + ")*";
  }
  return {};
}

namespace detail {

class RegexParser {
public:
  RegexParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Regex parse() {
    Regex r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

private:
  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ < text_.size())
      throw ParseError(what + " '" + std::string(1, text_[pos_]) + "'", pos_);
    throw ParseError(what + " (end of input)", pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  int peek() {
    skip_space();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  bool starts_base(int c) const {
    return c == '_' || c == '~' || c == '(' ||
           (c >= 0 && c != ')' && c != '|' && c != '*');
  }

  Regex expr() {
    Regex r = term();
    while (peek() == '|') {
      ++pos_;
      r = Regex::alt(std::move(r), term());
    }
    return r;
  }

  Regex term() {
    if (!starts_base(peek())) fail("expected a letter, '_', '~' or '('");
    Regex r = factor();
    while (starts_base(peek())) r = Regex::concat(std::move(r), factor());
    return r;
  }

  Regex factor() {
    Regex r = base();
    if (peek() == '*') {
      ++pos_;
      r = Regex::star(std::move(r));
    }
    return r;
  }

  Regex base() {
    int c = peek();
    if (c == '_') {
      ++pos_;
      return Regex::epsilon();
    }
    if (c == '~') {
      ++pos_;
      return Regex::empty();
    }
    if (c == '(') {
      ++pos_;
      Regex r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c < 0) fail("expected a letter, '_', '~' or '('");
    char letter = static_cast<char>(c);
    if (!alphabet_.contains(letter))
      throw AlphabetError("letter '" + std::string(1, letter) + "' at position " +
                          std::to_string(pos_) + " is not in the alphabet");
    ++pos_;
    return Regex::literal(letter);
  }
};

}  // namespace detail

/// Grammar: expr := term ('|' term)*; term := factor+; factor := base ('*')?;
/// base := letter | '_' | '~' | '(' expr ')'. Whitespace is ignored.
inline Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return detail::RegexParser(text, alphabet).parse();
}

// ---------------------------------------------------------------------------
// Automata

class Dfa;

/// Nondeterministic automaton with epsilon moves. Only used as an
/// intermediate representation on the way to a Dfa.
struct Nfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  // edges[state][letter] and epsilon[state]
  std::vector<std::vector<std::vector<State>>> edges;
  std::vector<std::vector<State>> epsilon;
  std::vector<State> initial;
  std::vector<bool> accepting;

  explicit Nfa(Alphabet a) : alphabet(std::move(a)) {}

  State add_state() {
    edges.emplace_back(alphabet.size());
    epsilon.emplace_back();
    accepting.push_back(false);
    return static_cast<State>(num_states++);
  }

  void add_edge(State from, std::size_t letter, State to) {
    edges[from][letter].push_back(to);
  }
  void add_epsilon(State from, State to) { epsilon[from].push_back(to); }

  Dfa determinize() const;
};

namespace detail {

struct Fragment {
  State start;
  State end;
};

inline Fragment thompson(const Regex& r, Nfa& nfa) {
  State s = nfa.add_state();
  State e = nfa.add_state();
  switch (r.kind) {
    case Regex::Kind::Empty: break;
    case Regex::Kind::Epsilon: nfa.add_epsilon(s, e); break;
    case Regex::Kind::Literal: nfa.add_edge(s, nfa.alphabet.index_of(r.letter), e); break;
    case Regex::Kind::Union: {
      Fragment a = thompson(r.children[0], nfa);
      Fragment b = thompson(r.children[1], nfa);
      nfa.add_epsilon(s, a.start);
      nfa.add_epsilon(s, b.start);
      nfa.add_epsilon(a.end, e);
      nfa.add_epsilon(b.end, e);
      break;
    }
    case Regex::Kind::Concat: {
      Fragment a = thompson(r.children[0], nfa);
      Fragment b = thompson(r.children[1], nfa);
      nfa.add_epsilon(s, a.start);
      nfa.add_epsilon(a.end, b.start);
      nfa.add_epsilon(b.end, e);
      break;
    }
    case Regex::Kind::Star: {
      Fragment a = thompson(r.children[0], nfa);
      nfa.add_epsilon(s, e);
      nfa.add_epsilon(s, a.start);
      nfa.add_epsilon(a.end, a.start);
      nfa.add_epsilon(a.end, e);
      break;
    }
  }
  return {s, e};
}

}  // namespace detail

inline Nfa to_nfa(const Regex& r, const Alphabet& alphabet) {
  Nfa nfa(alphabet);
  detail::Fragment f = detail::thompson(r, nfa);
  nfa.initial = {f.start};
  nfa.accepting[f.end] = true;
  return nfa;
}

/// Complete deterministic automaton. States are 0..size()-1; the transition
/// function is total.
class Dfa {
public:
  Dfa(Alphabet alphabet, std::size_t num_states, std::vector<State> delta,
      State initial, std::vector<bool> accepting)
      : alphabet_(std::move(alphabet)),
        num_states_(num_states),
        delta_(std::move(delta)),
        initial_(initial),
        accepting_(std::move(accepting)) {
    if (num_states_ == 0) throw Error("a DFA needs at least one state");
    if (delta_.size() != num_states_ * alphabet_.size())
      throw Error("transition table has the wrong size");
    if (accepting_.size() != num_states_)
      throw Error("accepting vector has the wrong size");
    if (initial_ >= num_states_) throw Error("initial state out of range");
    for (State t : delta_)
      if (t >= num_states_) throw Error("transition target out of range");
  }

  /// Automaton accepting every word.
  static Dfa universal(const Alphabet& a) {
    return Dfa(a, 1, std::vector<State>(a.size(), 0), 0, {true});
  }
  /// Automaton accepting nothing.
  static Dfa empty(const Alphabet& a) {
    return Dfa(a, 1, std::vector<State>(a.size(), 0), 0, {false});
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return num_states_; }
  State initial() const noexcept { return initial_; }
  bool accepting(State q) const { return accepting_[q]; }
  const std::vector<bool>& accepting_states() const noexcept { return accepting_; }

  State next(State q, std::size_t letter) const {
    return delta_[q * alphabet_.size() + letter];
  }

  State run(State q, std::string_view word) const {
    for (char c : word) q = next(q, alphabet_.index_of(c));
    return q;
  }

  bool accepts(std::string_view word) const { return accepting_[run(initial_, word)]; }

  friend bool operator==(const Dfa&, const Dfa&) = default;

private:
  Alphabet alphabet_;
  std::size_t num_states_;
  std::vector<State> delta_;
  State initial_;
  std::vector<bool> accepting_;
};

inline Dfa Nfa::determinize() const {
  const std::size_t k = alphabet.size();
  auto close = [&](std::vector<State> set) {
    std::vector<bool> seen(num_states, false);
    std::vector<State> stack;
    for (State s : set)
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    set.clear();
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      set.push_back(s);
      for (State t : epsilon[s])
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
    }
    std::sort(set.begin(), set.end());
    return set;
  };

  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> subsets;
  std::vector<State> delta;
  std::vector<bool> acc;

  auto intern = [&](std::vector<State> set) {
    auto [it, inserted] = index.emplace(std::move(set), static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(it->first);
    return it->second;
  };

  intern(close(initial));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const std::vector<State> current = subsets[i];
    bool is_acc = std::any_of(current.begin(), current.end(),
                              [&](State s) { return accepting[s]; });
    acc.push_back(is_acc);
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<State> succ;
      for (State s : current)
        succ.insert(succ.end(), edges[s][a].begin(), edges[s][a].end());
      delta.push_back(intern(close(std::move(succ))));
    }
  }
  return Dfa(alphabet, subsets.size(), std::move(delta), 0, std::move(acc));
}

/// Minimal complete DFA, states renumbered in breadth-first order from the
/// initial state (letters in alphabet order). Two DFAs recognize the same
/// language iff their minimizations compare equal.
inline Dfa minimize(const Dfa& d) {
  const std::size_t k = d.alphabet().size();

  // Reachable states in BFS order.
  std::vector<State> order;
  std::vector<int> seen(d.size(), -1);
  order.push_back(d.initial());
  seen[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      State t = d.next(order[i], a);
      if (seen[t] < 0) {
        seen[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }

  // Moore refinement over reachable states.
  const std::size_t n = order.size();
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = d.accepting(order[i]) ? 1 : 0;
  std::size_t num_blocks = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signature;
    std::vector<std::size_t> next_block(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{block[i]};
      for (std::size_t a = 0; a < k; ++a)
        sig.push_back(block[static_cast<std::size_t>(seen[d.next(order[i], a)])]);
      auto [it, inserted] = signature.emplace(std::move(sig), signature.size());
      next_block[i] = it->second;
    }
    std::size_t count = signature.size();
    block = std::move(next_block);
    if (count == num_blocks) break;
    num_blocks = count;
  }

  // Canonical renumbering of blocks by BFS.
  std::vector<int> canon(num_blocks, -1);
  std::vector<std::size_t> repr;  // block -> representative reachable index
  std::vector<std::size_t> block_repr(num_blocks, 0);
  for (std::size_t i = n; i-- > 0;) block_repr[block[i]] = i;
  std::vector<std::size_t> queue{block[0]};
  canon[block[0]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t b = block[static_cast<std::size_t>(
          seen[d.next(order[block_repr[queue[i]]], a)])];
      if (canon[b] < 0) {
        canon[b] = static_cast<int>(queue.size());
        queue.push_back(b);
      }
    }

  std::vector<State> delta(num_blocks * k);
  std::vector<bool> acc(num_blocks);
  for (std::size_t b = 0; b < num_blocks; ++b) {
    State q = order[block_repr[b]];
    std::size_t c = static_cast<std::size_t>(canon[b]);
    acc[c] = d.accepting(q);
    for (std::size_t a = 0; a < k; ++a)
      delta[c * k + a] = static_cast<State>(
          canon[block[static_cast<std::size_t>(seen[d.next(q, a)])]]);
  }
  return Dfa(d.alphabet(), num_blocks, std::move(delta), 0, std::move(acc));
}

inline Dfa to_min_dfa(const Regex& r, const Alphabet& alphabet) {
  return minimize(to_nfa(r, alphabet).determinize());
}

inline Dfa to_min_dfa(std::string_view regex, const Alphabet& alphabet) {
  return to_min_dfa(parse_regex(regex, alphabet), alphabet);
}

inline Dfa complement(const Dfa& d) {
  std::vector<bool> acc(d.size());
  std::vector<State> delta;
  delta.reserve(d.size() * d.alphabet().size());
  for (State q = 0; q < d.size(); ++q) {
    acc[q] = !d.accepting(q);
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) delta.push_back(d.next(q, a));
  }
  return Dfa(d.alphabet(), d.size(), std::move(delta), d.initial(), std::move(acc));
}

namespace detail {

template <class Combine>
Dfa product_dfa(const Dfa& l, const Dfa& r, Combine combine) {
  require_same_alphabet(l.alphabet(), r.alphabet());
  const std::size_t k = l.alphabet().size();
  std::vector<State> delta(l.size() * r.size() * k);
  std::vector<bool> acc(l.size() * r.size());
  for (State p = 0; p < l.size(); ++p)
    for (State q = 0; q < r.size(); ++q) {
      std::size_t id = p * r.size() + q;
      acc[id] = combine(l.accepting(p), r.accepting(q));
      for (std::size_t a = 0; a < k; ++a)
        delta[id * k + a] = static_cast<State>(l.next(p, a) * r.size() + r.next(q, a));
    }
  return minimize(Dfa(l.alphabet(), l.size() * r.size(), std::move(delta),
                      static_cast<State>(l.initial() * r.size() + r.initial()),
                      std::move(acc)));
}

}  // namespace detail

inline Dfa intersect(const Dfa& l, const Dfa& r) {
  return detail::product_dfa(l, r, [](bool x, bool y) { return x && y; });
}

inline Dfa union_of(const Dfa& l, const Dfa& r) {
  return detail::product_dfa(l, r, [](bool x, bool y) { return x || y; });
}

inline bool is_empty(const Dfa& d) {
  std::vector<bool> seen(d.size(), false);
  std::vector<State> stack{d.initial()};
  seen[d.initial()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    if (d.accepting(q)) return false;
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      State t = d.next(q, a);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return true;
}

inline bool accepts(const Dfa& d, std::string_view word) { return d.accepts(word); }

inline bool equal(const Dfa& l, const Dfa& r) {
  require_same_alphabet(l.alphabet(), r.alphabet());
  return minimize(l) == minimize(r);
}

/// NFA view of a DFA, used to build automata for concatenation and closures.
inline Nfa to_nfa(const Dfa& d) {
  Nfa nfa(d.alphabet());
  for (State q = 0; q < d.size(); ++q) {
    nfa.add_state();
    nfa.accepting[q] = d.accepting(q);
  }
  for (State q = 0; q < d.size(); ++q)
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) nfa.add_edge(q, a, d.next(q, a));
  nfa.initial = {d.initial()};
  return nfa;
}

inline Dfa concatenate(const Dfa& l, const Dfa& r) {
  require_same_alphabet(l.alphabet(), r.alphabet());
  Nfa nfa = to_nfa(l);
  const State offset = static_cast<State>(l.size());
  for (State q = 0; q < r.size(); ++q) {
    nfa.add_state();
    nfa.accepting[offset + q] = r.accepting(q);
  }
  for (State q = 0; q < l.size(); ++q) nfa.accepting[q] = false;
  for (State q = 0; q < r.size(); ++q)
    for (std::size_t a = 0; a < r.alphabet().size(); ++a)
      nfa.add_edge(offset + q, a, offset + r.next(q, a));
  for (State q = 0; q < l.size(); ++q)
    if (l.accepting(q)) nfa.add_epsilon(q, offset + r.initial());
  return minimize(nfa.determinize());
}

}  // namespace sepdec

#endif  // SEPDEC_AUTOMATA_HPP
