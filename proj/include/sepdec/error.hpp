#ifndef SEPDEC_ERROR_HPP
#define SEPDEC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepdec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed regular expression; carries the offending character offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Letter outside the declared alphabet, or operands over different alphabets.
class AlphabetError : public Error {
public:
  using Error::Error;
};

/// A configured size or time bound was exceeded. `guard()` names the bound.
class GuardError : public Error {
public:
  GuardError(std::string guard, const std::string& what)
      : Error(what), guard_(std::move(guard)) {}

  const std::string& guard() const noexcept { return guard_; }

private:
  std::string guard_;
};

/// Request is well formed but not supported (e.g. covering at a Pol level).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

}  // namespace sepdec

#endif  // SEPDEC_ERROR_HPP
