#ifndef SEPDEC_GUARDS_HPP
#define SEPDEC_GUARDS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>

#include "sepdec/algebra.hpp"
#include "sepdec/error.hpp"
#include "sepdec/rating.hpp"

namespace sepdec {

/// Resource bounds shared by all engines. Exceeding one throws GuardError.
struct Guards {
  std::size_t max_monoid = kDefaultMaxMonoid;
  std::size_t max_n = kDefaultMaxRatingBase;
  std::size_t max_frontier = 200000;
  std::int64_t wall_ms = 300000;
};

class Deadline {
public:
  explicit Deadline(std::int64_t wall_ms)
      : limit_ms_(wall_ms), start_(std::chrono::steady_clock::now()) {}

  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

  void check() const {
    if (limit_ms_ > 0 && elapsed_ms() > limit_ms_)
      throw GuardError("wall-clock", "time limit of " + std::to_string(limit_ms_) +
                                         " ms exceeded");
  }

private:
  std::int64_t limit_ms_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace sepdec

#endif  // SEPDEC_GUARDS_HPP
