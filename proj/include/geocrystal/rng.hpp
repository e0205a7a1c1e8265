#pragma once

#include <cstdint>
#include <random>

#include "geocrystal/rational.hpp"

namespace geocrystal {

/// Random stream for one trial of a seeded suite. Each trial index gets its own
/// stream derived from the master seed, so serial and parallel runs draw
/// exactly the same values.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t index);

  /// Uniform integer in [lo, hi], portable across standard libraries.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// p/q with p, q uniform in [1, 1000].
  Rational positive_rational();

 private:
  std::mt19937_64 engine_;
};

}  // namespace geocrystal
