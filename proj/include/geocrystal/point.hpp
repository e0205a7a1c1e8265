#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geocrystal/error.hpp"
#include "geocrystal/rational.hpp"

namespace geocrystal {

/// A point of a (2n-2)-dimensional chart whose coordinates carry 1-based
/// indices starting at `first`: the x-chart is x_2..x_{2n-1} (first = 2), the
/// y-chart of the second variety is y_1..y_{2n-2} (first = 1).
template <class T>
struct ChartPoint {
  int n = 0;
  int first = 2;
  std::vector<T> coords;

  ChartPoint() = default;
  ChartPoint(int rank, int first_index, std::vector<T> values)
      : n(rank), first(first_index), coords(std::move(values)) {
    if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
    if (static_cast<int>(coords.size()) != 2 * n - 2)
      throw DomainError("point for n = " + std::to_string(n) + " needs " +
                        std::to_string(2 * n - 2) + " coordinates, got " +
                        std::to_string(coords.size()));
  }

  int last() const { return first + 2 * n - 3; }
  bool contains(int k) const { return k >= first && k <= last(); }

  const T& operator[](int k) const { return coords[check(k)]; }
  T& operator[](int k) { return coords[check(k)]; }

  bool operator==(const ChartPoint&) const = default;

 private:
  std::size_t check(int k) const {
    if (!contains(k))
      throw IndexOutOfRange("coordinate index " + std::to_string(k) + " outside [" +
                            std::to_string(first) + ", " + std::to_string(last()) + "]");
    return static_cast<std::size_t>(k - first);
  }
};

using TorusPoint = ChartPoint<Rational>;
using LatticePoint = ChartPoint<std::int64_t>;

inline TorusPoint x_point(int n, std::vector<Rational> x) { return {n, 2, std::move(x)}; }
inline TorusPoint y_point(int n, std::vector<Rational> y) { return {n, 1, std::move(y)}; }
inline LatticePoint lattice_point(int n, std::vector<std::int64_t> x) {
  return {n, 2, std::move(x)};
}

/// Throws DivisionByZero if any coordinate is zero.
void require_nonzero(const TorusPoint& p);

}  // namespace geocrystal
