#pragma once

// The piecewise-linear crystal on Z^{2n-2} obtained from the geometric crystal
// by ultra-discretization, and the isomorphism Omega onto B^{2,infinity}.
// In these formulas x_1 and x_{2n} read as 0.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geocrystal/parallel.hpp"
#include "geocrystal/pcrystal.hpp"
#include "geocrystal/point.hpp"

namespace geocrystal {

/// beta_k = x_k - x_{n+k-1}, 2 <= k <= n.
std::int64_t beta(const LatticePoint& x, int k);

std::int64_t ud_wt(int i, const LatticePoint& x);
std::int64_t ud_eps(int i, const LatticePoint& x);
/// Tropical image of e_i^c, for any integer c.
LatticePoint ud_e(int i, std::int64_t c, const LatticePoint& x);

/// The unique j in 2..n with beta_2..beta_{j-1} <= beta_j > beta_{j+1}..beta_n.
int phi_index(const LatticePoint& x);

/// Kashiwara operators: e~_i = ud_e(i, 1, .); f~_i from the explicit case rules.
LatticePoint ud_raise(int i, const LatticePoint& x);
LatticePoint ud_lower(int i, const LatticePoint& x);

CrystalElt omega(const LatticePoint& x);
LatticePoint omega_inv(const CrystalElt& b);

struct Region {
  enum class Kind { box, samples };
  Kind kind = Kind::box;
  int radius = 3;
  int samples = 0;
  std::uint64_t seed = 0;

  static Region box(int radius) { return {Kind::box, radius, 0, 0}; }
  static Region sampled(int samples, std::uint64_t seed, int radius = 50) {
    return {Kind::samples, radius, samples, seed};
  }
  std::string describe() const;
};

/// [-4,4]^2 for n = 2, [-3,3]^4 for n = 3, else 10^4 samples in [-50,50].
Region default_region(int n);

inline constexpr std::uint64_t kDefaultRegionCap = 10'000'000;

/// Points of the region in a fixed order (box: odometer, last coordinate fastest).
std::vector<LatticePoint> region_points(int n, const Region& region,
                                        std::uint64_t cap = kDefaultRegionCap);

struct UdOps {
  std::function<LatticePoint(int, const LatticePoint&)> lower;
  std::function<LatticePoint(int, const LatticePoint&)> raise;
};

UdOps explicit_ud_ops();

struct PLFailure {
  std::string identity;
  LatticePoint point;
  int node = 0;
  std::optional<std::int64_t> c;

  bool operator==(const PLFailure&) const = default;
};

struct PLCrystalReport {
  std::string suite;
  int n = 0;
  Region region;
  std::uint64_t points = 0;
  std::uint64_t checks = 0;
  std::vector<PLFailure> failures;

  bool passed() const { return failures.empty(); }
  bool operator==(const PLCrystalReport& o) const {
    return suite == o.suite && n == o.n && region.describe() == o.region.describe() &&
           points == o.points && checks == o.checks && failures == o.failures;
  }
};

/// Omega commutes with e~_i, f~_i and transports wt_i, eps_i; also checks that
/// the explicit f~_i agrees with ud_e at c = -1.
PLCrystalReport verify_iso(int n, const Region& region, Execution exec = Execution::parallel,
                           const UdOps& ops = explicit_ud_ops());

/// Tropicalized catalog formulas against ud_wt, ud_eps and ud_e, c in -2..2.
PLCrystalReport verify_ud_mechanical(int n, const Region& region,
                                     Execution exec = Execution::parallel);

}  // namespace geocrystal
