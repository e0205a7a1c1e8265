#include <gtest/gtest.h>

#include "geocrystal/udiso.hpp"
#include "oracles.hpp"

using namespace geocrystal;

namespace {

LatticePoint random_point(int n, std::uint64_t seed, std::uint64_t index, int radius = 30) {
  TrialRng rng(seed, index);
  std::vector<std::int64_t> v;
  for (int k = 0; k < 2 * n - 2; ++k) v.push_back(rng.uniform(-radius, radius));
  return lattice_point(n, std::move(v));
}

// f~_i for middle i with the strict comparison relaxed.
UdOps relaxed_tie_ops() {
  auto ops = explicit_ud_ops();
  ops.lower = [](int i, const LatticePoint& x) {
    const int n = x.n;
    if (i == 0 || i == 1 || i == n) return ud_lower(i, x);
    LatticePoint out = x;
    if (beta(x, i) >= beta(x, i + 1))
      out[n + i] -= 1;
    else
      out[i] -= 1;
    return out;
  };
  return ops;
}

}  // namespace

TEST(Functions, Examples) {
  const auto x = lattice_point(3, {1, 2, 3, 4});
  EXPECT_EQ(beta(x, 2), -2);
  EXPECT_EQ(beta(x, 3), -2);
  EXPECT_EQ(ud_eps(0, x), 1);
  EXPECT_EQ(ud_wt(0, x), -5);  // -x_3 - x_4
  EXPECT_THROW(beta(x, 1), IndexOutOfRange);
  EXPECT_THROW(ud_wt(4, x), IndexOutOfRange);
}

TEST(Functions, VanishAtOrigin) {
  for (int n = 2; n <= 6; ++n) {
    const auto o = lattice_point(n, std::vector<std::int64_t>(static_cast<std::size_t>(2 * n - 2), 0));
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(ud_wt(i, o), 0);
      EXPECT_EQ(ud_eps(i, o), 0);
    }
  }
}

TEST(Operators, Examples) {
  EXPECT_EQ(ud_lower(0, lattice_point(3, {0, 0, 0, 0})), lattice_point(3, {0, 1, 1, 1}));
  EXPECT_EQ(phi_index(lattice_point(3, {0, 0, 0, 0})), 3);
  EXPECT_EQ(ud_lower(2, lattice_point(3, {1, 2, 3, 4})), lattice_point(3, {0, 2, 3, 4}));
  EXPECT_EQ(ud_lower(1, lattice_point(2, {5, 7})), lattice_point(2, {5, 6}));
  EXPECT_EQ(ud_lower(2, lattice_point(2, {5, 7})), lattice_point(2, {4, 7}));
}

TEST(Operators, ActionIsAdditive) {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t t = 0; t < 100; ++t) {
      const auto x = random_point(n, 1, t);
      TrialRng rng(2, t);
      const auto c = rng.uniform(-9, 9), d = rng.uniform(-9, 9);
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(ud_e(i, 0, x), x);
        EXPECT_EQ(ud_e(i, c, ud_e(i, d, x)), ud_e(i, c + d, x));
      }
    }
}

TEST(Operators, CrystalLaws) {
  for (int n = 2; n <= 5; ++n) {
    const auto a = cartan_matrix(n);
    for (std::uint64_t t = 0; t < 100; ++t) {
      const auto x = random_point(n, 3, t);
      for (int i = 0; i <= n; ++i) {
        const auto f = ud_lower(i, x);
        EXPECT_EQ(ud_raise(i, f), x);
        EXPECT_EQ(ud_lower(i, ud_raise(i, x)), x);
        EXPECT_EQ(f, ud_e(i, -1, x));
        EXPECT_EQ(ud_eps(i, f), ud_eps(i, x) + 1);
        for (int j = 0; j <= n; ++j) EXPECT_EQ(ud_wt(j, f), ud_wt(j, x) - a(j, i));
      }
    }
  }
}

TEST(Omega, Examples) {
  const auto b = omega(lattice_point(3, {1, 2, 3, 4}));
  EXPECT_EQ(b.b1, (std::vector<std::int64_t>{3, 1, -4}));
  EXPECT_EQ(b.b2, (std::vector<std::int64_t>{1, 1, -2}));
  EXPECT_TRUE(is_member(b));
  EXPECT_EQ(omega(lattice_point(4, {0, 0, 0, 0, 0, 0})), limit_highest(4));
  EXPECT_EQ(omega(ud_lower(0, lattice_point(3, {0, 0, 0, 0}))), *f_op(0, limit_highest(3)));
}

TEST(Omega, RoundTrips) {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t t = 0; t < 2500; ++t) {
      const auto x = random_point(n, 4, t, 50);
      const auto b = omega(x);
      EXPECT_EQ(omega_inv(b), x);
      EXPECT_EQ(omega(omega_inv(b)), b);
    }
}

TEST(Omega, RejectsFiniteLevel) {
  EXPECT_THROW(omega_inv(make_elt(2, 1, {0, 1}, {0, 1})), DomainError);
}

TEST(Regions, Defaults) {
  EXPECT_EQ(default_region(2).kind, Region::Kind::box);
  EXPECT_EQ(default_region(2).radius, 4);
  EXPECT_EQ(default_region(3).radius, 3);
  EXPECT_EQ(default_region(4).samples, 10000);
  EXPECT_EQ(region_points(3, Region::box(1)).size(), 81u);
  EXPECT_EQ(region_points(2, Region::box(1)).front(), lattice_point(2, {-1, -1}));
  EXPECT_THROW(region_points(5, Region::box(10), 1000), ResourceLimit);
}

TEST(Suites, IsomorphismOnDefaultRegions) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = verify_iso(n, default_region(n));
    EXPECT_TRUE(r.passed()) << n << " " << (r.failures.empty() ? "" : r.failures.front().identity);
    EXPECT_GT(r.checks, 0u);
  }
  EXPECT_TRUE(verify_iso(2, Region::box(3)).passed());
}

TEST(Suites, MechanicalOnDefaultRegions) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = verify_ud_mechanical(n, default_region(n));
    EXPECT_TRUE(r.passed()) << n << " " << (r.failures.empty() ? "" : r.failures.front().identity);
  }
}

TEST(Suites, SerialEqualsParallel) {
  const auto region = Region::sampled(500, 77, 20);
  EXPECT_EQ(verify_iso(4, region, Execution::serial), verify_iso(4, region, Execution::parallel));
  EXPECT_EQ(verify_ud_mechanical(4, region, Execution::serial),
            verify_ud_mechanical(4, region, Execution::parallel));
}

TEST(Suites, RelaxedTieBreakIsCaught) {
  const auto r = verify_iso(3, Region::box(2), Execution::serial, relaxed_tie_ops());
  EXPECT_FALSE(r.passed());
}
