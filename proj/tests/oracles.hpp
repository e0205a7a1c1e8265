#pragma once

// Brute-force reference computations, written without the library's code
// paths so they can serve as independent checks.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "geocrystal/expr.hpp"
#include "geocrystal/fundrep.hpp"
#include "geocrystal/rng.hpp"

namespace oracle {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Every vector in [0, hi]^len, odometer order.
inline std::vector<std::vector<std::int64_t>> cube(int len, std::int64_t hi) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(v);
    int d = len - 1;
    while (d >= 0 && v[static_cast<std::size_t>(d)] == hi) v[static_cast<std::size_t>(d--)] = 0;
    if (d < 0) break;
    ++v[static_cast<std::size_t>(d)];
  }
  return out;
}

/// B^{2,l} by scanning [0,l]^n x [0,l]^n against the defining inequalities.
inline std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> b2l(int n, int l) {
  std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> out;
  const auto rows = cube(n, l);
  for (const auto& top : rows)
    for (const auto& bottom : rows) {
      std::int64_t s1 = 0, s2 = 0;
      bool ok = true;
      for (int t = 0; t < n; ++t) {
        s1 += top[static_cast<std::size_t>(t)];
        s2 += bottom[static_cast<std::size_t>(t)];
        if (s1 < s2) ok = false;
      }
      if (ok && s1 == l && s2 == l) out.insert({top, bottom});
    }
  return out;
}

inline std::set<std::vector<std::int64_t>> dominant(int n, int l) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& v : cube(n + 1, l)) {
    std::int64_t s = 0;
    for (auto e : v) s += e;
    if (s == l) out.insert(v);
  }
  return out;
}

/// V_1 built over symbolic scalars, then evaluated at x. The symbolic route
/// shares only the operator word with the rational route.
inline geocrystal::FundVector<geocrystal::Rational> symbolic_V1(const geocrystal::TorusPoint& x) {
  using namespace geocrystal;
  const int n = x.n;
  std::vector<PosExpr> vars;
  for (int k = 2; k <= 2 * n - 1; ++k) vars.push_back(PosExpr::var(k));
  ChartPoint<PosExpr> sx(n, 2, vars);
  const auto v = build_V1<PosExpr>(sx, PosExpr::constant(1));
  Assignment<Rational> a;
  for (int k = 2; k <= 2 * n - 1; ++k) a.set(k, x[k]);
  FundVector<Rational> out(n);
  for (const auto& [label, e] : v.coeffs()) out.add(label, eval_pos(e, a));
  return out;
}

inline geocrystal::TorusPoint random_x(int n, std::uint64_t seed, std::uint64_t index) {
  geocrystal::TrialRng rng(seed, index);
  std::vector<geocrystal::Rational> v;
  for (int k = 0; k < 2 * n - 2; ++k) v.push_back(rng.positive_rational());
  return geocrystal::x_point(n, std::move(v));
}

}  // namespace oracle
