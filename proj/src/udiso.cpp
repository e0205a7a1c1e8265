#include "geocrystal/udiso.hpp"

#include <algorithm>
#include <limits>

#include "geocrystal/expr.hpp"
#include "geocrystal/rng.hpp"

namespace geocrystal {

namespace {

std::int64_t xb(const LatticePoint& x, int k) { return x.contains(k) ? x[k] : 0; }

void require_point(const LatticePoint& x) {
  if (x.first != 2) throw DomainError("expected a lattice point x_2..x_{2n-1}");
}

std::int64_t max_beta(const LatticePoint& x, int from, int to, std::int64_t shift = 0) {
  std::int64_t m = std::numeric_limits<std::int64_t>::min();
  for (int j = from; j <= to; ++j) m = std::max(m, shift + beta(x, j));
  return m;
}

}  // namespace

std::int64_t beta(const LatticePoint& x, int k) {
  if (k < 2 || k > x.n) throw IndexOutOfRange("beta_k needs 2 <= k <= n");
  return x[k] - x[x.n + k - 1];
}

std::int64_t ud_wt(int i, const LatticePoint& x) {
  require_point(x);
  const int n = x.n;
  require_node(i, n);
  auto g = [&](int k) { return xb(x, k); };
  if (i == 0) return -g(n) - g(n + 1);
  if (i == n) return -g(n - 1) + 2 * g(n) - g(2 * n - 1);
  if (i == 1) return -g(2) + 2 * g(n + 1) - g(n + 2);
  if (i == 2) return 2 * g(2) - g(3) - g(n + 1) + 2 * g(n + 2) - g(n + 3);
  return -g(i - 1) + 2 * g(i) - g(i + 1) - g(n + i - 1) + 2 * g(n + i) - g(n + i + 1);
}

std::int64_t ud_eps(int i, const LatticePoint& x) {
  require_point(x);
  const int n = x.n;
  require_node(i, n);
  auto g = [&](int k) { return xb(x, k); };
  if (i == 0) return g(n + 1) + max_beta(x, 2, n);
  if (i == n) return -g(n) + g(2 * n - 1);
  if (i == 1) return -g(n + 1) + g(n + 2);
  if (i == n - 1) return std::max(-g(2 * n - 1), -g(n - 1) + g(n) + g(2 * n - 2) - 2 * g(2 * n - 1));
  return std::max(g(n + i + 1) - g(n + i),
                  -g(i) + g(i + 1) + g(n + i - 1) - 2 * g(n + i) + g(n + i + 1));
}

LatticePoint ud_e(int i, std::int64_t c, const LatticePoint& x) {
  require_point(x);
  const int n = x.n;
  require_node(i, n);
  LatticePoint out = x;
  if (i == 1) {
    out[n + 1] += c;
  } else if (i == n) {
    out[n] += c;
  } else if (i != 0) {
    const auto a = x[i] + x[n + i];
    const auto b = x[i + 1] + x[n + i - 1];
    const auto cbar = c + std::max(a, b) - std::max(c + a, b);
    out[i] += cbar;
    out[n + i] += c - cbar;
  } else {
    const auto top = max_beta(x, 2, n);
    auto big_c = [&](int k) { return top - std::max(max_beta(x, 2, k, c), max_beta(x, k + 1, n)); };
    for (int k = 2; k < n; ++k) out[k] = x[k] + big_c(k);
    out[n] = x[n] - c;
    out[n + 1] = x[n + 1] - c;
    for (int l = 2; l < n; ++l) out[n + l] = x[n + l] - c - big_c(l);
  }
  return out;
}

int phi_index(const LatticePoint& x) {
  require_point(x);
  const int n = x.n;
  int found = 0, count = 0;
  for (int j = 2; j <= n; ++j) {
    bool ok = true;
    for (int k = 2; k < j && ok; ++k) ok = beta(x, k) <= beta(x, j);
    for (int k = j + 1; k <= n && ok; ++k) ok = beta(x, j) > beta(x, k);
    if (ok) {
      found = j;
      ++count;
    }
  }
  if (count != 1) throw InvariantViolation(std::to_string(count) + " indices j satisfy (phi_j)");
  int rightmost = 2;
  for (int j = 2; j <= n; ++j)
    if (beta(x, j) >= beta(x, rightmost)) rightmost = j;
  if (rightmost != found)
    throw InvariantViolation("(phi_j) index differs from the rightmost maximizer of beta");
  return found;
}

LatticePoint ud_raise(int i, const LatticePoint& x) { return ud_e(i, 1, x); }

LatticePoint ud_lower(int i, const LatticePoint& x) {
  require_point(x);
  const int n = x.n;
  require_node(i, n);
  LatticePoint out = x;
  if (i == 1) {
    out[n + 1] -= 1;
  } else if (i == n) {
    out[n] -= 1;
  } else if (i != 0) {
    if (beta(x, i) > beta(x, i + 1))
      out[n + i] -= 1;
    else
      out[i] -= 1;
  } else {
    const int j = phi_index(x);
    for (int k = j; k <= n + j - 1; ++k) out[k] += 1;
  }
  return out;
}

CrystalElt omega(const LatticePoint& x) {
  require_point(x);
  const int n = x.n;
  CrystalElt b{n, std::nullopt, std::vector<std::int64_t>(static_cast<std::size_t>(n)),
               std::vector<std::int64_t>(static_cast<std::size_t>(n))};
  b.row1(1) = x[n + 1];
  for (int i = 2; i <= n - 1; ++i) b.row1(i) = x[n + i] - x[n + i - 1];
  b.row1(n) = -x[2 * n - 1];
  b.row2(2) = x[2];
  for (int i = 3; i <= n; ++i) b.row2(i) = x[i] - x[i - 1];
  b.row2(n + 1) = -x[n];
  return b;
}

LatticePoint omega_inv(const CrystalElt& b) {
  if (!b.is_limit()) throw DomainError("omega_inv is defined on B^{2,inf} only");
  if (!is_member(b)) throw DomainError("rows of a B^{2,inf} element must sum to 0");
  const int n = b.n;
  std::vector<std::int64_t> x(static_cast<std::size_t>(2 * n - 2));
  auto at = [&](int k) -> std::int64_t& { return x[static_cast<std::size_t>(k - 2)]; };
  std::int64_t s = 0;
  for (int i = 2; i <= n; ++i) at(i) = s += b.row2(i);
  s = 0;
  for (int i = 1; i <= n - 1; ++i) at(n + i) = s += b.row1(i);
  return lattice_point(n, std::move(x));
}

std::string Region::describe() const {
  if (kind == Kind::box) return "box radius " + std::to_string(radius);
  return std::to_string(samples) + " samples seed " + std::to_string(seed) + " radius " +
         std::to_string(radius);
}

Region default_region(int n) {
  if (n == 2) return Region::box(4);
  if (n == 3) return Region::box(3);
  return Region::sampled(10'000, 20'260'101);
}

std::vector<LatticePoint> region_points(int n, const Region& region, std::uint64_t cap) {
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  if (region.radius < 0) throw DomainError("region radius must be >= 0");
  const int dim = 2 * n - 2;
  std::vector<LatticePoint> out;
  if (region.kind == Region::Kind::samples) {
    if (region.samples < 1) throw DomainError("sample count must be >= 1");
    if (static_cast<std::uint64_t>(region.samples) > cap) throw ResourceLimit("too many samples");
    for (int t = 0; t < region.samples; ++t) {
      TrialRng rng(region.seed, static_cast<std::uint64_t>(t));
      std::vector<std::int64_t> v;
      for (int k = 0; k < dim; ++k) v.push_back(rng.uniform(-region.radius, region.radius));
      out.push_back(lattice_point(n, std::move(v)));
    }
    return out;
  }
  const auto width = static_cast<std::uint64_t>(2 * region.radius + 1);
  std::uint64_t total = 1;
  for (int k = 0; k < dim; ++k) {
    if (total > cap / width) throw ResourceLimit("box has more than " + std::to_string(cap) + " points");
    total *= width;
  }
  out.reserve(total);
  std::vector<std::int64_t> v(static_cast<std::size_t>(dim), -region.radius);
  for (std::uint64_t p = 0; p < total; ++p) {
    out.push_back(lattice_point(n, v));
    for (int d = dim - 1; d >= 0; --d) {
      auto& cell = v[static_cast<std::size_t>(d)];
      if (cell < region.radius) {
        ++cell;
        break;
      }
      cell = -region.radius;
    }
  }
  return out;
}

UdOps explicit_ud_ops() {
  return {[](int i, const LatticePoint& x) { return ud_lower(i, x); },
          [](int i, const LatticePoint& x) { return ud_raise(i, x); }};
}

namespace {

struct PointResult {
  std::uint64_t checks = 0;
  std::vector<PLFailure> failures;

  void check(bool ok, const char* identity, const LatticePoint& x, int i,
             std::optional<std::int64_t> c = std::nullopt) {
    ++checks;
    if (!ok) failures.push_back({identity, x, i, c});
  }
};

template <class Body>
PLCrystalReport scan(std::string suite, int n, const Region& region, Execution exec, Body body) {
  const auto points = region_points(n, region);
  std::vector<PointResult> results(points.size());
  for_each_index(points.size(), exec, [&](std::size_t p) { body(points[p], results[p]); });
  PLCrystalReport report{std::move(suite), n, region, points.size(), 0, {}};
  for (auto& r : results) {
    report.checks += r.checks;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace

PLCrystalReport verify_iso(int n, const Region& region, Execution exec, const UdOps& ops) {
  return scan("iso", n, region, exec, [&](const LatticePoint& x, PointResult& r) {
    const auto b = omega(x);
    for (int i = 0; i <= n; ++i) {
      try {
        const auto fx = ops.lower(i, x);
        const auto ex = ops.raise(i, x);
        r.check(omega(fx) == f_op(i, b), "omega(f(x))=f(omega(x))", x, i);
        r.check(omega(ex) == e_op(i, b), "omega(e(x))=e(omega(x))", x, i);
        r.check(wt(i, b) == ud_wt(i, x), "wt(omega(x))=wt(x)", x, i);
        r.check(eps(i, b) == ud_eps(i, x), "eps(omega(x))=eps(x)", x, i);
        r.check(fx == ud_e(i, -1, x), "f(x)=ud_e(x,c=-1)", x, i);
      } catch (const InvariantViolation&) {
        r.check(false, "unique-index", x, i);
      }
    }
  });
}

PLCrystalReport verify_ud_mechanical(int n, const Region& region, Execution exec) {
  const auto cat = catalog(n);
  struct Compiled {
    CatalogEntry::Role role;
    int node;
    int coord;
    TropExpr trop;
  };
  std::vector<Compiled> compiled;
  for (const auto& e : cat.entries()) compiled.push_back({e.role, e.node, e.coord, tropicalize(e.expr)});

  return scan("mechanical", n, region, exec, [&](const LatticePoint& x, PointResult& r) {
    Assignment<std::int64_t> a;
    for (int k = 2; k <= 2 * n - 1; ++k) a.set(k, x[k]);
    for (std::int64_t c = -2; c <= 2; ++c) {
      a.set(0, c);
      std::vector<LatticePoint> moved;
      for (int i = 0; i <= n; ++i) moved.push_back(ud_e(i, c, x));
      for (const auto& e : compiled) {
        const auto got = eval_trop(e.trop, a);
        switch (e.role) {
          case CatalogEntry::Role::gamma:
            if (c == 0) r.check(got == ud_wt(e.node, x), "trop(gamma)=wt", x, e.node);
            break;
          case CatalogEntry::Role::eps:
            if (c == 0) r.check(got == ud_eps(e.node, x), "trop(eps)=eps", x, e.node);
            break;
          case CatalogEntry::Role::action:
            r.check(got == moved[static_cast<std::size_t>(e.node)][e.coord], "trop(e)=ud_e", x,
                    e.node, c);
            break;
        }
      }
    }
  });
}

}  // namespace geocrystal
