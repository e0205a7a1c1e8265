#include <algorithm>

#include "geocrystal/expr.hpp"

namespace geocrystal {

namespace {

class Builder {
 public:
  explicit Builder(int n) : n_(n) {}

  // x_1 and x_{2n} stand for the constant 1.
  PosExpr x(int k) const {
    if (k == 1 || k == 2 * n_) return one();
    return PosExpr::var(k);
  }
  PosExpr c() const { return PosExpr::var(0); }
  static PosExpr one() { return PosExpr::constant(1); }
  static PosExpr sq(const PosExpr& e) { return e * e; }

  static PosExpr sum_of(std::vector<PosExpr> terms) {
    return terms.size() == 1 ? terms.front() : PosExpr::sum(std::move(terms));
  }

  // x_m / x_{n+m-1} for m in [lo, hi]
  PosExpr ratio_sum(int lo, int hi) const {
    std::vector<PosExpr> terms;
    for (int m = lo; m <= hi; ++m) terms.push_back(x(m) / x(n_ + m - 1));
    return sum_of(std::move(terms));
  }

  PosExpr gamma(int i) const {
    const int n = n_;
    if (i == 0) return one() / (x(n) * x(n + 1));
    if (i == 1) return sq(x(n + 1)) / (x(2) * x(n + 2));
    if (i == n) return sq(x(n)) / (x(n - 1) * x(2 * n - 1));
    return PosExpr::product({sq(x(i)), sq(x(n + i))}) /
           PosExpr::product({x(i - 1), x(i + 1), x(n + i - 1), x(n + i + 1)});
  }

  PosExpr eps(int i) const {
    const int n = n_;
    if (i == 0) return x(n + 1) * ratio_sum(2, n);
    if (i == 1) return x(n + 2) / x(n + 1);
    if (i == n) return x(2 * n - 1) / x(n);
    if (i == n - 1)
      return one() / x(2 * n - 1) +
             (x(n) * x(2 * n - 2)) / (x(n - 1) * sq(x(2 * n - 1)));
    return x(n + i + 1) / x(n + i) +
           PosExpr::product({x(i + 1), x(n + i - 1), x(n + i + 1)}) / (x(i) * sq(x(n + i)));
  }

  PosExpr action(int i, int k) const {
    const int n = n_;
    if (i == 1) return k == n + 1 ? c() * x(k) : x(k);
    if (i == n) return k == n ? c() * x(k) : x(k);
    if (i != 0) {
      if (k != i && k != n + i) return x(k);
      const auto a = x(i) * x(n + i);
      const auto b = x(i + 1) * x(n + i - 1);
      const auto ci = (c() * (a + b)) / (c() * a + b);
      return k == i ? ci * x(i) : (c() / ci) * x(n + i);
    }
    // i = 0
    const auto big_x = ratio_sum(2, n);
    auto mixed = [&](int t) { return c() * ratio_sum(2, t) + ratio_sum(t + 1, n); };
    if (k == n || k == n + 1) return x(k) / c();
    if (k < n) return x(k) * (big_x / mixed(k));
    const int l = k - n;
    return x(k) * (mixed(l) / (c() * big_x));
  }

 private:
  int n_;
};

}  // namespace

Catalog catalog(int n) {
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  Builder b(n);
  std::vector<CatalogEntry> entries;
  for (int i = 0; i <= n; ++i)
    entries.push_back({"gamma" + std::to_string(i), CatalogEntry::Role::gamma, i, 0, b.gamma(i)});
  for (int i = 0; i <= n; ++i)
    entries.push_back({"eps" + std::to_string(i), CatalogEntry::Role::eps, i, 0, b.eps(i)});
  for (int i = 0; i <= n; ++i)
    for (int k = 2; k <= 2 * n - 1; ++k)
      entries.push_back({"e" + std::to_string(i) + ":" + std::to_string(k),
                         CatalogEntry::Role::action, i, k, b.action(i, k)});
  return Catalog(n, std::move(entries));
}

const CatalogEntry& Catalog::at(std::string_view name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries_.end())
    throw DomainError("no catalog entry '" + std::string(name) + "' for n = " + std::to_string(n_));
  return *it;
}

const PosExpr& Catalog::gamma(int i) const { return at("gamma" + std::to_string(i)).expr; }
const PosExpr& Catalog::eps(int i) const { return at("eps" + std::to_string(i)).expr; }
const PosExpr& Catalog::action(int i, int k) const {
  return at("e" + std::to_string(i) + ":" + std::to_string(k)).expr;
}

}  // namespace geocrystal
