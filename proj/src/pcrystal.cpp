#include "geocrystal/pcrystal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "geocrystal/json_io.hpp"
#include "geocrystal/rng.hpp"

namespace geocrystal {

std::int64_t CrystalElt::row1(int i) const {
  if (i < 1 || i > n) throw IndexOutOfRange("b_{1," + std::to_string(i) + "} out of range");
  return b1[static_cast<std::size_t>(i - 1)];
}

std::int64_t CrystalElt::row2(int i) const {
  if (i < 2 || i > n + 1) throw IndexOutOfRange("b_{2," + std::to_string(i) + "} out of range");
  return b2[static_cast<std::size_t>(i - 2)];
}

std::int64_t& CrystalElt::row1(int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("b_{1," + std::to_string(i) + "} out of range");
  return b1[static_cast<std::size_t>(i - 1)];
}

std::int64_t& CrystalElt::row2(int i) {
  if (i < 2 || i > n + 1) throw IndexOutOfRange("b_{2," + std::to_string(i) + "} out of range");
  return b2[static_cast<std::size_t>(i - 2)];
}

bool is_member(const CrystalElt& b) {
  const auto size = static_cast<std::size_t>(b.n);
  if (b.n < 2 || b.b1.size() != size || b.b2.size() != size) return false;
  const auto s1 = std::accumulate(b.b1.begin(), b.b1.end(), std::int64_t{0});
  const auto s2 = std::accumulate(b.b2.begin(), b.b2.end(), std::int64_t{0});
  if (b.is_limit()) return s1 == 0 && s2 == 0;
  const std::int64_t l = *b.level;
  if (l < 1 || s1 != l || s2 != l) return false;
  for (std::size_t i = 0; i < size; ++i)
    if (b.b1[i] < 0 || b.b2[i] < 0) return false;
  std::int64_t p1 = 0, p2 = 0;
  for (int t = 1; t <= b.n; ++t) {
    p1 += b.row1(t);
    p2 += b.row2(t + 1);
    if (p1 < p2) return false;
  }
  return true;
}

CrystalElt make_elt(int n, std::optional<int> level, std::vector<std::int64_t> b1,
                    std::vector<std::int64_t> b2) {
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  if (level && *level < 1) throw DomainError("level must be >= 1 or infinite");
  CrystalElt b{n, level, std::move(b1), std::move(b2)};
  if (!is_member(b))
    throw DomainError("array is not an element of B^{2," +
                      (level ? std::to_string(*level) : std::string("inf")) + "} for n = " +
                      std::to_string(n));
  return b;
}

CrystalElt limit_highest(int n) {
  return make_elt(n, std::nullopt, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0),
                  std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
}

std::int64_t z_value(const CrystalElt& b, int i) { return b.row1(i) - b.row2(i + 1); }

namespace {

std::int64_t z_sum(const CrystalElt& b, int from, int to) {
  std::int64_t s = 0;
  for (int i = from; i <= to; ++i) s += z_value(b, i);
  return s;
}

template <class Left, class Right>
bool condition(const CrystalElt& b, int m, Left left_ok, Right right_ok) {
  if (m < 2 || m > b.n) throw IndexOutOfRange("m must lie in 2..n");
  for (int k = 2; k <= m - 1; ++k)
    if (!left_ok(z_sum(b, k, m - 1))) return false;
  for (int k = m; k <= b.n - 1; ++k)
    if (!right_ok(z_sum(b, m, k))) return false;
  return true;
}

template <class Cond>
int unique_index(const CrystalElt& b, Cond cond, const char* name) {
  int found = 0, count = 0;
  for (int m = 2; m <= b.n; ++m)
    if (cond(b, m)) {
      found = m;
      ++count;
    }
  if (count != 1)
    throw InvariantViolation(std::to_string(count) + " indices m satisfy " + name);
  return found;
}

std::optional<CrystalElt> finish(CrystalElt b) {
  if (!b.is_limit() && !is_member(b)) return std::nullopt;
  return b;
}

std::optional<CrystalElt> move(int k, const CrystalElt& b, int s) {
  require_node(k, b.n);
  const int n = b.n;
  CrystalElt out = b;
  if (k == 0) {
    const int m = s > 0 ? f0_index(b) : e0_index(b);
    out.row1(1) += s;
    out.row1(m) -= s;
    out.row2(m) += s;
    out.row2(n + 1) -= s;
  } else if (k == 1) {
    out.row1(1) -= s;
    out.row1(2) += s;
  } else if (k == n) {
    out.row2(n) -= s;
    out.row2(n + 1) += s;
  } else {
    const bool top = s > 0 ? b.row1(k) > b.row2(k + 1) : b.row1(k) >= b.row2(k + 1);
    if (top) {
      out.row1(k) -= s;
      out.row1(k + 1) += s;
    } else {
      out.row2(k) -= s;
      out.row2(k + 1) += s;
    }
  }
  return finish(std::move(out));
}

}  // namespace

bool condition_F(const CrystalElt& b, int m) {
  return condition(
      b, m, [](std::int64_t s) { return s <= 0; }, [](std::int64_t s) { return s > 0; });
}

bool condition_E(const CrystalElt& b, int m) {
  return condition(
      b, m, [](std::int64_t s) { return s < 0; }, [](std::int64_t s) { return s >= 0; });
}

int f0_index(const CrystalElt& b) { return unique_index(b, condition_F, "(F_m)"); }
int e0_index(const CrystalElt& b) { return unique_index(b, condition_E, "(E_m)"); }

std::int64_t delta_m(const CrystalElt& b, int m) {
  if (m < 2 || m > b.n) throw IndexOutOfRange("m must lie in 2..n");
  std::int64_t s = 0;
  for (int i = 2; i <= m - 1; ++i) s += b.row1(i);
  for (int i = m + 1; i <= b.n; ++i) s += b.row2(i);
  return s;
}

std::int64_t delta(const CrystalElt& b) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int m = 2; m <= b.n; ++m) best = std::min(best, delta_m(b, m));
  return best;
}

std::optional<CrystalElt> f_op(int k, const CrystalElt& b) { return move(k, b, +1); }
std::optional<CrystalElt> e_op(int k, const CrystalElt& b) { return move(k, b, -1); }

std::int64_t eps(int k, const CrystalElt& b) {
  require_node(k, b.n);
  const int n = b.n;
  const std::int64_t l = b.level.value_or(0);
  if (k == 0) return l - b.row2(n + 1) - delta(b);
  if (k == 1) return b.row1(2);
  if (k == n) return b.row2(n + 1) - b.row1(n);
  return b.row1(k + 1) + std::max<std::int64_t>(b.row2(k + 1) - b.row1(k), 0);
}

std::int64_t phi(int k, const CrystalElt& b) {
  require_node(k, b.n);
  const int n = b.n;
  const std::int64_t l = b.level.value_or(0);
  if (k == 0) return l - b.row1(1) - delta(b);
  if (k == 1) return b.row1(1) - b.row2(2);
  if (k == n) return b.row2(n);
  return b.row2(k) + std::max<std::int64_t>(b.row1(k) - b.row2(k + 1), 0);
}

std::int64_t wt(int k, const CrystalElt& b) {
  require_node(k, b.n);
  const int n = b.n;
  if (k == 0) return b.row2(n + 1) - b.row1(1);
  if (k == 1) return b.row1(1) - b.row1(2) - b.row2(2);
  if (k == n) return b.row1(n) + b.row2(n) - b.row2(n + 1);
  return (b.row1(k) - b.row1(k + 1)) + (b.row2(k) - b.row2(k + 1));
}

namespace {

// Compositions of `total` into `parts` nonnegative parts, lexicographic.
std::vector<std::vector<std::int64_t>> compositions(int parts, std::int64_t total) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
    if (pos == parts - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > kMax / num) return kMax;
    r = r * num / i;
  }
  return r;
}

void require_level(int n, int l) {
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  if (l < 1) throw DomainError("level l must be >= 1, got " + std::to_string(l));
}

}  // namespace

std::vector<CrystalElt> enumerate(int n, int l, std::uint64_t cap, Execution exec) {
  require_level(n, l);
  const auto rows = binomial_saturated(static_cast<std::uint64_t>(l + n - 1),
                                       static_cast<std::uint64_t>(n - 1));
  // each row has `rows` candidates; refuse before materializing a huge product
  if (rows > cap || rows * rows / 64 > cap)
    throw ResourceLimit("B^{2," + std::to_string(l) + "} for n = " + std::to_string(n) +
                        " exceeds the enumeration cap of " + std::to_string(cap));
  const auto tops = compositions(n, l);
  const auto bottoms = compositions(n, l);
  auto out = gather_indexed<CrystalElt>(tops.size(), exec, [&](std::size_t t) {
    std::vector<CrystalElt> shard;
    for (const auto& bottom : bottoms) {
      CrystalElt b{n, l, tops[t], bottom};
      if (is_member(b)) shard.push_back(std::move(b));
    }
    return shard;
  });
  if (out.size() > cap)
    throw ResourceLimit("B^{2," + std::to_string(l) + "} has more than " + std::to_string(cap) +
                        " elements");
  return out;
}

namespace {

class Checker {
 public:
  Checker(std::vector<CrystalFailure>& failures, std::uint64_t& checks)
      : failures_(failures), checks_(checks) {}

  void check(bool ok, const char* identity, const CrystalElt& b, int k) {
    ++checks_;
    if (!ok) failures_.push_back({identity, b, k});
  }

 private:
  std::vector<CrystalFailure>& failures_;
  std::uint64_t& checks_;
};

void check_element(const CrystalElt& b, const CartanData& a, bool strings, bool total,
                   Checker& chk) {
  const int n = b.n;
  for (int k = 0; k <= n; ++k) {
    try {
      const auto e = eps(k, b);
      const auto p = phi(k, b);
      chk.check(wt(k, b) == p - e, "wt=phi-eps", b, k);
      const auto fb = f_op(k, b);
      const auto eb = e_op(k, b);
      if (total) {
        chk.check(fb.has_value(), "f-total", b, k);
        chk.check(eb.has_value(), "e-total", b, k);
      }
      if (fb) {
        chk.check(e_op(k, *fb) == b, "e(f(b))=b", b, k);
        chk.check(eps(k, *fb) == e + 1, "eps(f(b))=eps(b)+1", b, k);
        chk.check(phi(k, *fb) == p - 1, "phi(f(b))=phi(b)-1", b, k);
        for (int j = 0; j <= n; ++j)
          chk.check(wt(j, *fb) == wt(j, b) - a(j, k), "wt(f(b))=wt(b)-a", b, k);
      }
      if (eb) {
        chk.check(f_op(k, *eb) == b, "f(e(b))=b", b, k);
        chk.check(eps(k, *eb) == e - 1, "eps(e(b))=eps(b)-1", b, k);
        chk.check(phi(k, *eb) == p + 1, "phi(e(b))=phi(b)+1", b, k);
      }
      if (strings) {
        std::int64_t up = 0, down = 0;
        for (auto x = e_op(k, b); x; x = e_op(k, *x)) ++up;
        for (auto x = f_op(k, b); x; x = f_op(k, *x)) ++down;
        chk.check(up == e, "e-string=eps", b, k);
        chk.check(down == p, "f-string=phi", b, k);
      }
    } catch (const InvariantViolation&) {
      chk.check(false, "unique-m", b, k);
    }
  }
}

CrystalReport collect(int n, std::optional<int> level, const std::vector<CrystalElt>& elts,
                      bool strings, Execution exec) {
  const auto a = cartan_matrix(n);
  std::vector<std::vector<CrystalFailure>> failures(elts.size());
  std::vector<std::uint64_t> checks(elts.size(), 0);
  for_each_index(elts.size(), exec, [&](std::size_t idx) {
    Checker chk(failures[idx], checks[idx]);
    check_element(elts[idx], a, strings, !level.has_value(), chk);
  });
  CrystalReport report{n, level, elts.size(), 0, {}};
  for (std::size_t i = 0; i < elts.size(); ++i) {
    report.checks += checks[i];
    for (auto& f : failures[i]) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace

CrystalReport verify_crystal_axioms(int n, int l, Execution exec) {
  return collect(n, l, enumerate(n, l, kDefaultEnumCap, exec), true, exec);
}

CrystalReport verify_limit_axioms(int n, int samples, std::uint64_t seed, int radius,
                                  Execution exec) {
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  if (samples < 1) throw DomainError("samples must be >= 1");
  std::vector<CrystalElt> elts(static_cast<std::size_t>(samples));
  for (std::size_t t = 0; t < elts.size(); ++t) {
    TrialRng rng(seed, t);
    auto row = [&] {
      std::vector<std::int64_t> r(static_cast<std::size_t>(n));
      std::int64_t s = 0;
      for (int i = 0; i + 1 < n; ++i) s += r[static_cast<std::size_t>(i)] = rng.uniform(-radius, radius);
      r.back() = -s;
      return r;
    };
    auto b1 = row();
    auto b2 = row();
    elts[t] = CrystalElt{n, std::nullopt, std::move(b1), std::move(b2)};
  }
  return collect(n, std::nullopt, elts, false, exec);
}

std::vector<std::vector<std::int64_t>> dominant_weights(int n, int l) {
  require_level(n, l);
  return compositions(n + 1, l);
}

PerfectnessReport perfectness_check(int n, int l, Execution exec) {
  const auto elts = enumerate(n, l, kDefaultEnumCap, exec);
  PerfectnessReport r;
  r.n = n;
  r.l = l;
  r.elements = elts.size();
  std::vector<std::int64_t> levels(elts.size());
  std::vector<char> strings(elts.size(), 1);
  for_each_index(elts.size(), exec, [&](std::size_t i) {
    const auto& b = elts[i];
    std::int64_t s = 0;
    for (int k = 0; k <= n; ++k) {
      s += eps(k, b);
      if (auto fb = f_op(k, b); fb && e_op(k, *fb) != b) strings[i] = 0;
      if (auto eb = e_op(k, b); eb && f_op(k, *eb) != b) strings[i] = 0;
    }
    levels[i] = s;
  });
  r.min_level = elts.empty() ? 0 : *std::min_element(levels.begin(), levels.end());
  r.strings_ok = std::all_of(strings.begin(), strings.end(), [](char c) { return c != 0; });

  const auto dominant = dominant_weights(n, l);
  const std::set<std::vector<std::int64_t>> targets(dominant.begin(), dominant.end());
  r.dominant_weights = targets.size();
  std::set<std::vector<std::int64_t>> eps_images, phi_images;
  for (std::size_t i = 0; i < elts.size(); ++i) {
    if (levels[i] != l) continue;
    r.minimal.push_back(elts[i]);
    std::vector<std::int64_t> ev, pv;
    for (int k = 0; k <= n; ++k) {
      ev.push_back(eps(k, elts[i]));
      pv.push_back(phi(k, elts[i]));
    }
    eps_images.insert(ev);
    phi_images.insert(pv);
  }
  r.minimal_elements = r.minimal.size();
  r.eps_bijective = eps_images.size() == r.minimal.size() && eps_images == targets;
  r.phi_bijective = phi_images.size() == r.minimal.size() && phi_images == targets;
  return r;
}

CrystalGraph build_graph(int n, int l, Execution exec) {
  CrystalGraph g{n, l, enumerate(n, l, kDefaultEnumCap, exec), {}};
  g.edges = gather_indexed<CrystalEdge>(g.nodes.size(), exec, [&](std::size_t u) {
    std::vector<CrystalEdge> out;
    for (int k = 0; k <= n; ++k) {
      const auto v = f_op(k, g.nodes[u]);
      if (!v) continue;
      const auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), *v);
      if (it == g.nodes.end() || *it != *v)
        throw InvariantViolation("f_" + std::to_string(k) + " left the enumerated set");
      out.push_back({u, static_cast<std::size_t>(it - g.nodes.begin()), k});
    }
    return out;
  });
  return g;
}

std::string graph_to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph B_2_" << g.l << " {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    std::string label = to_json(g.nodes[i]).dump();
    std::string escaped;
    for (char ch : label) {
      if (ch == '"' || ch == '\\') escaped += '\\';
      escaped += ch;
    }
    out << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& e : g.edges)
    out << "  n" << e.source << " -> n" << e.target << " [label=" << e.color << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace geocrystal
