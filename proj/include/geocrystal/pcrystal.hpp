#pragma once

// The perfect crystals B^{2,l} and their limit B^{2,infinity} for A_n^(1).
//
// An element is a two-row array b = (b_{ji}) with row 1 indexed 1..n and
// row 2 indexed 2..n+1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geocrystal/fundrep.hpp"
#include "geocrystal/parallel.hpp"

namespace geocrystal {

struct CrystalElt {
  int n = 0;
  std::optional<int> level;  // nullopt is the limit B^{2,infinity}
  std::vector<std::int64_t> b1;
  std::vector<std::int64_t> b2;

  std::int64_t row1(int i) const;  // b_{1i}, 1 <= i <= n
  std::int64_t row2(int i) const;  // b_{2i}, 2 <= i <= n+1
  std::int64_t& row1(int i);
  std::int64_t& row2(int i);

  bool is_limit() const { return !level.has_value(); }

  auto operator<=>(const CrystalElt&) const = default;
};

/// Row sums and, for finite level, nonnegativity and the prefix inequalities.
bool is_member(const CrystalElt& b);
/// Builds and validates; throws DomainError on a non-member.
CrystalElt make_elt(int n, std::optional<int> level, std::vector<std::int64_t> b1,
                    std::vector<std::int64_t> b2);
/// The element with all entries zero in B^{2,infinity}.
CrystalElt limit_highest(int n);

/// z_i = b_{1i} - b_{2,i+1}.
std::int64_t z_value(const CrystalElt& b, int i);
bool condition_F(const CrystalElt& b, int m);
bool condition_E(const CrystalElt& b, int m);
/// The unique m in 2..n with (F_m) (resp. (E_m)); throws InvariantViolation otherwise.
int f0_index(const CrystalElt& b);
int e0_index(const CrystalElt& b);

std::int64_t delta_m(const CrystalElt& b, int m);
std::int64_t delta(const CrystalElt& b);

std::optional<CrystalElt> f_op(int k, const CrystalElt& b);
std::optional<CrystalElt> e_op(int k, const CrystalElt& b);
std::int64_t eps(int k, const CrystalElt& b);
std::int64_t phi(int k, const CrystalElt& b);
std::int64_t wt(int k, const CrystalElt& b);

inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

/// All elements of B^{2,l} in lexicographic order of (b1, b2).
std::vector<CrystalElt> enumerate(int n, int l, std::uint64_t cap = kDefaultEnumCap,
                                  Execution exec = Execution::parallel);

struct CrystalFailure {
  std::string identity;
  CrystalElt elt;
  int k = 0;

  bool operator==(const CrystalFailure&) const = default;
};

struct CrystalReport {
  int n = 0;
  std::optional<int> level;
  std::uint64_t elements = 0;
  std::uint64_t checks = 0;
  std::vector<CrystalFailure> failures;

  bool passed() const { return failures.empty(); }
  bool operator==(const CrystalReport&) const = default;
};

/// Partial inverse, epsilon/phi bookkeeping, weight conservation and string
/// lengths on every element of B^{2,l}.
CrystalReport verify_crystal_axioms(int n, int l, Execution exec = Execution::parallel);

/// The same laws (minus string lengths, which are infinite) on seeded random
/// elements of B^{2,infinity} with entries drawn from [-radius, radius].
CrystalReport verify_limit_axioms(int n, int samples, std::uint64_t seed, int radius = 50,
                                  Execution exec = Execution::parallel);

struct PerfectnessReport {
  int n = 0;
  int l = 0;
  std::uint64_t elements = 0;
  std::int64_t min_level = 0;  // min over b of sum_k eps_k(b)
  std::uint64_t minimal_elements = 0;
  std::uint64_t dominant_weights = 0;
  bool eps_bijective = false;
  bool phi_bijective = false;
  bool strings_ok = false;
  std::vector<CrystalElt> minimal;

  bool passed() const {
    return min_level == l && eps_bijective && phi_bijective && strings_ok;
  }
};

/// Tuples (m_0, ..., m_n) of nonnegative integers summing to l.
std::vector<std::vector<std::int64_t>> dominant_weights(int n, int l);

PerfectnessReport perfectness_check(int n, int l, Execution exec = Execution::parallel);

struct CrystalEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  int color = 0;

  bool operator==(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  int n = 0;
  int l = 0;
  std::vector<CrystalElt> nodes;
  std::vector<CrystalEdge> edges;  // sorted by (source, color)
};

CrystalGraph build_graph(int n, int l, Execution exec = Execution::parallel);
std::string graph_to_dot(const CrystalGraph& g);

}  // namespace geocrystal
