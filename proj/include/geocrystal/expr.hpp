#pragma once

// Subtraction-free rational expressions and their max-plus images.
//
// PosExpr trees use positive rational constants, variables and the nodes
// sum / product / quotient. Tropicalization maps them node for node onto
// TropExpr trees: sum -> max, product -> plus, quotient -> minus,
// constant -> 0. Both kinds print as fully parenthesized infix text and parse
// back from it.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geocrystal/error.hpp"
#include "geocrystal/parallel.hpp"
#include "geocrystal/rational.hpp"

namespace geocrystal {

// Variables are "c" (id 0) and "x<k>" (id k, k >= 1).
int variable_id(std::string_view name);
std::string variable_name(int id);

class PosExpr {
 public:
  enum class Kind { constant, variable, sum, product, quotient };

  static PosExpr constant(const Rational& value);
  static PosExpr variable(std::string_view name);
  static PosExpr var(int id);
  static PosExpr sum(std::vector<PosExpr> terms);
  static PosExpr product(std::vector<PosExpr> factors);
  static PosExpr quotient(PosExpr numerator, PosExpr denominator);

  Kind kind() const;
  const Rational& value() const;
  int var_id() const;
  const std::vector<PosExpr>& children() const;

  bool operator==(const PosExpr& other) const;

  friend PosExpr operator+(const PosExpr& a, const PosExpr& b) { return sum({a, b}); }
  friend PosExpr operator*(const PosExpr& a, const PosExpr& b) { return product({a, b}); }
  friend PosExpr operator/(const PosExpr& a, const PosExpr& b) { return quotient(a, b); }

 private:
  struct Node;
  explicit PosExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// PosExpr values never vanish.
inline bool is_zero(const PosExpr&) { return false; }

class TropExpr {
 public:
  enum class Kind { constant, variable, max, plus, minus };

  static TropExpr constant(std::int64_t value);
  static TropExpr variable(std::string_view name);
  static TropExpr var(int id);
  static TropExpr max(std::vector<TropExpr> args);
  static TropExpr plus(std::vector<TropExpr> args);
  static TropExpr minus(TropExpr lhs, TropExpr rhs);

  Kind kind() const;
  std::int64_t value() const;
  int var_id() const;
  const std::vector<TropExpr>& children() const;

  bool operator==(const TropExpr& other) const;

 private:
  struct Node;
  explicit TropExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Variable bindings indexed by variable id.
template <class T>
class Assignment {
 public:
  Assignment() = default;

  void set(int id, T value) {
    if (id < 0) throw IndexOutOfRange("negative variable id");
    if (static_cast<std::size_t>(id) >= values_.size()) values_.resize(static_cast<std::size_t>(id) + 1);
    values_[static_cast<std::size_t>(id)] = std::move(value);
  }
  void set(std::string_view name, T value) { set(variable_id(name), std::move(value)); }

  bool has(int id) const {
    return id >= 0 && static_cast<std::size_t>(id) < values_.size() &&
           values_[static_cast<std::size_t>(id)].has_value();
  }

  const T& get(int id) const {
    if (!has(id)) throw MissingBinding("no value bound to variable " + variable_name(id));
    return *values_[static_cast<std::size_t>(id)];
  }

 private:
  std::vector<std::optional<T>> values_;
};

Rational eval_pos(const PosExpr& e, const Assignment<Rational>& a);
std::int64_t eval_trop(const TropExpr& e, const Assignment<std::int64_t>& a);

TropExpr tropicalize(const PosExpr& e);

/// Sorted, de-duplicated variable ids.
std::vector<int> free_variables(const PosExpr& e);
std::vector<int> free_variables(const TropExpr& e);

std::string to_string(const PosExpr& e);
std::string to_string(const TropExpr& e);
PosExpr parse_pos_expr(std::string_view text);
TropExpr parse_trop_expr(std::string_view text);

struct BoxAxis {
  std::string var;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct BoxComparison {
  bool equal = true;
  std::uint64_t points_checked = 0;
  /// First disagreeing point in odometer order (last axis fastest).
  std::optional<std::vector<std::pair<std::string, std::int64_t>>> counterexample;
};

inline constexpr std::uint64_t kDefaultBoxCap = 10'000'000;

/// Evaluates both expressions on every integer point of the box.
/// Throws ResourceLimit if the box has more than `cap` points and
/// MissingBinding if a free variable has no axis.
BoxComparison trop_equal_on_box(const TropExpr& lhs, const TropExpr& rhs,
                                const std::vector<BoxAxis>& box,
                                std::uint64_t cap = kDefaultBoxCap,
                                Execution exec = Execution::parallel);

// ---------------------------------------------------------------------------
// Catalog of the structure maps of the affine geometric crystal on V_1, as
// subtraction-free trees in the variables c, x_2..x_{2n-1}. References to x_1
// or x_{2n} become the constant 1.

struct CatalogEntry {
  enum class Role { gamma, eps, action };
  std::string name;  // "gamma<i>", "eps<i>", "e<i>:<k>"
  Role role;
  int node;
  int coord;  // x-coordinate index for actions, 0 otherwise
  PosExpr expr;
};

class Catalog {
 public:
  Catalog(int n, std::vector<CatalogEntry> entries) : n_(n), entries_(std::move(entries)) {}

  int n() const { return n_; }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& at(std::string_view name) const;
  const PosExpr& gamma(int i) const;
  const PosExpr& eps(int i) const;
  /// Coordinate x_k' of e_i^c(V_1(x)).
  const PosExpr& action(int i, int k) const;

 private:
  int n_;
  std::vector<CatalogEntry> entries_;
};

Catalog catalog(int n);

}  // namespace geocrystal
