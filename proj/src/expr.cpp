#include "geocrystal/expr.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <set>

namespace geocrystal {

int variable_id(std::string_view name) {
  if (name == "c") return 0;
  if (name.size() >= 2 && name.front() == 'x') {
    int id = 0;
    for (char ch : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) break;
      id = id * 10 + (ch - '0');
      if (id > 1'000'000) break;
    }
    if (id >= 1 && name.substr(1) == std::to_string(id)) return id;
  }
  throw ParseError("unknown variable '" + std::string(name) + "'");
}

std::string variable_name(int id) {
  if (id == 0) return "c";
  if (id < 0) throw IndexOutOfRange("negative variable id");
  return "x" + std::to_string(id);
}

// --- PosExpr ----------------------------------------------------------------

struct PosExpr::Node {
  Kind kind;
  Rational value;
  int var = -1;
  std::vector<PosExpr> children;
};

PosExpr PosExpr::constant(const Rational& value) {
  if (sgn(value) <= 0)
    throw DomainError("subtraction-free constants must be positive, got " + format_rational(value));
  return PosExpr(std::make_shared<const Node>(Node{Kind::constant, value, -1, {}}));
}

PosExpr PosExpr::variable(std::string_view name) { return var(variable_id(name)); }

PosExpr PosExpr::var(int id) {
  if (id < 0) throw IndexOutOfRange("negative variable id");
  return PosExpr(std::make_shared<const Node>(Node{Kind::variable, Rational(0), id, {}}));
}

PosExpr PosExpr::sum(std::vector<PosExpr> terms) {
  if (terms.empty()) throw DomainError("empty sum");
  return PosExpr(std::make_shared<const Node>(Node{Kind::sum, Rational(0), -1, std::move(terms)}));
}

PosExpr PosExpr::product(std::vector<PosExpr> factors) {
  if (factors.empty()) throw DomainError("empty product");
  return PosExpr(
      std::make_shared<const Node>(Node{Kind::product, Rational(0), -1, std::move(factors)}));
}

PosExpr PosExpr::quotient(PosExpr numerator, PosExpr denominator) {
  return PosExpr(std::make_shared<const Node>(
      Node{Kind::quotient, Rational(0), -1, {std::move(numerator), std::move(denominator)}}));
}

PosExpr::Kind PosExpr::kind() const { return node_->kind; }
const Rational& PosExpr::value() const { return node_->value; }
int PosExpr::var_id() const { return node_->var; }
const std::vector<PosExpr>& PosExpr::children() const { return node_->children; }

bool PosExpr::operator==(const PosExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::constant: return value() == other.value();
    case Kind::variable: return var_id() == other.var_id();
    default: return children() == other.children();
  }
}

// --- TropExpr ---------------------------------------------------------------

struct TropExpr::Node {
  Kind kind;
  std::int64_t value = 0;
  int var = -1;
  std::vector<TropExpr> children;
};

TropExpr TropExpr::constant(std::int64_t value) {
  return TropExpr(std::make_shared<const Node>(Node{Kind::constant, value, -1, {}}));
}

TropExpr TropExpr::variable(std::string_view name) { return var(variable_id(name)); }

TropExpr TropExpr::var(int id) {
  if (id < 0) throw IndexOutOfRange("negative variable id");
  return TropExpr(std::make_shared<const Node>(Node{Kind::variable, 0, id, {}}));
}

TropExpr TropExpr::max(std::vector<TropExpr> args) {
  if (args.empty()) throw DomainError("empty max");
  return TropExpr(std::make_shared<const Node>(Node{Kind::max, 0, -1, std::move(args)}));
}

TropExpr TropExpr::plus(std::vector<TropExpr> args) {
  if (args.empty()) throw DomainError("empty plus");
  return TropExpr(std::make_shared<const Node>(Node{Kind::plus, 0, -1, std::move(args)}));
}

TropExpr TropExpr::minus(TropExpr lhs, TropExpr rhs) {
  return TropExpr(
      std::make_shared<const Node>(Node{Kind::minus, 0, -1, {std::move(lhs), std::move(rhs)}}));
}

TropExpr::Kind TropExpr::kind() const { return node_->kind; }
std::int64_t TropExpr::value() const { return node_->value; }
int TropExpr::var_id() const { return node_->var; }
const std::vector<TropExpr>& TropExpr::children() const { return node_->children; }

bool TropExpr::operator==(const TropExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::constant: return value() == other.value();
    case Kind::variable: return var_id() == other.var_id();
    default: return children() == other.children();
  }
}

// --- evaluation -------------------------------------------------------------

Rational eval_pos(const PosExpr& e, const Assignment<Rational>& a) {
  using K = PosExpr::Kind;
  switch (e.kind()) {
    case K::constant: return e.value();
    case K::variable: return a.get(e.var_id());
    case K::sum: {
      Rational s = 0;
      for (const auto& t : e.children()) s += eval_pos(t, a);
      return s;
    }
    case K::product: {
      Rational p = 1;
      for (const auto& t : e.children()) p *= eval_pos(t, a);
      return p;
    }
    case K::quotient:
      return checked_div(eval_pos(e.children()[0], a), eval_pos(e.children()[1], a));
  }
  throw DomainError("corrupt expression node");
}

std::int64_t eval_trop(const TropExpr& e, const Assignment<std::int64_t>& a) {
  using K = TropExpr::Kind;
  switch (e.kind()) {
    case K::constant: return e.value();
    case K::variable: return a.get(e.var_id());
    case K::max: {
      std::int64_t m = std::numeric_limits<std::int64_t>::min();
      for (const auto& t : e.children()) m = std::max(m, eval_trop(t, a));
      return m;
    }
    case K::plus: {
      std::int64_t s = 0;
      for (const auto& t : e.children()) s += eval_trop(t, a);
      return s;
    }
    case K::minus: return eval_trop(e.children()[0], a) - eval_trop(e.children()[1], a);
  }
  throw DomainError("corrupt expression node");
}

TropExpr tropicalize(const PosExpr& e) {
  using K = PosExpr::Kind;
  auto map_children = [](const PosExpr& node) {
    std::vector<TropExpr> out;
    out.reserve(node.children().size());
    for (const auto& c : node.children()) out.push_back(tropicalize(c));
    return out;
  };
  switch (e.kind()) {
    case K::constant: return TropExpr::constant(0);
    case K::variable: return TropExpr::var(e.var_id());
    case K::sum: return TropExpr::max(map_children(e));
    case K::product: return TropExpr::plus(map_children(e));
    case K::quotient:
      return TropExpr::minus(tropicalize(e.children()[0]), tropicalize(e.children()[1]));
  }
  throw DomainError("corrupt expression node");
}

namespace {

template <class E>
void collect_variables(const E& e, std::set<int>& out) {
  if (e.kind() == E::Kind::variable) out.insert(e.var_id());
  for (const auto& c : e.children()) collect_variables(c, out);
}

}  // namespace

std::vector<int> free_variables(const PosExpr& e) {
  std::set<int> ids;
  collect_variables(e, ids);
  return {ids.begin(), ids.end()};
}

std::vector<int> free_variables(const TropExpr& e) {
  std::set<int> ids;
  collect_variables(e, ids);
  return {ids.begin(), ids.end()};
}

// --- text form --------------------------------------------------------------

namespace {

template <class E>
std::string join_children(const E& e, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < e.children().size(); ++i) {
    if (i) out += sep;
    out += to_string(e.children()[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const PosExpr& e) {
  using K = PosExpr::Kind;
  switch (e.kind()) {
    case K::constant: return format_rational(e.value());
    case K::variable: return variable_name(e.var_id());
    case K::sum: return "(" + join_children(e, " + ") + ")";
    case K::product: return "(" + join_children(e, " * ") + ")";
    case K::quotient: return "(" + join_children(e, " / ") + ")";
  }
  return {};
}

std::string to_string(const TropExpr& e) {
  using K = TropExpr::Kind;
  switch (e.kind()) {
    case K::constant: return std::to_string(e.value());
    case K::variable: return variable_name(e.var_id());
    case K::max: return "max(" + join_children(e, ", ") + ")";
    case K::plus: return "(" + join_children(e, " + ") + ")";
    case K::minus: return "(" + join_children(e, " - ") + ")";
  }
  return {};
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char peek_raw(std::size_t offset = 0) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  std::string_view take_while(auto pred) {
    const auto start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  bool starts_with(std::string_view word) {
    skip_space();
    return text_.substr(pos_).starts_with(word);
  }
  void advance(std::size_t count) { pos_ += count; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }
bool is_ident(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_'; }

PosExpr parse_pos(Cursor& in) {
  const char ch = in.peek();
  if (is_digit(ch)) {
    std::string literal(in.take_while(is_digit));
    if (in.peek_raw() == '/' && is_digit(in.peek_raw(1))) {
      in.advance(1);
      literal += "/" + std::string(in.take_while(is_digit));
    }
    return PosExpr::constant(parse_rational(literal));
  }
  if (std::isalpha(static_cast<unsigned char>(ch))) {
    const auto name = in.take_while(is_ident);
    try {
      return PosExpr::variable(name);
    } catch (const ParseError& e) {
      in.fail(e.what());
    }
  }
  if (ch != '(') in.fail("expected constant, variable or '('");
  in.expect('(');
  std::vector<PosExpr> operands{parse_pos(in)};
  const char op = in.peek();
  if (op != '+' && op != '*' && op != '/') in.fail("expected '+', '*' or '/'");
  while (in.accept(op)) operands.push_back(parse_pos(in));
  in.expect(')');
  if (op == '/') {
    if (operands.size() != 2) in.fail("quotient takes exactly two operands");
    return PosExpr::quotient(operands[0], operands[1]);
  }
  return op == '+' ? PosExpr::sum(std::move(operands)) : PosExpr::product(std::move(operands));
}

TropExpr parse_trop(Cursor& in) {
  const char ch = in.peek();
  if (is_digit(ch) || (ch == '-' && is_digit(in.peek_raw(1)))) {
    const bool negative = ch == '-';
    if (negative) in.advance(1);
    const auto digits = in.take_while(is_digit);
    if (digits.size() > 18) in.fail("integer constant out of range");
    const auto magnitude = static_cast<std::int64_t>(std::stoll(std::string(digits)));
    return TropExpr::constant(negative ? -magnitude : magnitude);
  }
  if (in.starts_with("max(")) {
    in.advance(3);
    in.expect('(');
    std::vector<TropExpr> args{parse_trop(in)};
    while (in.accept(',')) args.push_back(parse_trop(in));
    in.expect(')');
    return TropExpr::max(std::move(args));
  }
  if (std::isalpha(static_cast<unsigned char>(ch))) {
    const auto name = in.take_while(is_ident);
    try {
      return TropExpr::variable(name);
    } catch (const ParseError& e) {
      in.fail(e.what());
    }
  }
  if (ch != '(') in.fail("expected constant, variable, 'max(' or '('");
  in.expect('(');
  std::vector<TropExpr> operands{parse_trop(in)};
  const char op = in.peek();
  if (op != '+' && op != '-') in.fail("expected '+' or '-'");
  while (in.accept(op)) operands.push_back(parse_trop(in));
  in.expect(')');
  if (op == '-') {
    if (operands.size() != 2) in.fail("difference takes exactly two operands");
    return TropExpr::minus(operands[0], operands[1]);
  }
  return TropExpr::plus(std::move(operands));
}

}  // namespace

PosExpr parse_pos_expr(std::string_view text) {
  Cursor in(text);
  auto e = parse_pos(in);
  if (!in.at_end()) in.fail("trailing input");
  return e;
}

TropExpr parse_trop_expr(std::string_view text) {
  Cursor in(text);
  auto e = parse_trop(in);
  if (!in.at_end()) in.fail("trailing input");
  return e;
}

// --- box comparison ---------------------------------------------------------

BoxComparison trop_equal_on_box(const TropExpr& lhs, const TropExpr& rhs,
                                const std::vector<BoxAxis>& box, std::uint64_t cap,
                                Execution exec) {
  std::vector<int> ids;
  std::vector<std::uint64_t> extent;
  std::uint64_t total = 1;
  for (const auto& axis : box) {
    const int id = variable_id(axis.var);
    if (std::find(ids.begin(), ids.end(), id) != ids.end())
      throw DomainError("variable " + axis.var + " appears twice in the box");
    if (axis.hi < axis.lo) throw DomainError("empty interval for " + axis.var);
    ids.push_back(id);
    const auto width = static_cast<std::uint64_t>(axis.hi - axis.lo) + 1;
    extent.push_back(width);
    if (total > cap / width + 1) total = cap + 1;  // saturate instead of overflowing
    else total *= width;
  }
  if (total > cap)
    throw ResourceLimit("box has more than " + std::to_string(cap) + " points");
  for (const auto& expr : {lhs, rhs})
    for (int id : free_variables(expr))
      if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw MissingBinding("box does not cover variable " + variable_name(id));

  auto point_at = [&](std::uint64_t index) {
    Assignment<std::int64_t> a;
    for (std::size_t d = box.size(); d-- > 0;) {
      a.set(ids[d], box[d].lo + static_cast<std::int64_t>(index % extent[d]));
      index /= extent[d];
    }
    return a;
  };

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t chunk = 4096;
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> first_bad{kNone};
  for_each_index(static_cast<std::size_t>(chunks), exec, [&](std::size_t c) {
    const std::uint64_t begin = c * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i >= first_bad.load(std::memory_order_relaxed)) return;
      const auto a = point_at(i);
      if (eval_trop(lhs, a) != eval_trop(rhs, a)) {
        auto seen = first_bad.load();
        while (i < seen && !first_bad.compare_exchange_weak(seen, i)) {
        }
        return;
      }
    }
  });

  BoxComparison result;
  const auto bad = first_bad.load();
  if (bad == kNone) {
    result.points_checked = total;
    return result;
  }
  result.equal = false;
  result.points_checked = bad + 1;
  const auto a = point_at(bad);
  std::vector<std::pair<std::string, std::int64_t>> witness;
  for (std::size_t d = 0; d < box.size(); ++d) witness.emplace_back(box[d].var, a.get(ids[d]));
  result.counterexample = std::move(witness);
  return result;
}

}  // namespace geocrystal
