#include "geocrystal/rational.hpp"

#include <cctype>

#include "geocrystal/error.hpp"
#include "geocrystal/point.hpp"

namespace geocrystal {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? mpz_class(-p) : p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational checked_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw DivisionByZero("division by zero");
  return a / b;
}

Rational ipow(const Rational& r, int k) {
  if (k < 0) {
    if (is_zero(r)) throw DivisionByZero("zero raised to a negative power");
    Rational inv = 1 / r;
    return ipow(inv, -k);
  }
  Rational out = 1;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(k));
  out.canonicalize();
  return out;
}

void require_nonzero(const TorusPoint& p) {
  for (int k = p.first; k <= p.last(); ++k)
    if (is_zero(p[k]))
      throw DivisionByZero("coordinate " + std::to_string(k) + " is zero");
}

}  // namespace geocrystal
