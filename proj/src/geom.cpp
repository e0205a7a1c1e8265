#include "geocrystal/geom.hpp"

#include <algorithm>

namespace geocrystal {

namespace {

Rational sdiv(const Rational& a, const Rational& b, const char* where) {
  if (is_zero(b)) throw SingularPoint(std::string("vanishing denominator in ") + where);
  return a / b;
}

void require_x_chart(const TorusPoint& x) {
  if (x.first != 2) throw DomainError("expected an x-chart point (x_2..x_{2n-1})");
  require_nonzero(x);
}

void require_y_chart(const TorusPoint& y) {
  if (y.first != 1) throw DomainError("expected a y-chart point (y_1..y_{2n-2})");
  require_nonzero(y);
}

// x_k with x_1 = x_{2n} = 1
Rational xb(const TorusPoint& x, int k) { return x.contains(k) ? x[k] : Rational(1); }

// 1 / (c_1^{a_{i_1,i}} ... c_{m-1}^{a_{i_{m-1},i}} c_m) for each m with i_m = i
std::vector<std::pair<std::size_t, Rational>> schubert_terms(const Word& w,
                                                             const std::vector<Rational>& cvec,
                                                             int i) {
  if (cvec.size() != w.letters.size())
    throw DomainError("word has " + std::to_string(w.letters.size()) + " letters but " +
                      std::to_string(cvec.size()) + " parameters");
  require_node(i, w.cartan.n);
  std::vector<std::pair<std::size_t, Rational>> terms;
  Rational prefix = 1;
  for (std::size_t m = 0; m < cvec.size(); ++m) {
    if (is_zero(cvec[m])) throw SingularPoint("zero Schubert parameter");
    if (w.letters[m] == i) terms.emplace_back(m, sdiv(1, prefix * cvec[m], "eps"));
    prefix *= ipow(cvec[m], w.cartan(w.letters[m], i));
  }
  return terms;
}

}  // namespace

Word make_word(std::vector<int> letters, const CartanData& cartan) {
  for (int l : letters) require_node(l, cartan.n);
  return {std::move(letters), cartan};
}

std::vector<Rational> schubert_e(const Word& w, const std::vector<Rational>& cvec, int i,
                                 const Rational& c) {
  const auto terms = schubert_terms(w, cvec, i);
  std::vector<Rational> out(cvec.size());
  for (std::size_t j = 0; j < cvec.size(); ++j) {
    Rational num = 0, den = 0;
    for (const auto& [m, t] : terms) {
      num += m <= j ? c * t : t;
      den += m < j ? c * t : t;
    }
    out[j] = cvec[j] * sdiv(num, den, "e action");
  }
  return out;
}

Rational schubert_eps(const Word& w, const std::vector<Rational>& cvec, int i) {
  Rational s = 0;
  for (const auto& [m, t] : schubert_terms(w, cvec, i)) s += t;
  return s;
}

Rational schubert_gamma(const Word& w, const std::vector<Rational>& cvec, int i) {
  if (cvec.size() != w.letters.size()) throw DomainError("word/parameter length mismatch");
  require_node(i, w.cartan.n);
  Rational p = 1;
  for (std::size_t m = 0; m < cvec.size(); ++m) {
    if (is_zero(cvec[m])) throw SingularPoint("zero Schubert parameter");
    p *= ipow(cvec[m], w.cartan(w.letters[m], i));
  }
  return p;
}

Word v1_word(int n) {
  const auto cartan = cartan_matrix(n);
  std::vector<int> letters;
  for (int k = n - 1; k >= 1; --k) letters.push_back(k);
  for (int k = n; k >= 2; --k) letters.push_back(k);
  return make_word(std::move(letters), cartan);
}

Word v2_word(int n) {
  const auto cartan = cartan_matrix(n);
  std::vector<int> letters;
  for (int k = n - 2; k >= 0; --k) letters.push_back(k);
  for (int k = n - 1; k >= 1; --k) letters.push_back(k);
  return make_word(std::move(letters), cartan);
}

std::vector<Rational> word_params(const TorusPoint& p) {
  return {p.coords.rbegin(), p.coords.rend()};
}

TorusPoint x_from_params(int n, const std::vector<Rational>& params) {
  return x_point(n, {params.rbegin(), params.rend()});
}

TorusPoint y_from_params(int n, const std::vector<Rational>& params) {
  return y_point(n, {params.rbegin(), params.rend()});
}

Rational partial_X(const TorusPoint& x, int k) {
  const int n = x.n;
  Rational s = 0;
  for (int m = 2; m <= k; ++m) s += sdiv(x[m], x[n + m - 1], "X_k");
  return s;
}

Rational partial_X_tilde(const TorusPoint& x, int k) {
  const int n = x.n;
  Rational s = 0;
  for (int m = k + 1; m <= n; ++m) s += sdiv(x[m], x[n + m - 1], "X_k");
  return s;
}

TorusPoint geom_e(int i, const Rational& c, const TorusPoint& x) {
  require_x_chart(x);
  const int n = x.n;
  require_node(i, n);
  if (is_zero(c)) throw DivisionByZero("e_i^c with c = 0");
  TorusPoint out = x;
  if (i == 1) {
    out[n + 1] = c * x[n + 1];
  } else if (i == n) {
    out[n] = c * x[n];
  } else if (i != 0) {
    const Rational a = x[i] * x[n + i];
    const Rational b = x[i + 1] * x[n + i - 1];
    const Rational ci = sdiv(c * (a + b), c * a + b, "c_i");
    out[i] = ci * x[i];
    out[n + i] = sdiv(c, ci, "c_i") * x[n + i];
  } else {
    const Rational big_x = partial_X(x, n);
    for (int k = 2; k < n; ++k)
      out[k] = x[k] * sdiv(big_x, c * partial_X(x, k) + partial_X_tilde(x, k), "e_0");
    out[n] = x[n] / c;
    out[n + 1] = x[n + 1] / c;
    for (int l = 2; l < n; ++l)
      out[n + l] =
          x[n + l] * sdiv(c * partial_X(x, l) + partial_X_tilde(x, l), c * big_x, "e_0");
  }
  return out;
}

Rational geom_gamma(int i, const TorusPoint& x) {
  require_x_chart(x);
  const int n = x.n;
  require_node(i, n);
  auto g = [&](int k) { return xb(x, k); };
  if (i == 0) return 1 / (g(n) * g(n + 1));
  if (i == 1) return g(n + 1) * g(n + 1) / (g(2) * g(n + 2));
  if (i == n) return g(n) * g(n) / (g(n - 1) * g(2 * n - 1));
  return g(i) * g(i) * g(n + i) * g(n + i) / (g(i - 1) * g(i + 1) * g(n + i - 1) * g(n + i + 1));
}

Rational geom_eps(int i, const TorusPoint& x) {
  require_x_chart(x);
  const int n = x.n;
  require_node(i, n);
  auto g = [&](int k) { return xb(x, k); };
  if (i == 0) return g(n + 1) * partial_X(x, n);
  if (i == 1) return g(n + 2) / g(n + 1);
  if (i == n) return g(2 * n - 1) / g(n);
  if (i == n - 1)
    return 1 / g(2 * n - 1) + g(n) * g(2 * n - 2) / (g(n - 1) * g(2 * n - 1) * g(2 * n - 1));
  return g(n + i + 1) / g(n + i) +
         g(i + 1) * g(n + i - 1) * g(n + i + 1) / (g(i) * g(n + i) * g(n + i));
}

TorusPoint sigma_bar(const TorusPoint& x) {
  require_x_chart(x);
  const int n = x.n;
  std::vector<Rational> y(static_cast<std::size_t>(2 * n - 2));
  auto at = [&](int k) -> Rational& { return y[static_cast<std::size_t>(k - 1)]; };
  at(1) = sdiv(1, partial_X(x, n), "sigma_bar");
  for (int k = 2; k <= n - 1; ++k) at(k) = sdiv(x[k], partial_X_tilde(x, k), "sigma_bar");
  at(n) = 1 / x[n];
  for (int l = 1; l <= n - 2; ++l) at(n + l) = x[n + l] * partial_X_tilde(x, l) / x[n];
  return y_point(n, std::move(y));
}

TorusPoint sigma_bar_inv(const TorusPoint& y) {
  require_y_chart(y);
  const int n = y.n;
  // y_1/y_n + sum_{m=2}^{k} y_m / y_{n+m-1}
  auto s = [&](int k) {
    Rational t = y[1] / y[n];
    for (int m = 2; m <= k; ++m) t += y[m] / y[n + m - 1];
    return t;
  };
  std::vector<Rational> x(static_cast<std::size_t>(2 * n - 2));
  auto at = [&](int k) -> Rational& { return x[static_cast<std::size_t>(k - 2)]; };
  for (int k = 2; k <= n - 1; ++k) at(k) = sdiv(y[k], y[n] * s(k), "sigma_bar_inv");
  at(n) = 1 / y[n];
  for (int l = 1; l <= n - 2; ++l) at(n + l) = y[n + l] * s(l);
  at(2 * n - 1) = s(n - 1);
  return x_point(n, std::move(x));
}

Rational a_factor(const TorusPoint& x) {
  require_x_chart(x);
  return 1 / x[x.n];
}

TorusPoint geom_e0_via_conjugation(const Rational& c, const TorusPoint& x) {
  if (is_zero(c)) throw DivisionByZero("e_0^c with c = 0");
  auto y = sigma_bar(x);
  y[x.n] *= c;
  return sigma_bar_inv(y);
}

TorusPoint bar_e(int i, const Rational& c, const TorusPoint& y) {
  require_y_chart(y);
  const int n = y.n;
  if (i < 0 || i > n - 1)
    throw IndexOutOfRange("the V_2 word carries nodes 0.." + std::to_string(n - 1));
  if (is_zero(c)) throw DivisionByZero("e_i^c with c = 0");
  return y_from_params(n, schubert_e(v2_word(n), word_params(y), i, c));
}

GeomOps closed_form_ops() {
  return {[](int i, const Rational& c, const TorusPoint& x) { return geom_e(i, c, x); },
          [](int i, const TorusPoint& x) { return geom_gamma(i, x); },
          [](int i, const TorusPoint& x) { return geom_eps(i, x); }};
}

}  // namespace geocrystal
