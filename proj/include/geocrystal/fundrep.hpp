#pragma once

// Cartan data of A_n^(1) and the level-0 fundamental module W(varpi_2).
//
// W(varpi_2) has basis {(i, j) : 1 <= i < j <= n+1}. Vectors are sparse maps
// from labels to scalars over any exact field S that supports +, *, / and an
// `is_zero(S)` overload found by ADL. The module is used with S = Rational and
// S = PosExpr (symbolic subtraction-free expressions).

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geocrystal/error.hpp"
#include "geocrystal/point.hpp"
#include "geocrystal/rational.hpp"

namespace geocrystal {

/// Generalized Cartan matrix of A_n^(1), indices 0..n.
struct CartanData {
  int n = 0;
  std::vector<std::vector<int>> a;

  int size() const { return n + 1; }
  int operator()(int i, int j) const { return a.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
};

CartanData cartan_matrix(int n);

/// Identifies index n+1 with 0 (Lambda_{n+1} = Lambda_0).
int reduce_node(int k, int n);

struct BasisLabel {
  int i = 0;
  int j = 0;
  auto operator<=>(const BasisLabel&) const = default;
};

bool is_valid_label(BasisLabel label, int n);

/// All (i, j) with 1 <= i < j <= n+1 in lexicographic order.
std::vector<BasisLabel> basis_labels(int n);

/// <wt(i,j), alpha_k^vee> for wt(i,j) = Lambda_i - Lambda_{i-1} + Lambda_j - Lambda_{j-1}.
int weight_pairing(BasisLabel label, int k, int n);

/// f_k and e_k on a single basis vector; nullopt means the image is 0.
std::optional<BasisLabel> lower_label(int k, BasisLabel label, int n);
std::optional<BasisLabel> raise_label(int k, BasisLabel label, int n);

void require_node(int k, int n);

template <class S>
class FundVector {
 public:
  explicit FundVector(int n) : n_(n) {
    if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  }

  static FundVector unit(int n, BasisLabel label, S one) {
    FundVector v(n);
    v.add(label, std::move(one));
    return v;
  }

  int n() const { return n_; }
  const std::map<BasisLabel, S>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  /// nullptr when the coefficient is zero.
  const S* find(BasisLabel label) const {
    auto it = coeffs_.find(label);
    return it == coeffs_.end() ? nullptr : &it->second;
  }

  void add(BasisLabel label, S value) {
    check(label);
    auto it = coeffs_.find(label);
    if (it == coeffs_.end()) {
      if (!is_zero(value)) coeffs_.emplace(label, std::move(value));
      return;
    }
    it->second = it->second + value;
    if (is_zero(it->second)) coeffs_.erase(it);
  }

  void set(BasisLabel label, S value) {
    check(label);
    if (is_zero(value))
      coeffs_.erase(label);
    else
      coeffs_.insert_or_assign(label, std::move(value));
  }

  bool operator==(const FundVector& other) const {
    return n_ == other.n_ && coeffs_ == other.coeffs_;
  }

 private:
  void check(BasisLabel label) const {
    if (!is_valid_label(label, n_))
      throw IndexOutOfRange("basis label (" + std::to_string(label.i) + "," +
                            std::to_string(label.j) + ") invalid for n = " + std::to_string(n_));
  }

  int n_;
  std::map<BasisLabel, S> coeffs_;
};

template <class S>
FundVector<S> apply_f(int k, const FundVector<S>& v) {
  require_node(k, v.n());
  FundVector<S> out(v.n());
  for (const auto& [label, value] : v.coeffs())
    if (auto target = lower_label(k, label, v.n())) out.add(*target, value);
  return out;
}

template <class S>
FundVector<S> apply_e(int k, const FundVector<S>& v) {
  require_node(k, v.n());
  FundVector<S> out(v.n());
  for (const auto& [label, value] : v.coeffs())
    if (auto target = raise_label(k, label, v.n())) out.add(*target, value);
  return out;
}

/// value * c^k through repeated multiplication or division.
template <class S>
S scale_by_power(S value, const S& c, int k) {
  for (; k > 0; --k) value = value * c;
  for (; k < 0; ++k) value = value / c;
  return value;
}

/// Y_k(c) = (1 + f_k / c) alpha_k^vee(c); valid because f_k^2 = 0 on W(varpi_2).
template <class S>
FundVector<S> apply_Y(int k, const S& c, const FundVector<S>& v) {
  require_node(k, v.n());
  if (is_zero(c)) throw DivisionByZero("Y_" + std::to_string(k) + "(c) with c = 0");
  FundVector<S> scaled(v.n());
  for (const auto& [label, value] : v.coeffs())
    scaled.add(label, scale_by_power(value, c, weight_pairing(label, k, v.n())));
  FundVector<S> out = scaled;
  const auto lowered = apply_f(k, scaled);
  for (const auto& [label, value] : lowered.coeffs()) out.add(label, value / c);
  return out;
}

/// V_1(x) = Y_{n-1}(x_{2n-1}) ... Y_1(x_{n+1}) Y_n(x_n) ... Y_2(x_2) (1,2).
template <class S>
FundVector<S> build_V1(const ChartPoint<S>& x, S one) {
  const int n = x.n;
  auto v = FundVector<S>::unit(n, {1, 2}, std::move(one));
  for (int k = 2; k <= n; ++k) v = apply_Y(k, x[k], v);
  for (int k = 1; k <= n - 1; ++k) v = apply_Y(k, x[n + k], v);
  return v;
}

/// V_2(y) = Y_{n-2}(y_{2n-2}) ... Y_0(y_n) Y_{n-1}(y_{n-1}) ... Y_1(y_1) (1,n+1).
template <class S>
FundVector<S> build_V2(const ChartPoint<S>& y, S one) {
  const int n = y.n;
  auto v = FundVector<S>::unit(n, {1, n + 1}, std::move(one));
  for (int k = 1; k <= n - 1; ++k) v = apply_Y(k, y[k], v);
  for (int k = 0; k <= n - 2; ++k) v = apply_Y(k, y[n + k], v);
  return v;
}

/// Coefficients X_{ij} of V_1(x), from the four-case closed form.
template <class S>
std::map<BasisLabel, S> closed_form_X(const ChartPoint<S>& x, S one) {
  const int n = x.n;
  // x_{i+1} + sum_{m=i+2}^{last} x_m x_{n+i} / x_{n+m-1}
  auto chain = [&](int i, int last) {
    S s = x[i + 1];
    for (int m = i + 2; m <= last; ++m) s = s + x[m] * x[n + i] / x[n + m - 1];
    return s;
  };
  std::map<BasisLabel, S> out;
  for (const auto& label : basis_labels(n)) {
    const auto [i, j] = label;
    if (i == n && j == n + 1)
      out.emplace(label, one);
    else if (j == n + 1)
      out.emplace(label, x[n + i]);
    else if (j == n)
      out.emplace(label, chain(i, n));
    else
      out.emplace(label, x[n + j] * chain(i, j));
  }
  return out;
}

/// Coefficients Y_{ij} of V_2(y), from the seven-case closed form.
template <class S>
std::map<BasisLabel, S> closed_form_Y(const ChartPoint<S>& y, S one) {
  const int n = y.n;
  auto chain = [&](int i, int last) {
    S s = y[i + 1];
    for (int m = i + 2; m <= last; ++m) s = s + y[m] * y[n + i] / y[n + m - 1];
    return s;
  };
  // y_1 + sum_{m=2}^{last} y_m y_n / y_{n+m-1}
  auto head = [&](int last) {
    S s = y[1];
    for (int m = 2; m <= last; ++m) s = s + y[m] * y[n] / y[n + m - 1];
    return s;
  };
  std::map<BasisLabel, S> out;
  for (const auto& label : basis_labels(n)) {
    const auto [i, j] = label;
    if (i == n) {
      out.emplace(label, y[n]);
    } else if (i == n - 1) {
      out.emplace(label, j == n ? one : head(n - 1));
    } else if (j == n + 1) {
      out.emplace(label, y[n + i] * head(i));
    } else if (j == n) {
      out.emplace(label, y[n + i]);
    } else if (j == n - 1) {
      out.emplace(label, chain(i, n - 1));
    } else {
      out.emplace(label, y[n + j] * chain(i, j));
    }
  }
  return out;
}

inline FundVector<Rational> build_V1(const TorusPoint& x) {
  require_nonzero(x);
  return build_V1<Rational>(x, Rational(1));
}
inline FundVector<Rational> build_V2(const TorusPoint& y) {
  require_nonzero(y);
  return build_V2<Rational>(y, Rational(1));
}
std::map<BasisLabel, Rational> closed_form_X(const TorusPoint& x);
std::map<BasisLabel, Rational> closed_form_Y(const TorusPoint& y);

}  // namespace geocrystal
