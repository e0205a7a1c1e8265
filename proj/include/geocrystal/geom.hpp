#pragma once

// The positive geometric crystal on the x-chart of V_1 (coordinates
// x_2..x_{2n-1}) and the y-chart of V_2 (y_1..y_{2n-2}).

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "geocrystal/fundrep.hpp"
#include "geocrystal/parallel.hpp"
#include "geocrystal/point.hpp"
#include "geocrystal/rational.hpp"

namespace geocrystal {

struct Word {
  std::vector<int> letters;
  CartanData cartan;
};

Word make_word(std::vector<int> letters, const CartanData& cartan);

// Schubert-cell structure maps of Y_{i_1}(c_1) ... Y_{i_k}(c_k).
std::vector<Rational> schubert_e(const Word& w, const std::vector<Rational>& cvec, int i,
                                 const Rational& c);
Rational schubert_eps(const Word& w, const std::vector<Rational>& cvec, int i);
Rational schubert_gamma(const Word& w, const std::vector<Rational>& cvec, int i);

/// Letters (n-1, ..., 1, n, ..., 2); parameters (x_{2n-1}, ..., x_2).
Word v1_word(int n);
/// Letters (n-2, ..., 0, n-1, ..., 1); parameters (y_{2n-2}, ..., y_1).
Word v2_word(int n);
std::vector<Rational> word_params(const TorusPoint& p);
TorusPoint x_from_params(int n, const std::vector<Rational>& params);
TorusPoint y_from_params(int n, const std::vector<Rational>& params);

/// e_i^c on the x-chart, closed form. Missing x_1, x_{2n} read as 1.
TorusPoint geom_e(int i, const Rational& c, const TorusPoint& x);
Rational geom_gamma(int i, const TorusPoint& x);
Rational geom_eps(int i, const TorusPoint& x);

/// X_k = sum_{m=2}^{k} x_m / x_{n+m-1}; X_tilde_k = sum_{m=k+1}^{n}.
Rational partial_X(const TorusPoint& x, int k);
Rational partial_X_tilde(const TorusPoint& x, int k);

TorusPoint sigma_bar(const TorusPoint& x);
TorusPoint sigma_bar_inv(const TorusPoint& y);
/// The scalar a(x) with V_2(sigma_bar(x)) = a(x) V_1(x).
Rational a_factor(const TorusPoint& x);

/// sigma_bar^{-1} o (y_n -> c y_n) o sigma_bar.
TorusPoint geom_e0_via_conjugation(const Rational& c, const TorusPoint& x);
/// e_i^c on the y-chart via the V_2 word, 0 <= i <= n-1.
TorusPoint bar_e(int i, const Rational& c, const TorusPoint& y);

/// Structure maps used by the axiom suite; replaceable for negative controls.
struct GeomOps {
  std::function<TorusPoint(int, const Rational&, const TorusPoint&)> e;
  std::function<Rational(int, const TorusPoint&)> gamma;
  std::function<Rational(int, const TorusPoint&)> eps;
};

GeomOps closed_form_ops();

struct GeomFailure {
  std::string identity;
  TorusPoint point;
  std::vector<std::pair<std::string, Rational>> params;

  bool operator==(const GeomFailure&) const = default;
};

struct GeomReport {
  std::string suite;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t checks = 0;
  std::vector<GeomFailure> failures;

  bool passed() const { return failures.empty(); }
  bool operator==(const GeomReport&) const = default;
};

GeomReport verify_closed_forms(int n, int trials, std::uint64_t seed,
                               Execution exec = Execution::parallel);
GeomReport verify_lemma41(int n, int trials, std::uint64_t seed,
                          Execution exec = Execution::parallel);
GeomReport verify_e0_routes(int n, int trials, std::uint64_t seed,
                            Execution exec = Execution::parallel);
GeomReport verify_schubert(int n, int trials, std::uint64_t seed,
                           Execution exec = Execution::parallel);
GeomReport verify_sigma_commute(int n, int trials, std::uint64_t seed,
                                Execution exec = Execution::parallel);
GeomReport verify_eq43(int n, int trials, std::uint64_t seed,
                       Execution exec = Execution::parallel);
GeomReport verify_axioms(int n, int trials, std::uint64_t seed,
                         Execution exec = Execution::parallel,
                         const GeomOps& ops = closed_form_ops());

/// Suite names accepted by run_geom_suite.
const std::vector<std::string>& geom_suite_names();
GeomReport run_geom_suite(const std::string& suite, int n, int trials, std::uint64_t seed,
                          Execution exec = Execution::parallel);

}  // namespace geocrystal
