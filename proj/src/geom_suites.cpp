#include <algorithm>

#include "geocrystal/geom.hpp"
#include "geocrystal/rng.hpp"

namespace geocrystal {

namespace {

struct TrialResult {
  std::uint64_t checks = 0;
  std::vector<GeomFailure> failures;
};

class Recorder {
 public:
  explicit Recorder(TrialResult& out) : out_(out) {}

  void params(std::vector<std::pair<std::string, Rational>> p) { params_ = std::move(p); }

  void check(bool ok, std::string identity, const TorusPoint& point) {
    ++out_.checks;
    if (!ok) out_.failures.push_back({std::move(identity), point, params_});
  }

 private:
  TrialResult& out_;
  std::vector<std::pair<std::string, Rational>> params_;
};

TorusPoint random_x(int n, TrialRng& rng) {
  std::vector<Rational> v;
  for (int k = 0; k < 2 * n - 2; ++k) v.push_back(rng.positive_rational());
  return x_point(n, std::move(v));
}

TorusPoint random_y(int n, TrialRng& rng) {
  std::vector<Rational> v;
  for (int k = 0; k < 2 * n - 2; ++k) v.push_back(rng.positive_rational());
  return y_point(n, std::move(v));
}

std::string tag(const std::string& name, int i) { return name + "(i=" + std::to_string(i) + ")"; }
std::string tag(const std::string& name, const char* a, int i, const char* b, int j) {
  return name + "(" + a + "=" + std::to_string(i) + "," + b + "=" + std::to_string(j) + ")";
}

template <class Trial>
GeomReport run_trials(std::string suite, int n, int trials, std::uint64_t seed, Execution exec,
                      Trial trial) {
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  if (trials < 1) throw DomainError("trials must be >= 1");
  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  for_each_index(results.size(), exec, [&](std::size_t t) {
    TrialRng rng(seed, t);
    Recorder rec(results[t]);
    trial(rng, rec);
  });
  GeomReport report{std::move(suite), n, trials, seed, 0, {}};
  for (auto& r : results) {
    report.checks += r.checks;
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

template <class S>
bool same_coeffs(const FundVector<S>& v, const std::map<BasisLabel, S>& closed, BasisLabel label) {
  const S* got = v.find(label);
  auto it = closed.find(label);
  const bool closed_zero = it == closed.end() || is_zero(it->second);
  if (!got) return closed_zero;
  return !closed_zero && *got == it->second;
}

std::string label_tag(const char* name, BasisLabel l) {
  return std::string(name) + "(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
}

void check_eq43(int n, const Rational& c, const TorusPoint& x, const GeomOps& ops, Recorder& rec) {
  if (n < 4 || c == 1) return;
  const auto moved = ops.e(0, c, x);
  const Rational big_x = partial_X(x, n);
  for (int k = 3; k <= n - 1; ++k) {
    const Rational lhs = moved[k] / moved[k + n - 1];
    const Rational rhs = c * big_x * big_x / (c - 1) *
                         (1 / (c * partial_X(x, k - 1) + partial_X_tilde(x, k - 1)) -
                          1 / (c * partial_X(x, k) + partial_X_tilde(x, k)));
    rec.check(lhs == rhs, "eq43(k=" + std::to_string(k) + ")", x);
  }
}

void check_sigma_commute(int n, const Rational& c, const TorusPoint& x, const GeomOps& ops,
                         Recorder& rec) {
  const auto y = sigma_bar(x);
  for (int i = 1; i <= n - 1; ++i)
    rec.check(sigma_bar(ops.e(i, c, x)) == bar_e(i, c, y), tag("sigma-commute", i), x);
}

// the ratio identity divides by c - 1
Rational non_unit(Rational c) { return c == 1 ? Rational(2) : c; }

}  // namespace

GeomReport verify_closed_forms(int n, int trials, std::uint64_t seed, Execution exec) {
  return run_trials("closed-forms", n, trials, seed, exec, [n](TrialRng& rng, Recorder& rec) {
    const auto x = random_x(n, rng);
    const auto y = random_y(n, rng);
    const auto v1 = build_V1(x);
    const auto cx = closed_form_X(x);
    const auto v2 = build_V2(y);
    const auto cy = closed_form_Y(y);
    for (const auto& label : basis_labels(n)) {
      rec.check(same_coeffs(v1, cx, label), label_tag("X", label), x);
      rec.check(same_coeffs(v2, cy, label), label_tag("Y", label), y);
    }
  });
}

GeomReport verify_lemma41(int n, int trials, std::uint64_t seed, Execution exec) {
  return run_trials("lemma41", n, trials, seed, exec, [n](TrialRng& rng, Recorder& rec) {
    const auto x = random_x(n, rng);
    const auto y = random_y(n, rng);
    const auto sx = sigma_bar(x);
    const auto lhs = build_V2(sx);
    const auto a = a_factor(x);
    FundVector<Rational> rhs(n);
    const auto v1 = build_V1(x);
    for (const auto& [label, value] : v1.coeffs()) rhs.add(label, a * value);
    for (const auto& label : basis_labels(n)) {
      const Rational* l = lhs.find(label);
      const Rational* r = rhs.find(label);
      const bool ok = (!l && !r) || (l && r && *l == *r);
      rec.check(ok, label_tag("V2(sigma_bar)=a*V1", label), x);
    }
    rec.check(sigma_bar_inv(sx) == x, "sigma_bar_inv*sigma_bar", x);
    rec.check(sigma_bar(sigma_bar_inv(y)) == y, "sigma_bar*sigma_bar_inv", y);
  });
}

GeomReport verify_e0_routes(int n, int trials, std::uint64_t seed, Execution exec) {
  return run_trials("e0-conjugation", n, trials, seed, exec, [n](TrialRng& rng, Recorder& rec) {
    const auto x = random_x(n, rng);
    const auto c = rng.positive_rational();
    rec.params({{"c", c}});
    rec.check(geom_e(0, c, x) == geom_e0_via_conjugation(c, x), "e0-closed=conjugation", x);
  });
}

GeomReport verify_schubert(int n, int trials, std::uint64_t seed, Execution exec) {
  return run_trials("schubert", n, trials, seed, exec, [n](TrialRng& rng, Recorder& rec) {
    const auto x = random_x(n, rng);
    const auto c = rng.positive_rational();
    rec.params({{"c", c}});
    const auto w1 = v1_word(n);
    const auto p1 = word_params(x);
    for (int i = 1; i <= n; ++i) {
      rec.check(x_from_params(n, schubert_e(w1, p1, i, c)) == geom_e(i, c, x),
                tag("schubert-e", i), x);
      rec.check(schubert_eps(w1, p1, i) == geom_eps(i, x), tag("schubert-eps", i), x);
    }
    for (int i = 0; i <= n; ++i)
      rec.check(schubert_gamma(w1, p1, i) == geom_gamma(i, x), tag("schubert-gamma", i), x);
    const auto w2 = v2_word(n);
    const auto p2 = word_params(sigma_bar(x));
    rec.check(schubert_eps(w2, p2, 0) == geom_eps(0, x), "schubert-eps(i=0)", x);
    rec.check(schubert_gamma(w2, p2, 0) == geom_gamma(0, x), "schubert-gamma-V2(i=0)", x);
  });
}

GeomReport verify_sigma_commute(int n, int trials, std::uint64_t seed, Execution exec) {
  const auto ops = closed_form_ops();
  return run_trials("sigma-commute", n, trials, seed, exec,
                    [n, &ops](TrialRng& rng, Recorder& rec) {
                      const auto x = random_x(n, rng);
                      const auto c = rng.positive_rational();
                      rec.params({{"c", c}});
                      check_sigma_commute(n, c, x, ops, rec);
                    });
}

GeomReport verify_eq43(int n, int trials, std::uint64_t seed, Execution exec) {
  const auto ops = closed_form_ops();
  return run_trials("eq43", n, trials, seed, exec, [n, &ops](TrialRng& rng, Recorder& rec) {
    const auto x = random_x(n, rng);
    const auto c = non_unit(rng.positive_rational());
    rec.params({{"c", c}});
    check_eq43(n, c, x, ops, rec);
  });
}

GeomReport verify_axioms(int n, int trials, std::uint64_t seed, Execution exec,
                         const GeomOps& ops) {
  const auto a = cartan_matrix(n);
  return run_trials("axioms", n, trials, seed, exec, [&](TrialRng& rng, Recorder& rec) {
    const auto x = random_x(n, rng);
    const auto c1 = rng.positive_rational();
    const auto c2 = rng.positive_rational();
    rec.params({{"c1", c1}, {"c2", c2}});
    for (int i = 0; i <= n; ++i) {
      const auto moved = ops.e(i, c1, x);
      rec.check(ops.e(i, c1, ops.e(i, c2, x)) == ops.e(i, c1 * c2, x), tag("action", i), x);
      rec.check(ops.eps(i, moved) == ops.eps(i, x) / c1, tag("eps-scale", i), x);
      for (int j = 0; j <= n; ++j) {
        rec.check(ops.gamma(j, moved) == ipow(c1, a(i, j)) * ops.gamma(j, x),
                  tag("gamma", "i", i, "j", j), x);
        if (i == j) continue;
        if (a(i, j) == 0) {
          rec.check(ops.e(i, c1, ops.e(j, c2, x)) == ops.e(j, c2, ops.e(i, c1, x)),
                    tag("commute", "i", i, "j", j), x);
          rec.check(ops.eps(i, ops.e(j, c1, x)) == ops.eps(i, x), tag("eps-fixed", "i", i, "j", j),
                    x);
        } else if (a(i, j) == -1) {
          const auto lhs = ops.e(i, c1, ops.e(j, c1 * c2, ops.e(i, c2, x)));
          const auto rhs = ops.e(j, c2, ops.e(i, c1 * c2, ops.e(j, c1, x)));
          rec.check(lhs == rhs, tag("verma", "i", i, "j", j), x);
        }
      }
    }
    check_sigma_commute(n, c1, x, ops, rec);
    check_eq43(n, non_unit(c1), x, ops, rec);
  });
}

const std::vector<std::string>& geom_suite_names() {
  static const std::vector<std::string> names{"axioms",         "lemma41", "sigma-commute", "eq43",
                                              "closed-forms",   "e0-conjugation", "schubert"};
  return names;
}

GeomReport run_geom_suite(const std::string& suite, int n, int trials, std::uint64_t seed,
                          Execution exec) {
  if (suite == "axioms") return verify_axioms(n, trials, seed, exec);
  if (suite == "lemma41") return verify_lemma41(n, trials, seed, exec);
  if (suite == "sigma-commute") return verify_sigma_commute(n, trials, seed, exec);
  if (suite == "eq43") return verify_eq43(n, trials, seed, exec);
  if (suite == "closed-forms") return verify_closed_forms(n, trials, seed, exec);
  if (suite == "e0-conjugation") return verify_e0_routes(n, trials, seed, exec);
  if (suite == "schubert") return verify_schubert(n, trials, seed, exec);
  throw DomainError("unknown geom suite '" + suite + "'");
}

}  // namespace geocrystal
