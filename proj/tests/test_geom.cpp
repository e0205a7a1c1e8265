#include <gtest/gtest.h>

#include "geocrystal/geom.hpp"
#include "oracles.hpp"

using namespace geocrystal;

namespace {

Rational q(const char* s) { return parse_rational(s); }

// e_i^c with the roles of the two products in c_i swapped.
GeomOps swapped_ci_ops() {
  auto ops = closed_form_ops();
  ops.e = [](int i, const Rational& c, const TorusPoint& x) {
    const int n = x.n;
    if (i == 0 || i == 1 || i == n) return geom_e(i, c, x);
    TorusPoint out = x;
    const Rational a = x[i] * x[n + i];
    const Rational b = x[i + 1] * x[n + i - 1];
    const Rational ci = c * (a + b) / (a + c * b);
    out[i] = ci * x[i];
    out[n + i] = c / ci * x[n + i];
    return out;
  };
  return ops;
}

}  // namespace

TEST(Schubert, UnitParameterIsIdentity) {
  const auto w = v1_word(3);
  const auto p = word_params(x_point(3, {2, 3, 5, 7}));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(schubert_e(w, p, i, 1), p);
}

TEST(Schubert, SingleLetter) {
  const auto w = make_word({2}, cartan_matrix(3));
  const std::vector<Rational> p{q("3/7")};
  EXPECT_EQ(schubert_e(w, p, 2, 5), (std::vector<Rational>{q("15/7")}));
  EXPECT_EQ(schubert_gamma(w, p, 2), q("9/49"));
}

TEST(Schubert, RankTwoWord) {
  const auto w = v1_word(2);
  EXPECT_EQ(w.letters, (std::vector<int>{1, 2}));
  const std::vector<Rational> p{5, 3};  // (x_3, x_2)
  EXPECT_EQ(schubert_e(w, p, 1, 4), (std::vector<Rational>{20, 3}));
  EXPECT_EQ(schubert_gamma(w, p, 1), q("25/3"));
  EXPECT_EQ(schubert_eps(w, p, 2), q("5/3"));
}

TEST(Schubert, RejectsLetterOutsideRange) {
  EXPECT_THROW(make_word({4}, cartan_matrix(3)), IndexOutOfRange);
}

TEST(ClosedForms, ActionExamples) {
  EXPECT_EQ(geom_e(0, 7, x_point(2, {3, 5})), x_point(2, {q("3/7"), q("5/7")}));
  EXPECT_EQ(geom_e(2, 2, x_point(3, {1, 1, 1, 1})), x_point(3, {q("4/3"), 1, 1, q("3/2")}));
  const auto x = x_point(4, {2, 3, 5, 7, 11, 13});
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(geom_e(i, 1, x), x);
}

TEST(ClosedForms, WeightAndEpsilonExamples) {
  const auto x = x_point(3, {1, 2, 3, 4});
  EXPECT_EQ(geom_gamma(0, x), q("1/6"));  // 1 / (x_3 x_4)
  EXPECT_EQ(geom_eps(0, x), q("5/2"));
  EXPECT_EQ(geom_gamma(1, x_point(2, {3, 5})), q("25/3"));
  EXPECT_EQ(geom_eps(2, x_point(2, {3, 5})), q("5/3"));
}

TEST(ClosedForms, Errors) {
  EXPECT_THROW(geom_e(0, 0, x_point(2, {1, 1})), DivisionByZero);
  EXPECT_THROW(geom_e(4, 1, x_point(3, {1, 1, 1, 1})), IndexOutOfRange);
  // c_2 has denominator c x_2 x_5 + x_3 x_4
  EXPECT_THROW(geom_e(2, -1, x_point(3, {1, 1, 1, 1})), SingularPoint);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_bar(x_point(2, {3, 5})), y_point(2, {q("5/3"), q("1/3")}));
  EXPECT_EQ(sigma_bar(x_point(3, {1, 1, 1, 1}))[1], q("1/2"));
  EXPECT_EQ(sigma_bar_inv(y_point(2, {q("5/3"), q("1/3")})), x_point(2, {3, 5}));
  EXPECT_EQ(a_factor(x_point(3, {1, 2, 3, 4})), q("1/2"));
}

TEST(Sigma, RoundTripAtRankFour) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto x = oracle::random_x(4, 3, t);
    EXPECT_EQ(sigma_bar_inv(sigma_bar(x)), x);
  }
}

TEST(Sigma, ChartsAreChecked) {
  EXPECT_THROW(sigma_bar(y_point(2, {1, 1})), DomainError);
  EXPECT_THROW(sigma_bar_inv(x_point(2, {1, 1})), DomainError);
}

TEST(E0, ConjugationExamples) {
  EXPECT_EQ(geom_e0_via_conjugation(4, x_point(2, {3, 5})), x_point(2, {q("3/4"), q("5/4")}));
  const auto x = x_point(3, {2, 3, 5, 7});
  EXPECT_EQ(geom_e0_via_conjugation(1, x), x);
}

TEST(E0, WeightExponents) {
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t t = 0; t < 10; ++t) {
      const auto x = oracle::random_x(n, 8, t);
      const Rational c = TrialRng(9, t).positive_rational();
      const auto moved = geom_e(0, c, x);
      EXPECT_EQ(geom_gamma(0, moved), c * c * geom_gamma(0, x));
      EXPECT_EQ(geom_gamma(1, moved), geom_gamma(1, x) / c);
      EXPECT_EQ(geom_gamma(n, moved), geom_gamma(n, x) / c);
      for (int i = 2; i <= n - 1; ++i) EXPECT_EQ(geom_gamma(i, moved), geom_gamma(i, x));
    }
}

TEST(Action, Composition) {
  for (int n = 2; n <= 5; ++n)
    for (std::uint64_t t = 0; t < 10; ++t) {
      const auto x = oracle::random_x(n, 11, t);
      TrialRng rng(12, t);
      const auto c = rng.positive_rational(), d = rng.positive_rational();
      for (int i = 0; i <= n; ++i) EXPECT_EQ(geom_e(i, c, geom_e(i, d, x)), geom_e(i, c * d, x));
    }
}

TEST(Suites, AllPassAtDeskScale) {
  for (const auto& suite : geom_suite_names())
    for (int n = 2; n <= 5; ++n) {
      const auto r = run_geom_suite(suite, n, 25, 42);
      EXPECT_TRUE(r.passed()) << suite << " n=" << n << " first failure "
                              << (r.failures.empty() ? "" : r.failures.front().identity);
      if (suite != "eq43" || n >= 4) {
        EXPECT_GT(r.checks, 0u) << suite << " n=" << n;
      }
    }
}

TEST(Suites, AxiomsRankTwoSeed42) {
  const auto r = verify_axioms(2, 100, 42);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.trials, 100);
}

TEST(Suites, RatioIdentityNeedsRankFour) {
  EXPECT_EQ(verify_eq43(3, 5, 1).checks, 0u);
  EXPECT_EQ(verify_eq43(5, 5, 1).checks, 5u * 2u);
}

TEST(Suites, DeterministicAndExecutionIndependent) {
  const auto a = verify_axioms(3, 20, 7, Execution::serial);
  EXPECT_EQ(a, verify_axioms(3, 20, 7, Execution::parallel));
  EXPECT_EQ(a, verify_axioms(3, 20, 7, Execution::serial));
  EXPECT_NE(a.checks, 0u);
}

TEST(Suites, SwappedMiddleFactorIsCaught) {
  const auto r = verify_axioms(3, 10, 1, Execution::serial, swapped_ci_ops());
  EXPECT_FALSE(r.passed());
  const auto again = verify_axioms(3, 10, 1, Execution::parallel, swapped_ci_ops());
  EXPECT_EQ(r, again);
}

TEST(Suites, BadArguments) {
  EXPECT_THROW(verify_axioms(1, 10, 0), InvalidRank);
  EXPECT_THROW(verify_axioms(3, 0, 0), DomainError);
  EXPECT_THROW(run_geom_suite("nope", 3, 1, 0), DomainError);
}
