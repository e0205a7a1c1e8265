#include <gtest/gtest.h>

#include "geocrystal/expr.hpp"
#include "geocrystal/geom.hpp"
#include "oracles.hpp"

using namespace geocrystal;

namespace {

PosExpr v(const char* name) { return PosExpr::variable(name); }
TropExpr t(const char* name) { return TropExpr::variable(name); }
Rational q(const char* s) { return parse_rational(s); }

Assignment<Rational> rational_point(std::initializer_list<std::pair<const char*, Rational>> values) {
  Assignment<Rational> a;
  for (const auto& [name, value] : values) a.set(name, value);
  return a;
}

Assignment<std::int64_t> int_point(std::initializer_list<std::pair<const char*, std::int64_t>> values) {
  Assignment<std::int64_t> a;
  for (const auto& [name, value] : values) a.set(name, value);
  return a;
}

}  // namespace

TEST(Variables, Names) {
  EXPECT_EQ(variable_id("c"), 0);
  EXPECT_EQ(variable_id("x12"), 12);
  EXPECT_EQ(variable_name(7), "x7");
  EXPECT_THROW(variable_id("y2"), ParseError);
  EXPECT_THROW(variable_id("x"), ParseError);
  EXPECT_THROW(variable_id("x02"), ParseError);
}

TEST(EvalPos, Examples) {
  EXPECT_EQ(eval_pos(v("x2") / v("x3") + PosExpr::constant(1),
                     rational_point({{"x2", 3}, {"x3", 5}})),
            q("8/5"));
  EXPECT_EQ(eval_pos(PosExpr::constant(7), {}), 7);
  const auto e = v("x2") * v("x5") + v("x3") * v("x4");
  EXPECT_EQ(eval_pos(e, rational_point({{"x2", 1}, {"x3", 1}, {"x4", 1}, {"x5", 1}})), 2);
}

TEST(EvalPos, Errors) {
  EXPECT_THROW(eval_pos(v("x2"), {}), MissingBinding);
  EXPECT_THROW(eval_pos(PosExpr::constant(1) / v("x2"), rational_point({{"x2", 0}})),
               DivisionByZero);
  EXPECT_THROW(PosExpr::constant(0), DomainError);
  EXPECT_THROW(PosExpr::constant(-1), DomainError);
}

TEST(Tropicalize, Examples) {
  // n = 3: gamma_0 = 1 / (x_3 x_4), eps_1 = x_5 / x_4
  const auto w0 = tropicalize(PosExpr::constant(1) / (v("x3") * v("x4")));
  EXPECT_EQ(w0, TropExpr::minus(TropExpr::constant(0), TropExpr::plus({t("x3"), t("x4")})));
  EXPECT_EQ(eval_trop(w0, int_point({{"x3", 5}, {"x4", -2}})), -3);
  EXPECT_EQ(tropicalize(v("x5") / v("x4")), TropExpr::minus(t("x5"), t("x4")));
  EXPECT_EQ(tropicalize(PosExpr::constant(5)), TropExpr::constant(0));
}

TEST(Tropicalize, IsATreeHomomorphism) {
  const auto a = v("x2") + PosExpr::constant(q("3/7"));
  const auto b = v("c") / v("x3");
  EXPECT_EQ(tropicalize(a + b), TropExpr::max({tropicalize(a), tropicalize(b)}));
  EXPECT_EQ(tropicalize(a * b), TropExpr::plus({tropicalize(a), tropicalize(b)}));
  EXPECT_EQ(tropicalize(a / b), TropExpr::minus(tropicalize(a), tropicalize(b)));
}

TEST(EvalTrop, Examples) {
  const auto at = int_point({{"x2", 1}, {"x3", 2}, {"x4", 3}, {"x5", 4}});
  const auto b2 = TropExpr::minus(t("x2"), t("x4"));
  const auto b3 = TropExpr::minus(t("x3"), t("x5"));
  EXPECT_EQ(eval_trop(TropExpr::max({b2, b3}), at), -2);
  EXPECT_EQ(eval_trop(TropExpr::plus({t("x4"), TropExpr::max({b2, b3})}), at), 1);
  EXPECT_EQ(eval_trop(TropExpr::constant(0), at), 0);
  EXPECT_THROW(eval_trop(t("x9"), at), MissingBinding);
}

TEST(BoxEquality, Examples) {
  const auto x = t("x2"), y = t("x3");
  auto r = trop_equal_on_box(TropExpr::max({x, y}), TropExpr::max({y, x}),
                             {{"x2", -2, 2}, {"x3", -2, 2}});
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.points_checked, 25u);

  r = trop_equal_on_box(x, TropExpr::max({x, TropExpr::minus(x, TropExpr::constant(1))}),
                        {{"x2", -5, 5}});
  EXPECT_TRUE(r.equal);

  r = trop_equal_on_box(x, TropExpr::max({x, TropExpr::constant(0)}), {{"x2", -1, 1}});
  ASSERT_FALSE(r.equal);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->front(), (std::pair<std::string, std::int64_t>{"x2", -1}));
}

TEST(BoxEquality, Errors) {
  const auto x = t("x2");
  EXPECT_THROW(trop_equal_on_box(x, t("x3"), {{"x2", 0, 1}}), MissingBinding);
  EXPECT_THROW(trop_equal_on_box(x, x, {{"x2", 0, 99}}, 50), ResourceLimit);
  EXPECT_THROW(trop_equal_on_box(x, x, {{"x2", 0, 1}, {"x2", 0, 1}}), DomainError);
}

TEST(BoxEquality, SerialAndParallelFindTheSameFirstWitness) {
  // differs only where x2 >= 3 and x4 = -4
  const auto lhs = TropExpr::max({t("x2"), t("x3"), t("x4")});
  const auto rhs = TropExpr::max(
      {t("x2"), t("x3"), t("x4"),
       TropExpr::minus(TropExpr::plus({t("x2"), TropExpr::constant(-7)}), t("x4"))});
  std::vector<BoxAxis> box{{"x2", -8, 8}, {"x3", -8, 8}, {"x4", -8, 8}};
  const auto s = trop_equal_on_box(lhs, rhs, box, kDefaultBoxCap, Execution::serial);
  const auto p = trop_equal_on_box(lhs, rhs, box, kDefaultBoxCap, Execution::parallel);
  ASSERT_FALSE(s.equal);
  EXPECT_EQ(s.points_checked, p.points_checked);
  EXPECT_EQ(s.counterexample, p.counterexample);
}

TEST(TextForm, RoundTrips) {
  for (int n = 2; n <= 5; ++n) {
    const auto cat = catalog(n);
    for (const auto& e : cat.entries()) {
      EXPECT_EQ(parse_pos_expr(to_string(e.expr)), e.expr) << e.name;
      const auto tr = tropicalize(e.expr);
      EXPECT_EQ(parse_trop_expr(to_string(tr)), tr) << e.name;
    }
  }
  EXPECT_EQ(parse_trop_expr("max(-3, (x2 - x3), (x4 + 2))"),
            TropExpr::max({TropExpr::constant(-3), TropExpr::minus(t("x2"), t("x3")),
                           TropExpr::plus({t("x4"), TropExpr::constant(2)})}));
  EXPECT_EQ(parse_pos_expr("(3/4 * x2)"), PosExpr::constant(q("3/4")) * v("x2"));
}

TEST(TextForm, ParseErrors) {
  EXPECT_THROW(parse_pos_expr("(x2 - x3)"), ParseError);
  EXPECT_THROW(parse_pos_expr("(x2 + x3"), ParseError);
  EXPECT_THROW(parse_pos_expr("(x2 / x3 / x4)"), ParseError);
  EXPECT_THROW(parse_pos_expr("x2 x3"), ParseError);
  EXPECT_THROW(parse_pos_expr("0"), DomainError);
  EXPECT_THROW(parse_trop_expr("max()"), ParseError);
  EXPECT_THROW(parse_trop_expr("(x2 * x3)"), ParseError);
}

TEST(Catalog, Examples) {
  auto at = [](const TorusPoint& x, const Rational& c) {
    Assignment<Rational> a;
    a.set(0, c);
    for (int k = 2; k <= 2 * x.n - 1; ++k) a.set(k, x[k]);
    return a;
  };
  // 1 / (x_3 x_4) with x_3 = 2, x_4 = 3
  EXPECT_EQ(eval_pos(catalog(3).gamma(0), at(x_point(3, {1, 2, 3, 4}), 1)), q("1/6"));

  const auto eps0 = catalog(2).eps(0);
  EXPECT_EQ(eps0, v("x3") * (v("x2") / v("x3")));
  EXPECT_EQ(eval_pos(eps0, at(x_point(2, {3, 5}), 1)), 3);

  // x_2' = c_2 x_2 with x_2 = 1
  EXPECT_EQ(eval_pos(catalog(3).action(2, 2), at(x_point(3, {1, 1, 1, 1}), 2)), q("4/3"));
  EXPECT_THROW(catalog(3).at("eps9"), DomainError);
}

TEST(Catalog, CoversEveryFormula) {
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(catalog(n).entries().size(),
              static_cast<std::size_t>(2 * (n + 1) + (n + 1) * (2 * n - 2)));
}

TEST(Catalog, PositiveAtPositivePoints) {
  for (int n = 2; n <= 6; ++n) {
    const auto cat = catalog(n);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto x = oracle::random_x(n, 17, s);
      TrialRng rng(18, s);
      Assignment<Rational> a;
      a.set(0, rng.positive_rational());
      for (int k = 2; k <= 2 * n - 1; ++k) a.set(k, x[k]);
      for (const auto& e : cat.entries()) EXPECT_GT(eval_pos(e.expr, a), 0) << e.name;
    }
  }
}

TEST(Catalog, AgreesWithClosedForms) {
  for (int n = 2; n <= 6; ++n) {
    const auto cat = catalog(n);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto x = oracle::random_x(n, 23, s);
      const Rational c = TrialRng(24, s).positive_rational();
      Assignment<Rational> a;
      a.set(0, c);
      for (int k = 2; k <= 2 * n - 1; ++k) a.set(k, x[k]);
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(eval_pos(cat.gamma(i), a), geom_gamma(i, x));
        EXPECT_EQ(eval_pos(cat.eps(i), a), geom_eps(i, x));
        const auto moved = geom_e(i, c, x);
        for (int k = 2; k <= 2 * n - 1; ++k) EXPECT_EQ(eval_pos(cat.action(i, k), a), moved[k]);
      }
    }
  }
}

TEST(Catalog, TropicalWeightsMatchHandFormulas) {
  // wt_0 = -x_n - x_{n+1} and eps_1 = x_{n+2} - x_{n+1} at n = 3
  const auto cat = catalog(3);
  std::vector<BoxAxis> box{{"x2", -3, 3}, {"x3", -3, 3}, {"x4", -3, 3}, {"x5", -3, 3}};
  EXPECT_TRUE(trop_equal_on_box(tropicalize(cat.gamma(0)), parse_trop_expr("((0 - x3) - x4)"), box)
                  .equal);
  EXPECT_TRUE(trop_equal_on_box(tropicalize(cat.eps(1)), parse_trop_expr("(x5 - x4)"), box).equal);
}
