#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sigmak/analysis.hpp"
#include "sigmak/presets.hpp"

using namespace sigmak;

namespace {
const Poly kQuintic{20, -45, 640, -190, 0, 1};
const Poly kQuartic = Poly{-5, 1} * Poly{-5, 1} * Poly{51, 10, 1};
const SigmaKPolynomial kQuinticEq(5, {-20, 9, -64, 19, 0});

std::vector<Rational> descent_grid() {
  std::vector<Rational> ys;
  for (int i = 1; i <= 12; ++i) ys.push_back(2 + Rational(i, 4));
  return ys;
}
}  // namespace

TEST(Alpha, Examples) {
  for (long x : {-3L, 1L, 7L}) EXPECT_EQ(*alpha(Poly{0, 0, 1}, Rational(x)).exact, Rational(1, 2));
  EXPECT_NEAR(alpha(kQuintic, 1e6).alpha, 0.8, 1e-5);
  AlphaSample at5 = alpha(kQuartic, Rational(5));
  EXPECT_EQ(at5.regime, AlphaRegime::CriticalLimit);
  EXPECT_EQ(*at5.exact, Rational(1, 2));
}

TEST(Alpha, FrozenSympyValues) {
  EXPECT_EQ(*alpha(kQuartic, Rational(6)).exact, Rational(3528, 6241));
  EXPECT_EQ(*alpha(kQuartic, Rational(8)).exact, Rational(25, 39));
  EXPECT_EQ(*alpha(kQuintic, Rational(12)).exact, Rational(53857664, 272543445));
  EXPECT_EQ(alpha_derivative(kQuintic, Rational(12)), Rational(865095538544, 2012188254435));
}

TEST(Alpha, CriticalPointLimits) {
  // x^3 at 0: p p'' / p'^2 = 2/3 identically
  EXPECT_EQ(*alpha(Poly{0, 0, 0, 1}, Rational(0)).exact, Rational(2, 3));
  // x^2 + 1 at 0: pole of even order with positive sign
  AlphaSample s = alpha(Poly{1, 0, 1}, Rational(0));
  EXPECT_TRUE(std::isinf(s.alpha));
  EXPECT_GT(s.alpha, 0);
  // linear p: p'' = 0 so alpha is 0
  EXPECT_EQ(*alpha(Poly{3, 2}, Rational(1)).exact, 0);
  // irrational critical point sqrt(2) of x^3 - 6x, where p < 0 < p''
  const Poly p{0, -6, 0, 1};
  AlgebraicNumber c = *largest_real_root(derivative(p));
  AlphaSample a = alpha_at(p, c);
  EXPECT_EQ(a.regime, AlphaRegime::CriticalLimit);
  EXPECT_TRUE(a.determined);
  EXPECT_TRUE(std::isinf(a.alpha));
  EXPECT_LT(a.alpha, 0);
}

TEST(AlphaLimit, Examples) {
  auto l5 = alpha_limit(kQuintic);
  EXPECT_EQ(l5.limit, Rational(4, 5));
  EXPECT_TRUE(l5.gaps_decreasing);
  auto l1 = alpha_limit(Poly{1, 3});
  EXPECT_EQ(l1.limit, 0);
  auto l2 = alpha_limit(Poly{-3, 1} * Poly{2, 1});
  EXPECT_EQ(l2.limit, Rational(1, 2));
  EXPECT_TRUE(l2.gaps_decreasing);
}

TEST(AlphaDerivative, Examples) {
  EXPECT_EQ(alpha_derivative(Poly{0, 0, 1}, Rational(5)), 0);
  EXPECT_GT(alpha_derivative(kQuintic, Rational(12)), 0);
  EXPECT_THROW(alpha_derivative(kQuartic, Rational(5)), Error);
}

TEST(AlphaDerivative, MatchesCentralDifference) {
  std::mt19937_64 rng(151);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    Poly p = oracle::random_integer_poly(rng, 3 + t % 4, 9);
    const double x = oracle::random_rational(rng, 400, 100).get_d();
    const Rational xq = from_double(x);
    if (derivative(p)(xq) == 0) continue;
    const double h = 1e-6;
    // exact alpha at the two stencil points, so only truncation error remains
    const Rational lo = alpha_exact_regular(p, from_double(x - h)), hi = alpha_exact_regular(p, from_double(x + h));
    const double fd = Rational((hi - lo) / (from_double(x + h) - from_double(x - h))).get_d();
    const double an = alpha_derivative(p, xq).get_d();
    if (std::fabs(an) < 1e-3 || std::fabs(derivative(p)(xq).get_d()) < 1e-2) continue;
    EXPECT_NEAR(fd, an, 1e-4 * std::fabs(an)) << p.to_string() << " at " << x;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Monotonicity, Examples) {
  auto a = monotonicity_scan(kQuintic, 512);
  EXPECT_TRUE(a.passed());
  EXPECT_LT(a.sup, 0.8);
  EXPECT_LT(a.endpoint_value, 0);

  auto b = monotonicity_scan(kQuartic, 256);
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.top_multiplicity, 2);
  EXPECT_NEAR(b.endpoint_value, 0.5, 1e-12);
  EXPECT_LT(b.sup, 0.75);

  auto c = monotonicity_scan(Poly{-1, 0, 1}, 128);
  EXPECT_TRUE(c.passed());
  EXPECT_LT(c.sup, 0.5);

  EXPECT_THROW(monotonicity_scan(Poly{1, 0, 1}, 10), Error);
}

TEST(Monotonicity, EveryCertifiedRandomPolynomial) {
  std::mt19937_64 rng(157);
  int scanned = 0;
  for (int t = 0; t < 120; ++t) {
    Poly p = oracle::random_integer_poly(rng, 2 + t % 5, 9);
    if (!certify_right(p).ok()) continue;
    EXPECT_TRUE(monotonicity_scan(p, 64).passed()) << p.to_string();
    ++scanned;
  }
  EXPECT_GT(scanned, 10);
}

TEST(StrongLogConcavity, DerivativesBelowOneRightOfTopRoot) {
  for (const Poly& p : {kQuintic, kQuartic}) {
    const auto cert = certify_right(p);
    const Rational x0 = refine(*cert.chain[0], pow10_q(-9)).hi();
    for (int k = 0; k <= p.degree() - 2; ++k) {
      const Poly d = derivative(p, k);
      for (int i = 1; i <= 100; ++i) {
        const Rational x = x0 + Rational(i * i, 10);
        EXPECT_LE(*alpha(d, x).exact, 1);
      }
    }
  }
}

TEST(RatioBounds, Examples) {
  EXPECT_TRUE(prop25_check(kQuintic, 10).holds);
  auto m = prop25_check(Poly{0, 0, 0, 1}, 1);
  EXPECT_TRUE(m.holds);
  EXPECT_TRUE(m.derivative_bound);
  EXPECT_FALSE(*m.product_bound_strict);  // equality for monomials
  const Poly g{24, 10, -650, -190, 0, 1};
  const Rational x1 = refine(*certify_right(g).chain[1], pow10_q(-9)).hi();
  EXPECT_TRUE(prop25_check(g, x1).holds);
  EXPECT_THROW(prop25_check(Poly{1, 1}, 1), Error);
}

TEST(Deformation, Examples) {
  auto at5 = deformation(kQuartic, 5);
  EXPECT_EQ(at5.m, 2);
  EXPECT_EQ(at5.P, kQuartic);
  // sympy: p - p(3) - (x - 3) p'(3)
  EXPECT_EQ(deformation(kQuartic, 3).P, (Poly{27, 36, -24, 0, 1}));
  for (int i = 0; i <= 12; ++i) {
    const Rational y = 2 + Rational(i, 4);
    EXPECT_EQ(deformation(kQuartic, y).P(y), 0);
  }
  // at y = x_m the top root gains multiplicity
  EXPECT_GE(multiplicity_at_largest_root(deformation(kQuartic, 2).P), 3);
  EXPECT_THROW(deformation(kQuartic, 6), Error);
  EXPECT_THROW(deformation(kQuartic, 1), Error);
  EXPECT_THROW(deformation(Poly{1, 0, 1}, 0), Error);
}

TEST(Deformation, SimpleTopRootRangeIsX1ToX0) {
  const Poly p = Poly{-1, 1} * Poly{-2, 1} * Poly{-4, 1};
  const auto cert = certify_right(p);
  const Rational x1 = refine(*cert.chain[1], pow10_q(-9)).hi();
  EXPECT_NO_THROW(deformation(p, x1));
  EXPECT_NO_THROW(deformation(p, 4));
  EXPECT_THROW(deformation(p, x1 - 1), Error);
}

TEST(Descent, TwelvePointGrid) {
  DescentOptions opt;
  opt.x_max = parse_rational("8.4");
  auto r = deformation_alpha_descent(kQuartic, descent_grid(), opt);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.comparisons, 11 * 200);
  EXPECT_GT(r.min_margin, 0);
  EXPECT_EQ(r.curves.size(), 12u * 200u);
}

TEST(Descent, SingleYIsVacuous) {
  auto r = deformation_alpha_descent(kQuartic, {Rational(3)});
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.comparisons, 0);
}

TEST(Descent, RandomRealRootedCubics) {
  std::mt19937_64 rng(163);
  for (int t = 0; t < 20; ++t) {
    std::vector<long> roots{long(rng() % 9), long(rng() % 9) + 10, long(rng() % 9) + 20};
    Poly p = Poly::linear_root(roots[0]) * Poly::linear_root(roots[1]) * Poly::linear_root(roots[2]);
    const auto cert = certify_right(p);
    const Rational x1 = refine(*cert.chain[1], pow10_q(-6)).hi();
    std::vector<Rational> ys;
    for (int i = 0; i <= 6; ++i) ys.push_back(x1 + (Rational(roots[2]) - x1) * Rational(i, 6));
    DescentOptions opt;
    opt.x_samples = 40;
    EXPECT_TRUE(deformation_alpha_descent(p, ys, opt).passed);
  }
}

TEST(HDerivatives, MongeAmpereBorderedEntry) {
  auto h = h_derivatives(monge_ampere(2, 1), std::vector<Rational>{2, Rational(1, 2)});
  ASSERT_EQ(h.bordered.size(), 1u);
  EXPECT_EQ(h.bordered[0][0], Rational(1, 2));
  EXPECT_THROW(h_derivatives(monge_ampere(2, 1), std::vector<Rational>{2, 1}), Error);
  EXPECT_THROW(h_derivatives(monge_ampere(2, 1), std::vector<Rational>{0, 1}), Error);
  EXPECT_THROW(h_derivatives(SigmaKPolynomial(2, {1, 1}), std::vector<Rational>{2, 1}), Error);
}

TEST(HDerivatives, BorderedEqualsScaledGraphHessianExactly) {
  // lambda_1 lambda_2 = 3, so lambda_2'' = 6 / lambda_1^3
  const SigmaKPolynomial f(2, {3, 0});
  for (long a : {1L, 2L, 5L}) {
    const Rational l1(a), l2 = Rational(3) / l1;
    auto h = h_derivatives(f, std::vector<Rational>{l1, l2});
    const Rational second = 6 / (l1 * l1 * l1);
    EXPECT_EQ(h.bordered[0][0], h.graph_factor * second);
  }
}

TEST(HDerivatives, SymmetricPointHasEqualOffDiagonals) {
  const SigmaKPolynomial f(4, {1, 2, 3, 0});
  const Rational t(5);
  const Rational ln = graph_lambda_n(f, std::vector<Rational>{t, t, t});
  auto h = h_derivatives(f, std::vector<Rational>{t, t, t, ln});
  EXPECT_EQ(h.bordered[0][1], h.bordered[0][2]);
  EXPECT_EQ(h.bordered[1][2], h.bordered[0][1]);
  EXPECT_EQ(h.bordered[0][0], h.bordered[2][2]);
}

TEST(HDerivatives, MatchesFiniteDifferenceHessian) {
  const SigmaKPolynomial f(4, {1, 2, 3, 0});
  std::vector<double> base{4.5, 6.0, 5.25};
  std::vector<long double> bl(base.begin(), base.end());
  auto lam = bl;
  lam.push_back(graph_lambda_n(f, bl));
  auto h = h_derivatives(f, lam);
  auto H = hessian_levelset_numeric(f, base);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      const double want = static_cast<double>(h.bordered[i][j]);
      EXPECT_NEAR(static_cast<double>(h.graph_factor) * H.H[i][j], want, 1e-5 * std::fabs(want) + 1e-10);
    }
}

TEST(DiagScalar, MatchesAlphaFormExactly) {
  EXPECT_EQ(hessian_diag_scalar(kQuinticEq, Rational(12)).difference, 0);
  EXPECT_GT(hessian_diag_scalar(kQuinticEq, Rational(12)).scalar, 0);
  auto ma = hessian_diag_scalar(monge_ampere(3, 1), Rational(2));
  EXPECT_EQ(ma.difference, 0);
  EXPECT_GT(ma.scalar, 0);
  auto fl = hessian_diag_scalar(kQuinticEq, 12.0);
  EXPECT_NEAR(fl.scalar, fl.via_alpha, 1e-9 * std::fabs(fl.via_alpha));
  EXPECT_THROW(hessian_diag_scalar(kQuinticEq, Rational(0)), Error);
}

TEST(DiagScalar, PositiveRightOfX1) {
  const Poly r = diagonal_restriction(kQuinticEq);
  const Rational x1 = refine(*certify_right(r).chain[1], pow10_q(-9)).hi();
  for (int i = 1; i <= 50; ++i) EXPECT_GT(hessian_diag_scalar(kQuinticEq, Rational(x1 + Rational(i * i, 7))).scalar, 0);
}

TEST(HessianNumeric, Examples) {
  auto ma = hessian_levelset_numeric(monge_ampere(2, 1), {2.0});
  EXPECT_NEAR(ma.H[0][0], 0.25, 1e-7);
  EXPECT_STREQ(ma.label, "conjecture-exploration");
  auto ex = hessian_levelset_numeric(kQuinticEq, {12.0, 12.0, 12.0, 12.0});
  EXPECT_GT(ex.min_eigenvalue, 0);
  EXPECT_THROW(hessian_levelset_numeric(monge_ampere(2, 1), {-1.0}), Error);
}

TEST(HessianNumeric, StepHalvingIsSecondOrder) {
  // error ratio between steps h and h/2 is about 4 against the closed form 2/l^3
  const double l = 1.5, exact = 2 / (l * l * l);
  const double e1 = hessian_levelset_numeric(monge_ampere(2, 1), {l}, 1e-2).H[0][0] - exact;
  const double e2 = hessian_levelset_numeric(monge_ampere(2, 1), {l}, 5e-3).H[0][0] - exact;
  EXPECT_NEAR(e1 / e2, 4.0, 0.1);
}

TEST(Convexity, MidpointsStayInside) {
  EXPECT_EQ(midpoint_convexity_test(monge_ampere(2, 1), 1000, 1).failures, 0);
  EXPECT_EQ(midpoint_convexity_test(kQuinticEq, 1000, 2).failures, 0);
  EXPECT_THROW(midpoint_convexity_test(SigmaKPolynomial(2, {-1, 0}), 10, 1), Error);
}
