#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sigmak/noetherian.hpp"
#include "sigmak/resultant.hpp"

using namespace sigmak;

namespace {
const Poly kQuintic{20, -45, 640, -190, 0, 1};
const Poly kQuinticG{24, 10, -650, -190, 0, 1};  // diagonal restriction of the dominating equation
const Poly kQuartic = Poly{-5, 1} * Poly{-5, 1} * Poly{51, 10, 1};

AlgebraicNumber sqrt_of(long v) { return *largest_real_root(Poly{-v, 0, 1}); }

bool contains(const AlgebraicNumber& a, double x) { return a.lo().get_d() <= x && x <= a.hi().get_d(); }
}  // namespace

TEST(Isolate, Examples) {
  auto r = isolate_real_roots(Poly{-1, 0, 0, 1});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].is_rational());
  EXPECT_EQ(r[0].lo(), 1);
  EXPECT_EQ(r[0].multiplicity_in_source, 1);

  EXPECT_TRUE(isolate_real_roots(Poly{1, 0, 1}).empty());

  auto q = isolate_real_roots(kQuartic);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].lo(), 5);
  EXPECT_EQ(q[0].multiplicity_in_source, 2);
  EXPECT_THROW(isolate_real_roots(Poly()), Error);
}

TEST(Isolate, IntervalsAreDisjointAndIsolating) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    Poly p = oracle::random_integer_poly(rng, 1 + t % 8, 10);
    auto roots = isolate_real_roots(p);
    for (size_t i = 0; i < roots.size(); ++i) {
      const auto& a = roots[i];
      EXPECT_LE(a.lo(), a.hi());
      if (!a.is_rational()) {
        EXPECT_EQ(SturmChain(a.defining).count_roots(a.lo(), a.hi()), 1);
        EXPECT_LT(sign(a.defining(a.lo())) * sign(a.defining(a.hi())), 0);
      } else {
        EXPECT_EQ(p(a.lo()), 0);
      }
      if (i) { EXPECT_LT(roots[i - 1].hi(), a.lo()); }
    }
  }
}

TEST(Isolate, MatchesCompanionOracle) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    Poly p = oracle::random_integer_poly(rng, 1 + t % 8, 10);
    auto rr = oracle::real_roots(p);
    if (rr.ambiguous) continue;
    std::vector<double> mine;
    for (const auto& a : isolate_real_roots(p))
      for (int m = 0; m < a.multiplicity_in_source; ++m) mine.push_back(to_double(a));
    ASSERT_EQ(mine.size(), rr.roots.size()) << p.to_string();
    for (size_t i = 0; i < mine.size(); ++i) EXPECT_NEAR(mine[i], rr.roots[i], 1e-6 * (1 + std::fabs(mine[i])));
    ++checked;
  }
  EXPECT_GT(checked, 250);
}

TEST(Isolate, MultiplicityFromYunFactors) {
  const Poly p = Poly{-1, 1} * Poly{-1, 1} * Poly{-1, 1} * Poly{-2, 0, 1} * Poly{-2, 0, 1};
  auto r = isolate_real_roots(p);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].multiplicity_in_source, 2);
  EXPECT_EQ(r[1].multiplicity_in_source, 3);
  EXPECT_EQ(r[2].multiplicity_in_source, 2);
}

TEST(LargestRoot, ExampleChain) {
  const char* want[] = {"11.632", "9.306", "6.909", "4.359", "0.000"};
  for (int k = 0; k < 5; ++k) {
    auto x = largest_real_root(derivative(kQuintic, k));
    ASSERT_TRUE(x);
    EXPECT_EQ(approx(*x, 3), want[k]) << "level " << k;
  }
  EXPECT_EQ(approx(*largest_real_root(Poly::monomial(1, 4)), 3), "0.000");
  auto s19 = largest_real_root(derivative(kQuintic, 3));
  EXPECT_EQ(approx(*s19, 4), "4.3589");
}

TEST(Refine, WidthAndContainment) {
  AlgebraicNumber s2 = sqrt_of(2);
  AlgebraicNumber r = refine(s2, Rational(1, 100));
  EXPECT_LE(r.interval.width(), Rational(1, 100));
  EXPECT_TRUE(contains(r, 1.41421356));

  AlgebraicNumber q = AlgebraicNumber::rational(Rational(3, 4));
  EXPECT_EQ(refine(q, Rational(1, 1000)).interval.lo, Rational(3, 4));

  AlgebraicNumber y0 = refine(*largest_real_root(kQuinticG), pow10_q(-4));
  EXPECT_TRUE(contains(y0, 15.2503209704038));  // sympy
  EXPECT_LE(y0.interval.width(), pow10_q(-4));
}

TEST(Refine, Idempotent) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 50; ++t) {
    Poly p = oracle::random_integer_poly(rng, 2 + t % 6, 10);
    for (const auto& a : isolate_real_roots(p)) {
      const Rational eps(1, 1000);
      AlgebraicNumber once = refine(a, eps), twice = refine(once, eps);
      EXPECT_GE(twice.lo(), once.lo());
      EXPECT_LE(twice.hi(), once.hi());
      EXPECT_LE(twice.lo(), a.hi());
    }
  }
}

TEST(SignAt, Examples) {
  EXPECT_EQ(sign_at(Poly{-2, 0, 1}, sqrt_of(2)), 0);
  EXPECT_EQ(sign_at(Poly{-2, 0, 1}, sqrt_of(3)), 1);
  EXPECT_EQ(sign_at(Poly{-2, 0, 1}, negate(sqrt_of(3))), 1);
  AlgebraicNumber x1 = *largest_real_root(derivative(kQuintic));
  EXPECT_EQ(sign_at(kQuintic, x1), -1);
  EXPECT_EQ(sign_at(Poly{0, 1}, AlgebraicNumber::rational(0)), 0);
}

TEST(SignAt, ZeroExactlyOnSharedRoot) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 150; ++t) {
    Poly base = oracle::random_integer_poly(rng, 1 + t % 3, 6);
    Poly p = base * oracle::random_integer_poly(rng, 1 + t % 3, 6);
    Poly q = (t % 2 ? base : Poly::constant(1)) * oracle::random_integer_poly(rng, 1 + t % 4, 6);
    for (const auto& a : isolate_real_roots(q)) {
      const int s = sign_at(p, a);
      const bool shared = resultant(p, a.defining) == 0 &&
                          (a.is_rational() ? p(a.lo()) == 0
                                           : SturmChain(gcd(p, a.defining)).count_roots(a.lo(), a.hi()) == 1);
      EXPECT_EQ(s == 0, shared);
      if (s != 0) {
        const double v = p.eval_double(to_double(a));
        if (std::fabs(v) > 1e-6) { EXPECT_EQ(s, v > 0 ? 1 : -1); }
      }
    }
  }
}

TEST(Compare, Examples) {
  AlgebraicNumber a = sqrt_of(19);
  AlgebraicNumber b = *largest_real_root(Poly{-1140, 0, 60});
  EXPECT_EQ(compare(a, b), Ordering::Equal);

  AlgebraicNumber x3 = *largest_real_root(derivative(kQuintic, 3));
  AlgebraicNumber y3 = *largest_real_root(derivative(kQuinticG, 3));
  EXPECT_EQ(compare(y3, x3), Ordering::Equal);

  AlgebraicNumber x0 = *largest_real_root(kQuintic), y0 = *largest_real_root(kQuinticG);
  EXPECT_EQ(compare(y0, x0), Ordering::Greater);
  EXPECT_EQ(compare(x0, y0), Ordering::Less);
}

TEST(Compare, TotalOrderConsistentWithApprox) {
  std::mt19937_64 rng(59);
  std::vector<AlgebraicNumber> all;
  for (int t = 0; t < 30; ++t)
    for (auto& a : isolate_real_roots(oracle::random_integer_poly(rng, 2 + t % 4, 6))) all.push_back(a);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      const Ordering o = compare(all[i], all[j]), r = compare(all[j], all[i]);
      if (o == Ordering::Equal) { EXPECT_EQ(r, Ordering::Equal); }
      if (o == Ordering::Less) { EXPECT_EQ(r, Ordering::Greater); }
      const Rational di = parse_rational(approx(all[i], 8)), dj = parse_rational(approx(all[j], 8));
      if (o == Ordering::Less) { EXPECT_LE(di, dj); }
      if (o == Ordering::Equal) { EXPECT_EQ(di, dj); }
    }
}

TEST(Approx, RoundHalfEvenOnExactTies) {
  EXPECT_EQ(approx(Rational(0), 3), "0.000");
  EXPECT_EQ(approx(Rational(1, 8), 2), "0.12");
  EXPECT_EQ(approx(Rational(3, 8), 2), "0.38");
  EXPECT_EQ(approx(Rational(-1, 8), 2), "-0.12");
  EXPECT_EQ(approx(AlgebraicNumber::rational(Rational(5, 8)), 2), "0.62");
  // 2x - 1/4 has the rational root 1/8, reached through isolation
  auto r = isolate_real_roots(Poly(std::vector<Rational>{Rational(-1, 4), Rational(2)}));
  EXPECT_EQ(approx(r[0], 2), "0.12");
}

TEST(Approx, ErrorBelowUnitInLastPlace) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    for (const auto& a : isolate_real_roots(oracle::random_integer_poly(rng, 2 + t % 5, 9))) {
      const Rational d = parse_rational(approx(a, 6));
      const AlgebraicNumber fine = refine(a, pow10_q(-12));
      EXPECT_LE(abs_q(Rational(d - fine.lo())), pow10_q(-6));
    }
  }
}
