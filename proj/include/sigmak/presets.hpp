#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "sigmak/sigma_k.hpp"

namespace sigmak {

inline SigmaKPolynomial monge_ampere(int n, const Rational& c0) {
  if (c0 <= 0) throw Error(ErrorCode::NonPositiveConstant, "Monge-Ampere constant must be positive");
  std::vector<Rational> c(static_cast<size_t>(n));
  c[0] = c0;
  return SigmaKPolynomial(n, std::move(c));
}

inline SigmaKPolynomial j_equation(int n, const Rational& c_top) {
  if (c_top <= 0) throw Error(ErrorCode::NonPositiveConstant, "J-equation constant must be positive");
  std::vector<Rational> c(static_cast<size_t>(n));
  c.back() = c_top;
  return SigmaKPolynomial(n, std::move(c));
}

struct NonnegPreset {
  SigmaKPolynomial f;
  bool valid = false;  // c_k >= 0 for k <= n-2 and their sum is positive
};

inline bool nonneg_hypothesis(const std::vector<Rational>& lower) {
  Rational sum = 0;
  for (const Rational& v : lower) {
    if (v < 0) return false;
    sum += v;
  }
  return sum > 0;
}

// sigma_n + c_top sigma_{n-1} = sum_{k<=n-2} c_k sigma_k; the top coefficient
// enters with a plus sign, so it is stored as -c_top.
inline NonnegPreset nonneg_coeff(int n, const std::vector<Rational>& lower, const Rational& c_top,
                                 bool require_hypothesis = true) {
  if (static_cast<int>(lower.size()) != n - 1) throw Error(ErrorCode::DimensionMismatch, "need n-1 lower coefficients");
  const bool ok = nonneg_hypothesis(lower);
  if (require_hypothesis && !ok)
    throw Error(ErrorCode::HypothesisViolated, "need c_k >= 0 for k <= n-2 with positive sum");
  std::vector<Rational> c = lower;
  c.push_back(-c_top);
  return {SigmaKPolynomial(n, std::move(c)), ok};
}

// sigma_n = c_k sigma_k, the single-term member of the same family.
inline SigmaKPolynomial hessian_quotient(int n, int k, const Rational& ck) {
  if (k < 0 || k > n - 2) throw Error(ErrorCode::BadSubsetSize, "hessian preset needs 0 <= k <= n-2");
  if (ck <= 0) throw Error(ErrorCode::NonPositiveConstant, "hessian constant must be positive");
  std::vector<Rational> lower(static_cast<size_t>(n - 1));
  lower[static_cast<size_t>(k)] = ck;
  return nonneg_coeff(n, lower, 0).f;
}

// Phase theta = q*pi + offset (offset in radians).
struct DhymSpec {
  int n = 2;
  Rational theta_over_pi = 0;
  Rational offset = 0;
  int precision = 15;  // significant decimal digits kept in each coefficient
};

struct DhymPreset {
  SigmaKPolynomial f;                     // rational approximation of the coefficients
  std::vector<long double> coefficients;  // the long double values before rounding
  std::vector<long double> expected_chain;
  bool mirror = false;  // true on the left-Noetherian branch
};

namespace detail {

// sin(r*pi) with r reduced exactly mod 2 first.
inline long double sin_pi(const Rational& r) {
  const Rational two = 2;
  Rational red = r - two * Rational(floor_q(r / two));
  if (red > 1) red -= two;
  return std::sin(scalar_from<long double>(red) * 3.141592653589793238462643383279502884L);
}

inline long double phase(const DhymSpec& s) {
  return scalar_from<long double>(s.theta_over_pi) * 3.141592653589793238462643383279502884L +
         scalar_from<long double>(s.offset);
}

// +1 if theta > b*pi, -1 if below, 0 if too close to call.
inline int phase_vs(const DhymSpec& s, const Rational& b) {
  if (s.offset == 0) return sign(s.theta_over_pi - b);
  long double d = (scalar_from<long double>(s.theta_over_pi - b)) * 3.141592653589793238462643383279502884L +
                  scalar_from<long double>(s.offset);
  if (std::fabs(d) < 1e-15L) return 0;
  return d > 0 ? 1 : -1;
}

inline Rational round_significant(long double v, int digits) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*Le", digits - 1, v);
  return parse_rational(buf);
}

}  // namespace detail

// Sum of arctan(lambda_i) = theta rewritten as Im(e^{-i theta} prod(1 + i lambda_j)) = 0,
// normalized so sigma_n has coefficient 1:
//   c_k = sin(theta - k pi/2) / sin(n pi/2 - theta).
inline DhymPreset dhym(const DhymSpec& s) {
  const int n = s.n;
  if (n < 1) throw Error(ErrorCode::DegreeTooLow, "dhym needs n >= 1");
  if (s.precision < 1 || s.precision > 30) throw Error(ErrorCode::ParseError, "precision must be in [1, 30]");
  DhymPreset out;
  const bool super = detail::phase_vs(s, Rational(n - 2, 2)) > 0 && detail::phase_vs(s, Rational(n, 2)) < 0;
  const bool mirror = detail::phase_vs(s, Rational(-n, 2)) > 0 && detail::phase_vs(s, Rational(-(n - 2), 2)) < 0;
  if (!super && !mirror) throw Error(ErrorCode::PhaseOutOfRange, "phase outside both supercritical branches");
  out.mirror = mirror;
  const long double theta = detail::phase(s);
  const long double pi = 3.141592653589793238462643383279502884L;
  auto sin_shifted = [&](const Rational& k_half) {
    // sin(theta - k_half*pi), exact reduction when the offset is zero
    if (s.offset == 0) return detail::sin_pi(s.theta_over_pi - k_half);
    return std::sin(theta - scalar_from<long double>(k_half) * pi);
  };
  const long double den = -sin_shifted(Rational(n, 2));  // sin(n pi/2 - theta)
  if (std::fabs(den) < 1e-15L) throw Error(ErrorCode::DegeneratePhase, "sin(n pi/2 - theta) = 0");
  std::vector<Rational> c;
  for (int k = 0; k < n; ++k) {
    long double v = sin_shifted(Rational(k, 2)) / den;
    out.coefficients.push_back(v);
    c.push_back(detail::round_significant(v, s.precision));
  }
  out.f = SigmaKPolynomial(n, std::move(c));
  for (int k = 0; k < n; ++k) {
    // right chain tan((theta - k pi/2)/(n-k)); the mirror branch reports the
    // smallest-root chain tan((theta + k pi/2)/(n-k))
    long double arg = mirror ? (theta + k * pi / 2) / (n - k) : (theta - k * pi / 2) / (n - k);
    out.expected_chain.push_back(std::tan(arg));
  }
  return out;
}

struct ClosedFormResult {
  bool strictly_stable = false;
  bool decided = true;       // false when a floating comparison sat inside the guard band
  double margin = 0;         // signed slack of the last inequality evaluated
  std::optional<double> x1;  // largest root of the depressed cubic (n = 4)
  std::string branch;
};

// Explicit inequalities for n <= 4 with c_{n-1} = 0.
inline ClosedFormResult closed_form_criterion(const SigmaKPolynomial& f) {
  if (f.n < 2 || f.n > 4) throw Error(ErrorCode::DegreeOutOfRange, "closed form covers n = 2, 3, 4");
  if (f.top() != 0) throw Error(ErrorCode::TopCoefficientNotZero, "translate first so that c_{n-1} = 0");
  ClosedFormResult r;
  const Rational& c0 = f.c[0];
  if (f.n == 2) {
    r.branch = "n2";
    r.margin = c0.get_d();
    r.strictly_stable = c0 > 0;
    return r;
  }
  const Rational& c1 = f.c[1];
  if (f.n == 3) {
    // c1 >= 0 and c0 > -2 c1^{3/2}, squared when c0 <= 0
    r.branch = "n3";
    r.margin = c0.get_d() + 2 * std::pow(std::max(c1.get_d(), 0.0), 1.5);
    r.strictly_stable = c1 >= 0 && (c0 > 0 || c0 * c0 < 4 * c1 * c1 * c1);
    return r;
  }
  const Rational& c2 = f.c[2];
  if (c2 < 0) {
    r.branch = "c2<0";
    r.margin = c2.get_d();
    return r;
  }
  if (!(c1 >= 0 || c1 * c1 <= 4 * c2 * c2 * c2)) {
    r.branch = "c1<-2c2^1.5";
    r.margin = c1.get_d() + 2 * std::pow(c2.get_d(), 1.5);
    return r;
  }
  using LD = long double;
  const LD C1 = scalar_from<LD>(c1), C2 = scalar_from<LD>(c2), C0 = scalar_from<LD>(c0);
  LD x1;
  if (c2 == 0) {
    r.branch = "cbrt";
    x1 = std::cbrt(C1);
  } else if (4 * c2 * c2 * c2 - c1 * c1 >= 0) {
    r.branch = "cos";
    LD arg = std::clamp(C1 / (2 * std::pow(C2, 1.5L)), -1.0L, 1.0L);
    x1 = 2 * std::sqrt(C2) * std::cos(std::acos(arg) / 3);
  } else {
    r.branch = "cosh";
    x1 = 2 * std::sqrt(C2) * std::cosh(std::acosh(C1 / (2 * std::pow(C2, 1.5L))) / 3);
  }
  r.x1 = static_cast<double>(x1);
  const LD m = C0 + 3 * C2 * x1 * x1 + 3 * C1 * x1;
  r.margin = static_cast<double>(m);
  const LD scale = 1 + std::fabs(C0) + std::fabs(3 * C2 * x1 * x1) + std::fabs(3 * C1 * x1);
  r.decided = std::fabs(m) > 1e-15L * scale;
  r.strictly_stable = m > 0;
  return r;
}

}  // namespace sigmak
