#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "sigmak/sigma_k.hpp"

namespace sigmak {

enum class AlphaRegime { Regular, CriticalLimit, CriticalZeroByDefinition };

inline const char* to_string(AlphaRegime r) {
  switch (r) {
    case AlphaRegime::Regular: return "Regular";
    case AlphaRegime::CriticalLimit: return "CriticalLimit";
    case AlphaRegime::CriticalZeroByDefinition: return "CriticalZeroByDefinition";
  }
  return "?";
}

// alpha = p p'' / p'^2. At a critical point alpha is the two-sided limit
// (possibly +-inf); `determined` is false when the one-sided limits differ.
struct AlphaSample {
  double x = 0;
  double alpha = 0;
  AlphaRegime regime = AlphaRegime::Regular;
  bool determined = true;
  std::optional<Rational> exact;
};

inline Rational alpha_exact_regular(const Poly& p, const Rational& x) {
  const Rational d1 = derivative(p)(x);
  if (d1 == 0) throw Error(ErrorCode::CriticalPoint, "p'(x) = 0");
  return p(x) * derivative(p, 2)(x) / (d1 * d1);
}

inline AlphaSample alpha(const Poly& p, const Rational& x) {
  AlphaSample s;
  s.x = x.get_d();
  if (p.degree() < 1) {
    s.regime = AlphaRegime::CriticalZeroByDefinition;
    s.exact = Rational(0);
    return s;
  }
  const Poly d1 = derivative(p), d2 = derivative(p, 2);
  const Rational v1 = d1(x);
  if (v1 != 0) {
    s.exact = p(x) * d2(x) / (v1 * v1);
    s.alpha = s.exact->get_d();
    return s;
  }
  // Isolated critical point: cancel the common power of t = (y - x).
  s.regime = AlphaRegime::CriticalLimit;
  const Poly q = taylor_shift(p, x);
  const Poly num = q * derivative(q, 2), den = derivative(q) * derivative(q);
  if (num.is_zero()) {
    s.exact = Rational(0);
    return s;
  }
  auto low = [](const Poly& r) {
    int v = 0;
    while (r.coeff(v) == 0) ++v;
    return v;
  };
  const int vn = low(num), vd = low(den);
  const Rational ratio = num.coeff(vn) / den.coeff(vd);
  if (vn > vd) {
    s.exact = Rational(0);
  } else if (vn == vd) {
    s.exact = ratio;
    s.alpha = ratio.get_d();
  } else if ((vd - vn) % 2 == 0) {
    s.alpha = sign(ratio) * std::numeric_limits<double>::infinity();
  } else {
    s.determined = false;
    s.alpha = std::numeric_limits<double>::quiet_NaN();
  }
  return s;
}

inline AlphaSample alpha(const Poly& p, double x) { return alpha(p, from_double(x)); }

// alpha at an algebraic point; irrational critical points use one-sided
// numeric limits at x +- 10^-k, k = 4..8.
inline AlphaSample alpha_at(const Poly& p, const AlgebraicNumber& a) {
  if (a.is_rational()) return alpha(p, a.lo());
  if (p.degree() < 1) return alpha(p, Rational(0));
  const AlgebraicNumber fine = refine(a, pow10_q(-30));
  const Rational mid = (fine.lo() + fine.hi()) / 2;
  if (sign_at(derivative(p), a) != 0) {
    AlphaSample s = alpha(p, mid);
    s.exact.reset();
    return s;
  }
  AlphaSample s;
  s.x = mid.get_d();
  s.regime = AlphaRegime::CriticalLimit;
  std::vector<double> L, R;
  for (int k = 4; k <= 8; ++k) {
    L.push_back(alpha(p, Rational(mid - pow10_q(-k))).alpha);
    R.push_back(alpha(p, Rational(mid + pow10_q(-k))).alpha);
  }
  const double l7 = L[3], l8 = L[4], r7 = R[3], r8 = R[4];
  if (std::fabs(l8 - r8) <= 1e-3 && std::fabs(l8 - l7) <= 1e-3 && std::fabs(r8 - r7) <= 1e-3) {
    s.alpha = 0.5 * (l8 + r8);
  } else if (l8 * r8 > 0 && l7 * l8 > 0 && r7 * r8 > 0 && std::fabs(l8) > 10 * std::fabs(l7) &&
             std::fabs(r8) > 10 * std::fabs(r7)) {
    s.alpha = (l8 > 0 ? 1.0 : -1.0) * std::numeric_limits<double>::infinity();
  } else {
    s.determined = false;
    s.alpha = std::numeric_limits<double>::quiet_NaN();
  }
  return s;
}

inline Rational alpha_derivative(const Poly& p, const Rational& x) {
  const Rational v0 = p(x), v1 = derivative(p)(x), v2 = derivative(p, 2)(x), v3 = derivative(p, 3)(x);
  if (v1 == 0) throw Error(ErrorCode::CriticalPoint, "alpha' undefined where p' = 0");
  return (v1 * v1 * v2 + v0 * v1 * v3 - 2 * v0 * v2 * v2) / (v1 * v1 * v1);
}

inline double alpha_derivative(const Poly& p, double x) { return alpha_derivative(p, from_double(x)).get_d(); }

struct AlphaLimit {
  Rational limit;                 // 1 - 1/n
  std::vector<double> points;     // witness abscissae
  std::vector<double> gaps;       // |alpha - limit| at each witness
  bool gaps_decreasing = true;
};

inline AlphaLimit alpha_limit(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "alpha_limit needs degree >= 1");
  AlphaLimit r;
  r.limit = 1 - Rational(1, p.degree());
  Rational m = 0;
  for (const Rational& a : p.coeffs()) m = std::max(m, abs_q(a));
  for (int e = 3; e <= 5; ++e) {
    Rational X = pow10_q(e) * (1 + m);
    r.points.push_back(X.get_d());
    r.gaps.push_back(abs_q(Rational(alpha_exact_regular(p, X) - r.limit)).get_d());
  }
  for (size_t i = 1; i < r.gaps.size(); ++i)
    if (!(r.gaps[i] < r.gaps[i - 1] || (r.gaps[i] == 0 && r.gaps[i - 1] == 0))) r.gaps_decreasing = false;
  return r;
}

struct ScanOptions {
  double span = 1000.0;
  double tolerance = 1e-9;
  double start_offset = 1e-6;  // first sample sits this far right of x_1
};

struct MonotonicityReport {
  std::vector<AlphaSample> samples;
  bool nondecreasing = true;
  double max_drop = 0;
  double sup = -std::numeric_limits<double>::infinity();
  Rational limit;
  bool below_limit = true;
  int top_multiplicity = 1;
  double endpoint_value = 0;   // alpha near x_1, or alpha(x_0) when x_0 = x_1
  bool endpoint_ok = true;
  bool passed() const { return nondecreasing && below_limit && endpoint_ok; }
};

// Sampled check that alpha_p increases on (x_1, x_1 + span] toward 1 - 1/n.
inline MonotonicityReport monotonicity_scan(const Poly& p, int samples, const ScanOptions& opt = {}) {
  if (samples <= 0) throw Error(ErrorCode::DegreeTooLow, "need at least one sample");
  const NoetherianCertificate cert = certify_right(p);
  if (!cert.ok()) throw Error(ErrorCode::NotCertified, "monotonicity_scan needs a right-Noetherian polynomial");
  MonotonicityReport rep;
  const int n = p.degree();
  rep.limit = 1 - Rational(1, n);
  rep.top_multiplicity = cert.top_multiplicity.value_or(1);
  const Poly& q = cert.normalized;
  const AlgebraicNumber x1 = n >= 2 ? *cert.chain[1] : *cert.chain[0];
  const Rational base = refine(x1, pow10_q(-15)).hi();

  std::vector<double> offsets;
  const int geo = samples / 2, uni = samples - geo;
  for (int i = 0; i < geo; ++i) {
    double t = geo == 1 ? 0.0 : static_cast<double>(i) / (geo - 1);
    offsets.push_back(opt.start_offset * std::pow(opt.span / opt.start_offset, t));
  }
  for (int i = 1; i <= uni; ++i) offsets.push_back(opt.span * i / uni);
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());

  for (double off : offsets) {
    AlphaSample s = alpha(q, Rational(base + from_double(off)));
    rep.sup = std::max(rep.sup, s.alpha);
    if (!rep.samples.empty()) {
      double drop = rep.samples.back().alpha - s.alpha;
      rep.max_drop = std::max(rep.max_drop, drop);
      if (drop > opt.tolerance) rep.nondecreasing = false;
    }
    rep.samples.push_back(std::move(s));
  }
  rep.below_limit = rep.sup <= rep.limit.get_d() + opt.tolerance;
  if (n >= 2 && cert.strict()) {
    rep.endpoint_value = rep.samples.front().alpha;
    rep.endpoint_ok = rep.endpoint_value < 0;
  } else if (n >= 2) {
    AlphaSample at = alpha_at(q, *cert.chain[0]);
    rep.endpoint_value = at.alpha;
    const double want = 1.0 - 1.0 / rep.top_multiplicity;
    rep.endpoint_ok = at.determined && std::fabs(at.alpha - want) <= 1e-6;
  }
  return rep;
}

struct RatioBoundCheck {
  bool derivative_bound = false;              // (n-2) p'p'' >= n p p'''
  std::optional<bool> product_bound;          // 1 - 2/n >= alpha_p * alpha_p'
  std::optional<bool> product_bound_strict;   // 1 - 2/n >  alpha_p * alpha_p'
  bool holds = false;
};

inline RatioBoundCheck prop25_check(const Poly& p, const Rational& x) {
  const int n = p.degree();
  if (n < 3) throw Error(ErrorCode::DegreeTooLow, "prop25_check needs degree >= 3");
  const Poly& q = p.leading() < 0 ? Poly(-p) : p;
  RatioBoundCheck r;
  const Rational v0 = q(x), v1 = derivative(q)(x), v2 = derivative(q, 2)(x), v3 = derivative(q, 3)(x);
  r.derivative_bound = (n - 2) * v1 * v2 >= n * v0 * v3;
  const AlphaSample a = alpha(q, x), b = alpha(derivative(q), x);
  if (a.exact && b.exact) {
    const Rational prod = *a.exact * *b.exact, bound = 1 - Rational(2, n);
    r.product_bound = bound >= prod;
    r.product_bound_strict = bound > prod;
  }
  r.holds = r.derivative_bound && r.product_bound.value_or(true);
  return r;
}

struct DeformationState {
  Rational y;
  int m = 1;
  Poly P;  // P(., y)
};

namespace detail {
struct DeformationSetup {
  NoetherianCertificate cert;
  int m;
  AlgebraicNumber xm, x0;
};

inline DeformationSetup deformation_setup(const Poly& p) {
  NoetherianCertificate cert = certify_right(p);
  if (!cert.ok()) throw Error(ErrorCode::NotCertified, "deformation needs a right-Noetherian polynomial");
  const int m = cert.top_multiplicity.value_or(1);
  if (m >= p.degree()) throw Error(ErrorCode::OutOfDeformationRange, "no lower chain root to deform toward");
  AlgebraicNumber xm = *cert.chain[size_t(m)], x0 = *cert.chain[0];
  return {std::move(cert), m, std::move(xm), std::move(x0)};
}

// y in [x_m, x_0], with rational approximants of the ends allowed.
inline void check_deformation_range(const DeformationSetup& s, const Rational& y) {
  const Rational tol = Rational(1, 1000000000);
  const AlgebraicNumber lo = refine(s.xm, tol), hi = refine(s.x0, tol);
  if (y < lo.lo() - tol || y > hi.hi() + tol) throw Error(ErrorCode::OutOfDeformationRange, "y outside [x_m, x_0]");
}

inline Poly deformed(const Poly& q, int m, const Rational& y) {
  std::vector<Rational> t = taylor_shift(q, y).coeffs();  // t_k = q^(k)(y)/k!
  for (int k = 0; k < m && k < static_cast<int>(t.size()); ++k) t[size_t(k)] = 0;
  return taylor_shift(Poly(std::move(t)), Rational(-y));
}
}  // namespace detail

// P(x, y) = sum_{k >= m} (x - y)^k p^(k)(y) / k!
inline DeformationState deformation(const Poly& p, const Rational& y) {
  const detail::DeformationSetup s = detail::deformation_setup(p);
  detail::check_deformation_range(s, y);
  return {y, s.m, detail::deformed(s.cert.normalized, s.m, y)};
}

struct DescentOptions {
  int x_samples = 200;
  std::optional<Rational> x_max;  // default x_0 + (x_0 - x_m) + 1
};

struct DescentCurvePoint {
  double x, y, alpha;
};

struct DescentReport {
  int comparisons = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  bool passed = true;
  std::vector<DescentCurvePoint> curves;  // alpha_P(x, y) for x in (y, x_max]
};

// Checks alpha_P(x, y_j) > alpha_P(x, y_{j+1}) on a shared x-grid for each
// adjacent pair of y values.
inline DescentReport deformation_alpha_descent(const Poly& p, std::vector<Rational> ys, const DescentOptions& opt = {}) {
  const detail::DeformationSetup s = detail::deformation_setup(p);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (const Rational& y : ys) detail::check_deformation_range(s, y);
  const Rational x0_up = refine(s.x0, pow10_q(-9)).hi();
  const Rational xm_lo = refine(s.xm, pow10_q(-9)).lo();
  const Rational x_max = opt.x_max.value_or(x0_up + (x0_up - xm_lo) + 1);
  const Poly& q = s.cert.normalized;

  std::vector<Poly> P;
  for (const Rational& y : ys) P.push_back(detail::deformed(q, s.m, y));

  DescentReport rep;
  const int S = opt.x_samples;
  for (size_t j = 0; j < ys.size(); ++j) {
    for (int i = 1; i <= S; ++i) {
      Rational x = ys[j] + (x_max - ys[j]) * Rational(i, S);
      AlphaSample a = alpha(P[j], x);
      rep.curves.push_back({x.get_d(), ys[j].get_d(), a.alpha});
    }
  }
  for (size_t j = 0; j + 1 < ys.size(); ++j) {
    for (int i = 1; i <= S; ++i) {
      Rational x = ys[j + 1] + (x_max - ys[j + 1]) * Rational(i, S);
      AlphaSample lo = alpha(P[j], x), hi = alpha(P[j + 1], x);
      if (!lo.exact || !hi.exact) {
        rep.passed = false;
        continue;
      }
      double margin = Rational(*lo.exact - *hi.exact).get_d();
      ++rep.comparisons;
      rep.min_margin = std::min(rep.min_margin, margin);
      if (!(margin > 0)) rep.passed = false;
    }
  }
  return rep;
}

template <class T>
using MatrixT = std::vector<std::vector<T>>;

template <class T>
struct HDerivatives {
  std::vector<T> h;         // h_i
  MatrixT<T> hh;            // h_ij
  MatrixT<T> bordered;      // (n-1) x (n-1)
  T c0n;                    // sum c_k sigma_k(lambda without lambda_n)
  T sigma_n;
  T graph_factor;           // C_{0;n} / (lambda_n sigma_n)
};

namespace detail {
template <class T>
std::vector<T> drop(const std::vector<T>& v, int i, int j = -1) {
  std::vector<T> r;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (k != i && k != j) r.push_back(v[size_t(k)]);
  return r;
}

template <class T>
T weighted_sigma(const SigmaKPolynomial& f, const std::vector<T>& x, int shift = 0) {
  // sum_k c_k sigma_{k - shift}(x)
  const std::vector<T> e = elementary_symmetric(x, static_cast<int>(x.size()));
  T s(0);
  for (int k = shift; k < f.n; ++k)
    if (k - shift <= static_cast<int>(x.size()))
      s += scalar_from<T>(f.c[size_t(k)]) * e[size_t(k - shift)];
  return s;
}

inline bool near_zero(const Rational& v, const Rational&) { return v == 0; }
template <class T>
bool near_zero(const T& v, const T& scale) {
  return std::fabs(static_cast<long double>(v)) <= 1e-9L * (1 + std::fabs(static_cast<long double>(scale)));
}
}  // namespace detail

// First and second derivatives of h = C / sigma_n on the level set {h = 1},
// and the bordered matrix of the implicit graph lambda_n(lambda_1..n-1).
template <class T>
HDerivatives<T> h_derivatives(const SigmaKPolynomial& f, const std::vector<T>& lam) {
  const int n = f.n;
  if (f.top() != 0) throw Error(ErrorCode::TopCoefficientNotZero, "h-formulation needs c_{n-1} = 0");
  if (static_cast<int>(lam.size()) != n) throw Error(ErrorCode::DimensionMismatch, "point dimension != n");
  for (const T& v : lam)
    if (v == T(0)) throw Error(ErrorCode::ZeroCoordinate, "h-formulation needs nonzero coordinates");
  const std::vector<T> e = elementary_symmetric(lam, n);
  const T sn = e[size_t(n)];
  if (!detail::near_zero(T(evaluate(f, lam)), sn)) throw Error(ErrorCode::NotOnLevelSet, "f(lambda) != 0");

  HDerivatives<T> r;
  r.sigma_n = sn;
  r.h.resize(size_t(n));
  r.hh.assign(size_t(n), std::vector<T>(size_t(n)));
  for (int i = 0; i < n; ++i)
    r.h[size_t(i)] = -detail::weighted_sigma(f, detail::drop(lam, i)) / (lam[size_t(i)] * sn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const T w = i == j ? T(2) * detail::weighted_sigma(f, detail::drop(lam, i))
                         : detail::weighted_sigma(f, detail::drop(lam, i, j));
      r.hh[size_t(i)][size_t(j)] = w / (lam[size_t(i)] * lam[size_t(j)] * sn);
    }
  const size_t N = size_t(n - 1);
  const T hn = r.h[N], hnn = r.hh[N][N];
  r.bordered.assign(N, std::vector<T>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      r.bordered[i][j] = r.hh[i][j] + hnn * r.h[i] * r.h[j] / (hn * hn) - r.hh[i][N] * r.h[j] / hn -
                         r.hh[j][N] * r.h[i] / hn;
  r.c0n = detail::weighted_sigma(f, detail::drop(lam, n - 1));
  r.graph_factor = r.c0n / (lam[N] * sn);
  return r;
}

template <class T>
struct DiagScalar {
  T lambda_n;
  T c11, c1n, c212, c21n;  // the C-sums at (x, ..., x, lambda_n)
  T scalar;                // the bracketed second-derivative combination
  T via_alpha;             // r_f'(x)^2 alpha_f'(x) / (n(n-1))
  T difference;
};

// Hessian scalar on the diagonal curve, computed twice: from the C-sum
// expansion and from the log-concavity ratio of r_f.
template <class T>
DiagScalar<T> hessian_diag_scalar(const SigmaKPolynomial& f, const T& x) {
  const int n = f.n;
  if (n < 3) throw Error(ErrorCode::DegreeTooLow, "needs n >= 3");
  if (f.top() != 0) throw Error(ErrorCode::TopCoefficientNotZero, "needs c_{n-1} = 0");
  auto C = [&](int k) { return scalar_from<T>(f.c[size_t(k)]); };
  auto B = [](int a, int b) -> T {
    if (b < 0 || a < 0 || b > a) return T(0);
    return scalar_from<T>(Rational(binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b))));
  };
  auto pw = [&](int e) -> T {
    T r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  };
  DiagScalar<T> d;
  T num(0), den = pw(n - 1);
  for (int k = 0; k <= n - 2; ++k) num += C(k) * B(n - 1, k) * pw(k);
  for (int k = 1; k <= n - 2; ++k) den -= C(k) * B(n - 1, k - 1) * pw(k - 1);
  if (!(den > T(0))) throw Error(ErrorCode::DenominatorNotPositive, "x must lie right of x_1");
  const T ln = num / den;
  d.lambda_n = ln;
  d.c11 = d.c1n = d.c212 = d.c21n = T(0);
  for (int k = 1; k <= n - 2; ++k) {
    d.c11 += C(k) * (B(n - 2, k - 1) * pw(k - 1) + (k >= 2 ? B(n - 2, k - 2) * pw(k - 2) * ln : T(0)));
    d.c1n += C(k) * B(n - 1, k - 1) * pw(k - 1);
  }
  for (int k = 2; k <= n - 2; ++k) {
    d.c212 += C(k) * (B(n - 3, k - 2) * pw(k - 2) + (k >= 3 ? B(n - 3, k - 3) * pw(k - 3) * ln : T(0)));
    d.c21n += C(k) * B(n - 2, k - 2) * pw(k - 2);
  }
  d.scalar = T(2 * (n - 1)) * (pw(n - 2) * ln - d.c11) * (pw(n - 2) - d.c21n) -
             T(n - 2) * (pw(n - 1) - d.c1n) * (pw(n - 3) * ln - d.c212);

  const Poly r = diagonal_restriction(f);
  if constexpr (std::is_same_v<T, Rational>) {
    const Rational r1 = derivative(r)(x);
    d.via_alpha = r1 * r1 * alpha_derivative(r, x) / (n * (n - 1));
  } else {
    const Rational xq = from_double(static_cast<double>(x));
    const Rational r1 = derivative(r)(xq);
    d.via_alpha = scalar_from<T>(Rational(r1 * r1 * alpha_derivative(r, xq) / (n * (n - 1))));
  }
  d.difference = d.scalar - d.via_alpha;
  return d;
}

struct HessianResult {
  std::vector<std::vector<double>> H;  // d^2 lambda_n / d lambda_i d lambda_j
  double min_eigenvalue = 0;
  const char* label = "conjecture-exploration";
};

// Central finite-difference Hessian of the level-set graph; exploration only.
inline HessianResult hessian_levelset_numeric(const SigmaKPolynomial& f, const std::vector<double>& base,
                                              double step = 1e-4) {
  using LD = long double;
  const size_t N = base.size();
  std::vector<LD> b(base.begin(), base.end());
  auto g = [&](const std::vector<LD>& v) { return graph_lambda_n<LD>(f, v); };
  std::vector<LD> h(N);
  for (size_t i = 0; i < N; ++i) h[i] = static_cast<LD>(step) * (1 + std::fabs(b[i]));
  const LD g0 = g(b);
  HessianResult r;
  r.H.assign(N, std::vector<double>(N));
  for (size_t i = 0; i < N; ++i) {
    auto p = b, m = b;
    p[i] += h[i];
    m[i] -= h[i];
    r.H[i][i] = static_cast<double>((g(p) - 2 * g0 + g(m)) / (h[i] * h[i]));
    for (size_t j = i + 1; j < N; ++j) {
      auto pp = b, pm = b, mp = b, mm = b;
      pp[i] += h[i], pp[j] += h[j];
      pm[i] += h[i], pm[j] -= h[j];
      mp[i] -= h[i], mp[j] += h[j];
      mm[i] -= h[i], mm[j] -= h[j];
      r.H[i][j] = r.H[j][i] = static_cast<double>((g(pp) - g(pm) - g(mp) + g(mm)) / (4 * h[i] * h[j]));
    }
  }
  Eigen::MatrixXd M(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) M(Eigen::Index(i), Eigen::Index(j)) = r.H[i][j];
  r.min_eigenvalue = N ? Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(M, Eigen::EigenvaluesOnly).eigenvalues().minCoeff() : 0.0;
  return r;
}

struct ConvexityReport {
  int pairs = 0;
  int failures = 0;
  std::vector<std::vector<Rational>> failing_midpoints;  // first few only
};

struct ConvexityOptions {
  SampleOptions sampling{std::nullopt, 0.9, 1000};
};

// Midpoints of sampled pairs must stay in Gamma^n_f.
inline ConvexityReport midpoint_convexity_test(const SigmaKPolynomial& f, int pairs, std::uint64_t seed,
                                               const ConvexityOptions& opt = {}) {
  const UpsilonChecker chk(f);
  if (!chk.stability().strict()) throw Error(ErrorCode::NotStableEquation, "needs a strictly stable equation");
  ConvexityReport rep;
  rep.pairs = pairs;
  const auto pts = sample_region(chk, 2 * pairs, seed, opt.sampling);
  for (int i = 0; i < pairs; ++i) {
    const auto& a = pts[size_t(2 * i)];
    const auto& b = pts[size_t(2 * i + 1)];
    std::vector<Rational> mid(a.size());
    for (size_t k = 0; k < a.size(); ++k) mid[k] = (a[k] + b[k]) / 2;
    if (!chk.membership(mid).in_region()) {
      ++rep.failures;
      if (rep.failing_midpoints.size() < 5) rep.failing_midpoints.push_back(mid);
    }
  }
  return rep;
}

}  // namespace sigmak
