#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <type_traits>
#include <vector>

#include "sigmak/noetherian.hpp"

namespace sigmak {

// f(l) = sigma_n(l) - sum_{k<n} c_k sigma_k(l), sigma_0 = 1.
struct SigmaKPolynomial {
  int n = 0;
  std::vector<Rational> c;  // c_0 .. c_{n-1}

  SigmaKPolynomial() = default;
  SigmaKPolynomial(int n_, std::vector<Rational> c_) : n(n_), c(std::move(c_)) {
    if (n < 1) throw Error(ErrorCode::DegreeTooLow, "sigma_k equation needs n >= 1");
    if (static_cast<int>(c.size()) != n) throw Error(ErrorCode::DimensionMismatch, "need exactly n coefficients");
  }
  const Rational& top() const { return c.back(); }
  friend bool operator==(const SigmaKPolynomial& a, const SigmaKPolynomial& b) { return a.n == b.n && a.c == b.c; }
};

template <class T>
T scalar_from(const Rational& q);
template <>
inline Rational scalar_from<Rational>(const Rational& q) { return q; }
template <>
inline double scalar_from<double>(const Rational& q) { return q.get_d(); }
template <>
inline long double scalar_from<long double>(const Rational& q) {
  // two-part split keeps the extra mantissa bits of long double
  const double hi = q.get_d();
  return static_cast<long double>(hi) + static_cast<long double>(Rational(q - Rational(hi)).get_d());
}

// e[k] = sigma_k(x) for k = 0..m, by the one-pass prefix recurrence.
template <class T>
std::vector<T> elementary_symmetric(const std::vector<T>& x, int m) {
  std::vector<T> e(static_cast<size_t>(m) + 1, T(0));
  e[0] = T(1);
  int seen = 0;
  for (const T& xi : x) {
    ++seen;
    for (int k = std::min(seen, m); k >= 1; --k) e[static_cast<size_t>(k)] += xi * e[static_cast<size_t>(k - 1)];
  }
  return e;
}

template <class T>
T evaluate(const SigmaKPolynomial& f, const std::vector<T>& lambda) {
  if (static_cast<int>(lambda.size()) != f.n) throw Error(ErrorCode::DimensionMismatch, "point dimension != n");
  const std::vector<T> e = elementary_symmetric(lambda, f.n);
  T v = e[static_cast<size_t>(f.n)];
  for (int k = 0; k < f.n; ++k) v -= scalar_from<T>(f.c[static_cast<size_t>(k)]) * e[static_cast<size_t>(k)];
  return v;
}

// Drop l variables: sigma_{n-l} - sum_{k>=l} c_k sigma_{k-l}, independent of
// which l indices by symmetry.
inline SigmaKPolynomial partial_restriction(const SigmaKPolynomial& f, int l) {
  if (l < 1 || l > f.n - 1) throw Error(ErrorCode::BadSubsetSize, "subset size must be in [1, n-1]");
  return SigmaKPolynomial(f.n - l, std::vector<Rational>(f.c.begin() + l, f.c.end()));
}

inline SigmaKPolynomial partial_restriction(const SigmaKPolynomial& f, const std::vector<int>& dropped) {
  std::vector<int> s = dropped;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && (s.front() < 0 || s.back() >= f.n)))
    throw Error(ErrorCode::BadSubsetSize, "dropped indices must be distinct and in range");
  return partial_restriction(f, static_cast<int>(s.size()));
}

// r_f(x) = f(x, ..., x) = x^n - sum c_k C(n, k) x^k
inline Poly diagonal_restriction(const SigmaKPolynomial& f) {
  std::vector<Rational> r(static_cast<size_t>(f.n) + 1);
  for (int k = 0; k < f.n; ++k)
    r[static_cast<size_t>(k)] = -f.c[static_cast<size_t>(k)] * Rational(binomial(static_cast<unsigned long>(f.n), static_cast<unsigned long>(k)));
  r[static_cast<size_t>(f.n)] = 1;
  return Poly(std::move(r));
}

struct Translation {
  SigmaKPolynomial g;  // top coefficient zero
  Rational shift;      // mu = lambda - shift
};

// Substitution lambda = mu + c_{n-1}.
inline Translation translate(const SigmaKPolynomial& f) {
  const int n = f.n;
  const Rational& a = f.top();
  std::vector<Rational> d(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Rational s = 0;
    for (int k = j; k < n; ++k)
      s += f.c[static_cast<size_t>(k)] * pow_q(a, static_cast<unsigned long>(k - j)) *
           Rational(binomial(static_cast<unsigned long>(n - j), static_cast<unsigned long>(k - j)));
    d[static_cast<size_t>(j)] = s - pow_q(a, static_cast<unsigned long>(n - j));
  }
  return {SigmaKPolynomial(n, std::move(d)), a};
}

enum class StabilityVerdict { StrictlyStable, StableNotStrict, NotStable };

inline const char* to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::StrictlyStable: return "StrictlyStable";
    case StabilityVerdict::StableNotStrict: return "StableNotStrict";
    case StabilityVerdict::NotStable: return "NotStable";
  }
  return "?";
}

struct StabilityReport {
  StabilityVerdict verdict;
  NoetherianCertificate certificate;
  bool stable() const { return verdict != StabilityVerdict::NotStable; }
  bool strict() const { return verdict == StabilityVerdict::StrictlyStable; }
};

inline StabilityReport certify_upsilon_stable(const SigmaKPolynomial& f) {
  NoetherianCertificate cert = certify_right(diagonal_restriction(f));
  StabilityVerdict v = cert.verdict == NoetherianVerdict::StrictRight      ? StabilityVerdict::StrictlyStable
                       : cert.verdict == NoetherianVerdict::RightNotStrict ? StabilityVerdict::StableNotStrict
                                                                            : StabilityVerdict::NotStable;
  return {v, std::move(cert)};
}

struct MembershipOptions {
  bool exhaustive = false;
  double margin = 1e-9;          // float mode: inequalities are "> margin"
  double fallback_band = 1e-6;   // float mode: go exhaustive near zero
};

template <class T>
struct UpsilonReport {
  std::optional<int> member_of;            // 0 means the point lies in Gamma^n_f
  std::optional<int> failing_level;
  std::vector<int> failing_subset;         // coordinates kept at the failing level
  std::vector<std::optional<T>> per_level_values;  // minimum over subsets, by level
  bool in_region() const { return member_of && *member_of == 0; }
  bool c_subsolution() const { return member_of && *member_of <= 1; }
};

// Certifies f once, then answers membership queries for the nested cones.
class UpsilonChecker {
 public:
  explicit UpsilonChecker(const SigmaKPolynomial& f) : f_(f), stability_(certify_upsilon_stable(f)) {
    if (!stability_.stable()) throw Error(ErrorCode::NotStableEquation, "membership is defined only for stable equations");
  }

  const SigmaKPolynomial& equation() const { return f_; }
  const StabilityReport& stability() const { return stability_; }

  template <class T>
  UpsilonReport<T> membership(const std::vector<T>& mu, const MembershipOptions& opt = {}) const {
    const int n = f_.n;
    if (static_cast<int>(mu.size()) != n) throw Error(ErrorCode::DimensionMismatch, "point dimension != n");
    UpsilonReport<T> rep;
    rep.per_level_values.assign(static_cast<size_t>(n), std::nullopt);

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return mu[size_t(a)] < mu[size_t(b)]; });

    for (int l = n - 1; l >= 0; --l) {
      const SigmaKPolynomial g = l == 0 ? f_ : partial_restriction(f_, l);
      const int keep = n - l;
      std::vector<int> worst(order.begin(), order.begin() + keep);
      T best = eval_subset(g, mu, worst);
      bool go_exhaustive = opt.exhaustive;
      if constexpr (std::is_same_v<T, double>) {
        if (std::fabs(best) <= opt.fallback_band) go_exhaustive = true;
      }
      if (go_exhaustive && keep < n) {
        std::vector<int> comb(static_cast<size_t>(keep));
        std::iota(comb.begin(), comb.end(), 0);
        for (;;) {
          T v = eval_subset(g, mu, comb);
          if (v < best) {
            best = v;
            worst = comb;
          }
          int i = keep - 1;
          while (i >= 0 && comb[size_t(i)] == n - keep + i) --i;
          if (i < 0) break;
          ++comb[size_t(i)];
          for (int j = i + 1; j < keep; ++j) comb[size_t(j)] = comb[size_t(j - 1)] + 1;
        }
      }
      rep.per_level_values[static_cast<size_t>(l)] = best;
      if (!positive(best, opt)) {
        rep.failing_level = l;
        std::sort(worst.begin(), worst.end());
        rep.failing_subset = worst;
        return rep;
      }
      rep.member_of = l;
    }
    return rep;
  }

 private:
  template <class T>
  static T eval_subset(const SigmaKPolynomial& g, const std::vector<T>& mu, const std::vector<int>& idx) {
    std::vector<T> sub;
    sub.reserve(idx.size());
    for (int i : idx) sub.push_back(mu[static_cast<size_t>(i)]);
    return evaluate(g, sub);
  }
  template <class T>
  static bool positive(const T& v, const MembershipOptions& opt) {
    if constexpr (std::is_same_v<T, double>)
      return v > opt.margin;
    else
      return sign(v) > 0;
  }

  SigmaKPolynomial f_;
  StabilityReport stability_;
};

template <class T>
UpsilonReport<T> upsilon_membership(const SigmaKPolynomial& f, const std::vector<T>& mu, const MembershipOptions& opt = {}) {
  return UpsilonChecker(f).membership(mu, opt);
}

struct DominanceResult {
  bool dominates = false;
  std::vector<Ordering> levels;  // compare(y_k, x_k), k = 0..n-1
  StabilityReport g_report, f_report;
};

// g dominates f when every chain root of r_g is >= the matching root of r_f.
inline DominanceResult dominates(const SigmaKPolynomial& g, const SigmaKPolynomial& f) {
  if (g.n != f.n) throw Error(ErrorCode::DimensionMismatch, "dominance needs equal n");
  DominanceResult r{false, {}, certify_upsilon_stable(g), certify_upsilon_stable(f)};
  if (!r.g_report.stable() || !r.f_report.stable())
    throw Error(ErrorCode::NotStableEquation, "dominance needs two stable equations");
  r.dominates = true;
  for (int k = 0; k < f.n; ++k) {
    Ordering o = compare(*r.g_report.certificate.chain[size_t(k)], *r.f_report.certificate.chain[size_t(k)]);
    r.levels.push_back(o);
    if (o == Ordering::Less) r.dominates = false;
  }
  return r;
}

// lambda_n placing (base, lambda_n) on {f = 0}.
template <class T>
T graph_lambda_n(const SigmaKPolynomial& f, const std::vector<T>& base) {
  const int n = f.n;
  if (static_cast<int>(base.size()) != n - 1) throw Error(ErrorCode::DimensionMismatch, "base must have n-1 coordinates");
  const std::vector<T> e = elementary_symmetric(base, n - 1);
  T num(0), den = e[static_cast<size_t>(n - 1)];
  for (int k = 0; k < n; ++k) num += scalar_from<T>(f.c[size_t(k)]) * e[size_t(k)];
  for (int k = 1; k < n; ++k) den -= scalar_from<T>(f.c[size_t(k)]) * e[size_t(k - 1)];
  if (!(den > T(0))) throw Error(ErrorCode::DenominatorNotPositive, "base is outside the graph domain");
  return num / den;
}

struct SampleOptions {
  std::optional<double> spread;   // default |x_0| + 1
  double jitter_low = 0.0;        // fraction of (t - c_{n-1}) a coordinate may move down
  int retries_per_point = 1000;
};

namespace detail {
// Uniform double in [0, 1) from the top 53 bits; portable across stdlibs.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
}  // namespace detail

// Seeded exact points of Gamma^n_f: a diagonal base above x_0 plus jitter,
// each verified by the membership test.
inline std::vector<std::vector<Rational>> sample_region(const UpsilonChecker& chk, int count, std::uint64_t seed,
                                                        const SampleOptions& opt = {}) {
  if (!chk.stability().strict())
    throw Error(ErrorCode::NotStableEquation, "sampling needs a strictly stable equation");
  std::vector<std::vector<Rational>> out;
  if (count <= 0) return out;
  const SigmaKPolynomial& f = chk.equation();
  const AlgebraicNumber x0 = refine(*chk.stability().certificate.chain[0], Rational(1, 1000000));
  const Rational x0_up = x0.hi();
  const double spread = opt.spread.value_or(std::fabs(to_double(x0)) + 1.0);
  const double floor_c = f.top().get_d();
  std::mt19937_64 rng(seed);
  long budget = static_cast<long>(count) * opt.retries_per_point;
  while (static_cast<int>(out.size()) < count) {
    if (budget-- <= 0) throw Error(ErrorCode::SamplingExhausted, "retry budget exhausted");
    const double u = 1.0 - detail::unit_uniform(rng);  // (0, 1]
    const Rational t = x0_up + from_double(u * spread);
    const double low = opt.jitter_low * (t.get_d() - floor_c);
    std::vector<Rational> p(static_cast<size_t>(f.n));
    for (auto& v : p) v = t + from_double(-low + detail::unit_uniform(rng) * (spread + low));
    if (chk.membership(p).in_region()) out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<std::vector<Rational>> sample_region(const SigmaKPolynomial& f, int count, std::uint64_t seed,
                                                        const SampleOptions& opt = {}) {
  return sample_region(UpsilonChecker(f), count, seed, opt);
}

}  // namespace sigmak
