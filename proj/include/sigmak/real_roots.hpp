#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigmak/poly.hpp"
#include "sigmak/sturm.hpp"

namespace sigmak {

struct IsolatingInterval {
  Rational lo, hi;
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

// A real root of a squarefree polynomial, pinned by a rational interval.
// When lo < hi neither endpoint is a root, so defining(lo) and defining(hi)
// have opposite signs.
struct AlgebraicNumber {
  Poly defining;
  IsolatingInterval interval;
  int multiplicity_in_source = 1;

  static AlgebraicNumber rational(const Rational& q, int multiplicity = 1) {
    return AlgebraicNumber{Poly::linear_root(q), {q, q}, multiplicity};
  }
  bool is_rational() const { return interval.is_point(); }
  const Rational& lo() const { return interval.lo; }
  const Rational& hi() const { return interval.hi; }
};

enum class Ordering { Less, Equal, Greater };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "<";
    case Ordering::Equal: return "=";
    case Ordering::Greater: return ">";
  }
  return "?";
}

namespace detail {

inline Rational cauchy_bound(const Poly& p) {
  Rational m = 0;
  const Rational lead = abs_q(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs_q(p.coeff(i)) / lead;
    if (r > m) m = r;
  }
  return 1 + m;
}

// One bisection step; snaps to the midpoint when it is the root.
inline void bisect(AlgebraicNumber& a) {
  if (a.is_rational()) return;
  Rational mid = (a.interval.lo + a.interval.hi) / 2;
  int sm = sign(a.defining(mid));
  if (sm == 0) {
    a.interval = {mid, mid};
    return;
  }
  if (sm == sign(a.defining(a.interval.lo)))
    a.interval.lo = mid;
  else
    a.interval.hi = mid;
}

// Roots of sf strictly inside (lo, hi); k is their count.
inline void isolate_open(const SturmChain& s, const Rational& lo, const Rational& hi, int k,
                         std::vector<IsolatingInterval>& out) {
  if (k <= 0) return;
  const Poly& sf = s.base();
  if (k == 1 && sign(sf(lo)) != 0 && sign(sf(hi)) != 0) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  const int zm = sign(sf(mid)) == 0 ? 1 : 0;
  const int kl = s.variations_at(lo) - s.variations_at(mid) - zm;
  isolate_open(s, lo, mid, kl, out);
  if (zm) out.push_back({mid, mid});
  isolate_open(s, mid, hi, k - kl - zm, out);
}

}  // namespace detail

// Signs of p on an interval via the Taylor form at its midpoint; 0 if undecided.
inline int interval_sign(const Poly& p, const Rational& lo, const Rational& hi) {
  const Rational mid = (lo + hi) / 2, r = (hi - lo) / 2;
  const Poly q = taylor_shift(p, mid);
  Rational bound = 0, rk = 1;
  for (int k = 1; k <= q.degree(); ++k) {
    rk *= r;
    bound += abs_q(q.coeff(k)) * rk;
  }
  const Rational c0 = q.coeff(0);
  return abs_q(c0) > bound ? sign(c0) : 0;
}

inline AlgebraicNumber refine(AlgebraicNumber a, const Rational& eps) {
  while (!a.is_rational() && a.interval.width() > eps) detail::bisect(a);
  return a;
}

// Exact sign of p at the algebraic number a.
inline int sign_at(const Poly& p, AlgebraicNumber a) {
  if (p.is_zero()) return 0;
  if (a.is_rational()) return sign(p(a.lo()));
  Poly g = gcd(p, a.defining);
  if (g.degree() >= 1 && SturmChain(g).count_roots(a.lo(), a.hi()) >= 1) return 0;
  for (;;) {
    int s = interval_sign(p, a.lo(), a.hi());
    if (s != 0) return s;
    detail::bisect(a);
    if (a.is_rational()) return sign(p(a.lo()));
  }
}

inline Ordering compare(AlgebraicNumber a, AlgebraicNumber b) {
  auto ord = [](const Rational& x, const Rational& y) {
    return x < y ? Ordering::Less : (x > y ? Ordering::Greater : Ordering::Equal);
  };
  if (a.is_rational() && b.is_rational()) return ord(a.lo(), b.lo());
  bool checked_equal = false;
  for (;;) {
    if (a.hi() < b.lo()) return Ordering::Less;
    if (b.hi() < a.lo()) return Ordering::Greater;
    if (a.is_rational() && b.is_rational()) return ord(a.lo(), b.lo());
    if (!checked_equal) {
      checked_equal = true;
      if (a.is_rational()) {
        if (sign(b.defining(a.lo())) == 0) return Ordering::Equal;
      } else if (b.is_rational()) {
        if (sign(a.defining(b.lo())) == 0) return Ordering::Equal;
      } else {
        Poly g = gcd(a.defining, b.defining);
        if (g.degree() >= 1) {
          Rational lo = a.lo() > b.lo() ? a.lo() : b.lo();
          Rational hi = a.hi() < b.hi() ? a.hi() : b.hi();
          int n = SturmChain(g).count_roots(lo, hi) + (sign(g(lo)) == 0 ? 1 : 0);
          if (n >= 1) return Ordering::Equal;
        }
      }
    }
    if (a.interval.width() >= b.interval.width())
      detail::bisect(a);
    else
      detail::bisect(b);
  }
}

// Distinct real roots, ascending, with multiplicities from the squarefree
// decomposition.
inline std::vector<AlgebraicNumber> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolate_real_roots");
  std::vector<AlgebraicNumber> roots;
  if (p.degree() < 1) return roots;
  SturmChain s(p);
  const Poly& sf = s.base();
  const Rational B = detail::cauchy_bound(sf);
  std::vector<IsolatingInterval> ivs;
  detail::isolate_open(s, -B, B, s.count_roots(-B, B), ivs);
  // A rational root m/q of the integer form of sf has q | L, so an interval of
  // width below 1/L holds at most one candidate m/L.
  mpz_class D = 1;
  for (int i = 0; i <= sf.degree(); ++i) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), sf.coeff(i).get_den_mpz_t());
  const mpz_class L = abs(mpz_class(sf.leading().get_num() * (D / sf.leading().get_den())));
  const Rational snap_width(mpz_class(1), mpz_class(2 * L));
  const std::vector<Poly> parts = squarefree_decomposition(p);
  for (const IsolatingInterval& iv : ivs) {
    AlgebraicNumber a = refine(AlgebraicNumber{sf, iv, 1}, snap_width);
    if (!a.is_rational()) {
      const Rational m(floor_q(a.hi() * L), mpz_class(1));
      if (m >= a.lo() * L && sign(sf(m / L)) == 0) a.interval = {m / L, m / L};
    }
    if (a.is_rational()) a.defining = Poly::linear_root(a.lo());
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].degree() >= 1 && sign_at(parts[i], a) == 0) {
        a.multiplicity_in_source = static_cast<int>(i) + 1;
        break;
      }
    }
    roots.push_back(std::move(a));
  }
  // neighbours may share a bisection midpoint; shrink until disjoint
  for (size_t i = 0; i + 1 < roots.size(); ++i)
    while (roots[i].hi() >= roots[i + 1].lo()) {
      if (roots[i].interval.width() >= roots[i + 1].interval.width())
        detail::bisect(roots[i]);
      else
        detail::bisect(roots[i + 1]);
    }
  return roots;
}

inline std::optional<AlgebraicNumber> largest_real_root(const Poly& p) {
  auto roots = isolate_real_roots(p);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

// -a, as a root of p(-x).
inline AlgebraicNumber negate(const AlgebraicNumber& a) {
  Poly d = reflect(a.defining);
  if (d.leading() < 0) d = -d;
  return AlgebraicNumber{d, {Rational(-a.hi()), Rational(-a.lo())}, a.multiplicity_in_source};
}

inline double to_double(AlgebraicNumber a) {
  static const Rational rel = pow_q(Rational(1, 2), 60), floor_width = pow_q(Rational(1, 2), 200);
  while (!a.is_rational()) {
    Rational mag = abs_q(a.lo()) > abs_q(a.hi()) ? abs_q(a.lo()) : abs_q(a.hi());
    Rational w = a.interval.width();
    if (w <= mag * rel || w <= floor_width) break;
    detail::bisect(a);
  }
  return Rational((a.lo() + a.hi()) / 2).get_d();
}

// Fixed-point decimal with `digits` places from a rounded scaled integer.
inline std::string format_scaled(const mpz_class& n, int digits) {
  std::string s = mpz_class(abs(n)).get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  return (n < 0 ? "-" : "") + s;
}

inline std::string approx(const Rational& q, int digits) {
  return format_scaled(round_half_even(q * pow10_q(digits)), digits);
}

// Round-half-even decimal approximation, error below 10^-digits.
inline std::string approx(AlgebraicNumber a, int digits) {
  const Rational scale = pow10_q(digits), half(1, 2);
  if (!a.is_rational()) a = refine(a, 1 / scale);
  for (;;) {
    if (a.is_rational()) return approx(a.lo(), digits);
    // The root is strictly inside (lo, hi) and is not a tie unless it is the
    // rational point tested below, so it rounds to floor(r * scale + 1/2).
    const mpz_class nlo = floor_q(a.lo() * scale + half);
    const Rational top = a.hi() * scale + half;
    mpz_class nhi = floor_q(top);
    if (Rational(nhi) == top) nhi -= 1;
    if (nlo == nhi) return format_scaled(nlo, digits);
    const Rational tie = (Rational(nlo) + half) / scale;
    const int st = sign(a.defining(tie));
    if (st == 0)
      a.interval = {tie, tie};
    else if (st == sign(a.defining(a.lo())))
      a.interval.lo = tie;
    else
      a.interval.hi = tie;
  }
}

}  // namespace sigmak
