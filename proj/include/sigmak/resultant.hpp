#pragma once

#include <utility>
#include <vector>

#include "sigmak/poly.hpp"

namespace sigmak {

using Matrix = std::vector<std::vector<Rational>>;

// Column layout: e shifted copies of p1's coefficients (leading first), then
// d shifted copies of p2's, with d = deg p1 and e = deg p2.
inline Matrix sylvester_matrix(const Poly& p1, const Poly& p2) {
  if (p1.is_zero() || p2.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sylvester_matrix");
  const int d = p1.degree(), e = p2.degree(), N = d + e;
  Matrix m(static_cast<size_t>(N), std::vector<Rational>(static_cast<size_t>(N)));
  for (int j = 0; j < e; ++j)
    for (int i = 0; i <= d; ++i) m[static_cast<size_t>(j + i)][static_cast<size_t>(j)] = p1.coeff(d - i);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i <= e; ++i) m[static_cast<size_t>(j + i)][static_cast<size_t>(e + j)] = p2.coeff(e - i);
  return m;
}

namespace detail {

inline mpz_class denominator_lcm(const Poly& p) {
  mpz_class l = 1;
  for (const Rational& a : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  return l;
}

// Fraction-free Gaussian elimination; exact divisions at every step.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  int s = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      s = -s;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return s * a[n - 1][n - 1];
}

// Content c with p / c primitive in Z[x].
inline Rational content(const Poly& p) {
  mpz_class g = 0;
  for (const Rational& a : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_num_mpz_t());
  Rational c(g, denominator_lcm(p));
  c.canonicalize();
  return c;
}

// lc(b)^(deg a - deg b + 1) * a = q*b + r
inline Poly pseudo_remainder(const Poly& a, const Poly& b) {
  int delta = a.degree() - b.degree();
  Rational scale = pow_q(b.leading(), static_cast<unsigned long>(delta + 1));
  return Poly::divmod(scale * a, b).second;
}

}  // namespace detail

inline Rational resultant_bareiss(const Poly& p1, const Poly& p2) {
  if (p1.is_zero() || p2.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant");
  const mpz_class l1 = detail::denominator_lcm(p1), l2 = detail::denominator_lcm(p2);
  const Poly q1 = Rational(l1) * p1, q2 = Rational(l2) * p2;
  Matrix m = sylvester_matrix(q1, q2);
  std::vector<std::vector<mpz_class>> z(m.size(), std::vector<mpz_class>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) z[i][j] = m[i][j].get_num();
  Rational det(detail::bareiss_det(std::move(z)));
  // res(l1 p1, l2 p2) = l1^deg p2 * l2^deg p1 * res(p1, p2)
  Rational scale = pow_q(Rational(l1), static_cast<unsigned long>(p2.degree())) *
                   pow_q(Rational(l2), static_cast<unsigned long>(p1.degree()));
  return det / scale;
}

// Subresultant PRS on primitive integer parts.
inline Rational resultant_subresultant(const Poly& p1, const Poly& p2) {
  if (p1.is_zero() || p2.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant");
  Poly A = p1, B = p2;
  Rational a = detail::content(A), b = detail::content(B);
  A = Rational(1 / a) * A;
  B = Rational(1 / b) * B;
  Rational g = 1, h = 1;
  int s = 1;
  Rational t = pow_q(a, static_cast<unsigned long>(B.degree())) * pow_q(b, static_cast<unsigned long>(A.degree()));
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
  }
  while (B.degree() > 0) {
    int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    Poly R = detail::pseudo_remainder(A, B);
    A = B;
    B = Rational(1 / (g * pow_q(h, static_cast<unsigned long>(delta)))) * R;
    if (B.is_zero()) return 0;
    g = A.leading();
    // h <- h^(1 - delta) g^delta
    h = pow_q(g, static_cast<unsigned long>(delta)) / pow_q(h, static_cast<unsigned long>(delta - 1));
  }
  const int dA = A.degree();
  // h <- h^(1 - deg A) lc(B)^(deg A)
  Rational hpow = dA >= 1 ? Rational(1 / pow_q(h, static_cast<unsigned long>(dA - 1))) : h;
  h = hpow * pow_q(B.leading(), static_cast<unsigned long>(dA));
  return s * t * h;
}

// Bareiss on the Sylvester matrix up to degree 12, subresultant PRS above.
inline Rational resultant(const Poly& p1, const Poly& p2) {
  if (p1.is_zero() || p2.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant");
  if (std::max(p1.degree(), p2.degree()) <= 12) return resultant_bareiss(p1, p2);
  return resultant_subresultant(p1, p2);
}

inline Rational discriminant(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "discriminant");
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::DegreeTooLow, "discriminant of a constant");
  const long half = static_cast<long>(n) * (n - 1) / 2;
  Rational r = resultant(p, derivative(p)) / p.leading();
  return half % 2 == 0 ? r : Rational(-r);
}

}  // namespace sigmak
