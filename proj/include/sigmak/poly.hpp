#pragma once

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sigmak/error.hpp"
#include "sigmak/rational.hpp"

namespace sigmak {

// Dense univariate polynomial over Q, coefficients in ascending degree.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
  static Poly monomial(const Rational& a, int k) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v[static_cast<size_t>(k)] = a;
    return Poly(std::move(v));
  }
  // x - a
  static Poly linear_root(const Rational& a) { return Poly(std::vector<Rational>{Rational(-a), Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const {
    return (k < 0 || k >= static_cast<int>(c_.size())) ? Rational(0) : c_[static_cast<size_t>(k)];
  }
  const Rational& leading() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Rational> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = -a.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const Rational& s, const Poly& a) {
    std::vector<Rational> r(a.c_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = s * a.c_[i];
    return Poly(std::move(r));
  }

  // Euclidean division over Q: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> r = a.c_;
    const int db = b.degree();
    std::vector<Rational> q(static_cast<size_t>(a.degree() - db) + 1);
    const Rational& lb = b.c_.back();
    for (int i = a.degree() - db; i >= 0; --i) {
      Rational t = r[static_cast<size_t>(i + db)] / lb;
      q[static_cast<size_t>(i)] = t;
      if (t == 0) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i + j)] -= t * b.c_[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return inv * *this;
  }

  // Exact Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  double eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Poly derivative(const Poly& p, int k = 1) {
  if (k < 0) throw Error(ErrorCode::DegreeTooLow, "negative derivative order");
  if (k == 0) return p;
  if (p.degree() < k) return Poly();
  std::vector<Rational> r(static_cast<size_t>(p.degree() - k) + 1);
  for (int i = k; i <= p.degree(); ++i) {
    mpz_class falling = 1;
    for (int j = 0; j < k; ++j) falling *= (i - j);
    r[static_cast<size_t>(i - k)] = p.coeff(i) * Rational(falling);
  }
  return Poly(std::move(r));
}

inline Rational evaluate(const Poly& p, const Rational& x) { return p(x); }

// q(x) = p(x + a).
inline Poly taylor_shift(const Poly& p, const Rational& a) {
  std::vector<Rational> c = p.coeffs();
  if (a == 0 || c.size() < 2) return p;
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 2; ; --j) {
      c[j] += a * c[j + 1];
      if (j == i) break;
    }
  return Poly(std::move(c));
}

// p(-x)
inline Poly reflect(const Poly& p) {
  std::vector<Rational> c = p.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(std::move(c));
}

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_part of zero polynomial");
  if (p.degree() == 0) return Poly{1};
  Poly g = gcd(p, derivative(p));
  return Poly::divmod(p, g).first.monic();
}

// Yun's decomposition: factors[i] is the monic product of the irreducible
// factors of multiplicity exactly i + 1, so p = lc * prod factors[i]^(i+1).
inline std::vector<Poly> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_decomposition of zero polynomial");
  std::vector<Poly> out;
  if (p.degree() == 0) return out;
  Poly dp = derivative(p);
  Poly a = gcd(p, dp);
  Poly b = Poly::divmod(p, a).first;
  Poly c = Poly::divmod(dp, a).first;
  Poly d = c - derivative(b);
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    out.push_back(g.monic());
    b = Poly::divmod(b, g).first;
    c = Poly::divmod(d, g).first;
    d = c - derivative(b);
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

inline std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[static_cast<size_t>(k)];
    if (a == 0) continue;
    Rational mag = abs_q(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace sigmak
