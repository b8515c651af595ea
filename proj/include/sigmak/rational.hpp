#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <string>

#include "sigmak/error.hpp"

namespace sigmak {

// mpq_class with a canonicalizing (num, den) constructor. GMP keeps results
// canonical after arithmetic but trusts the caller on construction, so
// Rational(6, 4) would otherwise compare unequal to Rational(3, 2).
class Rational : public mpq_class {
 public:
  using mpq_class::mpq_class;
  using mpq_class::operator=;
  Rational() = default;
  Rational(const Rational&) = default;
  Rational(Rational&&) = default;
  Rational& operator=(const Rational&) = default;
  Rational& operator=(Rational&&) = default;
  Rational(const mpq_class& q) : mpq_class(q) {}
  Rational(mpq_class&& q) : mpq_class(std::move(q)) {}
  Rational(const mpz_class& num, const mpz_class& den) : mpq_class(num, den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    canonicalize();
  }
};

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational pow_q(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

inline Rational pow10_q(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class floor_q(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Round to nearest integer, ties to even.
inline mpz_class round_half_even(const Rational& q) {
  mpz_class f = floor_q(q);
  Rational frac = q - Rational(f);
  Rational half(1, 2);
  if (frac > half) return f + 1;
  if (frac < half) return f;
  return mpz_odd_p(f.get_mpz_t()) ? mpz_class(f + 1) : f;
}

// Exact value of a finite double.
inline Rational from_double(double d) {
  if (!std::isfinite(d)) throw Error(ErrorCode::ParseError, "non-finite double");
  return Rational(d);
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p", "p/q", and decimal forms such as "-12.50" or "1.5e-3".
// Decimals are read exactly as scaled integers.
inline Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");

  auto digits_only = [](const std::string& t, size_t from) {
    if (from >= t.size()) return false;
    for (size_t i = from; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto parse_int = [&](const std::string& t) {
    size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (!digits_only(t, start)) throw Error(ErrorCode::ParseError, "bad integer '" + t + "'");
    std::string body = t[0] == '+' ? t.substr(1) : t;
    return mpz_class(body, 10);
  };

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num = parse_int(s.substr(0, slash));
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }

  long exponent = 0;
  auto epos = s.find_first_of("eE");
  std::string mant = s;
  if (epos != std::string::npos) {
    std::string e = s.substr(epos + 1);
    mpz_class ev = parse_int(e);
    if (!ev.fits_slong_p() || abs(ev) > 100000)
      throw Error(ErrorCode::ParseError, "exponent out of range in '" + text + "'");
    exponent = ev.get_si();
    mant = s.substr(0, epos);
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant = mant.substr(1);
  }
  auto dot = mant.find('.');
  std::string intpart = dot == std::string::npos ? mant : mant.substr(0, dot);
  std::string fracpart = dot == std::string::npos ? "" : mant.substr(dot + 1);
  if (intpart.empty() && fracpart.empty()) throw Error(ErrorCode::ParseError, "bad number '" + text + "'");
  if ((!intpart.empty() && !digits_only(intpart, 0)) || (!fracpart.empty() && !digits_only(fracpart, 0)))
    throw Error(ErrorCode::ParseError, "bad number '" + text + "'");
  std::string all = intpart + fracpart;
  if (all.empty()) all = "0";
  Rational q(mpz_class(all, 10));
  q *= pow10_q(exponent - static_cast<long>(fracpart.size()));
  return neg ? Rational(-q) : q;
}

}  // namespace sigmak
