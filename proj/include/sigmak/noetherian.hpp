#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigmak/real_roots.hpp"

namespace sigmak {

enum class NoetherianVerdict { StrictRight, RightNotStrict, NotRight };

inline const char* to_string(NoetherianVerdict v) {
  switch (v) {
    case NoetherianVerdict::StrictRight: return "StrictRight";
    case NoetherianVerdict::RightNotStrict: return "RightNotStrict";
    case NoetherianVerdict::NotRight: return "NotRight";
  }
  return "?";
}

// chain[k] is the largest real root x_k of p^(k) (the smallest root when
// mirrored). signs[k] is the sign of p^(k) at x_{k+1}, in the coordinates the
// right-sided test ran in.
struct NoetherianCertificate {
  NoetherianVerdict verdict = NoetherianVerdict::NotRight;
  int failure_level = -1;
  bool missing_root = false;  // p^(failure_level) has no real root at all
  bool mirrored = false;      // produced by certify_left
  Poly normalized;            // polynomial the right-sided test ran on
  std::vector<std::optional<AlgebraicNumber>> chain;
  std::vector<std::optional<int>> signs;
  std::optional<int> top_multiplicity;

  bool ok() const { return verdict != NoetherianVerdict::NotRight; }
  bool strict() const { return verdict == NoetherianVerdict::StrictRight; }
  int degree() const { return static_cast<int>(chain.size()); }
};

inline NoetherianCertificate certify_right(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "certify_right needs degree >= 1");
  NoetherianCertificate cert;
  cert.normalized = p.leading() < 0 ? Poly(-p) : p;
  const int n = cert.normalized.degree();
  std::vector<Poly> d(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) d[static_cast<size_t>(k)] = derivative(cert.normalized, k);
  cert.chain.assign(static_cast<size_t>(n), std::nullopt);
  cert.signs.assign(static_cast<size_t>(n - 1), std::nullopt);

  const Poly& lin = d[static_cast<size_t>(n - 1)];
  cert.chain[static_cast<size_t>(n - 1)] = AlgebraicNumber::rational(Rational(-lin.coeff(0) / lin.coeff(1)));
  if (n == 1) cert.top_multiplicity = 1;

  for (int k = n - 2; k >= 0; --k) {
    const size_t i = static_cast<size_t>(k);
    // p^(k) increases to +inf on (x_{k+1}, inf), so a root >= x_{k+1}
    // exists iff p^(k)(x_{k+1}) <= 0.
    const int s = sign_at(d[i], *cert.chain[i + 1]);
    cert.signs[i] = s;
    if (s > 0) {
      cert.verdict = NoetherianVerdict::NotRight;
      cert.failure_level = k;
      cert.missing_root = isolate_real_roots(d[i]).empty();
      return cert;
    }
    cert.chain[i] = largest_real_root(d[i]);
  }
  if (n >= 2) cert.top_multiplicity = cert.chain[0]->multiplicity_in_source;
  cert.verdict = (n == 1 || *cert.signs[0] < 0) ? NoetherianVerdict::StrictRight : NoetherianVerdict::RightNotStrict;
  return cert;
}

// Runs the right-sided test on p(-x) and maps the chain back, so chain[k]
// is the smallest real root of p^(k).
inline NoetherianCertificate certify_left(const Poly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "certify_left needs degree >= 1");
  NoetherianCertificate cert = certify_right(reflect(p));
  cert.mirrored = true;
  for (auto& x : cert.chain)
    if (x) x = negate(*x);
  return cert;
}

inline bool is_real_rooted(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "is_real_rooted");
  int total = 0;
  for (const AlgebraicNumber& r : isolate_real_roots(p)) total += r.multiplicity_in_source;
  return total == p.degree();
}

inline int multiplicity_at_largest_root(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity_at_largest_root");
  auto r = largest_real_root(p);
  if (!r) throw Error(ErrorCode::NoRealRoot, "polynomial has no real root");
  return r->multiplicity_in_source;
}

}  // namespace sigmak
