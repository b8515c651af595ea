#pragma once

#include <vector>

#include "sigmak/poly.hpp"

namespace sigmak {

// Sturm sequence of the squarefree part: p, p', then negated remainders.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "sturm_chain of zero polynomial");
    Poly a = squarefree_part(p);
    chain_.push_back(a);
    if (a.degree() < 1) return;
    Poly b = derivative(a);
    while (!b.is_zero()) {
      chain_.push_back(b);
      Poly r = Poly::divmod(a, b).second;
      a = std::move(b);
      b = -r;
    }
  }

  const std::vector<Poly>& chain() const { return chain_; }
  const Poly& base() const { return chain_.front(); }

  int variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const Poly& q : chain_) s.push_back(sign(q(x)));
    return count(s);
  }
  int variations_at_pos_inf() const {
    std::vector<int> s;
    for (const Poly& q : chain_) s.push_back(sign(q.leading()));
    return count(s);
  }
  int variations_at_neg_inf() const {
    std::vector<int> s;
    for (const Poly& q : chain_) s.push_back(q.degree() % 2 == 0 ? sign(q.leading()) : -sign(q.leading()));
    return count(s);
  }

  // Distinct real roots in (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const {
    if (hi <= lo) return 0;
    return variations_at(lo) - variations_at(hi);
  }
  int count_all_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  static int count(const std::vector<int>& s) {
    int v = 0, prev = 0;
    for (int x : s) {
      if (x == 0) continue;
      if (prev != 0 && x != prev) ++v;
      prev = x;
    }
    return v;
  }
  std::vector<Poly> chain_;
};

inline SturmChain sturm_chain(const Poly& p) { return SturmChain(p); }

}  // namespace sigmak
