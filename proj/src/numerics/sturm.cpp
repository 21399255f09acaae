#include "treeshift/numerics/sturm.hpp"

#include <stdexcept>

namespace treeshift::numerics {

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  seq_.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) return;
  seq_.push_back(primitive_part(d));
  while (true) {
    Polynomial r = poly_div_exact(seq_[seq_.size() - 2], seq_.back()).rem;
    if (r.is_zero()) break;
    seq_.push_back(-primitive_part(r));
  }
}

std::size_t SturmChain::variations(const Rational& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

SturmCount sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  if (!(lo < hi)) throw std::domain_error("sturm_count: empty span");
  SturmCount out;
  Polynomial s = squarefree_part(p);
  // Roots of a squarefree polynomial are simple, so one division clears them.
  if (s.sign_at(lo) == 0) {
    s = poly_div_exact(s, Polynomial(std::vector<Rational>{-lo, Rational(1)})).quot;
    out.lo_was_root = true;
  }
  if (s.sign_at(hi) == 0) {
    s = poly_div_exact(s, Polynomial(std::vector<Rational>{-hi, Rational(1)})).quot;
    out.hi_was_root = true;
  }
  if (s.degree() > 0) {
    SturmChain chain(s);
    std::size_t vl = chain.variations(lo);
    std::size_t vh = chain.variations(hi);
    out.count = vl - vh;
  }
  if (out.hi_was_root) ++out.count;
  return out;
}

Rational cauchy_root_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational lead = p.leading();
  if (lead.sign() < 0) lead = -lead;
  Rational m(0);
  for (long i = 0; i < p.degree(); ++i) {
    Rational a = p.coeff(static_cast<std::size_t>(i)) / lead;
    if (a.sign() < 0) a = -a;
    if (a > m) m = a;
  }
  return m + Rational(1);
}

}  // namespace treeshift::numerics
