#include "johnson/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace johnson {

Poly::Poly(const GaloisField& F, std::vector<Gf> coeffs) : F_(&F), c_(std::move(coeffs)) {
  for (Gf& x : c_) x = F.zero() + x;
  trim();
}

Poly Poly::constant(const GaloisField& F, Gf c) { return Poly(F, {c}); }

Poly Poly::monomial(const GaloisField& F, int degree, Gf c) {
  std::vector<Gf> v(static_cast<std::size_t>(degree) + 1, F.zero());
  v.back() = c;
  return Poly(F, v);
}

Poly Poly::from_roots(const GaloisField& F, const std::vector<Gf>& roots) {
  Poly p = constant(F, F.one());
  for (const Gf& r : roots) p = p * Poly(F, {-(F.zero() + r), F.one()});
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Gf Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return F_->zero();
  return c_[static_cast<std::size_t>(i)];
}

Gf Poly::operator()(const Gf& x) const {
  Gf acc = F_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(*a.F_);
  std::vector<Gf> out(a.c_.size() + b.c_.size() - 1, a.F_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(*a.F_, out);
}

Poly operator*(Poly a, const Gf& s) {
  for (Gf& x : a.c_) x *= s;
  a.trim();
  return a;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q(*F_), r = *this;
  Gf lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Gf f = r.leading() * lead_inv;
    Poly term = monomial(*F_, shift, f);
    q += term;
    r -= term * d;
  }
  return {q, r};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string Poly::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? " " : "") << c_[i].value();
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace johnson
