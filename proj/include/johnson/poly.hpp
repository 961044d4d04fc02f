#pragma once

#include <string>
#include <utility>
#include <vector>

#include "johnson/field.hpp"

namespace johnson {

// Polynomial over GF(q), ascending coefficients, no trailing zeros.
class Poly {
 public:
  explicit Poly(const GaloisField& F) : F_(&F) {}
  Poly(const GaloisField& F, std::vector<Gf> coeffs);

  static Poly constant(const GaloisField& F, Gf c);
  static Poly monomial(const GaloisField& F, int degree, Gf c);
  static Poly from_roots(const GaloisField& F, const std::vector<Gf>& roots);

  const GaloisField& field() const { return *F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Gf coeff(int i) const;
  Gf leading() const { return coeff(degree()); }
  const std::vector<Gf>& coeffs() const { return c_; }

  Gf operator()(const Gf& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Gf& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;
  std::string str() const;

 private:
  void trim();
  const GaloisField* F_;
  std::vector<Gf> c_;
};

Poly gcd(Poly a, Poly b);  // monic, Euclid

}  // namespace johnson
