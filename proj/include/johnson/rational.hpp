#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace johnson {

// Exact rational in lowest terms, positive denominator.
struct Rational {
  std::int64_t num = 0, den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (den < 0) num = -num, den = -den;
    auto g = std::gcd(num, den);
    if (g > 1) num /= g, den /= g;
  }

  bool is_integer() const { return den == 1; }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rational a, Rational b) { return !(a == b); }
  friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
  friend std::ostream& operator<<(std::ostream& os, Rational r) { return os << r.str(); }
};

}  // namespace johnson
