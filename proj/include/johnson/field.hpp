#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

namespace johnson {

class GaloisField;

// Element of GF(q). A default or literal element (0 or 1) carries no field and
// adopts the field of the other operand.
class Gf {
 public:
  Gf() = default;
  explicit Gf(int literal);
  Gf(const GaloisField& field, std::uint32_t value);

  std::uint32_t value() const { return value_; }
  const GaloisField* field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  Gf inverse() const;
  Gf pow(std::uint64_t e) const;

  Gf& operator+=(const Gf& o);
  Gf& operator-=(const Gf& o);
  Gf& operator*=(const Gf& o);
  Gf& operator/=(const Gf& o);

  friend Gf operator+(Gf a, const Gf& b) { return a += b; }
  friend Gf operator-(Gf a, const Gf& b) { return a -= b; }
  friend Gf operator*(Gf a, const Gf& b) { return a *= b; }
  friend Gf operator/(Gf a, const Gf& b) { return a /= b; }
  Gf operator-() const;
  Gf operator+() const { return *this; }

  friend bool operator==(const Gf& a, const Gf& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Gf& a, const Gf& b) { return a.value_ != b.value_; }

 private:
  const GaloisField* field_ = nullptr;
  std::uint32_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Gf& x);

class GaloisField {
 public:
  // Fields are interned; the reference stays valid for the program lifetime.
  static const GaloisField& get(std::uint32_t q);

  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  // Coefficients c_0..c_m of the reduction polynomial, ascending, monic.
  // Empty for prime fields.
  const std::vector<std::uint32_t>& reduction() const { return reduction_; }

  Gf operator()(std::uint32_t value) const;
  Gf zero() const { return Gf(*this, 0); }
  Gf one() const { return Gf(*this, 1); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

  // First n elements in value order.
  std::vector<Gf> distinct_points(std::size_t n) const;

  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

 private:
  explicit GaloisField(std::uint32_t q);

  std::uint32_t q_, p_, m_;
  std::vector<std::uint32_t> reduction_;
  std::vector<std::uint32_t> log_, exp_, inv_;
  std::vector<std::uint16_t> add_, neg_;
};

bool is_prime(std::uint32_t x);
// Returns p and m with q = p^m, or {0, 0} when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);
std::uint32_t smallest_prime_power_at_least(std::uint32_t n);

}  // namespace johnson

namespace Eigen {

template <>
struct NumTraits<johnson::Gf> : GenericNumTraits<johnson::Gf> {
  using Real = johnson::Gf;
  using NonInteger = johnson::Gf;
  using Literal = johnson::Gf;
  using Nested = johnson::Gf;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline johnson::Gf epsilon() { return johnson::Gf(); }
  static inline johnson::Gf dummy_precision() { return johnson::Gf(); }
  static inline johnson::Gf highest() { return johnson::Gf(); }
  static inline johnson::Gf lowest() { return johnson::Gf(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
