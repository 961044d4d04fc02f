#include "johnson/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>

namespace johnson {

bool is_prime(std::uint32_t x) {
  if (x < 2) return false;
  for (std::uint32_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) return {0, 0};
  return {p, m};
}

std::uint32_t smallest_prime_power_at_least(std::uint32_t n) {
  std::uint32_t q = n < 2 ? 2 : n;
  while (prime_power(q).first == 0) ++q;
  return q;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Polynomials over GF(p), ascending coefficients.
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
  auto inv = [p](std::uint32_t x) {
    std::uint32_t r = 1;
    for (std::uint32_t e = p - 2, b2 = x; e; e >>= 1, b2 = b2 * b2 % p)
      if (e & 1) r = r * b2 % p;
    return r;
  };
  std::size_t db = b.size() - 1;
  std::uint32_t lead_inv = inv(b.back());
  while (a.size() >= b.size()) {
    std::uint32_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Coeffs from_index(std::uint32_t x, std::uint32_t p, std::uint32_t len) {
  Coeffs c(len);
  for (std::uint32_t i = 0; i < len; ++i, x /= p) c[i] = x % p;
  return c;
}

bool irreducible(const Coeffs& f, std::uint32_t p) {
  std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= m; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Coeffs g = from_index(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  auto [p, m] = prime_power(q);
  if (p == 0) throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
  if (q > 65536) throw std::invalid_argument("field size too large");
  p_ = p;
  m_ = m;
  inv_.assign(q, 0);
  if (m == 1) {
    for (std::uint32_t a = 1; a < q; ++a) {
      std::uint64_t r = 1, b = a;
      for (std::uint32_t e = q - 2; e; e >>= 1, b = b * b % q)
        if (e & 1) r = r * b % q;
      inv_[a] = static_cast<std::uint32_t>(r);
    }
    return;
  }
  if (q > 4096) throw std::invalid_argument("extension field too large");
  std::uint32_t count = q;  // number of monic degree-m polynomials
  for (std::uint32_t low = 0; low < count; ++low) {
    Coeffs f = from_index(low, p, m);
    f.push_back(1);
    if (f[0] != 0 && irreducible(f, p)) {
      reduction_ = f;
      break;
    }
  }
  add_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Coeffs ca = from_index(a, p, m);
    std::uint32_t n = 0;
    for (std::uint32_t i = m; i-- > 0;) n = n * p + (p - ca[i]) % p;
    neg_[a] = static_cast<std::uint16_t>(n);
    for (std::uint32_t b = 0; b < q; ++b) {
      Coeffs cb = from_index(b, p, m);
      std::uint32_t s = 0;
      for (std::uint32_t i = m; i-- > 0;) s = s * p + (ca[i] + cb[i]) % p;
      add_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(s);
    }
  }
  // Multiply by x and reduce, in index form.
  auto times_x = [&](std::uint32_t a) {
    Coeffs c = from_index(a, p, m);
    std::uint32_t top = c[m - 1];
    for (std::uint32_t i = m - 1; i > 0; --i) c[i] = c[i - 1];
    c[0] = 0;
    for (std::uint32_t i = 0; i < m; ++i) c[i] = (c[i] + p * p - top * reduction_[i] % p) % p;
    std::uint32_t r = 0;
    for (std::uint32_t i = m; i-- > 0;) r = r * p + c[i];
    return r;
  };
  // Multiplication by an element g: evaluate via Horner on the coefficients of g.
  auto mul_slow = [&](std::uint32_t a, std::uint32_t b) {
    Coeffs cb = from_index(b, p, m);
    std::uint32_t acc = 0;
    for (std::uint32_t i = m; i-- > 0;) {
      acc = times_x(acc);
      for (std::uint32_t j = 0; j < cb[i]; ++j) acc = add_[static_cast<std::size_t>(acc) * q + a];
    }
    return acc;
  };
  // Find a primitive element.
  log_.assign(q, 0);
  exp_.assign(2 * q, 0);
  for (std::uint32_t g = 2; g < q; ++g) {
    std::vector<bool> seen(q, false);
    std::uint32_t x = 1, k = 0;
    bool ok = true;
    for (; k < q - 1; ++k) {
      if (seen[x]) {
        ok = false;
        break;
      }
      seen[x] = true;
      exp_[k] = x;
      x = mul_slow(x, g);
    }
    if (ok && x == 1) break;
  }
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    log_[exp_[k]] = k;
    exp_[k + q - 1] = exp_[k];
  }
  for (std::uint32_t a = 1; a < q; ++a) inv_[a] = exp_[(q - 1 - log_[a]) % (q - 1)];
}

const GaloisField& GaloisField::get(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<GaloisField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(q);
  if (it == registry.end())
    it = registry.emplace(q, std::unique_ptr<GaloisField>(new GaloisField(q))).first;
  return *it->second;
}

Gf GaloisField::operator()(std::uint32_t value) const {
  if (value >= q_) throw std::out_of_range("field element out of range");
  return Gf(*this, value);
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  return add_[static_cast<std::size_t>(a) * q_ + b];
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
  if (m_ == 1) return a == 0 ? 0 : q_ - a;
  return neg_[a];
}

std::uint32_t GaloisField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  return exp_[log_[a] + log_[b]];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

std::vector<Gf> GaloisField::distinct_points(std::size_t n) const {
  if (n > q_) throw std::invalid_argument("more points requested than field elements");
  std::vector<Gf> pts;
  pts.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) pts.emplace_back(*this, i);
  return pts;
}

Gf::Gf(int literal) {
  if (literal != 0 && literal != 1) throw std::invalid_argument("untyped field literal must be 0 or 1");
  value_ = static_cast<std::uint32_t>(literal);
}

Gf::Gf(const GaloisField& field, std::uint32_t value) : field_(&field), value_(value) {
  if (value >= field.size()) throw std::out_of_range("field element out of range");
}

namespace {

const GaloisField* common(const Gf& a, const Gf& b) {
  const GaloisField* f = a.field() ? a.field() : b.field();
  if (a.field() && b.field() && a.field() != b.field())
    throw std::invalid_argument("operands from different fields");
  return f;
}

}  // namespace

Gf& Gf::operator+=(const Gf& o) {
  const GaloisField* f = common(*this, o);
  if (!f) {
    if (value_ && o.value_) throw std::logic_error("untyped 1+1 has no field");
    value_ |= o.value_;
    return *this;
  }
  field_ = f;
  value_ = f->add(value_, o.value_);
  return *this;
}

Gf& Gf::operator-=(const Gf& o) {
  const GaloisField* f = common(*this, o);
  if (!f) {
    if (o.value_ && !value_) throw std::logic_error("untyped 0-1 has no field");
    value_ -= o.value_;
    return *this;
  }
  field_ = f;
  value_ = f->sub(value_, o.value_);
  return *this;
}

Gf& Gf::operator*=(const Gf& o) {
  const GaloisField* f = common(*this, o);
  field_ = f;
  value_ = f ? f->mul(value_, o.value_) : (value_ & o.value_);
  return *this;
}

Gf& Gf::operator/=(const Gf& o) {
  const GaloisField* f = common(*this, o);
  if (o.value_ == 0) throw std::domain_error("division by zero");
  field_ = f;
  if (f) value_ = f->mul(value_, f->inv(o.value_));
  return *this;
}

Gf Gf::operator-() const {
  Gf r = *this;
  if (field_) r.value_ = field_->neg(value_);
  else if (value_) throw std::logic_error("untyped -1 has no field");
  return r;
}

Gf Gf::inverse() const {
  if (value_ == 0) throw std::domain_error("division by zero");
  Gf r = *this;
  if (field_) r.value_ = field_->inv(value_);
  return r;
}

Gf Gf::pow(std::uint64_t e) const {
  Gf base = *this, r(1);
  if (field_) r = field_->one();
  for (; e; e >>= 1, base *= base)
    if (e & 1) r *= base;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Gf& x) { return os << x.value(); }

}  // namespace johnson
