// field.hpp -- exact scalar arithmetic over the rationals or a prime field.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace utlie {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient domain tag: characteristic 0 means the rationals, otherwise
/// the prime field with that many elements.
struct FieldSpec {
  unsigned characteristic = 0;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(unsigned long long m) {
  if (m < 2) return false;
  for (unsigned long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline FieldSpec make_field(unsigned characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(characteristic));
  return FieldSpec{characteristic};
}

/// Exact field element: a rational in lowest terms (characteristic 0) or a
/// residue in [0, p). Mixed-field arithmetic throws.
class Scalar {
 public:
  Scalar() = default;  // zero over the rationals

  static Scalar zero(FieldSpec f) {
    Scalar s;
    s.field_ = f;
    return s;
  }
  static Scalar one(FieldSpec f) { return of(1, f); }
  static Scalar of(long long v, FieldSpec f) {
    Scalar s;
    s.field_ = f;
    if (f.characteristic == 0)
      s.q_ = v;
    else
      s.r_ = mod_p(v, f.characteristic);
    return s;
  }
  static Scalar fraction(long long num, long long den, FieldSpec f) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (f.characteristic == 0) {
      Scalar s;
      s.field_ = f;
      s.q_ = Rational(num, den);
      return s;
    }
    return of(num, f) / of(den, f);
  }
  static Scalar of_rational(const Rational& q, FieldSpec f) {
    Scalar s;
    s.field_ = f;
    if (f.characteristic == 0) {
      s.q_ = q;
      return s;
    }
    Scalar num = from_big(boost::multiprecision::numerator(q), f);
    Scalar den = from_big(boost::multiprecision::denominator(q), f);
    return num / den;
  }

  FieldSpec field() const { return field_; }
  bool is_zero() const { return field_.characteristic == 0 ? q_.is_zero() : r_ == 0; }
  /// Residue value in [0, p); prime fields only.
  std::int64_t residue() const {
    if (field_.characteristic == 0) throw std::logic_error("residue() on a rational scalar");
    return r_;
  }
  const Rational& rational() const {
    if (field_.characteristic != 0) throw std::logic_error("rational() on a residue scalar");
    return q_;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check(a, b);
    Scalar s;
    s.field_ = a.field_;
    if (a.field_.characteristic == 0)
      s.q_ = a.q_ + b.q_;
    else
      s.r_ = mod_p(a.r_ + b.r_, a.field_.characteristic);
    return s;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check(a, b);
    Scalar s;
    s.field_ = a.field_;
    if (a.field_.characteristic == 0)
      s.q_ = a.q_ - b.q_;
    else
      s.r_ = mod_p(a.r_ - b.r_, a.field_.characteristic);
    return s;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a, b);
    Scalar s;
    s.field_ = a.field_;
    if (a.field_.characteristic == 0) {
      s.q_ = a.q_ * b.q_;
    } else {
      unsigned __int128 prod =
          static_cast<unsigned __int128>(a.r_) * static_cast<unsigned __int128>(b.r_);
      s.r_ = static_cast<std::int64_t>(prod % a.field_.characteristic);
    }
    return s;
  }
  Scalar operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.characteristic == 0)
      s.q_ = -q_;
    else
      s.r_ = r_ == 0 ? 0 : field_.characteristic - r_;
    return s;
  }
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s;
    s.field_ = field_;
    if (field_.characteristic == 0) {
      s.q_ = 1 / q_;
      return s;
    }
    // extended Euclid in the prime field
    std::int64_t a = r_, m = field_.characteristic;
    std::int64_t x0 = 0, x1 = 1, b = m;
    while (a > 1) {
      std::int64_t q = a / b;
      std::int64_t t = b;
      b = a - q * b;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    s.r_ = mod_p(x1, field_.characteristic);
    return s;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.q_ == b.q_ && a.r_ == b.r_;
  }

  std::string str() const {
    if (field_.characteristic == 0) return q_.str();
    return std::to_string(r_);
  }

 private:
  static std::int64_t mod_p(std::int64_t v, unsigned p) {
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
  }
  static Scalar from_big(const boost::multiprecision::cpp_int& v, FieldSpec f) {
    boost::multiprecision::cpp_int m(f.characteristic);
    boost::multiprecision::cpp_int r = v % m;
    if (r < 0) r += m;
    return of(static_cast<long long>(r), f);
  }
  static void check(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("mixed-field scalar arithmetic");
  }

  FieldSpec field_{};
  Rational q_;          // characteristic 0 payload
  std::int64_t r_ = 0;  // prime-field payload, in [0, p)
};

}  // namespace utlie
