// cpoly.hpp -- sparse multivariate polynomials in commuting indeterminates.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "utlie/field.hpp"

namespace utlie {

/// One commuting indeterminate. Gamma(i, s) is the diagonal slot s of the
/// generic degree-0 matrix attached to y_i; T(g, i, p) is the staircase
/// position p of the generic matrix attached to the degree-g variable of
/// index i. Ordered lexicographically on (kind, a, b, c).
struct CIndeterminate {
  enum class Kind : int { Gamma = 0, T = 1 };
  Kind kind = Kind::Gamma;
  int a = 0;  // Gamma: y index.       T: degree representative.
  int b = 0;  // Gamma: diagonal slot.  T: variable index within the degree.
  int c = 0;  // Gamma: unused (0).     T: staircase position.
  friend auto operator<=>(const CIndeterminate&, const CIndeterminate&) = default;
};

inline CIndeterminate gamma_ind(int yIndex, int slot) {
  if (yIndex < 1 || slot < 1) throw std::invalid_argument("gamma indices must be positive");
  return {CIndeterminate::Kind::Gamma, yIndex, slot, 0};
}
inline CIndeterminate t_ind(int degreeRep, int varIndex, int position) {
  if (degreeRep < 1 || varIndex < 1 || position < 1)
    throw std::invalid_argument("t indices must be positive");
  return {CIndeterminate::Kind::T, degreeRep, varIndex, position};
}

/// Power product with positive exponents only; the map order makes the
/// monomial order deterministic.
struct CMonomial {
  std::map<CIndeterminate, int> exps;
  friend auto operator<=>(const CMonomial&, const CMonomial&) = default;
};

inline CMonomial cmono(std::initializer_list<std::pair<CIndeterminate, int>> factors) {
  CMonomial m;
  for (const auto& [x, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e > 0) m.exps[x] += e;
  }
  return m;
}

inline CMonomial mono_mul(const CMonomial& a, const CMonomial& b) {
  CMonomial m = a;
  for (const auto& [x, e] : b.exps) m.exps[x] += e;
  return m;
}

/// Sparse polynomial; zero coefficients are never stored.
class CPolynomial {
 public:
  CPolynomial() = default;  // zero over the rationals
  explicit CPolynomial(FieldSpec field) : field_(field) {}

  static CPolynomial constant(const Scalar& c) {
    CPolynomial p(c.field());
    if (!c.is_zero()) p.terms_.emplace(CMonomial{}, c);
    return p;
  }
  static CPolynomial indeterminate(const CIndeterminate& x, FieldSpec f) {
    CPolynomial p(f);
    p.terms_.emplace(cmono({{x, 1}}), Scalar::one(f));
    return p;
  }

  FieldSpec field() const { return field_; }
  const std::map<CMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff_of(const CMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  void add_term(const CMonomial& m, const Scalar& c) {
    if (!(c.field() == field_)) throw std::invalid_argument("mixed-field polynomial term");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend CPolynomial operator+(const CPolynomial& a, const CPolynomial& b) {
    check(a, b);
    CPolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend CPolynomial operator-(const CPolynomial& a, const CPolynomial& b) {
    check(a, b);
    CPolynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
    check(a, b);
    CPolynomial out(a.field_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
  }
  CPolynomial scaled(const Scalar& c) const {
    CPolynomial out(field_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
  }
  CPolynomial operator-() const { return scaled(-Scalar::one(field_)); }

  friend bool operator==(const CPolynomial& a, const CPolynomial& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  static void check(const CPolynomial& a, const CPolynomial& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("mixed-field polynomial arithmetic");
  }

  FieldSpec field_{};
  std::map<CMonomial, Scalar> terms_;
};

}  // namespace utlie
