#pragma once

// Univariate polynomials over an exact field and Laurent polynomials in one
// variable, the coefficient rings k[t] and k[T, T^-1].

#include <string>
#include <utility>
#include <vector>

#include "novcup/algebra/field.hpp"

namespace novcup {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const FieldSpec& f) : f_(&f) {}
  /// Coefficients from x^0 upwards; trailing zeros are trimmed.
  Poly(const FieldSpec& f, std::vector<FieldElem> coeffs);

  static Poly constant(const FieldElem& c);
  static Poly monomial(const FieldElem& c, unsigned k);
  /// x - a
  static Poly linear_root(const FieldElem& a);

  const FieldSpec& field() const { return *f_; }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  FieldElem coeff(std::size_t i) const;
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem lead() const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const FieldElem& c) const;
  Poly shifted(unsigned k) const;  // multiply by x^k
  Poly monic() const;
  Poly pow(unsigned e) const;

  FieldElem eval(const FieldElem& a) const;
  /// p(x + c)
  Poly taylor_shift(const FieldElem& c) const;

  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  const FieldSpec* f_ = nullptr;
  std::vector<FieldElem> c_;
};

/// Exact division with remainder; throws on a zero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly poly_gcd(const Poly& a, const Poly& b);

struct XgcdResult {
  Poly g, s, t;  // g = s*a + t*b, g monic
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

/// Largest e with (x - a)^e dividing f; throws for the zero polynomial.
int root_multiplicity(const Poly& f, const FieldElem& a);

struct RootFactorization {
  std::vector<std::pair<FieldElem, int>> roots;  // distinct roots in the field, ascending
  Poly residual;                                  // monic part without roots in the field
};
/// Roots of a nonzero polynomial in its own field. For Q uses the rational
/// root theorem (the residual may still factor over Q).
RootFactorization poly_roots(const Poly& f);

/// Distinct-degree factorization of a monic squarefree polynomial over a
/// finite field: pairs (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, Poly>> distinct_degree_factors(const Poly& f);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const FieldSpec& f) : body_(f) {}
  /// body * T^val
  LaurentPoly(Poly body, int val);

  static LaurentPoly monomial(const FieldElem& c, int k);
  static LaurentPoly constant(const FieldElem& c) { return monomial(c, 0); }

  const FieldSpec& field() const { return body_.field(); }
  bool is_zero() const { return body_.is_zero(); }
  /// Lowest exponent; 0 for zero.
  int valuation() const { return val_; }
  /// Highest exponent.
  int top() const { return val_ + body_.degree(); }
  /// Body has nonzero constant term.
  const Poly& body() const { return body_; }
  FieldElem coeff(int k) const;
  bool is_unit() const { return !is_zero() && body_.degree() == 0; }
  bool is_monomial() const { return is_unit(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const FieldElem& c) const;
  /// Inverse of a unit c*T^k.
  LaurentPoly unit_inverse() const;
  /// T -> T^-1
  LaurentPoly inverted_variable() const;

  FieldElem eval(const FieldElem& a) const;
  /// Polynomial in t obtained by T = 1 + t; requires valuation >= 0.
  Poly at_one_plus(int shift = 0) const;

  bool operator==(const LaurentPoly& o) const { return val_ == o.val_ && body_ == o.body_; }
  std::string str(const std::string& var = "T") const;

 private:
  void normalize();
  Poly body_;
  int val_ = 0;
};

struct LaurentNormalForm {
  LaurentPoly unit;  // c * T^k
  Poly normalized;   // monic, nonzero constant term
};
/// f = unit * normalized with normalized monic of valuation 0; throws on zero.
LaurentNormalForm laurent_normalize(const LaurentPoly& f);

}  // namespace novcup
