#pragma once

// Exact base fields: prime fields F_p, extensions F_{p^m} given by an explicit
// irreducible modulus, and the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace novcup {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { prime, extension, rationals };

class FieldElem;

/// An exact field. Instances are interned and live for the whole program, so
/// elements may hold a plain pointer to their field.
class FieldSpec {
 public:
  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::rationals; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  /// Extension degree over the prime field (1 for F_p and Q).
  unsigned degree() const { return m_; }
  /// Number of elements; empty for Q.
  std::optional<std::uint64_t> order() const;
  /// Monic modulus of an extension, coefficients from x^0 up to x^m.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  /// "Q", "5", "2^2".
  std::string name() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_rational(const mpq_class& q) const;
  /// Finite fields only: the element with the given canonical code.
  FieldElem from_code(std::uint64_t code) const;
  /// All elements of a finite field in canonical order.
  std::vector<FieldElem> elements() const;
  /// Parses "3/7", "-2", "t^2+t+1", "2t+1".
  FieldElem parse_elem(std::string_view text) const;

  // Raw arithmetic on canonical codes of finite fields.
  std::uint64_t add_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_code(std::uint64_t a) const;
  std::uint64_t mul_code(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_code(std::uint64_t a) const;

  static const FieldSpec& rationals();
  static const FieldSpec& prime(std::uint64_t p);
  /// F_{p^m} with the lexicographically least monic irreducible modulus.
  static const FieldSpec& extension(std::uint64_t p, unsigned m);
  /// "Q", "2", "2^2", "5^3".
  static const FieldSpec& parse(std::string_view text);

 private:
  FieldSpec(FieldKind kind, std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus);
  friend struct FieldRegistry;

  std::vector<std::uint64_t> poly_mul_mod(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b) const;
  std::vector<std::uint64_t> digits(std::uint64_t code) const;
  std::uint64_t undigits(const std::vector<std::uint64_t>& d) const;

  FieldKind kind_;
  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  // log/exp tables for small extension fields.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// field_make(kind, p, m): validated field construction.
const FieldSpec& field_make(FieldKind kind, std::uint64_t p = 0, unsigned m = 1);

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldSpec& f, std::uint64_t code) : f_(&f), v_(code) {}
  FieldElem(const FieldSpec& f, mpq_class q);

  const FieldSpec& field() const { return *f_; }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  std::uint64_t code() const { return std::get<std::uint64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem inverse() const;
  FieldElem pow(std::int64_t e) const;

  bool operator==(const FieldElem& o) const;
  /// Canonical element order: codes for finite fields, numeric order for Q.
  std::strong_ordering operator<=>(const FieldElem& o) const;

  std::string str() const;

 private:
  void check_same(const FieldElem& o) const;
  const FieldSpec* f_ = nullptr;
  std::variant<std::uint64_t, mpq_class> v_{std::uint64_t{0}};
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

/// Least a != 1 (canonical order) with a^n = 1, if the field has one.
std::optional<FieldElem> root_of_unity(const FieldSpec& f, std::uint64_t n);

/// Least m >= 1 with n | p^m - 1; empty when p | n.
std::optional<unsigned> minimal_extension_for_roots(std::uint64_t p, std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Irreducibility of a monic polynomial over F_p (coefficients low to high).
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p);

}  // namespace novcup
