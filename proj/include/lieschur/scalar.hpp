#pragma once

// Exact field elements: rationals (GMP) and residues modulo a runtime prime.
// Both are usable as Eigen scalars.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

#include "lieschur/error.hpp"

namespace lieschur {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT: implicit from integer literals, Eigen relies on Scalar(0)
  Rational(int v) : q_(static_cast<long>(v)) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (q > 0 after sign normalization, q != 0).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& get() const noexcept { return q_; }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }
  std::string to_string() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

private:
  mpq_class q_;
};

/// Residue modulo an odd prime p < 2^31 (p = 2 only through PrimeField's override).
///
/// A modulus of 0 marks an unbound integer literal, the value Eigen produces for
/// Scalar(0) or Scalar(1). Literals adopt the modulus of the other operand; combining
/// two different bound moduli throws field_mismatch.
class ModP {
public:
  ModP() = default;
  ModP(long v) : value_(v), modulus_(0) {}  // NOLINT: see class comment
  ModP(int v) : value_(v), modulus_(0) {}
  ModP(std::int64_t v, std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_bound() const noexcept { return modulus_ != 0; }
  /// Canonical residue in [0, p); for an unbound literal, the literal itself.
  std::int64_t value() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  std::string to_string() const { return std::to_string(value_); }
  ModP inverse() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a) { return ModP(0, a.modulus_) - a; }

  friend bool operator==(const ModP& a, const ModP& b);
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.value_; }

  /// Throws field_mismatch if both are bound to different moduli.
  static std::uint32_t common_modulus(const ModP& a, const ModP& b);

private:
  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

inline bool is_zero(const Rational& r) noexcept { return r.is_zero(); }
inline bool is_zero(const ModP& r) noexcept { return r.is_zero(); }

bool is_prime(std::uint64_t n) noexcept;

/// The field Q. Stateless.
class RationalField {
public:
  using Scalar = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long v) const { return Rational(v); }
  /// Accepts integer and "p/q" literals.
  Rational parse(std::string_view literal) const { return Rational::parse(literal); }
  std::uint32_t characteristic() const noexcept { return 0; }
  std::string name() const { return "Q"; }
  void check(const Rational&) const noexcept {}

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// GF(p) for a prime p.
class PrimeField {
public:
  using Scalar = ModP;

  /// Validates primality; p = 2 requires allow_char_two.
  static PrimeField make(std::uint64_t p, bool allow_char_two = false);

  ModP zero() const { return ModP(0, p_); }
  ModP one() const { return ModP(1, p_); }
  ModP from_int(long v) const { return ModP(v, p_); }
  /// Integer literals only; a rational literal is a syntax error in a prime field.
  ModP parse(std::string_view literal) const;
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  /// Throws field_mismatch if x is bound to another modulus.
  void check(const ModP& x) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
  explicit PrimeField(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

template <class S>
struct field_of;
template <>
struct field_of<Rational> {
  using type = RationalField;
};
template <>
struct field_of<ModP> {
  using type = PrimeField;
};

template <class S>
using Field = typename field_of<S>::type;

/// Field descriptor parsed from "Q" or "GF(p)".
struct FieldSpec {
  std::uint32_t characteristic = 0;  // 0 for Q

  bool is_rational() const noexcept { return characteristic == 0; }
  std::string name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(characteristic) + ")";
  }
  /// Throws field_spec_error for malformed text, non-prime or even moduli (unless allowed).
  static FieldSpec parse(std::string_view text, bool allow_char_two = false);
};

}  // namespace lieschur

namespace Eigen {

template <>
struct NumTraits<lieschur::Rational> : GenericNumTraits<lieschur::Rational> {
  using Real = lieschur::Rational;
  using NonInteger = lieschur::Rational;
  using Literal = lieschur::Rational;
  using Nested = lieschur::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lieschur::ModP> : GenericNumTraits<lieschur::ModP> {
  using Real = lieschur::ModP;
  using NonInteger = lieschur::ModP;
  using Literal = lieschur::ModP;
  using Nested = lieschur::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
