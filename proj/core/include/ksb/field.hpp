#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ksb {

/// Error type for every precondition and consistency failure in the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Ground field of a computation: the rationals or a prime field F_p.
///
/// Every scalar, matrix, polynomial, algebra and bimodule carries its field;
/// mixing fields within one operation is an error.
class Field {
 public:
  enum class Kind : std::uint8_t { rationals, prime_field };

  static Field rationals() { return Field(Kind::rationals, 0); }

  /// F_p. Requires p prime and 2 <= p < 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }

  /// The modulus p; throws over the rationals.
  std::uint64_t modulus() const;
  std::uint64_t characteristic() const { return is_rational() ? 0 : p_; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Exact field element. Rational values are arbitrary precision; prime field
/// values are canonical residues in [0, p). No floating point anywhere.
class Scalar {
 public:
  Scalar();  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long v);
  static Scalar of_mpq(const mpq_class& q);
  static Scalar of_fraction(long num, long den);
  static Scalar of_residue(const Field& f, std::uint64_t r);

  /// Parses the exact serialized form: "num", "num/den" (rationals) or a
  /// decimal residue, possibly negative (prime fields).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order within one field; rationals by value, residues by
  /// canonical representative. Used for deterministic report ordering.
  static int compare(const Scalar& a, const Scalar& b);

  /// Exact round-trip form: "-3/7" over Q, "4" over F_p.
  std::string to_string() const;

  const mpq_class& rat() const;
  std::uint64_t res() const;

 private:
  Scalar(const Field& f) : field_(f), rat_(0), res_(0) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;
  std::uint64_t res_;
};

}  // namespace ksb
