#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bfalg {

/// Thrown on precondition violations (dimension mismatches, bad moduli,
/// unsupported requests).  The CLI maps these to diagnostics.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Scalar;

/// The base field k: exact rationals or a prime field F_p.
class ScalarField {
 public:
  static ScalarField rationals() { return ScalarField(0); }

  /// Prime field F_p.  The modulus is checked by trial division.
  static ScalarField prime_field(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }

  /// Modulus of a prime field; 0 for the rationals.
  std::uint64_t modulus() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  Scalar from_fraction(long num, long den) const;

  /// Parses "3", "-7", "2/5".  Over F_p the result is reduced mod p
  /// (fractions use modular inverses).  Empty optional on bad syntax or
  /// non-invertible denominator.
  std::optional<Scalar> parse(const std::string& text) const;

  bool operator==(const ScalarField& o) const { return p_ == o.p_; }
  bool operator!=(const ScalarField& o) const { return p_ != o.p_; }

  std::string str() const;

 private:
  explicit ScalarField(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 = rationals
};

/// An element of the active field, always in canonical form: rationals in
/// lowest terms with positive denominator, F_p residues in [0, p).
/// Equality is exact.
class Scalar {
 public:
  Scalar(ScalarField field, mpq_class v);

  const ScalarField& field() const { return field_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws Error on zero divisor
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // throws Error at zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "3", "-1/2"; F_p residues print as plain integers.
  std::string str() const;

 private:
  ScalarField field_;
  mpq_class v_;
};

}  // namespace bfalg
