#include "bfalg/scalar.hpp"

namespace bfalg {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// Residue in [0, p) of a rational with denominator invertible mod p.
mpq_class reduce_mod(const mpq_class& v, std::uint64_t p) {
  mpz_class mod(static_cast<unsigned long>(p));
  mpz_class num = v.get_num() % mod;
  if (num < 0) num += mod;
  if (v.get_den() == 1) return mpq_class(num);
  mpz_class den = v.get_den() % mod;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw Error("denominator not invertible mod " + std::to_string(p));
  }
  mpz_class r = (num * inv) % mod;
  if (r < 0) r += mod;
  return mpq_class(r);
}

}  // namespace

ScalarField ScalarField::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw Error("modulus " + std::to_string(p) + " is not prime");
  }
  return ScalarField(p);
}

Scalar ScalarField::zero() const { return Scalar(*this, mpq_class(0)); }
Scalar ScalarField::one() const { return Scalar(*this, mpq_class(1)); }

Scalar ScalarField::from_int(long n) const {
  return Scalar(*this, mpq_class(n));
}

Scalar ScalarField::from_fraction(long num, long den) const {
  if (den == 0) throw Error("zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  return Scalar(*this, v);
}

std::optional<Scalar> ScalarField::parse(const std::string& text) const {
  if (text.empty()) return std::nullopt;
  // mpq accepts "a/b" directly but also tolerates whitespace and leading
  // zeros we do not want; validate the shape first.
  std::size_t i = 0;
  if (text[i] == '-' || text[i] == '+') ++i;
  bool digits = false, slash = false;
  for (; i < text.size(); ++i) {
    if (text[i] >= '0' && text[i] <= '9') {
      digits = true;
    } else if (text[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return std::nullopt;
    }
  }
  if (!digits) return std::nullopt;
  mpq_class v;
  // mpq rejects an explicit leading '+'
  if (v.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) return std::nullopt;
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  if (is_prime_field()) {
    try {
      v = reduce_mod(v, p_);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return Scalar(*this, v);
}

std::string ScalarField::str() const {
  return is_rationals() ? "Q" : "F " + std::to_string(p_);
}

Scalar::Scalar(ScalarField field, mpq_class v) : field_(field), v_(std::move(v)) {
  v_.canonicalize();
  if (field_.is_prime_field()) v_ = reduce_mod(v_, field_.modulus());
}

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-v_)); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (field_ != o.field_) throw Error("scalar field mismatch");
  return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (field_ != o.field_) throw Error("scalar field mismatch");
  return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (field_ != o.field_) throw Error("scalar field mismatch");
  return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (field_.is_rationals()) return Scalar(field_, 1 / v_);
  mpz_class mod(static_cast<unsigned long>(field_.modulus()));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mod.get_mpz_t());
  return Scalar(field_, mpq_class(inv));
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) throw Error("scalar field mismatch");
  return v_ == o.v_;
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace bfalg
