#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "locoh/error.hpp"

namespace locoh {

/// Exact coefficient. Over the rationals it is kept in lowest terms; over a
/// prime field it is an integer representative in [0, p).
using Scalar = mpq_class;

/// Coefficient field: the rationals or a prime field F_p.
///
/// Scalars carry no field tag of their own, so every arithmetic step goes
/// through the owning Field, which performs the reduction.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, 0); }

  static Field prime(std::uint32_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return Field(Kind::PrimeField, p);
  }

  /// Parses "q" or "fp:<p>".
  static Field parse(std::string_view spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.size() > 3 && spec.substr(0, 3) == "fp:") {
      std::uint64_t p = 0;
      for (char c : spec.substr(3)) {
        if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "bad field spec '" + std::string(spec) + "'");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
        if (p >= (std::uint64_t{1} << 31)) throw Error(ErrorCode::OutOfRange, "prime must be below 2^31");
      }
      return prime(static_cast<std::uint32_t>(p));
    }
    throw Error(ErrorCode::Parse, "bad field spec '" + std::string(spec) + "'");
  }

  /// Trial division; desk-scale primes are below 2^31.
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  std::uint32_t characteristic() const { return p_; }

  std::string spec() const { return is_rational() ? "q" : "fp:" + std::to_string(p_); }

  bool operator==(const Field&) const = default;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  Scalar from_int(long v) const { return reduce(Scalar(v)); }

  /// Maps an arbitrary rational into the field. Over F_p the denominator must
  /// be a unit.
  Scalar reduce(const Scalar& v) const {
    if (is_rational()) {
      Scalar r = v;
      r.canonicalize();
      return r;
    }
    mpz_class pz(p_);
    mpz_class num = v.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = v.get_den() % pz;
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
    if (den != 1) {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
      num = (num * inv) % pz;
    }
    return Scalar(num);
  }

  Scalar add(const Scalar& a, const Scalar& b) const { return modp(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return modp(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return modp(a * b); }
  Scalar neg(const Scalar& a) const { return modp(-a); }

  Scalar inv(const Scalar& a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (is_rational()) return Scalar(1) / a;
    mpz_class r;
    mpz_class pz(p_);
    mpz_class az = a.get_num();
    mpz_invert(r.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t());
    return Scalar(r);
  }

  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Sign used for canonical normalization: over Q the actual sign, over F_p
  /// every nonzero element counts as positive.
  int sign(const Scalar& a) const { return is_rational() ? sgn(a) : (a == 0 ? 0 : 1); }

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  // Inputs are already field elements, so over F_p only the integer residue
  // needs fixing.
  Scalar modp(const Scalar& v) const {
    if (is_rational()) return v;
    mpz_class pz(p_);
    mpz_class r = v.get_num() % pz;
    if (r < 0) r += pz;
    return Scalar(r);
  }

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace locoh
