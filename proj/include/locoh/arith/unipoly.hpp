#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "locoh/arith/field.hpp"
#include "locoh/arith/multipoly.hpp"
#include "locoh/error.hpp"

namespace locoh {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  explicit UniPoly(Field field = Field::rationals(), Var variable = Var::t) : field_(field), var_(variable) {}

  UniPoly(Field field, Var variable, std::vector<Scalar> coeffs)
      : field_(field), var_(variable), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = field_.reduce(c);
    trim();
  }

  static UniPoly constant(const Field& field, Var variable, const Scalar& c) {
    return UniPoly(field, variable, {c});
  }

  /// c * var^n
  static UniPoly monomial(const Field& field, Var variable, std::size_t n, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> coeffs(n + 1, Scalar(0));
    coeffs[n] = c;
    return UniPoly(field, variable, std::move(coeffs));
  }

  /// Reads a MultiPoly that involves at most one variable.
  static UniPoly from_multi(const MultiPoly& p, Var variable) {
    std::vector<Scalar> coeffs;
    for (const auto& t : p.terms()) {
      if (!t.monomial.uses_only({variable}))
        throw Error(ErrorCode::OutOfRange, "'" + p.to_string() + "' is not univariate in " + std::string(1, var_name(variable)));
      auto e = t.monomial.exponent(variable);
      if (coeffs.size() <= e) coeffs.resize(e + 1, Scalar(0));
      coeffs[e] = t.coeff;
    }
    return UniPoly(p.field(), variable, std::move(coeffs));
  }

  const Field& field() const { return field_; }
  Var variable() const { return var_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

  Scalar leading_coeff() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  bool operator==(const UniPoly& o) const {
    return field_ == o.field_ && var_ == o.var_ && coeffs_ == o.coeffs_;
  }

  MultiPoly to_multi() const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) terms.push_back({Monomial::of(var_, static_cast<std::uint32_t>(i)), coeffs_[i]});
    return MultiPoly::from_terms(field_, terms);
  }

  std::string to_string() const { return to_multi().to_string(); }

  Scalar evaluate(const Scalar& at) const {
    Scalar x = field_.reduce(at);
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = field_.neg(c);
    return r;
  }

  UniPoly operator+(const UniPoly& o) const { return combine(o, false); }
  UniPoly operator-(const UniPoly& o) const { return combine(o, true); }

  UniPoly operator*(const UniPoly& o) const {
    require_compatible(o);
    if (is_zero() || o.is_zero()) return UniPoly(field_, var_);
    std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
    UniPoly r(field_, var_);
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
  }

  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }

  UniPoly scale(const Scalar& c) const {
    UniPoly r(field_, var_);
    Scalar k = field_.reduce(c);
    if (k == 0) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(field_.mul(a, k));
    return r;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(leading_coeff()));
  }

  /// Euclidean division; the divisor's leading coefficient is a unit since
  /// coefficients live in a field.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    require_compatible(d);
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "univariate division by zero");
    if (degree() < d.degree()) return {UniPoly(field_, var_), *this};
    std::vector<Scalar> rem = coeffs_;
    std::vector<Scalar> quo(coeffs_.size() - d.coeffs_.size() + 1, Scalar(0));
    Scalar inv = field_.inv(d.leading_coeff());
    const std::size_t dd = d.coeffs_.size() - 1;
    for (std::size_t k = rem.size(); k-- > dd;) {
      if (rem[k] == 0) continue;
      Scalar q = field_.mul(rem[k], inv);
      quo[k - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j)
        rem[k - dd + j] = field_.sub(rem[k - dd + j], field_.mul(q, d.coeffs_[j]));
    }
    rem.resize(dd);
    UniPoly q(field_, var_), r(field_, var_);
    q.coeffs_ = std::move(quo);
    q.trim();
    r.coeffs_ = std::move(rem);
    r.trim();
    return {q, r};
  }

  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

  /// (*this)^e mod m by square-and-multiply; e given as a big integer since
  /// Frobenius exponents p^k overflow quickly.
  UniPoly pow_mod(const mpz_class& e, const UniPoly& m) const {
    UniPoly result = constant(field_, var_, Scalar(1)) % m;
    UniPoly base = *this % m;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
      result = (result * result) % m;
      if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
    }
    return result;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  void require_compatible(const UniPoly& o) const {
    if (!(field_ == o.field_))
      throw Error(ErrorCode::FieldMismatch, "operands over " + field_.spec() + " and " + o.field_.spec());
    if (var_ != o.var_) throw Error(ErrorCode::FieldMismatch, "univariate operands in different variables");
  }

  UniPoly combine(const UniPoly& o, bool subtract) const {
    require_compatible(o);
    UniPoly r(field_, var_);
    r.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] = subtract ? field_.sub(coeff(i), o.coeff(i)) : field_.add(coeff(i), o.coeff(i));
    r.trim();
    return r;
  }

  Field field_;
  Var var_;
  std::vector<Scalar> coeffs_;
};

/// Formal derivative; in characteristic p the coefficient of t^{kp} collapses.
inline UniPoly derivative(const UniPoly& f) {
  std::vector<Scalar> out;
  const auto& c = f.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(f.field().mul(c[i], f.field().from_int(static_cast<long>(i))));
  return UniPoly(f.field(), f.variable(), std::move(out));
}

/// Monic gcd by the Euclidean algorithm. gcd(f, 0) = monic(f).
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::OutOfRange, "gcd(0, 0) is undefined");
  UniPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace locoh
