#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "locoh/arith/multipoly.hpp"
#include "locoh/arith/polynomials.hpp"
#include "locoh/arith/unipoly.hpp"
#include "locoh/error.hpp"

namespace locoh {

/// Splits p into (unit, canonical associate). Over F_p the associate is
/// monic in the term order; over Q it has coprime integer coefficients and a
/// positive leading coefficient.
inline std::pair<Scalar, MultiPoly> normalize(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::OutOfRange, "cannot normalize the zero polynomial");
  const Field& k = p.field();
  if (!k.is_rational()) {
    Scalar lc = p.leading_term().coeff;
    return {lc, p.scale(k.inv(lc))};
  }
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_class n = abs(t.coeff.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Scalar content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(p.leading_term().coeff) < 0) content = -content;
  return {content, p.scale(Scalar(1) / content)};
}

inline bool is_normalized(const MultiPoly& p) { return !p.is_zero() && normalize(p).second == p; }

/// Univariate image used for coprimality tests: the polynomial itself when it
/// involves one variable, otherwise its dehomogenization at s = 1.
inline UniPoly univariate_image(const MultiPoly& p) {
  for (Var v : kAllVars)
    if (p.uses_only({v})) return UniPoly::from_multi(p, v);
  return dehomogenize(p);
}

inline bool coprime(const MultiPoly& a, const MultiPoly& b) {
  UniPoly ua = univariate_image(a), ub = univariate_image(b);
  // polynomials in two different single variables share only units
  if (ua.variable() != ub.variable()) return true;
  return gcd(ua, ub).is_one();
}

struct Factor {
  MultiPoly poly;
  int multiplicity = 1;

  bool operator==(const Factor&) const = default;
};

/// Canonical factor order: by total degree, then by canonical text.
inline bool canonical_less(const MultiPoly& a, const MultiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.to_string() < b.to_string();
}

/// input = unit * prod factor^multiplicity, with normalized, pairwise
/// coprime factors sorted canonically. All of this is checked on construction.
class FactorReport {
 public:
  FactorReport(MultiPoly input, Scalar unit, std::vector<Factor> factors)
      : input_(std::move(input)), unit_(std::move(unit)), factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
    verify();
  }

  const MultiPoly& input() const { return input_; }
  const Scalar& unit() const { return unit_; }
  const std::vector<Factor>& factors() const { return factors_; }

  MultiPoly reassemble() const {
    MultiPoly acc = MultiPoly::constant(input_.field(), unit_);
    for (const auto& f : factors_) acc *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return acc;
  }

 private:
  void verify() const {
    for (const auto& f : factors_) {
      if (f.multiplicity < 1) throw Error(ErrorCode::VerificationFailed, "multiplicity must be positive");
      if (f.poly.total_degree() < 1) throw Error(ErrorCode::VerificationFailed, "constant factor " + f.poly.to_string());
      if (!is_normalized(f.poly)) throw Error(ErrorCode::VerificationFailed, "factor not normalized: " + f.poly.to_string());
    }
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (std::size_t j = i + 1; j < factors_.size(); ++j)
        if (!coprime(factors_[i].poly, factors_[j].poly))
          throw Error(ErrorCode::VerificationFailed,
                      "factors not coprime: " + factors_[i].poly.to_string() + ", " + factors_[j].poly.to_string());
    if (!(reassemble() == input_))
      throw Error(ErrorCode::VerificationFailed, "factors do not reassemble " + input_.to_string());
  }

  MultiPoly input_;
  Scalar unit_;
  std::vector<Factor> factors_;
};

}  // namespace locoh
