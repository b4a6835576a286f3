#pragma once

#include <map>
#include <vector>

#include "locoh/arith/polynomials.hpp"
#include "locoh/arith/unipoly.hpp"
#include "locoh/error.hpp"
#include "locoh/factor/factor_report.hpp"

namespace locoh {

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Phi_n over Q by exact division: (t^n - 1) / prod_{e | n, e < n} Phi_e.
/// Irreducibility over Q is the classical theorem and is not re-checked.
inline UniPoly cyclotomic(int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "cyclotomic(n) requires n >= 1");
  const Field q = Field::rationals();
  std::map<int, UniPoly> phi;
  for (int e : divisors(n)) {
    UniPoly num = UniPoly::monomial(q, Var::t, static_cast<std::size_t>(e)) - UniPoly::constant(q, Var::t, Scalar(1));
    UniPoly den = UniPoly::constant(q, Var::t, Scalar(1));
    for (int f : divisors(e))
      if (f < e) den *= phi.at(f);
    auto [quo, rem] = num.divmod(den);
    if (!rem.is_zero()) throw Error(ErrorCode::VerificationFailed, "t^" + std::to_string(e) + "-1 not divisible");
    phi.emplace(e, quo);
  }
  return phi.at(n);
}

/// sigma_i = prod_{d | i+1, d > 1} Phi_d over Q.
inline FactorReport factor_sigma_rational(int i) {
  const Field q = Field::rationals();
  UniPoly s = sigma(i, q);
  std::vector<Factor> factors;
  UniPoly product = UniPoly::constant(q, Var::t, Scalar(1));
  for (int d : divisors(i + 1)) {
    if (d == 1) continue;
    UniPoly phi = cyclotomic(d);
    product *= phi;
    factors.push_back({phi.to_multi(), 1});
  }
  if (!(product == s)) throw Error(ErrorCode::VerificationFailed, "cyclotomic product differs from sigma");
  return FactorReport(s.to_multi(), Scalar(1), std::move(factors));
}

}  // namespace locoh
