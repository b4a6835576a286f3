#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locoh/arith/polynomials.hpp"
#include "locoh/error.hpp"
#include "locoh/factor/cyclotomic.hpp"
#include "locoh/factor/factor_report.hpp"
#include "locoh/factor/finite_field.hpp"

namespace locoh {

/// Factors tau_i in k[s,t]: dehomogenize to (-1)^i sigma_i, factor by field
/// kind, homogenize each factor back. s never divides tau_i, so the
/// homogenized factors account for the full degree.
inline FactorReport factor_tau(int i, const Field& k, std::optional<std::uint64_t> seed = std::nullopt) {
  MultiPoly input = tau(i, k);
  FactorReport sigma_factors = k.is_rational() ? factor_sigma_rational(i) : factor_over_prime_field(sigma(i, k), seed);
  std::vector<Factor> factors;
  for (const auto& f : sigma_factors.factors()) {
    MultiPoly h = homogenize(UniPoly::from_multi(f.poly, Var::t), Var::s);
    factors.push_back({normalize(h).second, f.multiplicity});
  }
  return FactorReport(std::move(input), k.from_int(i % 2 == 0 ? 1 : -1), std::move(factors));
}

/// Evidence that sigma_{p^m - 2} = (t^{p^m-1} - 1)/(t - 1) is separable over F_p.
struct SeparabilityCertificate {
  std::uint32_t p = 0;
  int m = 0;
  int index = 0;                     // p^m - 2
  UniPoly gcd_with_derivative;       // gcd(sigma, sigma')
  bool squarefree = false;           // gcd == 1
  bool telescoping_holds = false;    // sigma * (t - 1) == t^{p^m-1} - 1
  bool derivative_identity = false;  // d/dt t(t^{p^m-1} - 1) == -1
};

inline SeparabilityCertificate separability_check(std::uint32_t p, int m) {
  const Field k = Field::prime(p);
  if (m < 1) throw Error(ErrorCode::OutOfRange, "m must be >= 1");
  mpz_class pm;
  mpz_ui_pow_ui(pm.get_mpz_t(), p, static_cast<unsigned long>(m));
  if (pm - 2 < 1) throw Error(ErrorCode::OutOfRange, "p^m - 2 must be >= 1");
  if (pm > 100000) throw Error(ErrorCode::OutOfRange, "p^m too large for desk-scale checking");
  const int n = static_cast<int>(pm.get_si()) - 2;

  SeparabilityCertificate cert;
  cert.p = p;
  cert.m = m;
  cert.index = n;
  UniPoly s = sigma(n, k);
  cert.gcd_with_derivative = gcd(s, derivative(s));
  cert.squarefree = cert.gcd_with_derivative.is_one();

  const UniPoly one = UniPoly::constant(k, Var::t, Scalar(1));
  const UniPoly t = UniPoly::monomial(k, Var::t, 1);
  const UniPoly top = UniPoly::monomial(k, Var::t, static_cast<std::size_t>(n) + 1) - one;
  cert.telescoping_holds = s * (t - one) == top;
  cert.derivative_identity = derivative(t * top) == -one;
  return cert;
}

/// Distinct irreducible factors of {tau_i : i in S}, accumulated in order.
struct GrowthReport {
  Field field;
  std::vector<int> index_set;
  std::vector<FactorReport> per_index;
  std::vector<int> new_counts;
  std::vector<int> cumulative_distinct;
  std::vector<MultiPoly> distinct;  // in order of first appearance

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < cumulative_distinct.size(); ++i)
      if (cumulative_distinct[i] <= cumulative_distinct[i - 1]) return false;
    return true;
  }
};

inline GrowthReport accumulate_distinct(const std::vector<int>& indices, const Field& k,
                                        std::optional<std::uint64_t> seed = std::nullopt) {
  GrowthReport report{k, indices, {}, {}, {}, {}};
  std::set<std::string> seen;
  for (int i : indices) {
    FactorReport fr = factor_tau(i, k, seed);
    int fresh = 0;
    for (const auto& f : fr.factors()) {
      if (seen.insert(f.poly.to_string()).second) {
        ++fresh;
        report.distinct.push_back(f.poly);
      }
    }
    report.per_index.push_back(std::move(fr));
    report.new_counts.push_back(fresh);
    report.cumulative_distinct.push_back(static_cast<int>(seen.size()));
  }
  return report;
}

/// True when i + 2 is a power of p, i.e. i has the form p^m - 2.
inline bool is_frobenius_index(int i, std::uint32_t p) {
  long v = static_cast<long>(i) + 2;
  if (v < static_cast<long>(p)) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace locoh
