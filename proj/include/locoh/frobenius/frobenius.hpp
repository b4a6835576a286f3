#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locoh/arith/multipoly.hpp"
#include "locoh/arith/polynomials.hpp"
#include "locoh/cohomology/presentation.hpp"
#include "locoh/error.hpp"
#include "locoh/factor/growth.hpp"
#include "locoh/matrices/builders.hpp"
#include "locoh/matrices/linear_algebra.hpp"

namespace locoh {

/// F = x y (x - y)(s x - t y), expanded.
inline MultiPoly build_F(const Field& k) {
  auto x = MultiPoly::var(k, Var::x), y = MultiPoly::var(k, Var::y);
  auto s = MultiPoly::var(k, Var::s), t = MultiPoly::var(k, Var::t);
  return s * x.pow(3) * y - (t + s) * x.pow(2) * y.pow(2) + t * x * y.pow(3);
}

inline MultiPoly build_F_product_form(const Field& k) {
  auto x = MultiPoly::var(k, Var::x), y = MultiPoly::var(k, Var::y);
  auto s = MultiPoly::var(k, Var::s), t = MultiPoly::var(k, Var::t);
  return x * y * (x - y) * (s * x - t * y);
}

enum class ComponentCase { Below, AtN, AtNPlus1 };

inline const char* to_string(ComponentCase c) {
  switch (c) {
    case ComponentCase::Below: return "below";
    case ComponentCase::AtN: return "at_n";
    case ComponentCase::AtNPlus1: return "at_n_plus_1";
  }
  return "unknown";
}

/// Degree-d piece T_d of T = R/(x^n, y^n), R = k[s,t][x,y]/(F), as a k[s,t]-module.
struct FrobeniusComponent {
  int n = 0;
  int d = 0;
  ComponentCase which = ComponentCase::Below;
  Presentation<int> presentation;
};

namespace detail {

inline Monomial xy(int a, int b) {
  return Monomial{{Var::x, static_cast<std::uint32_t>(a)}, {Var::y, static_cast<std::uint32_t>(b)}};
}

/// Reads T_d off from scratch: generators are the degree-d monomials outside
/// (x^n, y^n) in ascending x-exponent, relations are x^c y^{d-4-c} F.
inline Presentation<int> derive_component(int n, int d, const Field& k) {
  using P = Presentation<int>;
  std::vector<P::Generator> gens;
  for (int a = 0; a <= d; ++a)
    if (a < n && d - a < n) gens.push_back({xy(a, d - a), 1, d});
  std::vector<P::Relation> rels;
  for (int c = 0; c <= d - 4; ++c) rels.push_back({xy(c, d - 4 - c), 1, d});

  const MultiPoly f = build_F(k);
  PolyMatrix m(gens.size(), rels.size(), k);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const MultiPoly rel = f.times_monomial(rels[r].multiplier);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      // collect the k[s,t]-coefficient of the generator monomial
      std::vector<Term> coeff;
      for (const auto& term : rel.terms()) {
        if (term.monomial.exponent(Var::x) != gens[g].monomial.exponent(Var::x) ||
            term.monomial.exponent(Var::y) != gens[g].monomial.exponent(Var::y))
          continue;
        Monomial st = term.monomial;
        st.set_exponent(Var::x, 0);
        st.set_exponent(Var::y, 0);
        coeff.push_back({st, term.coeff});
      }
      m(g, r) = MultiPoly::from_terms(k, coeff);
    }
  }
  return P(std::move(gens), std::move(rels), std::move(m));
}

}  // namespace detail

/// T_d for 4 < d <= n + 1, n >= 6. The presentation is derived from F
/// directly and cross-checked against the row deletions of M_d; at d = n + 1
/// it must also coincide with B_{n-2}.
inline FrobeniusComponent component_T(int n, int d, const Field& k) {
  if (n < 6) throw Error(ErrorCode::OutOfRange, "component_T requires n >= 6, got " + std::to_string(n));
  if (d <= 4 || d > n + 1)
    throw Error(ErrorCode::OutOfRange, "component_T requires 4 < d <= n+1, got d=" + std::to_string(d));
  const ComponentCase which = d < n ? ComponentCase::Below : (d == n ? ComponentCase::AtN : ComponentCase::AtNPlus1);
  Presentation<int> derived = detail::derive_component(n, d, k);

  const PolyMatrix m = build_M(d, k);
  const auto last = static_cast<std::size_t>(d) + 1;
  PolyMatrix expected = m;
  if (which == ComponentCase::AtN) expected = m.remove_rows({1, last});
  if (which == ComponentCase::AtNPlus1) expected = m.remove_rows({1, 2, last - 1, last});
  if (!(derived.matrix == expected))
    throw Error(ErrorCode::VerificationFailed, "T_" + std::to_string(d) + " does not match the row deletions of M_d");
  if (which == ComponentCase::AtNPlus1 && !(derived.matrix == build_B(n - 2, k)))
    throw Error(ErrorCode::VerificationFailed, "T_{n+1} presentation differs from B_{n-2}");
  return FrobeniusComponent{n, d, which, std::move(derived)};
}

/// Per-n record of the collapse T_{n+1} = Coker B_{n-2}.
struct FrobeniusRecord {
  FrobeniusComponent component;
  MultiPoly determinant;
  bool collapse_matches_B = false;
  bool det_equals_tau = false;
};

struct Theorem2Report {
  std::vector<int> n_values;
  std::vector<FrobeniusRecord> records;
  GrowthReport growth;  // over the indices n - 2
};

inline FrobeniusRecord frobenius_record(int n, const Field& k) {
  FrobeniusComponent comp = component_T(n, n + 1, k);
  MultiPoly dt = det(comp.presentation.matrix);
  const bool collapse = comp.presentation.matrix == build_B(n - 2, k);
  const bool is_tau = dt == tau(n - 2, k);
  return FrobeniusRecord{std::move(comp), std::move(dt), collapse, is_tau};
}

inline Theorem2Report theorem2_growth(const std::vector<int>& n_values, const Field& k,
                                      std::optional<std::uint64_t> seed = std::nullopt) {
  std::vector<FrobeniusRecord> records;
  std::vector<int> indices;
  for (int n : n_values) {
    records.push_back(frobenius_record(n, k));
    if (!records.back().det_equals_tau)
      throw Error(ErrorCode::VerificationFailed, "det T_{n+1} != tau_{n-2} at n=" + std::to_string(n));
    indices.push_back(n - 2);
  }
  return Theorem2Report{n_values, std::move(records), accumulate_distinct(indices, k, seed)};
}

/// True when n is a positive power of p.
inline bool is_power_of(int n, std::uint32_t p) {
  if (n < static_cast<int>(p)) return false;
  while (n % static_cast<int>(p) == 0) n /= static_cast<int>(p);
  return n == 1;
}

}  // namespace locoh
