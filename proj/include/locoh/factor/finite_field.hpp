#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "locoh/arith/unipoly.hpp"
#include "locoh/error.hpp"
#include "locoh/factor/factor_report.hpp"

namespace locoh {

namespace ff {

struct PolyPower {
  UniPoly poly;
  int multiplicity;
};

/// g(t^p) -> g(t); valid over F_p since a^p = a.
inline UniPoly pth_root(const UniPoly& f) {
  const auto p = f.field().characteristic();
  std::vector<Scalar> out;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
  return UniPoly(f.field(), f.variable(), std::move(out));
}

/// Squarefree decomposition of a monic polynomial (Yun's algorithm with the
/// characteristic-p p-th-root step). Returns squarefree parts with multiplicities.
inline std::vector<PolyPower> squarefree_decomposition(const UniPoly& f, int scale = 1) {
  std::vector<PolyPower> out;
  if (f.degree() < 1) return out;
  const Field& k = f.field();
  UniPoly one = UniPoly::constant(k, f.variable(), Scalar(1));
  UniPoly c = gcd(f, derivative(f));
  UniPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    UniPoly y = gcd(w, c);
    UniPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one()) {
    auto rest = squarefree_decomposition(pth_root(c).monic(), scale * static_cast<int>(k.characteristic()));
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

/// Distinct-degree factorization of a squarefree monic polynomial: pairs of
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f_in) {
  std::vector<std::pair<UniPoly, int>> out;
  const Field& k = f_in.field();
  const Var var = f_in.variable();
  const UniPoly x = UniPoly::monomial(k, var, 1);
  const mpz_class p(k.characteristic());
  UniPoly f = f_in;
  UniPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = h.pow_mod(p, f);
    UniPoly g = gcd(f, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting of a product of distinct monic
/// irreducibles of degree d.
inline void equal_degree(const UniPoly& g, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& k = g.field();
  const Var var = g.variable();
  const auto p = k.characteristic();
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
  const UniPoly one = UniPoly::constant(k, var, Scalar(1));
  for (;;) {
    std::vector<Scalar> a(static_cast<std::size_t>(g.degree()));
    for (auto& c : a) c = Scalar(coeff(rng));
    UniPoly r(k, var, std::move(a));
    if (r.degree() < 1) continue;
    UniPoly b(k, var);
    if (p == 2) {
      // trace map r + r^2 + ... + r^{2^{kd-1}}, with q = 2^d
      UniPoly term = r % g;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % g;
        b += term;
      }
    } else {
      b = r.pow_mod((q - 1) / 2, g) - one;
    }
    if (b.is_zero()) continue;
    UniPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace ff

/// Complete factorization over F_p into monic irreducibles. The splitting
/// step is randomized; pass a seed for a reproducible path. The report is
/// canonically sorted either way.
inline FactorReport factor_over_prime_field(const UniPoly& f, std::optional<std::uint64_t> seed = std::nullopt) {
  const Field& k = f.field();
  if (k.is_rational()) throw Error(ErrorCode::FieldMismatch, "factor_over_prime_field needs a prime field");
  if (f.is_zero()) throw Error(ErrorCode::OutOfRange, "cannot factor the zero polynomial");
  std::mt19937_64 rng(seed ? *seed : std::random_device{}());
  Scalar unit = f.leading_coeff();
  std::vector<Factor> factors;
  for (const auto& part : ff::squarefree_decomposition(f.monic())) {
    for (const auto& [block, d] : ff::distinct_degree(part.poly)) {
      std::vector<UniPoly> irr;
      ff::equal_degree(block, d, rng, irr);
      for (const auto& g : irr) factors.push_back({g.to_multi(), part.multiplicity});
    }
  }
  return FactorReport(f.to_multi(), unit, std::move(factors));
}

}  // namespace locoh
