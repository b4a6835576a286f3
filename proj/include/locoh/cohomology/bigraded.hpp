#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locoh/arith/multipoly.hpp"
#include "locoh/cohomology/presentation.hpp"
#include "locoh/error.hpp"
#include "locoh/matrices/builders.hpp"
#include "locoh/matrices/poly_matrix.hpp"

namespace locoh {

/// Bidegree of x^a y^b s^c t^d e_j: (a + b, b + j). s and t have bidegree (0, 0).
struct Bidegree {
  int total = 0;
  int weight = 0;

  bool operator==(const Bidegree&) const = default;

  std::string to_string() const { return "(" + std::to_string(total) + "," + std::to_string(weight) + ")"; }
};

inline Bidegree bidegree(const Monomial& m, int j) {
  if (j < 1) throw Error(ErrorCode::OutOfRange, "basis index must be >= 1");
  const int a = static_cast<int>(m.exponent(Var::x)), b = static_cast<int>(m.exponent(Var::y));
  return {a + b, b + j};
}

/// Bidegree of a vector in R_0^n given as a matrix column, or nullopt when
/// the column is zero or not bihomogeneous.
inline std::optional<Bidegree> column_bidegree(const PolyMatrix& m, std::size_t col) {
  std::optional<Bidegree> deg;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& term : m(i, col).terms()) {
      Bidegree b = bidegree(term.monomial, static_cast<int>(i) + 1);
      if (deg && !(*deg == b)) return std::nullopt;
      deg = b;
    }
  return deg;
}

/// The bihomogeneous component of bidegree `target` of Coker(m), as a
/// k[s,t]-module. Generators are the x^a y^b e_j of that bidegree; relations
/// are the x,y-monomial multiples of columns landing in it, with the x,y
/// content of each entry divided out.
inline Presentation<Bidegree> bigraded_component(const PolyMatrix& m, Bidegree target) {
  using P = Presentation<Bidegree>;
  const Field& k = m.field();
  std::vector<P::Generator> gens;
  for (int j = 1; j <= static_cast<int>(m.rows()); ++j) {
    const int b = target.weight - j, a = target.total - b;
    if (a < 0 || b < 0) continue;
    gens.push_back({Monomial{{Var::x, static_cast<std::uint32_t>(a)}, {Var::y, static_cast<std::uint32_t>(b)}}, j, target});
  }
  std::vector<P::Relation> rels;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto cd = column_bidegree(m, c);
    if (!cd) throw Error(ErrorCode::NotHomogeneous, "column " + std::to_string(c + 1) + " is not bihomogeneous");
    const int b = target.weight - cd->weight, a = target.total - cd->total - b;
    if (a < 0 || b < 0) continue;
    rels.push_back({Monomial{{Var::x, static_cast<std::uint32_t>(a)}, {Var::y, static_cast<std::uint32_t>(b)}},
                    static_cast<int>(c) + 1, target});
  }
  if (gens.empty() || rels.empty())
    throw Error(ErrorCode::OutOfRange, "component " + target.to_string() + " has no generators or no relations");

  PolyMatrix rel(gens.size(), rels.size(), k);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto col = static_cast<std::size_t>(rels[r].source_column - 1);
    for (std::size_t row = 0; row < m.rows(); ++row) {
      const MultiPoly entry = m(row, col).times_monomial(rels[r].multiplier);
      if (entry.is_zero()) continue;
      std::size_t g = 0;
      while (g < gens.size() && gens[g].basis_index != static_cast<int>(row) + 1) ++g;
      if (g == gens.size()) throw Error(ErrorCode::VerificationFailed, "relation hits a row with no generator");
      auto coeff = exact_divide(entry, MultiPoly::monomial(k, gens[g].monomial));
      if (!coeff || !coeff->uses_only({Var::s, Var::t}))
        throw Error(ErrorCode::VerificationFailed, "relation entry " + entry.to_string() + " is not a k[s,t]-multiple of " +
                                                       gens[g].label());
      rel(g, r) = *coeff;
    }
  }
  return P(std::move(gens), std::move(rels), std::move(rel));
}

/// (Coker A_{d-1})_{(d,d)}: generators x^j y^{d-j} e_j, relations x^{c-2} y^{d-c} c_c
/// for c = 2..d. Its relation matrix is B_{d-1}.
inline Presentation<Bidegree> component_dd(int d, const Field& k) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "component_dd requires d >= 2, got " + std::to_string(d));
  return bigraded_component(build_A(d - 1, k), {d, d});
}

}  // namespace locoh
