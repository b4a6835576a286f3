#pragma once

#include <map>
#include <string>
#include <vector>

#include "locoh/arith/multipoly.hpp"
#include "locoh/arith/polynomials.hpp"
#include "locoh/error.hpp"
#include "locoh/matrices/poly_matrix.hpp"

namespace locoh {

/// u^{-alpha} v^{-beta} with alpha, beta >= 1, stored by its positive parts.
/// It lies in the degree -(alpha + beta) component of H^2_{S+}(S).
struct InverseMonomial {
  int alpha = 1;
  int beta = 1;

  int degree() const { return -(alpha + beta); }

  // Ascending alpha is the basis order: u^{a1}v^{b1} < u^{a2}v^{b2} iff a1 > a2
  // on the (negative) exponents themselves.
  auto operator<=>(const InverseMonomial&) const = default;

  std::string to_string() const {
    return "u^-" + std::to_string(alpha) + "*v^-" + std::to_string(beta);
  }
};

/// Ordered R_0-basis of the degree -d component: u^{-1}v^{-(d-1)}, ..., u^{-(d-1)}v^{-1}.
inline std::vector<InverseMonomial> inverse_basis(int d) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "inverse polynomials vanish in degree > -2");
  std::vector<InverseMonomial> out;
  for (int a = 1; a <= d - 1; ++a) out.push_back({a, d - a});
  return out;
}

/// Finite R_0-combination of inverse monomials; coefficients in k[x, y, s, t].
class InverseElement {
 public:
  explicit InverseElement(Field field) : field_(field) {}

  static InverseElement basis(const Field& field, InverseMonomial m) {
    InverseElement e(field);
    e.add(m, MultiPoly::constant(field, 1));
    return e;
  }

  const Field& field() const { return field_; }
  const std::map<InverseMonomial, MultiPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly coefficient(InverseMonomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? MultiPoly(field_) : it->second;
  }

  void add(InverseMonomial m, const MultiPoly& c) {
    if (m.alpha < 1 || m.beta < 1) throw Error(ErrorCode::OutOfRange, "inverse monomial exponents must be positive");
    if (!c.uses_only({Var::x, Var::y, Var::s, Var::t}))
      throw Error(ErrorCode::OutOfRange, "coefficient '" + c.to_string() + "' is not in k[x,y,s,t]");
    MultiPoly sum = coefficient(m) + c;
    if (sum.is_zero()) terms_.erase(m);
    else terms_.insert_or_assign(m, sum);
  }

  bool operator==(const InverseElement& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*" + m.to_string();
    }
    return out;
  }

 private:
  Field field_;
  std::map<InverseMonomial, MultiPoly> terms_;
};

/// Multiplication by g in k[x,y,s,t][u,v]: the term u^a v^b sends u^{-alpha}v^{-beta}
/// to u^{a-alpha}v^{b-beta}, which vanishes unless both exponents stay negative.
inline InverseElement multiply(const MultiPoly& g, const InverseElement& e) {
  InverseElement out(e.field());
  for (const auto& term : g.terms()) {
    const int a = static_cast<int>(term.monomial.exponent(Var::u));
    const int b = static_cast<int>(term.monomial.exponent(Var::v));
    Monomial rest = term.monomial;
    rest.set_exponent(Var::u, 0);
    rest.set_exponent(Var::v, 0);
    const MultiPoly coeff = MultiPoly::monomial(g.field(), rest, term.coeff);
    for (const auto& [m, c] : e.terms()) {
      if (a >= m.alpha || b >= m.beta) continue;
      out.add({m.alpha - a, m.beta - b}, coeff * c);
    }
  }
  return out;
}

inline InverseElement mult_by_f(const InverseElement& e) { return multiply(build_f(e.field()), e); }

/// The matrix of f : H_{-(d+2)} -> H_{-d} in the ordered inverse bases;
/// (d-1) x (d+1), column j is the image of the j-th source basis element.
inline PolyMatrix matrix_of_f(int d, const Field& k) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "matrix_of_f requires d >= 2, got " + std::to_string(d));
  const auto source = inverse_basis(d + 2);
  const auto target = inverse_basis(d);
  const MultiPoly f = build_f(k);
  PolyMatrix m(target.size(), source.size(), k);
  for (std::size_t j = 0; j < source.size(); ++j) {
    InverseElement image = multiply(f, InverseElement::basis(k, source[j]));
    for (const auto& [mono, c] : image.terms()) {
      if (mono.degree() != -d) throw Error(ErrorCode::VerificationFailed, "image left the degree -d component");
      m(static_cast<std::size_t>(mono.alpha - 1), j) = c;
    }
  }
  return m;
}

}  // namespace locoh
