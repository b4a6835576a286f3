#pragma once

#include <vector>

#include "locoh/arith/field.hpp"
#include "locoh/arith/multipoly.hpp"
#include "locoh/arith/unipoly.hpp"
#include "locoh/error.hpp"

namespace locoh {

/// f = s x^2 v^2 - (t+s) x y u v + t y^2 u^2, the defining equation of R = S/fS.
inline MultiPoly build_f(const Field& k) {
  auto x = MultiPoly::var(k, Var::x), y = MultiPoly::var(k, Var::y);
  auto u = MultiPoly::var(k, Var::u), v = MultiPoly::var(k, Var::v);
  auto s = MultiPoly::var(k, Var::s), t = MultiPoly::var(k, Var::t);
  return s * x.pow(2) * v.pow(2) - (t + s) * x * y * u * v + t * y.pow(2) * u.pow(2);
}

/// tau_i = (-1)^i (t^i + s t^{i-1} + ... + s^{i-1} t + s^i), i >= 1.
inline MultiPoly tau(int i, const Field& k) {
  if (i < 1) throw Error(ErrorCode::OutOfRange, "tau(i) requires i >= 1, got " + std::to_string(i));
  const long sign = (i % 2 == 0) ? 1 : -1;
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(i) + 1);
  for (int a = 0; a <= i; ++a)
    terms.push_back({Monomial{{Var::s, static_cast<std::uint32_t>(a)}, {Var::t, static_cast<std::uint32_t>(i - a)}},
                     Scalar(sign)});
  return MultiPoly::from_terms(k, terms);
}

/// sigma_i = t^i + t^{i-1} + ... + t + 1, i >= 1.
inline UniPoly sigma(int i, const Field& k) {
  if (i < 1) throw Error(ErrorCode::OutOfRange, "sigma(i) requires i >= 1, got " + std::to_string(i));
  return UniPoly(k, Var::t, std::vector<Scalar>(static_cast<std::size_t>(i) + 1, Scalar(1)));
}

/// s^{deg f} f(t/s): the homogenization of a univariate f in t with respect to `aux`.
inline MultiPoly homogenize(const UniPoly& f, Var aux = Var::s) {
  if (f.is_zero()) throw Error(ErrorCode::OutOfRange, "cannot homogenize the zero polynomial");
  if (aux == f.variable()) throw Error(ErrorCode::OutOfRange, "auxiliary variable must differ from the polynomial's");
  const auto n = static_cast<std::uint32_t>(f.degree());
  std::vector<Term> terms;
  for (std::uint32_t e = 0; e <= n; ++e) {
    const Scalar c = f.coeff(e);
    if (c != 0) terms.push_back({Monomial{{f.variable(), e}, {aux, n - e}}, c});
  }
  return MultiPoly::from_terms(f.field(), terms);
}

/// g(s = 1) for g homogeneous in {s, t} and free of other variables.
inline UniPoly dehomogenize(const MultiPoly& g, Var aux = Var::s, Var keep = Var::t) {
  if (!g.uses_only({aux, keep}) || !g.is_homogeneous_in({aux, keep}))
    throw Error(ErrorCode::NotHomogeneous, "'" + g.to_string() + "' is not homogeneous in " +
                                               std::string(1, var_name(aux)) + "," + std::string(1, var_name(keep)));
  return UniPoly::from_multi(g.substitute(aux, Scalar(1)), keep);
}

}  // namespace locoh
