#pragma once

#include <string>

#include "locoh/arith/multipoly.hpp"
#include "locoh/matrices/poly_matrix.hpp"

namespace locoh {

namespace detail {

inline void require_at_least(int value, int min, const char* what) {
  if (value < min)
    throw Error(ErrorCode::OutOfRange, std::string(what) + " must be >= " + std::to_string(min) + ", got " +
                                           std::to_string(value));
}

}  // namespace detail

/// A_{d-1}: the (d-1) x (d+1) tridiagonal matrix of multiplication by f.
/// Row i carries s x^2, -xy(t+s), t y^2 in columns i, i+1, i+2.
inline PolyMatrix build_A(int dminus1, const Field& k) {
  detail::require_at_least(dminus1, 1, "d-1");
  auto x = MultiPoly::var(k, Var::x), y = MultiPoly::var(k, Var::y);
  auto s = MultiPoly::var(k, Var::s), t = MultiPoly::var(k, Var::t);
  const MultiPoly left = s * x * x, mid = -(x * y * (t + s)), right = t * y * y;
  const auto n = static_cast<std::size_t>(dminus1);
  PolyMatrix a(n, n + 2, k);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = left;
    a(i, i + 1) = mid;
    a(i, i + 2) = right;
  }
  return a;
}

/// A_{d-1} with x = y = 1.
inline PolyMatrix build_Abar(int dminus1, const Field& k) {
  detail::require_at_least(dminus1, 1, "d-1");
  auto s = MultiPoly::var(k, Var::s), t = MultiPoly::var(k, Var::t);
  const MultiPoly mid = -(t + s);
  const auto n = static_cast<std::size_t>(dminus1);
  PolyMatrix a(n, n + 2, k);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = s;
    a(i, i + 1) = mid;
    a(i, i + 2) = t;
  }
  return a;
}

/// B_i: Abar_i without its first and last columns. Square i x i with
/// -t-s on the diagonal, t above and s below.
inline PolyMatrix build_B(int i, const Field& k) {
  detail::require_at_least(i, 1, "i");
  return build_Abar(i, k).remove_cols({1, static_cast<std::size_t>(i) + 2});
}

/// M_d: the (d+1) x (d-3) presentation of the degree-d piece of k[s,t][x,y]/(F).
/// Rows follow the generators y^d, x y^{d-1}, ..., x^d; column j is x^{j-1} y^{d-3-j} F,
/// carrying t, -(t+s), s in rows j+1, j+2, j+3.
inline PolyMatrix build_M(int d, const Field& k) {
  detail::require_at_least(d, 5, "d");
  auto s = MultiPoly::var(k, Var::s), t = MultiPoly::var(k, Var::t);
  const auto rows = static_cast<std::size_t>(d) + 1, cols = static_cast<std::size_t>(d) - 3;
  PolyMatrix m(rows, cols, k);
  for (std::size_t j = 0; j < cols; ++j) {
    m(j + 1, j) = t;
    m(j + 2, j) = -(t + s);
    m(j + 3, j) = s;
  }
  return m;
}

}  // namespace locoh
