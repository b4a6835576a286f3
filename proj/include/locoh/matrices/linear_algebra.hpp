#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "locoh/arith/multipoly.hpp"
#include "locoh/error.hpp"
#include "locoh/matrices/poly_matrix.hpp"

namespace locoh {

enum class DetMethod { Bareiss, Cofactor };

/// Largest matrix accepted by the cofactor oracle.
inline constexpr std::size_t kCofactorMaxSize = 8;

namespace detail {

inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error(ErrorCode::VerificationFailed, "fraction-free step not exact: (" + a.to_string() + ")/(" + b.to_string() + ")");
  return *q;
}

/// Fraction-free (Bareiss) forward elimination of [M | V].
///
/// A row whose entry in the pivot column is zero would only be rescaled by
/// D_k / D_{k-1}; such rows are left untouched and brought up to date lazily
/// (telescoping to D_target / D_level) the first time they are needed. This
/// keeps banded inputs near-linear in work per step.
class BareissEliminator {
 public:
  BareissEliminator(const PolyMatrix& m, const std::vector<std::vector<MultiPoly>>& rhs_columns)
      : n_(m.rows()), width_(m.cols() + rhs_columns.size()), one_(MultiPoly::constant(m.field(), 1)) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "elimination needs a square matrix, got " + m.shape());
    rows_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      rows_[i].reserve(width_);
      for (std::size_t j = 0; j < n_; ++j) rows_[i].push_back(m(i, j));
      for (const auto& c : rhs_columns) {
        if (c.size() != n_) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
        rows_[i].push_back(c[i]);
      }
    }
    level_.assign(n_, -1);
    run();
  }

  bool singular() const { return singular_; }

  /// sign * D_{n-1}
  MultiPoly determinant() const {
    if (singular_) return MultiPoly(one_.field());
    return sign_ > 0 ? pivots_.back() : -pivots_.back();
  }

  /// Columns x with U x = D_{n-1} c, i.e. x = D_{n-1} M^{-1} v for each rhs v.
  /// The adjugate applied to v is sign * x.
  std::vector<std::vector<MultiPoly>> back_substitute() const {
    if (singular_) throw Error(ErrorCode::Singular, "back substitution on a singular matrix");
    const MultiPoly& dn = pivots_.back();
    std::vector<std::vector<MultiPoly>> out;
    for (std::size_t c = n_; c < width_; ++c) {
      std::vector<MultiPoly> x(n_, MultiPoly(one_.field()));
      for (std::size_t ii = n_; ii-- > 0;) {
        MultiPoly acc = dn * rows_[ii][c];
        for (std::size_t j = ii + 1; j < n_; ++j)
          if (!rows_[ii][j].is_zero() && !x[j].is_zero()) acc -= rows_[ii][j] * x[j];
        x[ii] = exact_quotient(acc, rows_[ii][ii]);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  int sign() const { return sign_; }

 private:
  const MultiPoly& pivot_at(int level) const { return level < 0 ? one_ : pivots_[static_cast<std::size_t>(level)]; }

  void materialize(std::size_t i, int target) {
    if (level_[i] == target) return;
    const MultiPoly& num = pivot_at(target);
    const MultiPoly& den = pivot_at(level_[i]);
    for (auto& e : rows_[i])
      if (!e.is_zero()) e = exact_quotient(e * num, den);
    level_[i] = target;
  }

  void run() {
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      while (p < n_ && rows_[p][k].is_zero()) ++p;
      if (p == n_) {
        singular_ = true;
        return;
      }
      if (p != k) {
        std::swap(rows_[p], rows_[k]);
        std::swap(level_[p], level_[k]);
        sign_ = -sign_;
      }
      const int prev = static_cast<int>(k) - 1;
      materialize(k, prev);
      const MultiPoly& pivot = rows_[k][k];
      const MultiPoly& prev_pivot = pivot_at(prev);
      for (std::size_t i = k + 1; i < n_; ++i) {
        if (rows_[i][k].is_zero()) continue;
        materialize(i, prev);
        const MultiPoly lead = rows_[i][k];
        for (std::size_t j = k + 1; j < width_; ++j) {
          const bool a_zero = rows_[i][j].is_zero(), b_zero = rows_[k][j].is_zero();
          if (a_zero && b_zero) continue;
          MultiPoly num = a_zero ? MultiPoly(one_.field()) : pivot * rows_[i][j];
          if (!b_zero) num -= lead * rows_[k][j];
          rows_[i][j] = exact_quotient(num, prev_pivot);
        }
        rows_[i][k] = MultiPoly(one_.field());
        level_[i] = static_cast<int>(k);
      }
      pivots_.push_back(pivot);
    }
  }

  std::size_t n_;
  std::size_t width_;
  MultiPoly one_;
  std::vector<std::vector<MultiPoly>> rows_;
  std::vector<int> level_;
  std::vector<MultiPoly> pivots_;
  int sign_ = 1;
  bool singular_ = false;
};

inline MultiPoly cofactor_det(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const Field& k = m.field();
  if (cols.size() == 1) return m(row, cols[0]);
  MultiPoly acc(k);
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const MultiPoly& a = m(row, cols[idx]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != idx) rest.push_back(cols[j]);
    MultiPoly term = a * cofactor_det(m, rest, row + 1);
    if (idx % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

}  // namespace detail

/// Exact determinant. Bareiss is the working method; Cofactor (Laplace
/// expansion along the first row) exists as an oracle for small sizes.
inline MultiPoly det(const PolyMatrix& m, DetMethod method = DetMethod::Bareiss) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of non-square " + m.shape() + " matrix");
  if (method == DetMethod::Cofactor) {
    if (m.rows() > kCofactorMaxSize)
      throw Error(ErrorCode::OutOfRange, "cofactor expansion limited to size " + std::to_string(kCofactorMaxSize));
    std::vector<std::size_t> cols(m.cols());
    std::iota(cols.begin(), cols.end(), 0);
    return detail::cofactor_det(m, cols, 0);
  }
  return detail::BareissEliminator(m, {}).determinant();
}

/// adj(M) applied to each vector in `vs`. Nonsingular matrices go through
/// fraction-free back substitution; singular ones fall back to minors.
inline std::vector<std::vector<MultiPoly>> adjugate_apply(const PolyMatrix& m,
                                                          const std::vector<std::vector<MultiPoly>>& vs);

inline PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "adjugate of non-square " + m.shape() + " matrix");
  const std::size_t n = m.rows();
  const Field& k = m.field();
  if (n == 1) return PolyMatrix::identity(1, k);
  PolyMatrix adj(n, n, k);
  detail::BareissEliminator elim(m, {});
  if (!elim.singular()) {
    std::vector<std::vector<MultiPoly>> units;
    for (std::size_t j = 1; j <= n; ++j) units.push_back(unit_vector(n, j, k));
    auto cols = adjugate_apply(m, units);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) adj(i, j) = cols[j][i];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        MultiPoly minor = det(m.remove({j + 1}, {i + 1}));
        adj(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
      }
  }
  if (!(m * adj == PolyMatrix::identity(n, k).scale(elim.determinant())))
    throw Error(ErrorCode::VerificationFailed, "M * adj(M) != det(M) * I");
  return adj;
}

inline std::vector<std::vector<MultiPoly>> adjugate_apply(const PolyMatrix& m,
                                                          const std::vector<std::vector<MultiPoly>>& vs) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "adjugate of non-square " + m.shape() + " matrix");
  if (m.rows() == 1) return vs;
  detail::BareissEliminator elim(m, vs);
  if (elim.singular()) {
    PolyMatrix adj = adjugate(m);
    std::vector<std::vector<MultiPoly>> out;
    for (const auto& v : vs) out.push_back(adj * v);
    return out;
  }
  auto xs = elim.back_substitute();
  if (elim.sign() < 0)
    for (auto& x : xs)
      for (auto& e : x) e = -e;
  return xs;
}

/// Outcome of asking whether v lies in the image of a nonsingular square B
/// over the polynomial ring.
class MembershipCertificate {
 public:
  struct Solution {
    std::vector<MultiPoly> w;
  };
  struct NoSolution {
    std::size_t failing_index;  // 1-based
  };

  bool has_solution() const { return std::holds_alternative<Solution>(outcome_); }
  const std::vector<MultiPoly>& solution() const { return std::get<Solution>(outcome_).w; }
  std::size_t failing_index() const { return std::get<NoSolution>(outcome_).failing_index; }

  static MembershipCertificate solution(const PolyMatrix& b, const std::vector<MultiPoly>& v,
                                        std::vector<MultiPoly> w) {
    if (!(b * w == v)) throw Error(ErrorCode::VerificationFailed, "claimed solution does not satisfy B w = v");
    MembershipCertificate c;
    c.outcome_ = Solution{std::move(w)};
    return c;
  }

  static MembershipCertificate no_solution(std::size_t index1) {
    MembershipCertificate c;
    c.outcome_ = NoSolution{index1};
    return c;
  }

 private:
  MembershipCertificate() = default;
  std::variant<Solution, NoSolution> outcome_;
};

/// Decides B w = v over k[vars] for nonsingular B. The fraction-field
/// solution adj(B) v / det(B) is unique, so a polynomial solution exists
/// iff every entry divides exactly.
inline MembershipCertificate solve_square(const PolyMatrix& b, const std::vector<MultiPoly>& v) {
  if (!b.is_square()) throw Error(ErrorCode::NotSquare, "solve_square needs a square matrix, got " + b.shape());
  if (v.size() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  MultiPoly d = det(b);
  if (d.is_zero()) throw Error(ErrorCode::Singular, "solve_square on a singular matrix");
  auto scaled = adjugate_apply(b, {v}).front();
  std::vector<MultiPoly> w;
  w.reserve(scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    auto q = exact_divide(scaled[i], d);
    if (!q) return MembershipCertificate::no_solution(i + 1);
    w.push_back(std::move(*q));
  }
  return MembershipCertificate::solution(b, v, std::move(w));
}

}  // namespace locoh
