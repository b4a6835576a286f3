#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "locoh/arith/multipoly.hpp"
#include "locoh/error.hpp"

namespace locoh {

/// Dense row-major matrix of MultiPoly over one common Field.
///
/// Accessors are 0-based; everything that faces users (reports, error
/// messages, row/column deletion lists) is 1-based.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const Field& field)
      : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, MultiPoly(field)) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
  }

  static PolyMatrix identity(std::size_t n, const Field& field) {
    PolyMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly::constant(field, 1);
    return m;
  }

  static PolyMatrix diagonal(const std::vector<MultiPoly>& diag) {
    if (diag.empty()) throw Error(ErrorCode::DimensionMismatch, "empty diagonal");
    PolyMatrix m(diag.size(), diag.size(), diag.front().field());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
  }

  static PolyMatrix column(const std::vector<MultiPoly>& v) {
    if (v.empty()) throw Error(ErrorCode::DimensionMismatch, "empty column");
    PolyMatrix m(v.size(), 1, v.front().field());
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
  }

  /// Parses rows of canonical polynomial strings.
  static PolyMatrix from_strings(const Field& field, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows.front().empty()) throw Error(ErrorCode::DimensionMismatch, "empty matrix literal");
    PolyMatrix m(rows.size(), rows.front().size(), field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = MultiPoly::parse(field, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Field& field() const { return field_; }

  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, const MultiPoly& p) {
    if (!(p.field() == field_)) throw Error(ErrorCode::FieldMismatch, "entry over " + p.field().spec());
    entries_[i * cols_ + j] = p;
  }

  std::vector<MultiPoly> column_vector(std::size_t j) const {
    std::vector<MultiPoly> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const MultiPoly& p) { return p.is_zero(); });
  }

  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_)
      throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + shape() + " by " + o.shape());
    PolyMatrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<MultiPoly> operator*(const std::vector<MultiPoly>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match " + shape());
    std::vector<MultiPoly> out(rows_, MultiPoly(field_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
    return out;
  }

  PolyMatrix scale(const MultiPoly& c) const {
    PolyMatrix r = *this;
    for (auto& e : r.entries_) e = e * c;
    return r;
  }

  PolyMatrix transpose() const {
    PolyMatrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Entrywise substitution of a variable by a scalar.
  PolyMatrix substitute(Var v, const Scalar& value) const {
    PolyMatrix r = *this;
    for (auto& e : r.entries_) e = e.substitute(v, value);
    return r;
  }

  /// Copy with the listed 1-based rows and columns removed.
  PolyMatrix remove(const std::vector<std::size_t>& rows1, const std::vector<std::size_t>& cols1) const {
    auto keep = [](std::size_t n, const std::vector<std::size_t>& drop) {
      std::vector<std::size_t> out;
      for (std::size_t i = 1; i <= n; ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i - 1);
      return out;
    };
    for (auto r : rows1)
      if (r < 1 || r > rows_) throw Error(ErrorCode::OutOfRange, "row " + std::to_string(r) + " outside " + shape());
    for (auto c : cols1)
      if (c < 1 || c > cols_) throw Error(ErrorCode::OutOfRange, "column " + std::to_string(c) + " outside " + shape());
    auto kr = keep(rows_, rows1), kc = keep(cols_, cols1);
    if (kr.empty() || kc.empty()) throw Error(ErrorCode::DimensionMismatch, "deletion leaves an empty matrix");
    PolyMatrix r(kr.size(), kc.size(), field_);
    for (std::size_t i = 0; i < kr.size(); ++i)
      for (std::size_t j = 0; j < kc.size(); ++j) r(i, j) = (*this)(kr[i], kc[j]);
    return r;
  }

  PolyMatrix remove_rows(const std::vector<std::size_t>& rows1) const { return remove(rows1, {}); }
  PolyMatrix remove_cols(const std::vector<std::size_t>& cols1) const { return remove({}, cols1); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<MultiPoly> entries_;
};

inline std::vector<MultiPoly> unit_vector(std::size_t n, std::size_t j1, const Field& field) {
  if (j1 < 1 || j1 > n) throw Error(ErrorCode::OutOfRange, "unit vector index out of range");
  std::vector<MultiPoly> e(n, MultiPoly(field));
  e[j1 - 1] = MultiPoly::constant(field, 1);
  return e;
}

}  // namespace locoh
