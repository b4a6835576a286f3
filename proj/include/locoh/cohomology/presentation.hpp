#pragma once

#include <string>
#include <utility>
#include <vector>

#include "locoh/arith/monomial.hpp"
#include "locoh/error.hpp"
#include "locoh/matrices/poly_matrix.hpp"

namespace locoh {

/// Cokernel presentation of one graded piece: ordered generators (an x,y
/// monomial times a basis vector e_j) and a relation matrix over k[s,t]
/// whose rows follow the generators and whose columns follow `relations`.
///
/// `Degree` is the grading the piece is homogeneous for: a Bidegree for the
/// bigraded components of Coker A, a plain int for the Frobenius quotients.
template <class Degree>
struct Presentation {
  struct Generator {
    Monomial monomial;
    int basis_index = 1;  // 1-based
    Degree degree;

    std::string label() const { return monomial.to_string() + "*e" + std::to_string(basis_index); }
  };

  /// The relation multiplier * (source column or generator of the relation module).
  struct Relation {
    Monomial multiplier;
    int source_column = 1;  // 1-based
    Degree degree;
  };

  std::vector<Generator> generators;
  std::vector<Relation> relations;
  PolyMatrix matrix;

  Presentation(std::vector<Generator> gens, std::vector<Relation> rels, PolyMatrix m)
      : generators(std::move(gens)), relations(std::move(rels)), matrix(std::move(m)) {
    if (matrix.rows() != generators.size() || matrix.cols() != relations.size())
      throw Error(ErrorCode::DimensionMismatch, "presentation matrix " + matrix.shape() + " does not match " +
                                                    std::to_string(generators.size()) + " generators and " +
                                                    std::to_string(relations.size()) + " relations");
    if (!matrix.is_zero() && !all_entries_in_st())
      throw Error(ErrorCode::OutOfRange, "relation matrix must have entries in k[s,t]");
  }

 private:
  bool all_entries_in_st() const {
    for (std::size_t i = 0; i < matrix.rows(); ++i)
      for (std::size_t j = 0; j < matrix.cols(); ++j)
        if (!matrix(i, j).uses_only({Var::s, Var::t})) return false;
    return true;
  }
};

}  // namespace locoh
