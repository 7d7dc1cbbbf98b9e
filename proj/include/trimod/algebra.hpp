#pragma once

/* Finite-dimensional associative unital algebras given by structure
 * constants c[i][j][k], meaning e_i * e_j = sum_k c[i][j][k] e_k. */

#include <memory>
#include <vector>

#include "trimod/exactlin.hpp"
#include "trimod/report.hpp"

namespace trimod {

class Algebra {
  public:
    /* left_mult[i] is the n x n matrix of left multiplication by e_i on
     * coordinates: column j holds the coordinates of e_i * e_j. */
    Algebra(FieldSpec field, std::vector<Matrix> left_mult, Matrix unit);

    static Algebra ground_field(FieldSpec field);
    /* k[x]/(x^2), basis {1, x} */
    static Algebra dual_numbers(FieldSpec field);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Matrix& unit() const { return unit_; }
    const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
    /* matrix of right multiplication by e_j: column i holds e_i * e_j */
    Matrix right_mult(std::size_t j) const;

    Rat c(std::size_t i, std::size_t j, std::size_t k) const { return left_mult_[i].get(k, j); }

    /* left multiplication operator of an arbitrary element x (n x 1) */
    Matrix mult_operator(const Matrix& x) const;
    Matrix multiply(const Matrix& x, const Matrix& y) const;
    Matrix basis_vector(std::size_t i) const;

    bool operator==(const Algebra& o) const;

  private:
    FieldSpec field_;
    std::size_t dim_;
    std::vector<Matrix> left_mult_;
    Matrix unit_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/* associativity (n^3 vector identities, checked as L_{e_i e_j} = L_i L_j)
 * and the two unit laws; failures carry the first offending triple */
CheckReport validate_algebra(const Algebra& a);

AlgebraPtr opposite(const AlgebraPtr& a);

}  // namespace trimod
