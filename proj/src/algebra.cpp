#include "trimod/algebra.hpp"

#include <sstream>

namespace trimod {

Algebra::Algebra(FieldSpec field, std::vector<Matrix> left_mult, Matrix unit)
    : field_(field), dim_(left_mult.size()), left_mult_(std::move(left_mult)), unit_(std::move(unit))
{
    if (dim_ == 0)
        throw validation_error("algebra must have dimension >= 1");
    for (const Matrix& l : left_mult_)
        if (l.rows() != dim_ || l.cols() != dim_ || l.field() != field_)
            throw validation_error("left multiplication table has wrong shape or field");
    if (unit_.rows() != dim_ || unit_.cols() != 1 || unit_.field() != field_)
        throw validation_error("unit vector has wrong shape or field");
}

Algebra Algebra::ground_field(FieldSpec field)
{
    std::vector<Matrix> lm{Matrix::identity(field, 1)};
    Matrix unit(field, 1, 1);
    unit.set(0, 0, Rat(1));
    return Algebra(field, std::move(lm), std::move(unit));
}

Algebra Algebra::dual_numbers(FieldSpec field)
{
    Matrix l0 = Matrix::identity(field, 2);
    Matrix l1(field, 2, 2);
    l1.set(1, 0, Rat(1));  // x*1 = x, x*x = 0
    Matrix unit(field, 2, 1);
    unit.set(0, 0, Rat(1));
    return Algebra(field, {l0, l1}, std::move(unit));
}

Matrix Algebra::right_mult(std::size_t j) const
{
    Matrix r(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k)
            r.set(k, i, c(i, j, k));
    return r;
}

Matrix Algebra::mult_operator(const Matrix& x) const
{
    if (x.rows() != dim_ || x.cols() != 1)
        throw validation_error("mult_operator: expected an algebra coordinate vector");
    Matrix op(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        const Rat xi = x.get(i, 0);
        if (!xi.is_zero())
            op = op + left_mult_[i].scaled(xi);
    }
    return op;
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const { return mult_operator(x) * y; }

Matrix Algebra::basis_vector(std::size_t i) const
{
    Matrix v(field_, dim_, 1);
    v.set(i, 0, Rat(1));
    return v;
}

bool Algebra::operator==(const Algebra& o) const
{
    return field_ == o.field_ && dim_ == o.dim_ && left_mult_ == o.left_mult_ && unit_ == o.unit_;
}

CheckReport validate_algebra(const Algebra& a)
{
    CheckReport report;
    const std::size_t n = a.dim();

    bool assoc_ok = true;
    std::string assoc_witness = "L_{e_i e_j} = L_i L_j for all " + std::to_string(n * n) + " pairs";
    for (std::size_t i = 0; i < n && assoc_ok; ++i) {
        for (std::size_t j = 0; j < n && assoc_ok; ++j) {
            // associativity against all e_k at once: the operator of e_i*e_j
            // must equal the composite of the operators
            const Matrix lhs = a.mult_operator(a.multiply(a.basis_vector(i), a.basis_vector(j)));
            const Matrix rhs = a.left_mult(i) * a.left_mult(j);
            if (lhs != rhs) {
                assoc_ok = false;
                assoc_witness = "failing pair (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
            }
        }
    }
    report.add("associativity", assoc_ok ? CheckStatus::Pass : CheckStatus::Fail, assoc_witness, "structure constants");

    bool unit_ok = a.mult_operator(a.unit()).is_identity();
    std::string unit_witness = "L_u = I";
    if (unit_ok) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a.multiply(a.basis_vector(j), a.unit()) != a.basis_vector(j)) {
                unit_ok = false;
                unit_witness = "e_" + std::to_string(j) + " * u != e_" + std::to_string(j);
                break;
            }
        }
    } else {
        unit_witness = "u * e_j != e_j for some j";
    }
    report.add("unit laws", unit_ok ? CheckStatus::Pass : CheckStatus::Fail, unit_witness, "structure constants");
    return report;
}

AlgebraPtr opposite(const AlgebraPtr& a)
{
    const std::size_t n = a->dim();
    std::vector<Matrix> lm;
    lm.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix l(a->field(), n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                l.set(k, j, a->c(j, i, k));  // c_op[i][j][k] = c[j][i][k]
        lm.push_back(std::move(l));
    }
    return std::make_shared<Algebra>(a->field(), std::move(lm), a->unit());
}

}  // namespace trimod
