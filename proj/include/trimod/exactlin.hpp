#pragma once

/* Exact dense linear algebra over QQ (arbitrary-precision rationals) and
 * GF(p) for prime p < 2^31. Everything downstream sits on this layer:
 * all values are immutable after construction and all arithmetic is exact. */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trimod/error.hpp"

namespace trimod {

/* Exact rational scalar, always in lowest terms with positive denominator,
 * so equality is bitwise. Doubles as the universal interchange value for
 * prime-field residues (denominator 1, value in [0,p)). */
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rat from_string(const std::string& s);

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const;
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    Rat inverse() const;

    /* numerator/denominator reduced mod p (denominator must be a unit mod p) */
    std::int64_t residue_mod(std::int64_t p) const;

    std::string str() const;
    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::int64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(std::int64_t p);

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

bool is_prime_u31(std::int64_t n);

class Subspace;
struct RrefResult;

/* Dense exact matrix over QQ or GF(p). Entries are stored row-major; the
 * prime-field representation keeps residues in [0,p) so equality is bitwise. */
class Matrix {
  public:
    Matrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Rat get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rat& v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix scaled(const Rat& c) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix col(std::size_t j) const;
    Matrix row(std::size_t i) const;
    void paste(std::size_t r0, std::size_t c0, const Matrix& block);

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix kron(const Matrix& a, const Matrix& b);

    RrefResult rref() const;
    std::size_t rank() const;

    Subspace kernel() const;
    Subspace column_space() const;
    Subspace row_space() const;

    /* One particular solution X of (*this) * X = rhs, or nullopt if
     * inconsistent. The homogeneous part is kernel(). */
    std::optional<Matrix> solve(const Matrix& rhs) const;
    std::optional<Matrix> inverse() const;

    std::string str() const;

  private:
    void check_same_field(const Matrix& o) const;

    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Rat> q_;           // Rationals storage
    std::vector<std::int64_t> f_;  // PrimeField storage, residues in [0,p)
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/* Subspace of a coordinate space, held as a reduced-row-echelon basis
 * (rows). The representation is canonical: equality of subspaces is
 * bitwise equality of bases. */
class Subspace {
  public:
    Subspace(std::size_t ambient_dim, Matrix echelon_basis);

    static Subspace zero(FieldSpec field, std::size_t ambient_dim);
    static Subspace full(FieldSpec field, std::size_t ambient_dim);
    /* span of the rows of `vectors` (need not be independent) */
    static Subspace span_rows(std::size_t ambient_dim, const Matrix& vectors);
    /* span of the columns of `vectors` */
    static Subspace span_cols(std::size_t ambient_dim, const Matrix& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Matrix& column_vector) const;
    bool contains(const Subspace& other) const;
    /* coefficients c (dim x 1) with basis^T * c = v, if v lies in the span */
    std::optional<Matrix> coords_of(const Matrix& column_vector) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/* Canonical complement of a subspace: the non-pivot standard coordinates of
 * its echelon basis. projection has kernel exactly `sub`; section embeds the
 * quotient back along the complement coordinates, with projection*section = I. */
struct QuotientSpace {
    std::vector<std::size_t> complement;
    Matrix projection;  // (ambient - dim sub) x ambient
    Matrix section;     // ambient x (ambient - dim sub)
};
QuotientSpace quotient_basis(const Subspace& sub);

}  // namespace trimod
