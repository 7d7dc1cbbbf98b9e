#include "trimod/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace trimod {

/* ---------- Rat ---------- */

Rat::Rat(long num, long den)
{
    if (den == 0)
        throw validation_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::from_string(const std::string& s)
{
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw validation_error("malformed rational literal '" + s + "'");
    v.canonicalize();
    return Rat(v);
}

Rat Rat::operator/(const Rat& o) const
{
    if (o.is_zero())
        throw validation_error("division by zero");
    return Rat(mpq_class(v_ / o.v_));
}

Rat Rat::inverse() const
{
    if (is_zero())
        throw validation_error("inverse of zero");
    return Rat(mpq_class(1 / v_));
}

std::int64_t Rat::residue_mod(std::int64_t p) const
{
    const mpz_class num = v_.get_num();
    const mpz_class den = v_.get_den();
    std::int64_t n = static_cast<std::int64_t>(mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p)));
    std::int64_t d = static_cast<std::int64_t>(mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)));
    if (d == 0)
        throw validation_error("rational " + str() + " has no residue mod " + std::to_string(p));
    // d^(p-2) mod p by binary exponentiation
    std::int64_t inv = 1, base = d, e = p - 2;
    while (e > 0) {
        if (e & 1)
            inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return n * inv % p;
}

std::string Rat::str() const { return v_.get_str(); }

/* ---------- FieldSpec ---------- */

bool is_prime_u31(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13}) {
        if (n % q == 0)
            return n == q;
    }
    // deterministic Miller-Rabin; bases {2,7,61} decide primality below 2^32
    auto mulmod = [](std::int64_t a, std::int64_t b, std::int64_t m) { return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m); };
    std::int64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::int64_t a : {2, 7, 61}) {
        std::int64_t x = 1, base = a % n, e = d;
        while (e > 0) {
            if (e & 1)
                x = mulmod(x, base, n);
            base = mulmod(base, base, n);
            e >>= 1;
        }
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p)
{
    if (p < 2 || p >= (std::int64_t{1} << 31))
        throw validation_error("field characteristic " + std::to_string(p) + " out of range [2, 2^31)");
    if (!is_prime_u31(p))
        throw validation_error(std::to_string(p) + " is not prime");
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::str() const
{
    return kind == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
}

/* ---------- field-generic kernels ---------- */

namespace {

struct QOps {
    using T = Rat;
    static T zero() { return Rat(0); }
    static T one() { return Rat(1); }
    static bool is_zero(const T& a) { return a.is_zero(); }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T neg(const T& a) { return -a; }
    static T inv(const T& a) { return a.inverse(); }
};

struct POps {
    std::int64_t p;
    using T = std::int64_t;
    static T zero() { return 0; }
    static T one() { return 1; }
    static bool is_zero(T a) { return a == 0; }
    T add(T a, T b) const { return (a + b) % p; }
    T sub(T a, T b) const { return (a - b % p + p) % p; }
    T mul(T a, T b) const { return a * b % p; }  // p < 2^31 keeps products in int64
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const
    {
        if (a == 0)
            throw validation_error("inverse of zero");
        T r = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1)
                r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    }
};

template <class Ops>
std::vector<std::size_t> rref_in_place(std::vector<typename Ops::T>& a, std::size_t rows, std::size_t cols, const Ops& ops)
{
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pr = lead;
        while (pr < rows && Ops::is_zero(a[pr * cols + c]))
            ++pr;
        if (pr == rows)
            continue;
        if (pr != lead)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[pr * cols + j], a[lead * cols + j]);
        const auto piv_inv = ops.inv(a[lead * cols + c]);
        for (std::size_t j = c; j < cols; ++j)
            a[lead * cols + j] = ops.mul(a[lead * cols + j], piv_inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || Ops::is_zero(a[r * cols + c]))
                continue;
            const auto factor = a[r * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                a[r * cols + j] = ops.sub(a[r * cols + j], ops.mul(factor, a[lead * cols + j]));
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

template <class Ops>
void matmul(const std::vector<typename Ops::T>& a, const std::vector<typename Ops::T>& b, std::vector<typename Ops::T>& out,
            std::size_t n, std::size_t k, std::size_t m, const Ops& ops)
{
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            const auto& aval = a[i * k + t];
            if (Ops::is_zero(aval))
                continue;
            for (std::size_t j = 0; j < m; ++j) {
                const auto& bval = b[t * m + j];
                if (!Ops::is_zero(bval))
                    out[i * m + j] = ops.add(out[i * m + j], ops.mul(aval, bval));
            }
        }
    }
}

}  // namespace

/* ---------- Matrix ---------- */

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols)
{
    if (field_.kind == FieldSpec::Kind::Rationals)
        q_.assign(rows * cols, Rat(0));
    else
        f_.assign(rows * cols, 0);
}

Matrix Matrix::identity(FieldSpec field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, Rat(1));
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Rat>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw validation_error("ragged row list");
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

Rat Matrix::get(std::size_t i, std::size_t j) const
{
    if (field_.kind == FieldSpec::Kind::Rationals)
        return q_[i * cols_ + j];
    return Rat(static_cast<long>(f_[i * cols_ + j]));
}

void Matrix::set(std::size_t i, std::size_t j, const Rat& v)
{
    if (field_.kind == FieldSpec::Kind::Rationals)
        q_[i * cols_ + j] = v;
    else
        f_[i * cols_ + j] = v.residue_mod(field_.p);
}

void Matrix::check_same_field(const Matrix& o) const
{
    if (field_ != o.field_)
        throw validation_error("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Matrix Matrix::operator+(const Matrix& o) const
{
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw validation_error("shape mismatch in matrix addition");
    Matrix r(field_, rows_, cols_);
    if (field_.kind == FieldSpec::Kind::Rationals) {
        for (std::size_t i = 0; i < q_.size(); ++i)
            r.q_[i] = q_[i] + o.q_[i];
    } else {
        const POps ops{field_.p};
        for (std::size_t i = 0; i < f_.size(); ++i)
            r.f_[i] = ops.add(f_[i], o.f_[i]);
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw validation_error("shape mismatch in matrix subtraction");
    Matrix r(field_, rows_, cols_);
    if (field_.kind == FieldSpec::Kind::Rationals) {
        for (std::size_t i = 0; i < q_.size(); ++i)
            r.q_[i] = q_[i] - o.q_[i];
    } else {
        const POps ops{field_.p};
        for (std::size_t i = 0; i < f_.size(); ++i)
            r.f_[i] = ops.sub(f_[i], o.f_[i]);
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    check_same_field(o);
    if (cols_ != o.rows_)
        throw validation_error("shape mismatch in matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix r(field_, rows_, o.cols_);
    if (field_.kind == FieldSpec::Kind::Rationals)
        matmul(q_, o.q_, r.q_, rows_, cols_, o.cols_, QOps{});
    else
        matmul(f_, o.f_, r.f_, rows_, cols_, o.cols_, POps{field_.p});
    return r;
}

Matrix Matrix::operator-() const
{
    Matrix r(field_, rows_, cols_);
    if (field_.kind == FieldSpec::Kind::Rationals) {
        for (std::size_t i = 0; i < q_.size(); ++i)
            r.q_[i] = -q_[i];
    } else {
        const POps ops{field_.p};
        for (std::size_t i = 0; i < f_.size(); ++i)
            r.f_[i] = ops.neg(f_[i]);
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const
{
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && q_ == o.q_ && f_ == o.f_;
}

Matrix Matrix::scaled(const Rat& c) const
{
    Matrix r(field_, rows_, cols_);
    if (field_.kind == FieldSpec::Kind::Rationals) {
        for (std::size_t i = 0; i < q_.size(); ++i)
            r.q_[i] = q_[i] * c;
    } else {
        const POps ops{field_.p};
        const std::int64_t cv = c.residue_mod(field_.p);
        for (std::size_t i = 0; i < f_.size(); ++i)
            r.f_[i] = ops.mul(f_[i], cv);
    }
    return r;
}

Matrix Matrix::transpose() const
{
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (field_.kind == FieldSpec::Kind::Rationals)
                r.q_[j * rows_ + i] = q_[i * cols_ + j];
            else
                r.f_[j * rows_ + i] = f_[i * cols_ + j];
        }
    return r;
}

bool Matrix::is_zero() const
{
    if (field_.kind == FieldSpec::Kind::Rationals)
        return std::all_of(q_.begin(), q_.end(), [](const Rat& v) { return v.is_zero(); });
    return std::all_of(f_.begin(), f_.end(), [](std::int64_t v) { return v == 0; });
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    return *this == identity(field_, rows_);
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw validation_error("submatrix out of range");
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            if (field_.kind == FieldSpec::Kind::Rationals)
                r.q_[i * nc + j] = q_[(r0 + i) * cols_ + (c0 + j)];
            else
                r.f_[i * nc + j] = f_[(r0 + i) * cols_ + (c0 + j)];
        }
    return r;
}

Matrix Matrix::col(std::size_t j) const { return submatrix(0, j, rows_, 1); }
Matrix Matrix::row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }

void Matrix::paste(std::size_t r0, std::size_t c0, const Matrix& block)
{
    check_same_field(block);
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
        throw validation_error("paste out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
        for (std::size_t j = 0; j < block.cols_; ++j) {
            if (field_.kind == FieldSpec::Kind::Rationals)
                q_[(r0 + i) * cols_ + (c0 + j)] = block.q_[i * block.cols_ + j];
            else
                f_[(r0 + i) * cols_ + (c0 + j)] = block.f_[i * block.cols_ + j];
        }
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    a.check_same_field(b);
    if (a.rows_ != b.rows_)
        throw validation_error("hstack row mismatch");
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    r.paste(0, 0, a);
    r.paste(0, a.cols_, b);
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    a.check_same_field(b);
    if (a.cols_ != b.cols_)
        throw validation_error("vstack column mismatch");
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
    r.paste(0, 0, a);
    r.paste(a.rows_, 0, b);
    return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b)
{
    a.check_same_field(b);
    Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Rat v = a.get(i, j);
            if (v.is_zero())
                continue;
            r.paste(i * b.rows_, j * b.cols_, b.scaled(v));
        }
    return r;
}

RrefResult Matrix::rref() const
{
    Matrix red = *this;
    std::vector<std::size_t> pivots;
    if (field_.kind == FieldSpec::Kind::Rationals)
        pivots = rref_in_place(red.q_, rows_, cols_, QOps{});
    else
        pivots = rref_in_place(red.f_, rows_, cols_, POps{field_.p});
    return RrefResult{std::move(red), std::move(pivots)};
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

Subspace Matrix::kernel() const
{
    const RrefResult r = rref();
    const std::size_t rk = r.pivots.size();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : r.pivots)
        is_pivot[c] = true;
    Matrix basis(field_, cols_ - rk, cols_);
    std::size_t out = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c])
            continue;
        basis.set(out, c, Rat(1));
        for (std::size_t pr = 0; pr < rk; ++pr)
            basis.set(out, r.pivots[pr], -r.reduced.get(pr, c));
        ++out;
    }
    return Subspace::span_rows(cols_, basis);
}

Subspace Matrix::column_space() const { return Subspace::span_rows(rows_, transpose()); }
Subspace Matrix::row_space() const { return Subspace::span_rows(cols_, *this); }

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const
{
    check_same_field(rhs);
    if (rhs.rows() != rows_)
        throw validation_error("solve: rhs row mismatch");
    const Matrix aug = hstack(*this, rhs);
    const RrefResult r = aug.rref();
    for (std::size_t c : r.pivots)
        if (c >= cols_)
            return std::nullopt;
    Matrix x(field_, cols_, rhs.cols());
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.set(r.pivots[pr], j, r.reduced.get(pr, cols_ + j));
    if (*this * x != rhs)
        throw internal_error("solve: back-substitution check failed");
    return x;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_)
        return std::nullopt;
    const Matrix aug = hstack(*this, identity(field_, rows_));
    const RrefResult r = aug.rref();
    if (r.pivots.size() != rows_ || (rows_ > 0 && r.pivots.back() >= cols_))
        return std::nullopt;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        if (r.pivots[i] != i)
            return std::nullopt;
    return r.reduced.submatrix(0, cols_, rows_, rows_);
}

std::string Matrix::str() const
{
    std::ostringstream out;
    out << rows_ << "x" << cols_ << " over " << field_.str() << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j ? " " : "") << get(i, j).str();
        out << "]\n";
    }
    return out.str();
}

/* ---------- Subspace ---------- */

Subspace::Subspace(std::size_t ambient_dim, Matrix echelon_basis) : ambient_(ambient_dim), basis_(std::move(echelon_basis))
{
    if (basis_.cols() != ambient_)
        throw validation_error("subspace basis width differs from ambient dimension");
    const RrefResult r = basis_.rref();
    if (r.reduced != basis_ || r.pivots.size() != basis_.rows())
        throw validation_error("subspace basis is not a reduced echelon basis");
    pivots_ = r.pivots;
}

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim)
{
    return Subspace(ambient_dim, Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim)
{
    return Subspace(ambient_dim, Matrix::identity(field, ambient_dim));
}

Subspace Subspace::span_rows(std::size_t ambient_dim, const Matrix& vectors)
{
    if (vectors.cols() != ambient_dim)
        throw validation_error("span_rows: width differs from ambient dimension");
    const RrefResult r = vectors.rref();
    return Subspace(ambient_dim, r.reduced.submatrix(0, 0, r.pivots.size(), ambient_dim));
}

Subspace Subspace::span_cols(std::size_t ambient_dim, const Matrix& vectors)
{
    return span_rows(ambient_dim, vectors.transpose());
}

std::optional<Matrix> Subspace::coords_of(const Matrix& v) const
{
    if (v.rows() != ambient_ || v.cols() != 1)
        throw validation_error("coords_of: expected an ambient column vector");
    Matrix coeffs(basis_.field(), dim(), 1);
    Matrix residual = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        const Rat c = residual.get(pivots_[r], 0);
        if (c.is_zero())
            continue;
        coeffs.set(r, 0, c);
        for (std::size_t j = 0; j < ambient_; ++j)
            residual.set(j, 0, residual.get(j, 0) - c * basis_.get(r, j));
    }
    if (!residual.is_zero())
        return std::nullopt;
    return coeffs;
}

bool Subspace::contains(const Matrix& v) const { return coords_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r).transpose()))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw validation_error("subspace sum: ambient mismatch");
    return span_rows(ambient_, Matrix::vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw validation_error("subspace intersect: ambient mismatch");
    // Zassenhaus: kernel of [B1^T | B2^T] gives coefficient pairs with
    // B1^T a + B2^T b = 0; the intersection is spanned by B1^T a.
    const Matrix b1t = basis_.transpose();
    const Matrix b2t = other.basis_.transpose();
    const Subspace ker = Matrix::hstack(b1t, b2t).kernel();
    Matrix gens(basis_.field(), ker.dim(), ambient_);
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        const Matrix a = ker.basis().row(r).submatrix(0, 0, 1, dim());
        gens.paste(r, 0, (b1t * a.transpose()).transpose());
    }
    return span_rows(ambient_, gens);
}

/* ---------- quotient ---------- */

QuotientSpace quotient_basis(const Subspace& sub)
{
    const std::size_t n = sub.ambient_dim();
    const FieldSpec field = sub.basis().field();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : sub.pivots())
        is_pivot[c] = true;
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            complement.push_back(c);

    const std::size_t q = complement.size();
    Matrix projection(field, q, n);
    for (std::size_t r = 0; r < q; ++r)
        projection.set(r, complement[r], Rat(1));
    // reducing e_{pivot[r]} by the echelon basis leaves -basis[r] on the
    // complement coordinates
    for (std::size_t pr = 0; pr < sub.dim(); ++pr)
        for (std::size_t r = 0; r < q; ++r)
            projection.set(r, sub.pivots()[pr], -sub.basis().get(pr, complement[r]));

    Matrix section(field, n, q);
    for (std::size_t r = 0; r < q; ++r)
        section.set(complement[r], r, Rat(1));

    return QuotientSpace{std::move(complement), std::move(projection), std::move(section)};
}

}  // namespace trimod
