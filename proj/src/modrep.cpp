#include "trimod/modrep.hpp"

#include <random>
#include <sstream>

namespace trimod {

/* ---------- Module ---------- */

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
{
    if (!algebra)
        throw validation_error("module without algebra");
    if (action.size() != algebra->dim())
        throw validation_error("module action list length differs from algebra dimension");
    for (const Matrix& l : action)
        if (l.rows() != dim || l.cols() != dim || l.field() != algebra->field())
            throw validation_error("module action matrix has wrong shape or field");
    d_ = std::make_shared<Data>(Data{std::move(algebra), dim, std::move(action)});
}

Module Module::zero(AlgebraPtr algebra)
{
    const std::size_t n = algebra->dim();
    const FieldSpec f = algebra->field();
    return Module(std::move(algebra), 0, std::vector<Matrix>(n, Matrix(f, 0, 0)));
}

Module Module::regular(AlgebraPtr algebra)
{
    std::vector<Matrix> action;
    action.reserve(algebra->dim());
    for (std::size_t i = 0; i < algebra->dim(); ++i)
        action.push_back(algebra->left_mult(i));
    const std::size_t n = algebra->dim();
    return Module(std::move(algebra), n, std::move(action));
}

Matrix Module::act(const Matrix& algebra_elt) const
{
    if (algebra_elt.rows() != algebra()->dim() || algebra_elt.cols() != 1)
        throw validation_error("act: expected an algebra coordinate vector");
    Matrix op(field(), dim(), dim());
    for (std::size_t i = 0; i < algebra()->dim(); ++i) {
        const Rat c = algebra_elt.get(i, 0);
        if (!c.is_zero())
            op = op + action(i).scaled(c);
    }
    return op;
}

bool Module::same_algebra(const Module& o) const { return *algebra() == *o.algebra(); }

bool Module::operator==(const Module& o) const
{
    return same_algebra(o) && dim() == o.dim() && d_->action == o.d_->action;
}

CheckReport validate_module(const Module& m)
{
    CheckReport report;
    const Algebra& a = *m.algebra();
    bool hom_ok = true;
    std::string witness = "action is multiplicative on all basis pairs";
    for (std::size_t i = 0; i < a.dim() && hom_ok; ++i) {
        for (std::size_t j = 0; j < a.dim() && hom_ok; ++j) {
            const Matrix lhs = m.action(i) * m.action(j);
            const Matrix rhs = m.act(a.multiply(a.basis_vector(i), a.basis_vector(j)));
            if (lhs != rhs) {
                hom_ok = false;
                witness = "L(e_i)L(e_j) != L(e_i e_j) at (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
            }
        }
    }
    report.add("action homomorphism", hom_ok ? CheckStatus::Pass : CheckStatus::Fail, witness, "module axioms");
    const bool unit_ok = m.act(a.unit()).is_identity();
    report.add("unit acts as identity", unit_ok ? CheckStatus::Pass : CheckStatus::Fail, unit_ok ? "L(u) = I" : "L(u) != I", "module axioms");
    return report;
}

/* ---------- ModuleMap ---------- */

ModuleMap::ModuleMap(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (!source_.same_algebra(target_))
        throw validation_error("module map between different algebras");
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
        throw validation_error("module map matrix has wrong shape");
}

ModuleMap ModuleMap::identity(const Module& m) { return ModuleMap(m, m, Matrix::identity(m.field(), m.dim())); }

ModuleMap ModuleMap::zero(Module source, Module target)
{
    Matrix z(source.field(), target.dim(), source.dim());
    return ModuleMap(std::move(source), std::move(target), std::move(z));
}

bool ModuleMap::intertwines() const
{
    for (std::size_t i = 0; i < source_.algebra()->dim(); ++i)
        if (target_.action(i) * matrix_ != matrix_ * source_.action(i))
            return false;
    return true;
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const
{
    if (!(inner.target_ == source_))
        throw validation_error("compose: inner target differs from outer source");
    return ModuleMap(inner.source_, target_, matrix_ * inner.matrix_);
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const { return ModuleMap(source_, target_, matrix_ + o.matrix_); }
ModuleMap ModuleMap::operator-(const ModuleMap& o) const { return ModuleMap(source_, target_, matrix_ - o.matrix_); }

bool ModuleMap::is_iso() const { return matrix_.rows() == matrix_.cols() && matrix_.rank() == matrix_.rows(); }

std::optional<ModuleMap> ModuleMap::inverse() const
{
    auto inv = matrix_.inverse();
    if (!inv)
        return std::nullopt;
    return ModuleMap(target_, source_, *inv);
}

/* ---------- HomSpace ---------- */

namespace {

Matrix vec_row_major(const Matrix& f)
{
    Matrix v(f.field(), f.rows() * f.cols(), 1);
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            v.set(r * f.cols() + c, 0, f.get(r, c));
    return v;
}

Matrix unvec_row_major(const Matrix& v, std::size_t rows, std::size_t cols)
{
    Matrix f(v.field(), rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            f.set(r, c, v.get(r * cols + c, 0));
    return f;
}

}  // namespace

/* greedy generating subset of the basis: e_i enters if it is outside the
 * unital subalgebra generated so far */
std::vector<std::size_t> algebra_generators(const Algebra& a)
{
    const std::size_t n = a.dim();
    std::vector<std::size_t> gens;
    Subspace span = Subspace::span_cols(n, a.unit());
    for (std::size_t i = 0; i < n; ++i) {
        if (span.dim() == n)
            break;
        if (span.contains(a.basis_vector(i)))
            continue;
        gens.push_back(i);
        // close the span under left/right multiplication by chosen generators
        bool grew = true;
        while (grew && span.dim() < n) {
            grew = false;
            Matrix rows = span.basis();
            Matrix extra(a.field(), 0, n);
            for (std::size_t g : gens) {
                const Matrix lg = a.left_mult(g);
                const Matrix rg = a.right_mult(g);
                for (std::size_t r = 0; r < rows.rows(); ++r) {
                    const Matrix v = rows.row(r).transpose();
                    for (const Matrix& w : {lg * v, rg * v})
                        if (!span.contains(w))
                            extra = Matrix::vstack(extra, w.transpose());
                }
            }
            if (extra.rows() > 0) {
                Subspace bigger = span.sum(Subspace::span_rows(n, extra));
                if (bigger.dim() > span.dim()) {
                    span = bigger;
                    grew = true;
                }
            }
        }
    }
    return gens;
}

HomSpace::HomSpace(Module source, Module target, Subspace space)
    : source_(std::move(source)), target_(std::move(target)), space_(std::move(space))
{
    if (space_.ambient_dim() != source_.dim() * target_.dim())
        throw validation_error("hom space ambient mismatch");
}

ModuleMap HomSpace::basis_map(std::size_t r) const
{
    return ModuleMap(source_, target_, unvec_row_major(space_.basis().row(r).transpose(), target_.dim(), source_.dim()));
}

ModuleMap HomSpace::map_from_coords(const Matrix& coeffs) const
{
    if (coeffs.rows() != dim() || coeffs.cols() != 1)
        throw validation_error("map_from_coords: wrong coefficient shape");
    const Matrix v = space_.basis().transpose() * coeffs;
    return ModuleMap(source_, target_, unvec_row_major(v, target_.dim(), source_.dim()));
}

std::optional<Matrix> HomSpace::coords_of(const ModuleMap& f) const { return coords_of(f.matrix()); }

std::optional<Matrix> HomSpace::coords_of(const Matrix& raw) const
{
    if (raw.rows() != target_.dim() || raw.cols() != source_.dim())
        throw validation_error("coords_of: wrong map shape");
    return space_.coords_of(vec_row_major(raw));
}

HomSpace hom_space(const Module& x, const Module& y)
{
    if (!x.same_algebra(y))
        throw validation_error("hom_space: modules over different algebras");
    const std::size_t dx = x.dim(), dy = y.dim();
    const std::size_t ambient = dx * dy;
    const FieldSpec f = x.field();

    // intersect intertwining constraints generator by generator, shrinking
    // the candidate basis as we go
    Matrix basis = Matrix::identity(f, ambient);
    for (std::size_t g : algebra_generators(*x.algebra())) {
        if (basis.rows() == 0)
            break;
        Matrix constraint(f, ambient, basis.rows());
        for (std::size_t t = 0; t < basis.rows(); ++t) {
            const Matrix ft = unvec_row_major(basis.row(t).transpose(), dy, dx);
            constraint.paste(0, t, vec_row_major(y.action(g) * ft - ft * x.action(g)));
        }
        const Subspace ker = constraint.kernel();
        basis = ker.basis() * basis;
    }
    return HomSpace(x, y, Subspace::span_rows(ambient, basis));
}

/* ---------- sub/quotient structure ---------- */

SubmoduleResult restrict_action(const Module& ambient, const Subspace& sub)
{
    const std::size_t d = sub.dim();
    const Matrix incl = sub.basis().transpose();  // ambient.dim x d
    std::vector<Matrix> action;
    action.reserve(ambient.algebra()->dim());
    for (std::size_t i = 0; i < ambient.algebra()->dim(); ++i) {
        const Matrix moved = ambient.action(i) * incl;
        Matrix restricted(ambient.field(), d, d);
        for (std::size_t j = 0; j < d; ++j) {
            auto coords = sub.coords_of(moved.col(j));
            if (!coords)
                throw validation_error("restrict_action: subspace is not invariant");
            restricted.paste(0, j, *coords);
        }
        action.push_back(std::move(restricted));
    }
    Module m(ambient.algebra(), d, std::move(action));
    ModuleMap inclusion(m, ambient, incl);
    return SubmoduleResult{std::move(m), std::move(inclusion)};
}

QuotientModuleResult quotient_module(const Module& ambient, const Subspace& sub)
{
    const QuotientSpace q = quotient_basis(sub);
    const std::size_t d = q.projection.rows();
    std::vector<Matrix> action;
    action.reserve(ambient.algebra()->dim());
    for (std::size_t i = 0; i < ambient.algebra()->dim(); ++i)
        action.push_back(q.projection * ambient.action(i) * q.section);
    Module m(ambient.algebra(), d, std::move(action));
    ModuleMap projection(ambient, m, q.projection);
    return QuotientModuleResult{std::move(m), std::move(projection), q.section};
}

SubmoduleResult kernel_module(const ModuleMap& f) { return restrict_action(f.source(), f.matrix().kernel()); }

SubmoduleResult image_module(const ModuleMap& f) { return restrict_action(f.target(), f.matrix().column_space()); }

QuotientModuleResult cokernel_module(const ModuleMap& f)
{
    return quotient_module(f.target(), f.matrix().column_space());
}

DirectSumResult direct_sum(const std::vector<Module>& parts)
{
    if (parts.empty())
        throw validation_error("direct_sum of an empty list");
    const AlgebraPtr a = parts.front().algebra();
    std::size_t total = 0;
    for (const Module& p : parts) {
        if (!(*p.algebra() == *a))
            throw validation_error("direct_sum: algebra mismatch");
        total += p.dim();
    }
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        Matrix block(a->field(), total, total);
        std::size_t off = 0;
        for (const Module& p : parts) {
            block.paste(off, off, p.action(i));
            off += p.dim();
        }
        action.push_back(std::move(block));
    }
    Module sum(a, total, std::move(action));

    DirectSumResult out{sum, {}, {}};
    std::size_t off = 0;
    for (const Module& p : parts) {
        Matrix inj(a->field(), total, p.dim());
        Matrix prj(a->field(), p.dim(), total);
        for (std::size_t j = 0; j < p.dim(); ++j) {
            inj.set(off + j, j, Rat(1));
            prj.set(j, off + j, Rat(1));
        }
        out.injections.emplace_back(p, sum, std::move(inj));
        out.projections.emplace_back(sum, p, std::move(prj));
        off += p.dim();
    }
    return out;
}

Subspace invariant_closure(const Module& ambient, const Subspace& seed)
{
    Subspace span = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        const Matrix rows = span.basis();
        Matrix extra(ambient.field(), 0, ambient.dim());
        for (std::size_t i = 0; i < ambient.algebra()->dim(); ++i)
            for (std::size_t r = 0; r < rows.rows(); ++r) {
                const Matrix w = ambient.action(i) * rows.row(r).transpose();
                if (!span.contains(w))
                    extra = Matrix::vstack(extra, w.transpose());
            }
        if (extra.rows() > 0) {
            span = span.sum(Subspace::span_rows(ambient.dim(), extra));
            grew = true;
        }
    }
    return span;
}

SubmoduleResult submodule_generated(const Module& ambient, const Matrix& vectors)
{
    if (vectors.rows() != ambient.dim())
        throw validation_error("submodule_generated: vector height mismatch");
    return restrict_action(ambient, invariant_closure(ambient, Subspace::span_cols(ambient.dim(), vectors)));
}

RandomModuleResult random_module(const AlgebraPtr& a, std::size_t generators, std::uint64_t seed)
{
    if (generators == 0)
        throw validation_error("random_module: need at least one generator");
    std::vector<Module> copies(generators, Module::regular(a));
    Module ambient = direct_sum(copies).module;
    std::mt19937_64 rng(seed);
    Matrix vectors(a->field(), ambient.dim(), generators);
    if (a->field().kind == FieldSpec::Kind::Rationals) {
        std::uniform_int_distribution<long> dist(-3, 3);
        for (std::size_t j = 0; j < generators; ++j)
            for (std::size_t i = 0; i < ambient.dim(); ++i)
                vectors.set(i, j, Rat(dist(rng)));
    } else {
        std::uniform_int_distribution<std::int64_t> dist(0, a->field().p - 1);
        for (std::size_t j = 0; j < generators; ++j)
            for (std::size_t i = 0; i < ambient.dim(); ++i)
                vectors.set(i, j, Rat(static_cast<long>(dist(rng))));
    }
    SubmoduleResult sub = submodule_generated(ambient, vectors);
    return RandomModuleResult{sub.module, std::move(ambient), sub.inclusion};
}

/* ---------- Bimodule ---------- */

Bimodule::Bimodule(AlgebraPtr left_algebra, AlgebraPtr right_algebra, std::size_t dim,
                   std::vector<Matrix> left_action, std::vector<Matrix> right_action)
    : left_(Module(left_algebra, dim, std::move(left_action))),
      right_(Module(opposite(right_algebra), dim, std::move(right_action))),
      right_algebra_(std::move(right_algebra))
{
    if (left_algebra->field() != right_algebra_->field())
        throw validation_error("bimodule over algebras with different fields");
}

Bimodule Bimodule::regular(const AlgebraPtr& a)
{
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        left.push_back(a->left_mult(i));
        right.push_back(a->right_mult(i));
    }
    return Bimodule(a, a, a->dim(), std::move(left), std::move(right));
}

Bimodule Bimodule::zero(AlgebraPtr left_algebra, AlgebraPtr right_algebra)
{
    const FieldSpec f = left_algebra->field();
    std::vector<Matrix> left(left_algebra->dim(), Matrix(f, 0, 0));
    std::vector<Matrix> right(right_algebra->dim(), Matrix(f, 0, 0));
    return Bimodule(std::move(left_algebra), std::move(right_algebra), 0, std::move(left), std::move(right));
}

CheckReport validate_bimodule(const Bimodule& m)
{
    CheckReport report;
    report.append(validate_module(m.left_module()), "left");
    report.append(validate_module(m.right_module()), "right");
    bool commute = true;
    std::string witness = "L(a)R(b) = R(b)L(a) on all basis pairs";
    for (std::size_t i = 0; i < m.left_algebra()->dim() && commute; ++i)
        for (std::size_t j = 0; j < m.right_algebra()->dim() && commute; ++j)
            if (m.left_action(i) * m.right_action(j) != m.right_action(j) * m.left_action(i)) {
                commute = false;
                witness = "actions disagree at (a=" + std::to_string(i) + ", b=" + std::to_string(j) + ")";
            }
    report.add("actions commute", commute ? CheckStatus::Pass : CheckStatus::Fail, witness, "bimodule axioms");
    return report;
}

/* ---------- tensor ---------- */

TensorResult tensor_over(const Bimodule& m, const Module& y)
{
    if (!(*y.algebra() == *m.right_algebra()))
        throw validation_error("tensor_over: module is not over the right algebra of the bimodule");
    const std::size_t dm = m.dim(), dy = y.dim();
    const std::size_t raw = dm * dy;
    const FieldSpec f = y.field();
    const std::size_t nb = m.right_algebra()->dim();

    // relations (m_i b_l) (x) y_j - m_i (x) (b_l y_j)
    Matrix rels(f, nb * raw, raw);
    std::size_t row = 0;
    for (std::size_t l = 0; l < nb; ++l) {
        const Matrix& rb = m.right_action(l);
        const Matrix& ly = y.action(l);
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dy; ++j) {
                for (std::size_t s = 0; s < dm; ++s) {
                    const Rat c = rb.get(s, i);
                    if (!c.is_zero())
                        rels.set(row, s * dy + j, rels.get(row, s * dy + j) + c);
                }
                for (std::size_t t = 0; t < dy; ++t) {
                    const Rat c = ly.get(t, j);
                    if (!c.is_zero())
                        rels.set(row, i * dy + t, rels.get(row, i * dy + t) - c);
                }
                ++row;
            }
    }
    const Subspace relspan = Subspace::span_rows(raw, rels);
    const QuotientSpace q = quotient_basis(relspan);
    const std::size_t dt = q.projection.rows();

    // induced left A-action: a.(m (x) y) = (a m) (x) y
    std::vector<Matrix> action;
    const std::size_t na = m.left_algebra()->dim();
    action.reserve(na);
    for (std::size_t i = 0; i < na; ++i) {
        const Matrix raw_act = Matrix::kron(m.left_action(i), Matrix::identity(f, dy));
        action.push_back(q.projection * raw_act * q.section);
    }
    Module t(m.left_algebra(), dt, std::move(action));
    return TensorResult{std::move(t), q.projection, q.section};
}

ModuleMap tensor_map(const Bimodule& m, const ModuleMap& g)
{
    return tensor_map(m, g, tensor_over(m, g.source()), tensor_over(m, g.target()));
}

ModuleMap tensor_map(const Bimodule& m, const ModuleMap& g, const TensorResult& src, const TensorResult& tgt)
{
    const Matrix raw = Matrix::kron(Matrix::identity(g.matrix().field(), m.dim()), g.matrix());
    return ModuleMap(src.module, tgt.module, tgt.projection * raw * src.section);
}

/* ---------- hom as a module ---------- */

HomModuleResult hom_module(const Bimodule& m, const Module& x)
{
    if (!(*x.algebra() == *m.left_algebra()))
        throw validation_error("hom_module: module is not over the left algebra of the bimodule");
    HomSpace hs = hom_space(m.left_module(), x);
    const std::size_t h = hs.dim();
    const std::size_t nb = m.right_algebra()->dim();
    std::vector<Matrix> action;
    action.reserve(nb);
    for (std::size_t l = 0; l < nb; ++l) {
        // (b_l . f)(v) = f(v b_l): compose with the right action of b_l
        Matrix act(x.field(), h, h);
        for (std::size_t r = 0; r < h; ++r) {
            const Matrix moved = hs.basis_map(r).matrix() * m.right_action(l);
            auto coords = hs.coords_of(moved);
            if (!coords)
                throw internal_error("hom_module: action left the hom space");
            act.paste(0, r, *coords);
        }
        action.push_back(std::move(act));
    }
    Module out(m.right_algebra(), h, std::move(action));
    return HomModuleResult{std::move(out), std::move(hs)};
}

}  // namespace trimod
