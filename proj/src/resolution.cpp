#include "trimod/modrep.hpp"

#include <cstdlib>

namespace trimod {

namespace {

std::size_t env_cap(const char* name, std::size_t fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    return (end && *end == '\0' && parsed > 0) ? static_cast<std::size_t>(parsed) : fallback;
}

}  // namespace

Limits::Limits()
{
    static const std::size_t dim = env_cap("TRIMOD_DIM_CAP", 4096);
    static const std::size_t len = env_cap("TRIMOD_LENGTH_CAP", 16);
    dim_cap = dim;
    length_cap = len;
}

/* ---------- FreeModule ---------- */

FreeModule::FreeModule(AlgebraPtr algebra, std::size_t rank) : rank_(rank)
{
    const std::size_t n = algebra->dim();
    const FieldSpec f = algebra->field();
    std::vector<Matrix> action;
    action.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix block(f, rank * n, rank * n);
        for (std::size_t l = 0; l < rank; ++l)
            block.paste(l * n, l * n, algebra->left_mult(i));
        action.push_back(std::move(block));
    }
    module_ = Module(std::move(algebra), rank * n, std::move(action));
}

Matrix FreeModule::generator(std::size_t l) const
{
    const std::size_t n = algebra()->dim();
    Matrix g(module_.field(), rank_ * n, 1);
    g.paste(l * n, 0, algebra()->unit());
    return g;
}

ModuleMap FreeModule::map_from_values(const Module& w, const Matrix& values) const
{
    if (values.rows() != w.dim() || values.cols() != rank_)
        throw validation_error("map_from_values: expected dim(w) x rank values");
    const std::size_t n = algebra()->dim();
    Matrix h(module_.field(), w.dim(), rank_ * n);
    for (std::size_t l = 0; l < rank_; ++l) {
        const Matrix vl = values.col(l);
        for (std::size_t s = 0; s < n; ++s)
            h.paste(0, l * n + s, w.action(s) * vl);
    }
    return ModuleMap(module_, w, std::move(h));
}

Matrix FreeModule::values_of(const ModuleMap& h) const
{
    Matrix v(module_.field(), h.target().dim(), rank_);
    for (std::size_t l = 0; l < rank_; ++l)
        v.paste(0, l, h.matrix() * generator(l));
    return v;
}

/* ---------- covers ---------- */

namespace {

FreeCover cover_on_generators(const Module& x, const Matrix& gens)
{
    FreeModule free(x.algebra(), gens.cols());
    ModuleMap cover = free.map_from_values(x, gens);
    return FreeCover{std::move(free), std::move(cover), gens};
}

}  // namespace

FreeCover free_cover(const Module& x)
{
    Matrix gens(x.field(), x.dim(), 0);
    Subspace span = Subspace::zero(x.field(), x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        Matrix e(x.field(), x.dim(), 1);
        e.set(i, 0, Rat(1));
        if (span.contains(e))
            continue;
        gens = Matrix::hstack(gens, e);
        span = invariant_closure(x, span.sum(Subspace::span_cols(x.dim(), e)));
    }
    return cover_on_generators(x, gens);
}

FreeCover free_cover_full(const Module& x)
{
    return cover_on_generators(x, Matrix::identity(x.field(), x.dim()));
}

/* Hom(x, A^rank) decomposes as rank copies of Hom(x, A); returns composites
 * inj_l o h_t as maps x -> free, cheaper than solving the big system. */
std::vector<ModuleMap> hom_into_free(const Module& x, const FreeModule& free)
{
    const HomSpace into_regular = hom_space(x, Module::regular(x.algebra()));
    const std::size_t n = x.algebra()->dim();
    std::vector<ModuleMap> out;
    out.reserve(free.rank() * into_regular.dim());
    for (std::size_t l = 0; l < free.rank(); ++l)
        for (std::size_t t = 0; t < into_regular.dim(); ++t) {
            Matrix lifted(x.field(), free.module().dim(), x.dim());
            lifted.paste(l * n, 0, into_regular.basis_map(t).matrix());
            out.emplace_back(x, free.module(), std::move(lifted));
        }
    return out;
}

ProjectivityResult is_projective(const Module& x)
{
    FreeCover cover = free_cover(x);
    if (x.dim() == 0)
        return ProjectivityResult{true, cover.cover, ModuleMap(x, cover.free.module(), Matrix(x.field(), 0, 0))};

    const std::vector<ModuleMap> hom_basis = hom_into_free(x, cover.free);
    // section s = sum c_t h_t with (cover o s) = id
    const std::size_t cells = x.dim() * x.dim();
    Matrix system(x.field(), cells, hom_basis.size());
    for (std::size_t t = 0; t < hom_basis.size(); ++t) {
        const Matrix composed = cover.cover.matrix() * hom_basis[t].matrix();
        for (std::size_t r = 0; r < x.dim(); ++r)
            for (std::size_t c = 0; c < x.dim(); ++c)
                system.set(r * x.dim() + c, t, composed.get(r, c));
    }
    Matrix rhs(x.field(), cells, 1);
    for (std::size_t r = 0; r < x.dim(); ++r)
        rhs.set(r * x.dim() + r, 0, Rat(1));

    const auto sol = system.solve(rhs);
    if (!sol)
        return ProjectivityResult{false, cover.cover, std::nullopt};
    Matrix section(x.field(), cover.free.module().dim(), x.dim());
    for (std::size_t t = 0; t < hom_basis.size(); ++t) {
        const Rat c = sol->get(t, 0);
        if (!c.is_zero())
            section = section + hom_basis[t].matrix().scaled(c);
    }
    return ProjectivityResult{true, cover.cover, ModuleMap(x, cover.free.module(), std::move(section))};
}

/* ---------- resolutions ---------- */

FreeResolution free_resolution(const Module& x, std::size_t length, const Limits& limits)
{
    if (length > limits.length_cap)
        throw resource_error("resolution length " + std::to_string(length) + " exceeds cap " + std::to_string(limits.length_cap));

    FreeResolution res{x, {}, {}, ModuleMap()};
    FreeCover cover = free_cover(x);
    res.augmentation = cover.cover;
    res.terms.push_back(cover.free);

    SubmoduleResult kernel = kernel_module(cover.cover);
    for (std::size_t i = 1; i <= length; ++i) {
        if (res.terms.back().module().dim() > limits.dim_cap)
            throw resource_error("resolution dimension exceeds cap " + std::to_string(limits.dim_cap));
        FreeCover next = free_cover(kernel.module);
        ModuleMap differential = kernel.inclusion.compose(next.cover);
        // exactness of the computed stage
        const Subspace im = differential.matrix().column_space();
        const Subspace ker = (i == 1 ? res.augmentation : res.differentials.back()).matrix().kernel();
        if (im != ker)
            throw internal_error("free_resolution: stage " + std::to_string(i) + " is not exact");
        res.differentials.push_back(differential);
        res.terms.push_back(next.free);
        kernel = kernel_module(next.cover);
    }
    return res;
}

/* ---------- Ext ---------- */

namespace {

/* differential of Hom(F_., w): precomposition with d, in generator-value
 * coordinates (value vectors stacked generator-major, index l*dim(w)+r) */
Matrix hom_differential(const FreeModule& from_free, const FreeModule& to_free, const ModuleMap& d, const Module& w)
{
    const std::size_t n = from_free.algebra()->dim();
    const std::size_t dw = w.dim();
    Matrix delta(w.field(), to_free.rank() * dw, from_free.rank() * dw);
    for (std::size_t j = 0; j < to_free.rank(); ++j) {
        const Matrix dg = d.matrix() * to_free.generator(j);  // element of F_from
        for (std::size_t l = 0; l < from_free.rank(); ++l) {
            Matrix block(w.field(), dw, dw);
            for (std::size_t s = 0; s < n; ++s) {
                const Rat c = dg.get(l * n + s, 0);
                if (!c.is_zero())
                    block = block + w.action(s).scaled(c);
            }
            delta.paste(j * dw, l * dw, block);
        }
    }
    return delta;
}

}  // namespace

ExtResult ext(const Module& x, const Module& w, std::size_t degree, const Limits& limits)
{
    if (!x.same_algebra(w))
        throw validation_error("ext: modules over different algebras");
    const FreeResolution res = free_resolution(x, degree + 1, limits);
    const FieldSpec f = x.field();
    const std::size_t dw = w.dim();

    const FreeModule& fi = res.terms[degree];
    const FreeModule& fi1 = res.terms[degree + 1];
    const ModuleMap& d_in = res.differentials[degree];  // F_{degree+1} -> F_degree

    const Matrix delta_out = hom_differential(fi, fi1, d_in, w);
    const Subspace cocycles = delta_out.kernel();

    Subspace boundaries = Subspace::zero(f, fi.rank() * dw);
    if (degree > 0) {
        const FreeModule& fprev = res.terms[degree - 1];
        const Matrix delta_in = hom_differential(fprev, fi, res.differentials[degree - 1], w);
        boundaries = delta_in.column_space();
    }

    // boundaries are cocycles; representatives are cocycle basis vectors that
    // keep growing the span over the boundaries
    if (!cocycles.contains(boundaries))
        throw internal_error("ext: boundaries escape cocycles");
    ExtResult out{cocycles.dim() - boundaries.dim(), {}};
    Subspace span = boundaries;
    for (std::size_t r = 0; r < cocycles.dim() && out.basis.size() < out.dim; ++r) {
        const Matrix v = cocycles.basis().row(r).transpose();
        if (span.contains(v))
            continue;
        span = span.sum(Subspace::span_cols(v.rows(), v));
        Matrix values(f, dw, fi.rank());
        for (std::size_t l = 0; l < fi.rank(); ++l)
            values.paste(0, l, v.submatrix(l * dw, 0, dw, 1));
        out.basis.push_back(fi.map_from_values(w, values));
    }
    return out;
}

}  // namespace trimod
