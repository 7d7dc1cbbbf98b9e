#include "trimod/triplecat.hpp"

namespace trimod {

/* ---------- TriangularContext ---------- */

namespace {

AlgebraPtr assemble_lambda(const AlgebraPtr& a, const AlgebraPtr& b, const Bimodule& m)
{
    const std::size_t na = a->dim(), nm = m.dim(), nb = b->dim();
    const std::size_t n = na + nm + nb;
    const FieldSpec f = a->field();

    std::vector<Matrix> lm(n, Matrix(f, n, n));
    // A-part basis elements: act on A-part by A, on M-part by the left action
    for (std::size_t i = 0; i < na; ++i) {
        lm[i].paste(0, 0, a->left_mult(i));
        lm[i].paste(na, na, m.left_action(i));
    }
    // M-part basis elements: m_i * b_j lands in the M-part
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            lm[na + i].paste(na, na + nm + j, m.right_action(j).col(i));
    // B-part basis elements act on the B-part only
    for (std::size_t j = 0; j < nb; ++j)
        lm[na + nm + j].paste(na + nm, na + nm, b->left_mult(j));

    Matrix unit(f, n, 1);
    unit.paste(0, 0, a->unit());
    unit.paste(na + nm, 0, b->unit());
    return std::make_shared<Algebra>(f, std::move(lm), std::move(unit));
}

}  // namespace

TriangularContext::TriangularContext(AlgebraPtr a, AlgebraPtr b, Bimodule m)
    : a_(std::move(a)), b_(std::move(b)), m_(std::move(m))
{
    if (!(*m_.left_algebra() == *a_) || !(*m_.right_algebra() == *b_))
        throw validation_error("build_triangular: bimodule is not over (A, B)");
    if (a_->field() != b_->field())
        throw validation_error("build_triangular: field mismatch");
    lambda_ = assemble_lambda(a_, b_, m_);
}

Matrix TriangularContext::embed_a(const Matrix& v) const
{
    Matrix out(lambda_->field(), lambda_->dim(), 1);
    out.paste(offset_a(), 0, v);
    return out;
}

Matrix TriangularContext::embed_m(const Matrix& v) const
{
    Matrix out(lambda_->field(), lambda_->dim(), 1);
    out.paste(offset_m(), 0, v);
    return out;
}

Matrix TriangularContext::embed_b(const Matrix& v) const
{
    Matrix out(lambda_->field(), lambda_->dim(), 1);
    out.paste(offset_b(), 0, v);
    return out;
}

bool TriangularContext::operator==(const TriangularContext& o) const
{
    return *a_ == *o.a_ && *b_ == *o.b_ && m_.left_module() == o.m_.left_module() && m_.right_module() == o.m_.right_module();
}

ContextPtr build_triangular(AlgebraPtr a, AlgebraPtr b, Bimodule m)
{
    return std::make_shared<TriangularContext>(std::move(a), std::move(b), std::move(m));
}

/* ---------- Triple ---------- */

Triple::Triple(ContextPtr ctx, Module x, Module y, Matrix phi_matrix)
{
    if (!ctx)
        throw validation_error("triple without a triangular context");
    if (!(*x.algebra() == *ctx->algebra_a()))
        throw validation_error("triple: X is not a module over A");
    if (!(*y.algebra() == *ctx->algebra_b()))
        throw validation_error("triple: Y is not a module over B");
    TensorResult tensor = tensor_over(ctx->bimodule(), y);
    ModuleMap phi(tensor.module, x, std::move(phi_matrix));
    d_ = std::make_shared<Data>(Data{std::move(ctx), std::move(x), std::move(y), std::move(tensor), std::move(phi)});
}

Triple Triple::zero(const ContextPtr& ctx)
{
    Module x = Module::zero(ctx->algebra_a());
    Module y = Module::zero(ctx->algebra_b());
    return Triple(ctx, x, y, Matrix(ctx->lambda()->field(), 0, 0));
}

bool Triple::operator==(const Triple& o) const
{
    return *ctx() == *o.ctx() && x() == o.x() && y() == o.y() && phi().matrix() == o.phi().matrix();
}

CheckReport validate_triple(const Triple& t)
{
    CheckReport report;
    report.append(validate_module(t.x()), "X");
    report.append(validate_module(t.y()), "Y");
    const bool ok = t.phi().intertwines();
    report.add("phi is an A-map", ok ? CheckStatus::Pass : CheckStatus::Fail,
               ok ? "intertwines on all basis elements" : "phi fails to intertwine", "triple axioms");
    return report;
}

/* ---------- TripleMap ---------- */

TripleMap::TripleMap(Triple source, Triple target, ModuleMap f, ModuleMap g)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)), g_(std::move(g))
{
    if (!(f_.source() == source_.x()) || !(f_.target() == target_.x()))
        throw validation_error("triple map: f has wrong endpoints");
    if (!(g_.source() == source_.y()) || !(g_.target() == target_.y()))
        throw validation_error("triple map: g has wrong endpoints");
}

TripleMap::TripleMap(Triple source, Triple target, Matrix f, Matrix g)
    : TripleMap(source, target, ModuleMap(source.x(), target.x(), std::move(f)), ModuleMap(source.y(), target.y(), std::move(g)))
{
}

TripleMap TripleMap::identity(const Triple& t)
{
    return TripleMap(t, t, ModuleMap::identity(t.x()), ModuleMap::identity(t.y()));
}

TripleMap TripleMap::zero(Triple source, Triple target)
{
    ModuleMap f = ModuleMap::zero(source.x(), target.x());
    ModuleMap g = ModuleMap::zero(source.y(), target.y());
    return TripleMap(std::move(source), std::move(target), std::move(f), std::move(g));
}

Matrix TripleMap::residual() const
{
    const ModuleMap tg = tensor_map(source_.ctx()->bimodule(), g_, source_.tensor(), target_.tensor());
    return target_.phi().matrix() * tg.matrix() - f_.matrix() * source_.phi().matrix();
}

std::optional<TripleMap> TripleMap::inverse() const
{
    auto fi = f_.inverse();
    auto gi = g_.inverse();
    if (!fi || !gi)
        return std::nullopt;
    return TripleMap(target_, source_, *fi, *gi);
}

TripleMap TripleMap::compose(const TripleMap& inner) const
{
    if (!(inner.target_ == source_))
        throw validation_error("triple map compose: endpoint mismatch");
    return TripleMap(inner.source_, target_, f_.compose(inner.f_), g_.compose(inner.g_));
}

TripleMap TripleMap::operator+(const TripleMap& o) const { return TripleMap(source_, target_, f_ + o.f_, g_ + o.g_); }
TripleMap TripleMap::operator-(const TripleMap& o) const { return TripleMap(source_, target_, f_ - o.f_, g_ - o.g_); }

CheckReport validate_triple_map(const TripleMap& tm)
{
    CheckReport report;
    const bool fok = tm.f().intertwines(), gok = tm.g().intertwines();
    report.add("f is an A-map", fok ? CheckStatus::Pass : CheckStatus::Fail, "", "triple morphisms");
    report.add("g is a B-map", gok ? CheckStatus::Pass : CheckStatus::Fail, "", "triple morphisms");
    const Matrix res = tm.residual();
    report.add("compatibility square", res.is_zero() ? CheckStatus::Pass : CheckStatus::Fail,
               res.is_zero() ? "phi'(Id (x) g) = f phi" : "residual:\n" + res.str(), "triple morphisms");
    return report;
}

/* ---------- TripleHomSpace ---------- */

namespace {

Matrix vec_rm(const Matrix& f)
{
    Matrix v(f.field(), f.rows() * f.cols(), 1);
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            v.set(r * f.cols() + c, 0, f.get(r, c));
    return v;
}

Matrix unvec_rm(const Matrix& v, std::size_t rows, std::size_t cols)
{
    Matrix f(v.field(), rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            f.set(r, c, v.get(r * cols + c, 0));
    return f;
}

}  // namespace

TripleHomSpace::TripleHomSpace(Triple source, Triple target, Subspace space)
    : source_(std::move(source)), target_(std::move(target)), space_(std::move(space))
{
}

TripleMap TripleHomSpace::basis_map(std::size_t r) const
{
    Matrix coeffs(space_.basis().field(), dim(), 1);
    coeffs.set(r, 0, Rat(1));
    return map_from_coords(coeffs);
}

TripleMap TripleHomSpace::map_from_coords(const Matrix& coeffs) const
{
    const Matrix v = space_.basis().transpose() * coeffs;
    const std::size_t nf = source_.x().dim() * target_.x().dim();
    const Matrix f = unvec_rm(v.submatrix(0, 0, nf, 1), target_.x().dim(), source_.x().dim());
    const Matrix g = unvec_rm(v.submatrix(nf, 0, v.rows() - nf, 1), target_.y().dim(), source_.y().dim());
    return TripleMap(source_, target_, f, g);
}

std::optional<Matrix> TripleHomSpace::coords_of(const TripleMap& tm) const
{
    return space_.coords_of(Matrix::vstack(vec_rm(tm.f().matrix()), vec_rm(tm.g().matrix())));
}

TripleHomSpace triple_hom_space(const Triple& s, const Triple& t)
{
    if (!(*s.ctx() == *t.ctx()))
        throw validation_error("triple_hom_space: different triangular contexts");
    const FieldSpec fld = s.x().field();
    const std::size_t nf = s.x().dim() * t.x().dim();
    const std::size_t ng = s.y().dim() * t.y().dim();
    const std::size_t ambient = nf + ng;

    Matrix basis = Matrix::identity(fld, ambient);
    auto shrink = [&](auto&& image_of) {
        if (basis.rows() == 0)
            return;
        Matrix constraint(fld, 0, 0);
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            const Matrix row = basis.row(r).transpose();
            const Matrix f = unvec_rm(row.submatrix(0, 0, nf, 1), t.x().dim(), s.x().dim());
            const Matrix g = unvec_rm(row.submatrix(nf, 0, ng, 1), t.y().dim(), s.y().dim());
            const Matrix img = image_of(f, g);
            if (r == 0)
                constraint = Matrix(fld, img.rows(), basis.rows());
            constraint.paste(0, r, img);
        }
        basis = constraint.kernel().basis() * basis;
    };

    // A-intertwining of F, B-intertwining of G, then the square
    for (std::size_t i : algebra_generators(*s.ctx()->algebra_a()))
        shrink([&](const Matrix& f, const Matrix& g) {
            (void)g;
            return vec_rm(t.x().action(i) * f - f * s.x().action(i));
        });
    for (std::size_t i : algebra_generators(*s.ctx()->algebra_b()))
        shrink([&](const Matrix& f, const Matrix& g) {
            (void)f;
            return vec_rm(t.y().action(i) * g - g * s.y().action(i));
        });
    const Bimodule& m = s.ctx()->bimodule();
    shrink([&](const Matrix& f, const Matrix& g) {
        const Matrix tg = t.tensor().projection * Matrix::kron(Matrix::identity(fld, m.dim()), g) * s.tensor().section;
        return vec_rm(t.phi().matrix() * tg - f * s.phi().matrix());
    });
    return TripleHomSpace(s, t, Subspace::span_rows(ambient, basis));
}

/* ---------- direct sums of triples ---------- */

TripleSumResult direct_sum_triples(const std::vector<Triple>& parts)
{
    if (parts.empty())
        throw validation_error("direct_sum_triples of an empty list");
    const ContextPtr ctx = parts.front().ctx();
    std::vector<Module> xs, ys;
    for (const Triple& p : parts) {
        if (!(*p.ctx() == *ctx))
            throw validation_error("direct_sum_triples: context mismatch");
        xs.push_back(p.x());
        ys.push_back(p.y());
    }
    DirectSumResult sx = direct_sum(xs);
    DirectSumResult sy = direct_sum(ys);

    // phi of the sum: on the raw basis m_i (x) (y from part p), apply part p's
    // phi and include into the X sum
    const Bimodule& m = ctx->bimodule();
    TensorResult tsum = tensor_over(m, sy.module);
    const std::size_t dy = sy.module.dim();
    Matrix phi_raw(sx.module.field(), sx.module.dim(), m.dim() * dy);
    std::size_t yoff = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const Triple& part = parts[p];
        const std::size_t dyp = part.y().dim();
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < dyp; ++j) {
                Matrix raw_basis(sx.module.field(), m.dim() * dyp, 1);
                raw_basis.set(i * dyp + j, 0, Rat(1));
                const Matrix val = sx.injections[p].matrix() * part.phi().matrix() * part.tensor().projection * raw_basis;
                phi_raw.paste(0, i * dy + (yoff + j), val);
            }
        yoff += dyp;
    }
    Triple sum(ctx, sx.module, sy.module, phi_raw * tsum.section);

    TripleSumResult out{sum, {}, {}};
    for (std::size_t p = 0; p < parts.size(); ++p) {
        out.injections.emplace_back(parts[p], sum, sx.injections[p], sy.injections[p]);
        out.projections.emplace_back(sum, parts[p], sx.projections[p], sy.projections[p]);
    }
    return out;
}

TripleKernelResult triple_kernel(const TripleMap& m)
{
    const ContextPtr& ctx = m.source().ctx();
    const SubmoduleResult kx = kernel_module(m.f());
    const SubmoduleResult ky = kernel_module(m.g());
    // phi restricts: f phi (Id (x) incl_y) = phi' (Id (x) (g incl_y)) = 0
    TensorResult tk = tensor_over(ctx->bimodule(), ky.module);
    const ModuleMap t_incl = tensor_map(ctx->bimodule(), ky.inclusion, tk, m.source().tensor());
    const Matrix moved = m.source().phi().matrix() * t_incl.matrix();
    const Subspace kx_space = kx.inclusion.matrix().column_space();
    Matrix phi_k(moved.field(), kx.module.dim(), moved.cols());
    for (std::size_t j = 0; j < moved.cols(); ++j) {
        auto coords = kx_space.coords_of(moved.col(j));
        if (!coords)
            throw internal_error("triple_kernel: phi does not restrict to the kernels");
        phi_k.paste(0, j, *coords);
    }
    Triple kt(ctx, kx.module, ky.module, phi_k);
    TripleMap incl(kt, m.source(), kx.inclusion.matrix(), ky.inclusion.matrix());
    return TripleKernelResult{std::move(kt), std::move(incl)};
}

TripleCokernelResult triple_cokernel(const TripleMap& m)
{
    const ContextPtr& ctx = m.source().ctx();
    const QuotientModuleResult cx = cokernel_module(m.f());
    const QuotientModuleResult cy = cokernel_module(m.g());
    // induced phi solves phi_c (Id (x) proj_y) = proj_x phi'
    TensorResult tc = tensor_over(ctx->bimodule(), cy.module);
    const ModuleMap t_proj = tensor_map(ctx->bimodule(), cy.projection, m.target().tensor(), tc);
    const Matrix lhs = cx.projection.matrix() * m.target().phi().matrix();
    auto phi_c = t_proj.matrix().transpose().solve(lhs.transpose());
    if (!phi_c)
        throw internal_error("triple_cokernel: induced phi has no solution");
    const Matrix phi_mat = phi_c->transpose();
    if (phi_mat * t_proj.matrix() != lhs)
        throw internal_error("triple_cokernel: induced phi fails the defining identity");
    Triple ct(ctx, cx.module, cy.module, phi_mat);
    TripleMap proj(m.target(), ct, cx.projection.matrix(), cy.projection.matrix());
    return TripleCokernelResult{std::move(ct), std::move(proj)};
}

/* ---------- alpha and psi ---------- */

AlphaResult alpha(const Module& x, const Module& y, const Bimodule& m)
{
    if (!(*x.algebra() == *m.left_algebra()) || !(*y.algebra() == *m.right_algebra()))
        throw validation_error("alpha: modules do not match the bimodule algebras");
    TensorResult tensor = tensor_over(m, y);
    HomModuleResult hom_mx = hom_module(m, x);
    HomSpace left = hom_space(tensor.module, x);
    HomSpace right = hom_space(y, hom_mx.module);
    const FieldSpec fld = x.field();
    const std::size_t dm = m.dim(), dy = y.dim(), dh = hom_mx.module.dim();

    Matrix forward(fld, right.dim(), left.dim());
    for (std::size_t r = 0; r < left.dim(); ++r) {
        const Matrix phi_full = left.basis_map(r).matrix() * tensor.projection;  // dimX x (dm*dy)
        Matrix g(fld, dh, dy);
        for (std::size_t j = 0; j < dy; ++j) {
            // the A-map m |-> phi(m (x) y_j)
            Matrix e(fld, x.dim(), dm);
            for (std::size_t i = 0; i < dm; ++i)
                e.paste(0, i, phi_full.col(i * dy + j));
            auto coords = hom_mx.hom.coords_of(e);
            if (!coords)
                throw internal_error("alpha: evaluation left Hom_A(M, X)");
            g.paste(0, j, *coords);
        }
        auto gc = right.coords_of(ModuleMap(y, hom_mx.module, g));
        if (!gc)
            throw internal_error("alpha: image is not B-linear");
        forward.paste(0, r, *gc);
    }

    Matrix backward(fld, left.dim(), right.dim());
    for (std::size_t s = 0; s < right.dim(); ++s) {
        const Matrix g = right.basis_map(s).matrix();  // dh x dy
        Matrix raw(fld, x.dim(), dm * dy);
        for (std::size_t j = 0; j < dy; ++j) {
            // the element sum_t g[t][j] f_t of Hom_A(M, X), evaluated on all m_i
            Matrix f_of(fld, x.dim(), dm);
            for (std::size_t t = 0; t < dh; ++t) {
                const Rat c = g.get(t, j);
                if (!c.is_zero())
                    f_of = f_of + hom_mx.hom.basis_map(t).matrix().scaled(c);
            }
            for (std::size_t i = 0; i < dm; ++i)
                raw.paste(0, i * dy + j, f_of.col(i));
        }
        const Matrix phi = raw * tensor.section;
        if (phi * tensor.projection != raw)
            throw internal_error("alpha: inverse image does not descend to the tensor quotient");
        auto pc = left.coords_of(ModuleMap(tensor.module, x, phi));
        if (!pc)
            throw internal_error("alpha: inverse image is not A-linear");
        backward.paste(0, s, *pc);
    }

    if (!(forward * backward).is_identity() || !(backward * forward).is_identity())
        throw internal_error("alpha: the two directions are not mutually inverse");
    return AlphaResult{std::move(tensor), std::move(hom_mx), std::move(left), std::move(right), std::move(forward), std::move(backward)};
}

ModuleMap alpha_apply(const AlphaResult& ar, const ModuleMap& phi)
{
    auto coords = ar.left.coords_of(phi);
    if (!coords)
        throw validation_error("alpha_apply: phi is not in Hom_A(M (x) Y, X)");
    return ar.right.map_from_coords(ar.forward * *coords);
}

PsiResult psi(const Module& x, const Bimodule& m)
{
    HomModuleResult hom_mx = hom_module(m, x);
    TensorResult tensor = tensor_over(m, hom_mx.module);
    const FieldSpec fld = x.field();
    const std::size_t dm = m.dim(), dh = hom_mx.module.dim();
    Matrix raw(fld, x.dim(), dm * dh);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t t = 0; t < dh; ++t)
            raw.paste(0, i * dh + t, hom_mx.hom.basis_map(t).matrix().col(i));
    const Matrix mat = raw * tensor.section;
    if (mat * tensor.projection != raw)
        throw internal_error("psi: evaluation does not descend to the tensor quotient");
    ModuleMap map(tensor.module, x, mat);
    return PsiResult{std::move(hom_mx), std::move(tensor), std::move(map)};
}

/* ---------- the equivalence ---------- */

TripleOfModule to_triple(const Module& z, const ContextPtr& ctx)
{
    if (!(*z.algebra() == *ctx->lambda()))
        throw validation_error("to_triple: module is not over the registered triangular algebra");
    const FieldSpec fld = z.field();

    auto slice = [&](const Matrix& idem, const AlgebraPtr& alg, auto embed) {
        const Matrix proj_op = z.act(idem);
        const Subspace sub = proj_op.column_space();
        const Matrix incl = sub.basis().transpose();
        Matrix proj(fld, sub.dim(), z.dim());
        // coordinates of P(e_j) in the echelon basis of the slice
        for (std::size_t j = 0; j < z.dim(); ++j) {
            auto coords = sub.coords_of(proj_op.col(j));
            if (!coords)
                throw internal_error("to_triple: projector image escaped its column space");
            proj.paste(0, j, *coords);
        }
        std::vector<Matrix> action;
        for (std::size_t i = 0; i < alg->dim(); ++i)
            action.push_back(proj * z.act(embed(alg->basis_vector(i))) * incl);
        Module part(alg, sub.dim(), std::move(action));
        return std::tuple<Module, Matrix, Matrix>(std::move(part), incl, proj);
    };

    auto [xm, incl_x, proj_x] = slice(ctx->idempotent_a(), ctx->algebra_a(), [&](const Matrix& v) { return ctx->embed_a(v); });
    auto [ym, incl_y, proj_y] = slice(ctx->idempotent_b(), ctx->algebra_b(), [&](const Matrix& v) { return ctx->embed_b(v); });

    const Bimodule& m = ctx->bimodule();
    TensorResult tensor = tensor_over(m, ym);
    Matrix raw(fld, xm.dim(), m.dim() * ym.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Matrix e(fld, m.dim(), 1);
        e.set(i, 0, Rat(1));
        const Matrix act_m = z.act(ctx->embed_m(e));
        for (std::size_t j = 0; j < ym.dim(); ++j)
            raw.paste(0, i * ym.dim() + j, proj_x * act_m * incl_y.col(j));
    }
    const Matrix phi = raw * tensor.section;
    if (phi * tensor.projection != raw)
        throw internal_error("to_triple: phi does not descend to the tensor quotient");

    Triple t(ctx, xm, ym, phi);
    return TripleOfModule{std::move(t), incl_x, proj_x, incl_y, proj_y};
}

Module from_triple(const Triple& t)
{
    const ContextPtr& ctx = t.ctx();
    const FieldSpec fld = t.x().field();
    const std::size_t dx = t.x().dim(), dy = t.y().dim();
    const std::size_t n = ctx->lambda()->dim();

    std::vector<Matrix> action;
    action.reserve(n);
    const Matrix phi_full = t.phi().matrix() * t.tensor().projection;  // dx x (dm*dy)
    for (std::size_t i = 0; i < ctx->dim_a(); ++i) {
        Matrix act(fld, dx + dy, dx + dy);
        act.paste(0, 0, t.x().action(i));
        action.push_back(std::move(act));
    }
    for (std::size_t i = 0; i < ctx->dim_m(); ++i) {
        Matrix act(fld, dx + dy, dx + dy);
        Matrix block(fld, dx, dy);
        for (std::size_t j = 0; j < dy; ++j)
            block.paste(0, j, phi_full.col(i * dy + j));
        act.paste(0, dx, block);
        action.push_back(std::move(act));
    }
    for (std::size_t i = 0; i < ctx->dim_b(); ++i) {
        Matrix act(fld, dx + dy, dx + dy);
        act.paste(dx, dx, t.y().action(i));
        action.push_back(std::move(act));
    }
    return Module(ctx->lambda(), dx + dy, std::move(action));
}

ModuleMap equivalence_iso(const TripleOfModule& decomposed, const Module& z)
{
    Module built = from_triple(decomposed.triple);
    return ModuleMap(built, z, Matrix::hstack(decomposed.incl_x, decomposed.incl_y));
}

TripleMap to_triple_map(const ModuleMap& h, const TripleOfModule& src, const TripleOfModule& tgt)
{
    const Matrix f = tgt.proj_x * h.matrix() * src.incl_x;
    const Matrix g = tgt.proj_y * h.matrix() * src.incl_y;
    return TripleMap(src.triple, tgt.triple, f, g);
}

ModuleMap from_triple_map(const TripleMap& tm, const Module& src_module, const Module& tgt_module)
{
    const std::size_t dxs = tm.source().x().dim(), dys = tm.source().y().dim();
    Matrix h(src_module.field(), tgt_module.dim(), src_module.dim());
    h.paste(0, 0, tm.f().matrix());
    h.paste(tm.target().x().dim(), dxs, tm.g().matrix());
    (void)dys;
    return ModuleMap(src_module, tgt_module, std::move(h));
}

}  // namespace trimod
