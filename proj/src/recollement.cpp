#include "trimod/recollement.hpp"

#include <map>

#include "trimod/sampling.hpp"

namespace trimod {

std::string to_string(FunctorTag tag)
{
    switch (tag) {
        case FunctorTag::IUpper: return "i_upper";
        case FunctorTag::ILower: return "i_lower";
        case FunctorTag::IShriek: return "i_shriek";
        case FunctorTag::JShriek: return "j_shriek";
        case FunctorTag::JUpper: return "j_upper";
        case FunctorTag::JLower: return "j_lower";
        case FunctorTag::JQuestion: return "j_question";
        case FunctorTag::IQuestion: return "i_question";
    }
    return "?";
}

std::optional<FunctorTag> parse_functor_tag(const std::string& name)
{
    static const std::map<std::string, FunctorTag> table = {
        {"i_upper", FunctorTag::IUpper},     {"i^*", FunctorTag::IUpper},
        {"i_lower", FunctorTag::ILower},     {"i_*", FunctorTag::ILower},
        {"i_shriek", FunctorTag::IShriek},   {"i^!", FunctorTag::IShriek},
        {"j_shriek", FunctorTag::JShriek},   {"j_!", FunctorTag::JShriek},
        {"j_upper", FunctorTag::JUpper},     {"j^*", FunctorTag::JUpper},
        {"j_lower", FunctorTag::JLower},     {"j_*", FunctorTag::JLower},
        {"j_question", FunctorTag::JQuestion}, {"j_?", FunctorTag::JQuestion},
        {"i_question", FunctorTag::IQuestion}, {"i_?", FunctorTag::IQuestion},
    };
    auto it = table.find(name);
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

std::string to_string(AdjPair pair)
{
    switch (pair) {
        case AdjPair::IUpper_ILower: return "(i^*, i_*)";
        case AdjPair::ILower_IShriek: return "(i_*, i^!)";
        case AdjPair::JShriek_JUpper: return "(j_!, j^*)";
        case AdjPair::JUpper_JLower: return "(j^*, j_*)";
        case AdjPair::JLower_JQuestion: return "(j_*, j_?)";
        case AdjPair::IShriek_IQuestion: return "(i^!, i_?)";
    }
    return "?";
}

/* ---------- the eight functors ---------- */

namespace rec {

QuotientModuleResult i_upper(const Triple& t) { return cokernel_module(t.phi()); }

Triple i_lower(const ContextPtr& ctx, const Module& x)
{
    return Triple(ctx, x, Module::zero(ctx->algebra_b()), Matrix(x.field(), x.dim(), 0));
}

Module i_shriek(const Triple& t) { return t.x(); }

Triple j_shriek(const ContextPtr& ctx, const Module& y)
{
    TensorResult t = tensor_over(ctx->bimodule(), y);
    const std::size_t d = t.module.dim();
    Module carrier = t.module;
    return Triple(ctx, std::move(carrier), y, Matrix::identity(y.field(), d));
}

Module j_upper(const Triple& t) { return t.y(); }

Triple j_lower(const ContextPtr& ctx, const Module& y)
{
    TensorResult t = tensor_over(ctx->bimodule(), y);
    return Triple(ctx, Module::zero(ctx->algebra_a()), y, Matrix(y.field(), 0, t.module.dim()));
}

SubmoduleResult j_question(const Triple& t)
{
    AlphaResult ar = alpha(t.x(), t.y(), t.ctx()->bimodule());
    const ModuleMap a_phi = alpha_apply(ar, t.phi());
    return kernel_module(a_phi);
}

Triple i_question(const ContextPtr& ctx, const Module& x)
{
    PsiResult p = psi(x, ctx->bimodule());
    return Triple(ctx, x, p.hom_mx.module, p.map.matrix());
}

ModuleMap i_upper_map(const TripleMap& tm)
{
    const QuotientModuleResult src = i_upper(tm.source());
    const QuotientModuleResult tgt = i_upper(tm.target());
    return ModuleMap(src.module, tgt.module, tgt.projection.matrix() * tm.f().matrix() * src.section);
}

TripleMap i_lower_map(const ContextPtr& ctx, const ModuleMap& f)
{
    return TripleMap(i_lower(ctx, f.source()), i_lower(ctx, f.target()), f.matrix(), Matrix(f.matrix().field(), 0, 0));
}

ModuleMap i_shriek_map(const TripleMap& tm) { return tm.f(); }

TripleMap j_shriek_map(const ContextPtr& ctx, const ModuleMap& g)
{
    const Triple src = j_shriek(ctx, g.source());
    const Triple tgt = j_shriek(ctx, g.target());
    const ModuleMap mg = tensor_map(ctx->bimodule(), g, src.tensor(), tgt.tensor());
    return TripleMap(src, tgt, mg.matrix(), g.matrix());
}

ModuleMap j_upper_map(const TripleMap& tm) { return tm.g(); }

TripleMap j_lower_map(const ContextPtr& ctx, const ModuleMap& g)
{
    const Triple src = j_lower(ctx, g.source());
    const Triple tgt = j_lower(ctx, g.target());
    return TripleMap(src, tgt, Matrix(g.matrix().field(), 0, 0), g.matrix());
}

ModuleMap j_question_map(const TripleMap& tm)
{
    const SubmoduleResult src = j_question(tm.source());
    const SubmoduleResult tgt = j_question(tm.target());
    // g restricts to the kernels; corestrict through the echelon coordinates
    const Matrix moved = tm.g().matrix() * src.inclusion.matrix();
    const Subspace tgt_space = tgt.inclusion.matrix().column_space();
    Matrix out(moved.field(), tgt.module.dim(), src.module.dim());
    for (std::size_t j = 0; j < src.module.dim(); ++j) {
        auto coords = tgt_space.coords_of(moved.col(j));
        if (!coords)
            throw internal_error("j_question_map: g does not preserve Ker alpha(phi)");
        out.paste(0, j, *coords);
    }
    return ModuleMap(src.module, tgt.module, std::move(out));
}

TripleMap i_question_map(const ContextPtr& ctx, const ModuleMap& f)
{
    const Triple src = i_question(ctx, f.source());
    const Triple tgt = i_question(ctx, f.target());
    // Hom(M, f): post-composition expressed in the two hom bases
    const HomModuleResult hs = hom_module(ctx->bimodule(), f.source());
    const HomModuleResult ht = hom_module(ctx->bimodule(), f.target());
    Matrix g(f.matrix().field(), ht.module.dim(), hs.module.dim());
    for (std::size_t t = 0; t < hs.module.dim(); ++t) {
        auto coords = ht.hom.coords_of(f.matrix() * hs.hom.basis_map(t).matrix());
        if (!coords)
            throw internal_error("i_question_map: composition left the hom space");
        g.paste(0, t, *coords);
    }
    return TripleMap(src, tgt, f.matrix(), std::move(g));
}

}  // namespace rec

RecObject rec_apply(FunctorTag tag, const ContextPtr& ctx, const RecObject& input)
{
    auto as_triple = [&]() -> const Triple& {
        if (!std::holds_alternative<Triple>(input))
            throw validation_error(to_string(tag) + " expects a triple input");
        return std::get<Triple>(input);
    };
    auto as_module = [&](const AlgebraPtr& alg) -> const Module& {
        if (!std::holds_alternative<Module>(input))
            throw validation_error(to_string(tag) + " expects a module input");
        const Module& m = std::get<Module>(input);
        if (!(*m.algebra() == *alg))
            throw validation_error(to_string(tag) + ": module is over the wrong algebra");
        return m;
    };
    switch (tag) {
        case FunctorTag::IUpper: return rec::i_upper(as_triple()).module;
        case FunctorTag::ILower: return rec::i_lower(ctx, as_module(ctx->algebra_a()));
        case FunctorTag::IShriek: return rec::i_shriek(as_triple());
        case FunctorTag::JShriek: return rec::j_shriek(ctx, as_module(ctx->algebra_b()));
        case FunctorTag::JUpper: return rec::j_upper(as_triple());
        case FunctorTag::JLower: return rec::j_lower(ctx, as_module(ctx->algebra_b()));
        case FunctorTag::JQuestion: return rec::j_question(as_triple()).module;
        case FunctorTag::IQuestion: return rec::i_question(ctx, as_module(ctx->algebra_a()));
    }
    throw internal_error("rec_apply: unknown tag");
}

RecMap rec_apply_map(FunctorTag tag, const ContextPtr& ctx, const RecMap& input)
{
    auto as_triple_map = [&]() -> const TripleMap& {
        if (!std::holds_alternative<TripleMap>(input))
            throw validation_error(to_string(tag) + " expects a triple map");
        return std::get<TripleMap>(input);
    };
    auto as_module_map = [&]() -> const ModuleMap& {
        if (!std::holds_alternative<ModuleMap>(input))
            throw validation_error(to_string(tag) + " expects a module map");
        return std::get<ModuleMap>(input);
    };
    switch (tag) {
        case FunctorTag::IUpper: return rec::i_upper_map(as_triple_map());
        case FunctorTag::ILower: return rec::i_lower_map(ctx, as_module_map());
        case FunctorTag::IShriek: return rec::i_shriek_map(as_triple_map());
        case FunctorTag::JShriek: return rec::j_shriek_map(ctx, as_module_map());
        case FunctorTag::JUpper: return rec::j_upper_map(as_triple_map());
        case FunctorTag::JLower: return rec::j_lower_map(ctx, as_module_map());
        case FunctorTag::JQuestion: return rec::j_question_map(as_triple_map());
        case FunctorTag::IQuestion: return rec::i_question_map(ctx, as_module_map());
    }
    throw internal_error("rec_apply_map: unknown tag");
}

/* ---------- the adjunction engine ---------- */

namespace {

struct AnyHom {
    std::variant<HomSpace, TripleHomSpace> h;

    std::size_t dim() const
    {
        return std::holds_alternative<HomSpace>(h) ? std::get<HomSpace>(h).dim() : std::get<TripleHomSpace>(h).dim();
    }
    RecMap basis_map(std::size_t r) const
    {
        if (std::holds_alternative<HomSpace>(h))
            return std::get<HomSpace>(h).basis_map(r);
        return std::get<TripleHomSpace>(h).basis_map(r);
    }
    std::optional<Matrix> coords_of(const RecMap& m) const
    {
        if (std::holds_alternative<HomSpace>(h))
            return std::get<HomSpace>(h).coords_of(std::get<ModuleMap>(m));
        return std::get<TripleHomSpace>(h).coords_of(std::get<TripleMap>(m));
    }
    RecMap map_from_coords(const Matrix& c) const
    {
        if (std::holds_alternative<HomSpace>(h))
            return std::get<HomSpace>(h).map_from_coords(c);
        return std::get<TripleHomSpace>(h).map_from_coords(c);
    }
};

RecMap compose_rec(const RecMap& outer, const RecMap& inner)
{
    if (std::holds_alternative<ModuleMap>(outer))
        return std::get<ModuleMap>(outer).compose(std::get<ModuleMap>(inner));
    return std::get<TripleMap>(outer).compose(std::get<TripleMap>(inner));
}

RecMap identity_rec(const RecObject& o)
{
    if (std::holds_alternative<Module>(o))
        return ModuleMap::identity(std::get<Module>(o));
    return TripleMap::identity(std::get<Triple>(o));
}

bool equal_rec(const RecMap& u, const RecMap& v)
{
    if (std::holds_alternative<ModuleMap>(u) != std::holds_alternative<ModuleMap>(v))
        return false;
    if (std::holds_alternative<ModuleMap>(u))
        return std::get<ModuleMap>(u).matrix() == std::get<ModuleMap>(v).matrix();
    return std::get<TripleMap>(u).f().matrix() == std::get<TripleMap>(v).f().matrix() &&
           std::get<TripleMap>(u).g().matrix() == std::get<TripleMap>(v).g().matrix();
}

bool is_iso_rec(const RecMap& u)
{
    if (std::holds_alternative<ModuleMap>(u))
        return std::get<ModuleMap>(u).is_iso();
    return std::get<TripleMap>(u).is_iso();
}

FunctorTag left_tag(AdjPair p)
{
    switch (p) {
        case AdjPair::IUpper_ILower: return FunctorTag::IUpper;
        case AdjPair::ILower_IShriek: return FunctorTag::ILower;
        case AdjPair::JShriek_JUpper: return FunctorTag::JShriek;
        case AdjPair::JUpper_JLower: return FunctorTag::JUpper;
        case AdjPair::JLower_JQuestion: return FunctorTag::JLower;
        case AdjPair::IShriek_IQuestion: return FunctorTag::IShriek;
    }
    throw internal_error("left_tag");
}

FunctorTag right_tag(AdjPair p)
{
    switch (p) {
        case AdjPair::IUpper_ILower: return FunctorTag::ILower;
        case AdjPair::ILower_IShriek: return FunctorTag::IShriek;
        case AdjPair::JShriek_JUpper: return FunctorTag::JUpper;
        case AdjPair::JUpper_JLower: return FunctorTag::JLower;
        case AdjPair::JLower_JQuestion: return FunctorTag::JQuestion;
        case AdjPair::IShriek_IQuestion: return FunctorTag::IQuestion;
    }
    throw internal_error("right_tag");
}

AnyHom hom_between(const RecObject& s, const RecObject& t)
{
    if (std::holds_alternative<Module>(s))
        return AnyHom{hom_space(std::get<Module>(s), std::get<Module>(t))};
    return AnyHom{triple_hom_space(std::get<Triple>(s), std::get<Triple>(t))};
}

/* theta: Hom(F c, d) -> Hom(c, G d) by the explicit formulas */
RecMap theta(AdjPair pair, const ContextPtr& ctx, const RecObject& c, const RecObject& d, const RecMap& h)
{
    switch (pair) {
        case AdjPair::IUpper_ILower: {
            // f: Coker phi -> X' goes to (f pi, 0)
            const Triple& t = std::get<Triple>(c);
            const ModuleMap& f = std::get<ModuleMap>(h);
            const QuotientModuleResult ck = rec::i_upper(t);
            const Triple tgt = rec::i_lower(ctx, std::get<Module>(d));
            return TripleMap(t, tgt, f.matrix() * ck.projection.matrix(), Matrix(f.matrix().field(), 0, t.y().dim()));
        }
        case AdjPair::ILower_IShriek: {
            // (F, 0): (X', 0) -> T goes to F
            const TripleMap& tm = std::get<TripleMap>(h);
            return ModuleMap(std::get<Module>(c), std::get<Triple>(d).x(), tm.f().matrix());
        }
        case AdjPair::JShriek_JUpper: {
            // (F, g): j_! Y' -> T goes to g
            const TripleMap& tm = std::get<TripleMap>(h);
            return ModuleMap(std::get<Module>(c), std::get<Triple>(d).y(), tm.g().matrix());
        }
        case AdjPair::JUpper_JLower: {
            // g: Y -> Y' goes to (0, g)
            const Triple& t = std::get<Triple>(c);
            const ModuleMap& g = std::get<ModuleMap>(h);
            const Triple tgt = rec::j_lower(ctx, std::get<Module>(d));
            return TripleMap(t, tgt, Matrix(g.matrix().field(), 0, t.x().dim()), g.matrix());
        }
        case AdjPair::JLower_JQuestion: {
            // (0, g): (0, Y) -> T' corestricts to g: Y -> Ker alpha(phi')
            const TripleMap& tm = std::get<TripleMap>(h);
            const SubmoduleResult k = rec::j_question(std::get<Triple>(d));
            const Subspace kspace = k.inclusion.matrix().column_space();
            const Matrix& g = tm.g().matrix();
            Matrix out(g.field(), k.module.dim(), g.cols());
            for (std::size_t j = 0; j < g.cols(); ++j) {
                auto coords = kspace.coords_of(g.col(j));
                if (!coords)
                    throw internal_error("theta: image is not inside Ker alpha(phi)");
                out.paste(0, j, *coords);
            }
            return ModuleMap(std::get<Module>(c), k.module, std::move(out));
        }
        case AdjPair::IShriek_IQuestion: {
            // f: X -> X' goes to (f, alpha_{X',Y}(f phi))
            const Triple& t = std::get<Triple>(c);
            const ModuleMap& f = std::get<ModuleMap>(h);
            const Module& xprime = std::get<Module>(d);
            const Triple tgt = rec::i_question(ctx, xprime);
            AlphaResult ar = alpha(xprime, t.y(), ctx->bimodule());
            const ModuleMap fphi(t.tensor().module, xprime, f.matrix() * t.phi().matrix());
            const ModuleMap g = alpha_apply(ar, fphi);
            return TripleMap(t, tgt, f.matrix(), g.matrix());
        }
    }
    throw internal_error("theta: unknown pair");
}

/* theta inverse: Hom(c, G d) -> Hom(F c, d) */
RecMap theta_inv(AdjPair pair, const ContextPtr& ctx, const RecObject& c, const RecObject& d, const RecMap& k)
{
    switch (pair) {
        case AdjPair::IUpper_ILower: {
            // (F, 0) goes to the induced map Coker phi -> X'
            const Triple& t = std::get<Triple>(c);
            const TripleMap& tm = std::get<TripleMap>(k);
            const QuotientModuleResult ck = rec::i_upper(t);
            return ModuleMap(ck.module, std::get<Module>(d), tm.f().matrix() * ck.section);
        }
        case AdjPair::ILower_IShriek: {
            const ModuleMap& f = std::get<ModuleMap>(k);
            const Triple& t = std::get<Triple>(d);
            const Triple src = rec::i_lower(ctx, std::get<Module>(c));
            return TripleMap(src, t, f.matrix(), Matrix(f.matrix().field(), t.y().dim(), 0));
        }
        case AdjPair::JShriek_JUpper: {
            // g: Y' -> Y goes to (phi (Id (x) g), g)
            const ModuleMap& g = std::get<ModuleMap>(k);
            const Triple& t = std::get<Triple>(d);
            const Triple src = rec::j_shriek(ctx, std::get<Module>(c));
            const ModuleMap mg = tensor_map(ctx->bimodule(), ModuleMap(std::get<Module>(c), t.y(), g.matrix()), src.tensor(), t.tensor());
            return TripleMap(src, t, t.phi().matrix() * mg.matrix(), g.matrix());
        }
        case AdjPair::JUpper_JLower: {
            const TripleMap& tm = std::get<TripleMap>(k);
            return ModuleMap(std::get<Triple>(c).y(), std::get<Module>(d), tm.g().matrix());
        }
        case AdjPair::JLower_JQuestion: {
            // h: Y -> Ker alpha(phi') goes to (0, incl o h)
            const ModuleMap& h = std::get<ModuleMap>(k);
            const Triple& t = std::get<Triple>(d);
            const SubmoduleResult ker = rec::j_question(t);
            const Triple src = rec::j_lower(ctx, std::get<Module>(c));
            return TripleMap(src, t, Matrix(h.matrix().field(), t.x().dim(), 0), ker.inclusion.matrix() * h.matrix());
        }
        case AdjPair::IShriek_IQuestion: {
            const TripleMap& tm = std::get<TripleMap>(k);
            return ModuleMap(std::get<Triple>(c).x(), std::get<Module>(d), tm.f().matrix());
        }
    }
    throw internal_error("theta_inv: unknown pair");
}

/* Hom(F c, d) and Hom(c, G d) */
AnyHom hom_left_side(AdjPair pair, const ContextPtr& ctx, const RecObject& c, const RecObject& d)
{
    return hom_between(rec_apply(left_tag(pair), ctx, c), d);
}

AnyHom hom_right_side(AdjPair pair, const ContextPtr& ctx, const RecObject& c, const RecObject& d)
{
    return hom_between(c, rec_apply(right_tag(pair), ctx, d));
}

}  // namespace

AdjunctionWitness adjunction_iso(AdjPair pair, const ContextPtr& ctx, const RecObject& c, const RecObject& d)
{
    const AnyHom left = hom_left_side(pair, ctx, c, d);
    const AnyHom right = hom_right_side(pair, ctx, c, d);
    const FieldSpec f = ctx->lambda()->field();

    Matrix to_right(f, right.dim(), left.dim());
    for (std::size_t r = 0; r < left.dim(); ++r) {
        auto coords = right.coords_of(theta(pair, ctx, c, d, left.basis_map(r)));
        if (!coords)
            throw internal_error("adjunction_iso: theta image escaped the hom space");
        to_right.paste(0, r, *coords);
    }
    Matrix to_left(f, left.dim(), right.dim());
    for (std::size_t r = 0; r < right.dim(); ++r) {
        auto coords = left.coords_of(theta_inv(pair, ctx, c, d, right.basis_map(r)));
        if (!coords)
            throw internal_error("adjunction_iso: theta_inv image escaped the hom space");
        to_left.paste(0, r, *coords);
    }
    AdjunctionWitness w;
    w.pair = pair;
    w.dim = left.dim();
    w.mutually_inverse = left.dim() == right.dim() && (to_right * to_left).is_identity() && (to_left * to_right).is_identity();
    w.to_right = std::move(to_right);
    w.to_left = std::move(to_left);
    return w;
}

NatWitness unit_at(AdjPair pair, const ContextPtr& ctx, const RecObject& c)
{
    const RecObject fc = rec_apply(left_tag(pair), ctx, c);
    const RecMap eta = theta(pair, ctx, c, fc, identity_rec(fc));
    // triangle: counit at F c composed with F(eta) is the identity of F c
    const RecObject gfc = rec_apply(right_tag(pair), ctx, fc);
    const RecMap eps = theta_inv(pair, ctx, gfc, fc, identity_rec(gfc));
    const RecMap f_eta = rec_apply_map(left_tag(pair), ctx, eta);
    const bool triangle = equal_rec(compose_rec(eps, f_eta), identity_rec(fc));
    return NatWitness{pair, eta, is_iso_rec(eta), triangle};
}

NatWitness counit_at(AdjPair pair, const ContextPtr& ctx, const RecObject& d)
{
    const RecObject gd = rec_apply(right_tag(pair), ctx, d);
    const RecMap eps = theta_inv(pair, ctx, gd, d, identity_rec(gd));
    // triangle: G(eps) composed with the unit at G d is the identity of G d
    const RecObject fgd = rec_apply(left_tag(pair), ctx, gd);
    const RecMap eta = theta(pair, ctx, gd, fgd, identity_rec(fgd));
    const RecMap g_eps = rec_apply_map(right_tag(pair), ctx, eps);
    const bool triangle = equal_rec(compose_rec(g_eps, eta), identity_rec(gd));
    return NatWitness{pair, eps, is_iso_rec(eps), triangle};
}

/* ---------- the abelian checker ---------- */

namespace {

bool exact_at(const Matrix& incoming, const Matrix& outgoing)
{
    return incoming.column_space() == outgoing.kernel();
}

struct PairSamples {
    std::vector<RecObject> cs, ds;
};

PairSamples pick_pair_samples(AdjPair pair, const SampleSet& s)
{
    PairSamples out;
    auto triples = [&]() {
        std::vector<RecObject> v;
        for (const Triple& t : s.triples)
            v.emplace_back(t);
        return v;
    };
    auto mods = [&](const std::vector<Module>& m) {
        std::vector<RecObject> v;
        for (const Module& x : m)
            v.emplace_back(x);
        return v;
    };
    switch (pair) {
        case AdjPair::IUpper_ILower: out = {triples(), mods(s.a_modules)}; break;
        case AdjPair::ILower_IShriek: out = {mods(s.a_modules), triples()}; break;
        case AdjPair::JShriek_JUpper: out = {mods(s.b_modules), triples()}; break;
        case AdjPair::JUpper_JLower: out = {triples(), mods(s.b_modules)}; break;
        case AdjPair::JLower_JQuestion: out = {mods(s.b_modules), triples()}; break;
        case AdjPair::IShriek_IQuestion: out = {triples(), mods(s.a_modules)}; break;
    }
    return out;
}

constexpr AdjPair kAllPairs[] = {AdjPair::IUpper_ILower,    AdjPair::ILower_IShriek, AdjPair::JShriek_JUpper,
                                 AdjPair::JUpper_JLower,    AdjPair::JLower_JQuestion, AdjPair::IShriek_IQuestion};

}  // namespace

CheckReport check_abelian_recollement(const ContextPtr& ctx, const SampleSet& samples)
{
    CheckReport report;
    report.sample_inventory = samples.inventory;

    // R1: six adjunction isomorphisms; every sampled c meets a rotating
    // selection of d's plus a fixed prefix, keeping the pair count linear
    for (AdjPair pair : kAllPairs) {
        const PairSamples ps = pick_pair_samples(pair, samples);
        bool ok = true;
        std::size_t checked = 0;
        std::string witness;
        const std::size_t fixed = std::min<std::size_t>(ps.ds.size(), 3);
        for (std::size_t i = 0; i < ps.cs.size(); ++i) {
            std::vector<std::size_t> d_indices;
            for (std::size_t k = 0; k < fixed; ++k)
                d_indices.push_back(k);
            if (!ps.ds.empty())
                d_indices.push_back(i % ps.ds.size());
            for (std::size_t di : d_indices) {
                const AdjunctionWitness w = adjunction_iso(pair, ctx, ps.cs[i], ps.ds[di]);
                ++checked;
                if (!w.mutually_inverse) {
                    ok = false;
                    witness = "not mutually inverse at sample pair #" + std::to_string(checked);
                }
            }
        }
        report.add("R1 adjunction " + to_string(pair), ok ? CheckStatus::Pass : CheckStatus::Fail,
                   ok ? std::to_string(checked) + " object pairs, explicit inverse matrices" : witness, "recollement axiom R1: adjoint pairs");
    }

    // R1 naturality: squares against sampled morphisms
    {
        bool ok = true;
        std::size_t checked = 0;
        for (AdjPair pair : kAllPairs) {
            const PairSamples ps = pick_pair_samples(pair, samples);
            if (ps.cs.empty() || ps.ds.empty())
                continue;
            // naturality in c along sampled maps of the c-category
            const bool c_is_triple = std::holds_alternative<Triple>(ps.cs.front());
            std::vector<RecMap> c_maps, d_maps;
            if (c_is_triple)
                for (const TripleMap& m : samples.triple_maps)
                    c_maps.emplace_back(m);
            const bool c_is_a = !c_is_triple && (pair == AdjPair::ILower_IShriek);
            for (const ModuleMap& m : (c_is_a ? samples.a_maps : samples.b_maps))
                if (!c_is_triple)
                    c_maps.emplace_back(m);
            const bool d_is_triple = std::holds_alternative<Triple>(ps.ds.front());
            if (d_is_triple)
                for (const TripleMap& m : samples.triple_maps)
                    d_maps.emplace_back(m);
            else
                for (const ModuleMap& m : (pair == AdjPair::IUpper_ILower || pair == AdjPair::IShriek_IQuestion ? samples.a_maps : samples.b_maps))
                    d_maps.emplace_back(m);

            const std::size_t d_count = std::min<std::size_t>(ps.ds.size(), 3);
            const std::size_t c_count = std::min<std::size_t>(ps.cs.size(), 3);
            for (const RecMap& u : c_maps) {
                // theta_{c1,d}(h o F u) = theta_{c2,d}(h) o u for h: F c2 -> d
                const RecObject c1 = std::holds_alternative<ModuleMap>(u) ? RecObject(std::get<ModuleMap>(u).source()) : RecObject(std::get<TripleMap>(u).source());
                const RecObject c2 = std::holds_alternative<ModuleMap>(u) ? RecObject(std::get<ModuleMap>(u).target()) : RecObject(std::get<TripleMap>(u).target());
                const RecMap fu = rec_apply_map(left_tag(pair), ctx, u);
                for (std::size_t di = 0; di < d_count; ++di) {
                    const RecObject& d = ps.ds[di];
                    const AnyHom hom2 = hom_left_side(pair, ctx, c2, d);
                    for (std::size_t r = 0; r < hom2.dim(); ++r) {
                        const RecMap h = hom2.basis_map(r);
                        const RecMap lhs = theta(pair, ctx, c1, d, compose_rec(h, fu));
                        const RecMap rhs = compose_rec(theta(pair, ctx, c2, d, h), u);
                        ++checked;
                        if (!equal_rec(lhs, rhs))
                            ok = false;
                    }
                }
            }
            for (const RecMap& v : d_maps) {
                // theta_{c,d2}(v o h) = G v o theta_{c,d1}(h) for h: F c -> d1
                const RecObject d1 = std::holds_alternative<ModuleMap>(v) ? RecObject(std::get<ModuleMap>(v).source()) : RecObject(std::get<TripleMap>(v).source());
                const RecObject d2 = std::holds_alternative<ModuleMap>(v) ? RecObject(std::get<ModuleMap>(v).target()) : RecObject(std::get<TripleMap>(v).target());
                const RecMap gv = rec_apply_map(right_tag(pair), ctx, v);
                for (std::size_t ci = 0; ci < c_count; ++ci) {
                    const RecObject& c = ps.cs[ci];
                    const AnyHom hom1 = hom_left_side(pair, ctx, c, d1);
                    for (std::size_t r = 0; r < hom1.dim(); ++r) {
                        const RecMap h = hom1.basis_map(r);
                        const RecMap lhs = theta(pair, ctx, c, d2, compose_rec(v, h));
                        const RecMap rhs = compose_rec(gv, theta(pair, ctx, c, d1, h));
                        ++checked;
                        if (!equal_rec(lhs, rhs))
                            ok = false;
                    }
                }
            }
        }
        report.add("R1 naturality", ok ? CheckStatus::Pass : CheckStatus::Fail, std::to_string(checked) + " squares", "recollement axiom R1: naturality in both positions");
    }

    // R2: fully faithful i_*, j_!, j_*, i_? via unit/counit invertibility
    {
        bool ok = true;
        std::size_t checked = 0;
        for (const Module& x : samples.a_modules) {
            const NatWitness ce = counit_at(AdjPair::IUpper_ILower, ctx, RecObject(x));
            const NatWitness cq = counit_at(AdjPair::IShriek_IQuestion, ctx, RecObject(x));
            checked += 2;
            ok = ok && ce.is_iso && ce.triangles_ok && cq.is_iso && cq.triangles_ok;
        }
        for (const Module& y : samples.b_modules) {
            const NatWitness uj = unit_at(AdjPair::JShriek_JUpper, ctx, RecObject(y));
            const NatWitness cj = counit_at(AdjPair::JUpper_JLower, ctx, RecObject(y));
            const NatWitness uq = unit_at(AdjPair::JLower_JQuestion, ctx, RecObject(y));
            checked += 3;
            ok = ok && uj.is_iso && uj.triangles_ok && cj.is_iso && cj.triangles_ok && uq.is_iso && uq.triangles_ok;
        }
        report.add("R2 fully faithful i_*, j_!, j_*, i_?", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   std::to_string(checked) + " unit/counit components invertible, triangle identities exact", "recollement axiom R2: fully faithful embeddings");
    }

    // R5: Im i_* = Ker j^* as a biconditional on sampled triples
    {
        bool ok = true;
        std::size_t checked = 0;
        for (const Triple& t : samples.triples) {
            ++checked;
            const bool in_ker = rec::j_upper(t).dim() == 0;
            if (in_ker) {
                const Triple rebuilt = rec::i_lower(ctx, rec::i_shriek(t));
                if (!(rebuilt == t))
                    ok = false;
            }
            const Triple image = rec::i_lower(ctx, t.x());
            if (rec::j_upper(image).dim() != 0)
                ok = false;
        }
        report.add("R5 Im i_* = Ker j^*", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   std::to_string(checked) + " triples; Y = 0 exactly on Ker j^*", "recollement axiom R5");
    }

    // exact sequences of counits/units at each sampled triple
    {
        bool ok = true;
        std::size_t checked = 0;
        for (const Triple& t : samples.triples) {
            const RecObject ot(t);
            const TripleMap eps = std::get<TripleMap>(counit_at(AdjPair::JShriek_JUpper, ctx, ot).component);
            const TripleMap eta = std::get<TripleMap>(unit_at(AdjPair::IUpper_ILower, ctx, ot).component);
            // j_!j^* T -> T -> i_*i^* T -> 0, checked in each coordinate
            const bool seq1 = exact_at(eps.f().matrix(), eta.f().matrix()) && exact_at(eps.g().matrix(), eta.g().matrix()) &&
                              eta.f().matrix().rank() == eta.target().x().dim() && eta.g().matrix().rank() == eta.target().y().dim();
            const TripleMap omega = std::get<TripleMap>(counit_at(AdjPair::ILower_IShriek, ctx, ot).component);
            const TripleMap zeta = std::get<TripleMap>(unit_at(AdjPair::JUpper_JLower, ctx, ot).component);
            // 0 -> i_*i^! T -> T -> j_*j^* T
            const bool seq2 = omega.f().matrix().kernel().dim() == 0 && omega.g().matrix().kernel().dim() == 0 &&
                              exact_at(omega.f().matrix(), zeta.f().matrix()) && exact_at(omega.g().matrix(), zeta.g().matrix());
            ++checked;
            if (!seq1 || !seq2)
                ok = false;
        }
        report.add("counit/unit exact sequences", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   std::to_string(checked) + " triples: j_!j^* -> Id -> i_*i^* -> 0 and 0 -> i_*i^! -> Id -> j_*j^*", "counit/unit exact sequences of a recollement");
    }

    // vanishing composites i^* j_! and i^! j_*
    {
        bool ok = true;
        std::size_t checked = 0;
        for (const Module& y : samples.b_modules) {
            ++checked;
            if (rec::i_upper(rec::j_shriek(ctx, y)).module.dim() != 0)
                ok = false;
            if (rec::i_shriek(rec::j_lower(ctx, y)).dim() != 0)
                ok = false;
        }
        report.add("i^* j_! = 0 and i^! j_* = 0", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   std::to_string(checked) + " B-modules", "vanishing composites across the recollement");
    }

    // functoriality of the eight tags on samples
    {
        bool ok = true;
        std::size_t checked = 0;
        for (const Triple& t : samples.triples) {
            const RecMap id_map = TripleMap::identity(t);
            for (FunctorTag tag : {FunctorTag::IUpper, FunctorTag::IShriek, FunctorTag::JUpper, FunctorTag::JQuestion}) {
                const RecMap image = rec_apply_map(tag, ctx, id_map);
                ++checked;
                if (!equal_rec(image, identity_rec(rec_apply(tag, ctx, RecObject(t)))))
                    ok = false;
            }
        }
        for (const Module& y : samples.b_modules) {
            for (FunctorTag tag : {FunctorTag::JShriek, FunctorTag::JLower}) {
                const RecMap image = rec_apply_map(tag, ctx, RecMap(ModuleMap::identity(y)));
                ++checked;
                if (!equal_rec(image, identity_rec(rec_apply(tag, ctx, RecObject(y)))))
                    ok = false;
            }
        }
        for (const Module& x : samples.a_modules) {
            for (FunctorTag tag : {FunctorTag::ILower, FunctorTag::IQuestion}) {
                const RecMap image = rec_apply_map(tag, ctx, RecMap(ModuleMap::identity(x)));
                ++checked;
                if (!equal_rec(image, identity_rec(rec_apply(tag, ctx, RecObject(x)))))
                    ok = false;
            }
        }
        // composites through a middle sampled triple
        for (std::size_t i = 0; i + 1 < samples.triples.size() && i < 3; ++i) {
            const Triple& t1 = samples.triples[i];
            const Triple& t2 = samples.triples[i + 1];
            const TripleHomSpace h12 = triple_hom_space(t1, t2);
            const TripleHomSpace h21 = triple_hom_space(t2, t1);
            if (h12.dim() == 0 || h21.dim() == 0)
                continue;
            const TripleMap u = h12.basis_map(0);
            const TripleMap v = h21.basis_map(h21.dim() - 1);
            const TripleMap vu = v.compose(u);
            for (FunctorTag tag : {FunctorTag::IUpper, FunctorTag::IShriek, FunctorTag::JUpper, FunctorTag::JQuestion}) {
                const RecMap lhs = rec_apply_map(tag, ctx, RecMap(vu));
                const RecMap rhs = compose_rec(rec_apply_map(tag, ctx, RecMap(v)), rec_apply_map(tag, ctx, RecMap(u)));
                ++checked;
                if (!equal_rec(lhs, rhs))
                    ok = false;
            }
        }
        report.add("functoriality", ok ? CheckStatus::Pass : CheckStatus::Fail,
                   std::to_string(checked) + " identity/composition images", "functor laws of the eight tags");
    }

    return report;
}

CheckReport remark_witnesses(const ContextPtr& ctx, const SampleSet& samples)
{
    CheckReport report;
    report.sample_inventory = samples.inventory;

    std::vector<Triple> pool = samples.triples;
    // (0, B, 0) is the canonical candidate when M is nonzero
    pool.push_back(Triple(ctx, Module::zero(ctx->algebra_a()), Module::regular(ctx->algebra_b()),
                          Matrix(ctx->lambda()->field(), 0, tensor_over(ctx->bimodule(), Module::regular(ctx->algebra_b())).module.dim())));

    // (1) a triple with Coker phi = 0 whose phi is not invertible
    {
        std::optional<std::string> found;
        for (const Triple& t : pool) {
            const bool epi = rec::i_upper(t).module.dim() == 0;
            const bool iso = t.phi().is_iso();
            if (epi && !iso) {
                found = "triple (dim X = " + std::to_string(t.x().dim()) + ", dim Y = " + std::to_string(t.y().dim()) +
                        "): Coker phi = 0 but phi is not invertible, and j_! images have invertible phi";
                break;
            }
        }
        report.add("Ker i^* strictly contains Im j_!", found ? CheckStatus::Pass : CheckStatus::NoWitness,
                   found ? *found : "no sampled triple separates them", "failure of lower symmetry: Im j_! strictly inside Ker i^*");
    }

    // (2) i^! j_! not vanishing
    {
        std::optional<std::string> found;
        for (const Module& y : samples.b_modules) {
            const Module image = rec::i_shriek(rec::j_shriek(ctx, y));
            if (image.dim() != 0) {
                found = "i^! j_! of a B-module of dim " + std::to_string(y.dim()) + " has dim " + std::to_string(image.dim());
                break;
            }
        }
        report.add("i^! j_! != 0", found ? CheckStatus::Pass : CheckStatus::NoWitness,
                   found ? *found : "i^! j_! vanished on every sample", "failure of i^! j_! = 0");
    }

    // (3) failure of left-exactness of j_! j^* -> Id
    {
        std::optional<std::string> found;
        for (const Triple& t : pool) {
            const TripleMap eps = std::get<TripleMap>(counit_at(AdjPair::JShriek_JUpper, ctx, RecObject(t)).component);
            if (eps.f().matrix().kernel().dim() != 0) {
                found = "counit at a triple with dim X = " + std::to_string(t.x().dim()) + ", dim Y = " + std::to_string(t.y().dim()) +
                        " has kernel of dim " + std::to_string(eps.f().matrix().kernel().dim());
                break;
            }
        }
        report.add("j_! j^* -> Id is not left exact", found ? CheckStatus::Pass : CheckStatus::NoWitness,
                   found ? *found : "counit injective on every sample", "failure of left exactness of the counit sequence");
    }

    return report;
}

}  // namespace trimod
