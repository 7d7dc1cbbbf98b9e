#include "doctest.h"

#include "helpers.hpp"

using namespace trimod;
using namespace trimod::testing;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
}

TEST_CASE("triangular algebra construction")
{
    SUBCASE("T2(k) has dimension 3 and validates")
    {
        ContextPtr ctx = t2(ground(QQ));
        CHECK(ctx->lambda()->dim() == 3);
        CHECK(validate_algebra(*ctx->lambda()).all_passed());
    }
    SUBCASE("T2(k[x]/(x^2)) has dimension 6 and validates")
    {
        ContextPtr ctx = t2(dual(QQ));
        CHECK(ctx->lambda()->dim() == 6);
        CHECK(validate_algebra(*ctx->lambda()).all_passed());
    }
    SUBCASE("idempotents are orthogonal and sum to the unit")
    {
        for (ContextPtr ctx : {t2(ground(QQ)), t2(dual(QQ))}) {
            const Algebra& l = *ctx->lambda();
            const Matrix ea = ctx->idempotent_a(), eb = ctx->idempotent_b();
            CHECK(l.multiply(ea, ea) == ea);
            CHECK(l.multiply(eb, eb) == eb);
            CHECK(l.multiply(ea, eb).is_zero());
            CHECK(l.multiply(eb, ea).is_zero());
            CHECK(ea + eb == l.unit());
        }
    }
    SUBCASE("M = 0 splits Lambda into A x B")
    {
        AlgebraPtr a = dual(QQ), b = ground(QQ);
        ContextPtr ctx = build_triangular(a, b, Bimodule::zero(a, b));
        CHECK(ctx->lambda()->dim() == 3);
        CHECK(validate_algebra(*ctx->lambda()).all_passed());
        const Matrix ea = ctx->idempotent_a(), eb = ctx->idempotent_b();
        CHECK(ea + eb == ctx->lambda()->unit());
        CHECK(ctx->lambda()->multiply(ea, eb).is_zero());
        // with M = 0 both idempotents are central
        for (std::size_t i = 0; i < 3; ++i) {
            const Matrix e = ctx->lambda()->basis_vector(i);
            CHECK(ctx->lambda()->multiply(ea, e) == ctx->lambda()->multiply(e, ea));
        }
    }
}

TEST_CASE("triples and their validation")
{
    ContextPtr ctx = t2(ground(QQ));
    SUBCASE("zero triple") { CHECK(validate_triple(Triple::zero(ctx)).all_passed()); }
    SUBCASE("projective triple (M (x) B, B)_Id")
    {
        Triple p = j_shriek_of(ctx, Module::regular(ctx->algebra_b()));
        CHECK(validate_triple(p).all_passed());
        CHECK(p.total_dim() == 2);
    }
    SUBCASE("(X, 0) triples")
    {
        Triple t = i_star_of(ctx, Module::regular(ctx->algebra_a()));
        CHECK(validate_triple(t).all_passed());
        CHECK(t.tensor().module.dim() == 0);
    }
}

TEST_CASE("triple maps")
{
    ContextPtr ctx = t2(ground(QQ));
    Triple p = j_shriek_of(ctx, Module::regular(ctx->algebra_b()));
    SUBCASE("identity and zero pass")
    {
        CHECK(validate_triple_map(TripleMap::identity(p)).all_passed());
        CHECK(validate_triple_map(TripleMap::zero(p, p)).all_passed());
    }
    SUBCASE("a mismatched f fails with a nonzero residual")
    {
        // f = 0 with g = Id breaks the square on the projective triple
        TripleMap bad(p, p, Matrix(QQ, 1, 1), Matrix::identity(QQ, 1));
        CHECK_FALSE(validate_triple_map(bad).all_passed());
        CHECK_FALSE(bad.residual().is_zero());
    }
}

TEST_CASE("triple hom spaces")
{
    ContextPtr ctx = t2(ground(QQ));
    Triple p = j_shriek_of(ctx, Module::regular(ctx->algebra_b()));  // (k, k)_id
    Triple sa = i_star_of(ctx, Module::regular(ctx->algebra_a()));   // (k, 0)
    Triple z = Triple::zero(ctx);

    TripleHomSpace end_p = triple_hom_space(p, p);
    CHECK(end_p.dim() == 1);
    for (std::size_t r = 0; r < end_p.dim(); ++r)
        CHECK(end_p.basis_map(r).is_valid());

    // maps (k,k)_id -> (k,0): f phi = 0 forces f = 0 since phi is invertible
    CHECK(triple_hom_space(p, sa).dim() == 0);
    // maps (k,0) -> (k,k)_id: any f works, g = 0
    CHECK(triple_hom_space(sa, p).dim() == 1);
    CHECK(triple_hom_space(z, p).dim() == 0);
    CHECK(triple_hom_space(p, z).dim() == 0);
}

TEST_CASE("direct sums of triples")
{
    ContextPtr ctx = t2(dual(QQ));
    Triple p = j_shriek_of(ctx, Module::regular(ctx->algebra_b()));
    Triple q = i_star_of(ctx, Module::regular(ctx->algebra_a()));
    TripleSumResult s = direct_sum_triples({p, q});
    CHECK(validate_triple(s.triple).all_passed());
    CHECK(s.triple.total_dim() == p.total_dim() + q.total_dim());
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(s.injections[i].is_valid());
        CHECK(s.projections[i].is_valid());
        const TripleMap round = s.projections[i].compose(s.injections[i]);
        CHECK(round.f().matrix().is_identity());
        CHECK(round.g().matrix().is_identity());
    }
}

TEST_CASE("triple kernels and cokernels")
{
    ContextPtr ctx = t2(dual(QQ));
    Triple p = j_shriek_of(ctx, Module::regular(ctx->algebra_b()));
    Triple s = j_shriek_of(ctx, simple_dual(ctx->algebra_b()));
    TripleHomSpace h = triple_hom_space(p, s);
    REQUIRE(h.dim() >= 1);
    for (std::size_t r = 0; r < h.dim(); ++r) {
        const TripleMap m = h.basis_map(r);
        TripleKernelResult k = triple_kernel(m);
        TripleCokernelResult c = triple_cokernel(m);
        CHECK(validate_triple(k.triple).all_passed());
        CHECK(validate_triple(c.triple).all_passed());
        CHECK(k.inclusion.is_valid());
        CHECK(c.projection.is_valid());
        // componentwise: image of the kernel inclusion is the kernel, and
        // the cokernel projection kills exactly the image
        CHECK(k.inclusion.f().matrix().column_space() == m.f().matrix().kernel());
        CHECK(k.inclusion.g().matrix().column_space() == m.g().matrix().kernel());
        CHECK(c.projection.f().matrix().kernel() == m.f().matrix().column_space());
        CHECK(c.projection.g().matrix().kernel() == m.g().matrix().column_space());
        // dimension bookkeeping of the four-term decomposition
        CHECK(p.total_dim() - k.triple.total_dim() == s.total_dim() - c.triple.total_dim());
    }
}

TEST_CASE("alpha")
{
    AlgebraPtr a = dual(QQ);
    Bimodule m = Bimodule::regular(a);

    SUBCASE("zero X gives an isomorphism of zero spaces")
    {
        AlphaResult ar = alpha(Module::zero(a), simple_dual(a), m);
        CHECK(ar.left.dim() == 0);
        CHECK(ar.right.dim() == 0);
    }
    SUBCASE("over the ground field alpha identifies Hom(Y, X) with itself")
    {
        AlgebraPtr k = ground(QQ);
        Bimodule kk = Bimodule::regular(k);
        Module x(k, 2, {Matrix::identity(QQ, 2)});
        Module y(k, 3, {Matrix::identity(QQ, 3)});
        AlphaResult ar = alpha(x, y, kk);
        CHECK(ar.left.dim() == 6);
        CHECK(ar.right.dim() == 6);
        CHECK((ar.forward * ar.backward).is_identity());
    }
    SUBCASE("A = B = M = k[x]/(x^2), X = A, Y = k: both sides are lines")
    {
        AlphaResult ar = alpha(Module::regular(a), simple_dual(a), m);
        CHECK(ar.left.dim() == 1);
        CHECK(ar.right.dim() == 1);
        CHECK_FALSE(ar.forward.is_zero());
    }
    SUBCASE("naturality in X on the socle map")
    {
        // alpha(f o phi) = Hom(M, f) o alpha(phi) for f: X -> X'
        Module s = simple_dual(a);
        ModuleMap f = socle_map(a);  // k -> A
        AlphaResult ar_src = alpha(s, s, m);
        AlphaResult ar_tgt = alpha(Module::regular(a), s, m);
        for (std::size_t r = 0; r < ar_src.left.dim(); ++r) {
            const ModuleMap phi = ar_src.left.basis_map(r);
            const ModuleMap lhs = alpha_apply(ar_tgt, ModuleMap(phi.source(), f.target(), f.matrix() * phi.matrix()));
            // Hom(M, f): HomM(s) -> HomM(A): composition with f in the hom bases
            const ModuleMap af = alpha_apply(ar_src, phi);
            Matrix pushed(QQ, ar_tgt.hom_mx.module.dim(), af.matrix().cols());
            for (std::size_t c = 0; c < af.matrix().cols(); ++c) {
                // element of Hom_A(M, s) with the given coordinates, then post-compose
                Matrix val(QQ, s.dim(), m.dim());
                for (std::size_t t = 0; t < ar_src.hom_mx.module.dim(); ++t)
                    val = val + ar_src.hom_mx.hom.basis_map(t).matrix().scaled(af.matrix().get(t, c));
                auto coords = ar_tgt.hom_mx.hom.coords_of(f.matrix() * val);
                REQUIRE(coords.has_value());
                pushed.paste(0, c, *coords);
            }
            CHECK(lhs.matrix() == pushed);
        }
    }
}

TEST_CASE("alpha is natural in the second position")
{
    // alpha(phi o (M (x) g)) = alpha(phi) o g for g: Y' -> Y
    AlgebraPtr a = dual(QQ);
    Bimodule m = Bimodule::regular(a);
    Module y = Module::regular(a);
    Module yp = simple_dual(a);
    Module x = Module::regular(a);
    AlphaResult ar_y = alpha(x, y, m);
    AlphaResult ar_yp = alpha(x, yp, m);
    HomSpace gs = hom_space(yp, y);
    for (std::size_t gi = 0; gi < gs.dim(); ++gi) {
        const ModuleMap g = gs.basis_map(gi);
        const ModuleMap mg = tensor_map(m, g, ar_yp.tensor, ar_y.tensor);
        for (std::size_t r = 0; r < ar_y.left.dim(); ++r) {
            const ModuleMap phi = ar_y.left.basis_map(r);
            const ModuleMap lhs = alpha_apply(ar_yp, ModuleMap(ar_yp.tensor.module, x, phi.matrix() * mg.matrix()));
            const ModuleMap rhs_full = alpha_apply(ar_y, phi);
            CHECK(lhs.matrix() == rhs_full.matrix() * g.matrix());
        }
    }
}

TEST_CASE("the equivalence transports morphisms with commuting squares")
{
    ContextPtr ctx = t2(dual(QQ));
    RandomModuleResult r1 = random_module(ctx->lambda(), 1, 21);
    RandomModuleResult r2 = random_module(ctx->lambda(), 2, 22);
    TripleOfModule d1 = to_triple(r1.module, ctx);
    TripleOfModule d2 = to_triple(r2.module, ctx);
    Module b1 = from_triple(d1.triple);
    Module b2 = from_triple(d2.triple);
    ModuleMap iso1 = equivalence_iso(d1, r1.module);
    ModuleMap iso2 = equivalence_iso(d2, r2.module);
    REQUIRE(iso1.is_iso());
    REQUIRE(iso2.is_iso());
    HomSpace maps = hom_space(r1.module, r2.module);
    for (std::size_t t = 0; t < maps.dim(); ++t) {
        const ModuleMap h = maps.basis_map(t);
        const TripleMap tm = to_triple_map(h, d1, d2);
        REQUIRE(tm.is_valid());
        const ModuleMap back = from_triple_map(tm, b1, b2);
        // the square iso2 o back = h o iso1 commutes exactly
        CHECK(iso2.matrix() * back.matrix() == h.matrix() * iso1.matrix());
    }
}

TEST_CASE("psi")
{
    AlgebraPtr a = dual(QQ);
    Bimodule m = Bimodule::regular(a);

    SUBCASE("psi on the zero module is the zero map")
    {
        PsiResult p = psi(Module::zero(a), m);
        CHECK(p.map.matrix().rows() == 0);
    }
    SUBCASE("for M = A, psi is the canonical isomorphism A (x) Hom(A, X) -> X")
    {
        for (const Module& x : {Module::regular(a), simple_dual(a)}) {
            PsiResult p = psi(x, m);
            CHECK(p.map.intertwines());
            CHECK(p.map.is_iso());
        }
    }
    SUBCASE("alpha(psi) = Id")
    {
        for (const Module& x : {Module::regular(a), simple_dual(a)}) {
            PsiResult p = psi(x, m);
            AlphaResult ar = alpha(x, p.hom_mx.module, m);
            const ModuleMap image = alpha_apply(ar, p.map);
            CHECK(image.matrix().is_identity());
        }
    }
    SUBCASE("ground field: psi on k is the identity")
    {
        AlgebraPtr k = ground(QQ);
        PsiResult p = psi(Module::regular(k), Bimodule::regular(k));
        CHECK(p.map.matrix().is_identity());
    }
}

TEST_CASE("the equivalence between Lambda-modules and triples")
{
    SUBCASE("regular module of T2(k)")
    {
        ContextPtr ctx = t2(ground(QQ));
        TripleOfModule d = to_triple(Module::regular(ctx->lambda()), ctx);
        CHECK(d.triple.x().dim() == 2);  // A + M
        CHECK(d.triple.y().dim() == 1);  // B
        CHECK(validate_triple(d.triple).all_passed());
        // phi embeds M (x) B = M
        CHECK(d.triple.phi().matrix().rank() == 1);
        ModuleMap iso = equivalence_iso(d, Module::regular(ctx->lambda()));
        CHECK(iso.intertwines());
        CHECK(iso.is_iso());
    }
    SUBCASE("the simple at e_B of T2(k) becomes (0, k, 0)")
    {
        ContextPtr ctx = t2(ground(QQ));
        Module s(ctx->lambda(), 1, {Matrix(QQ, 1, 1), Matrix(QQ, 1, 1), Matrix::identity(QQ, 1)});
        REQUIRE(validate_module(s).all_passed());
        TripleOfModule d = to_triple(s, ctx);
        CHECK(d.triple.x().dim() == 0);
        CHECK(d.triple.y().dim() == 1);
    }
    SUBCASE("zero module becomes the zero triple")
    {
        ContextPtr ctx = t2(ground(QQ));
        CHECK(to_triple(Module::zero(ctx->lambda()), ctx).triple.total_dim() == 0);
    }
    SUBCASE("round trips on random modules over T2(k[x]/(x^2))")
    {
        ContextPtr ctx = t2(dual(FieldSpec::prime(101)));
        for (std::uint64_t seed : {2ull, 3ull, 5ull}) {
            RandomModuleResult r = random_module(ctx->lambda(), 2, seed);
            TripleOfModule d = to_triple(r.module, ctx);
            CHECK(validate_triple(d.triple).all_passed());
            CHECK(d.triple.total_dim() == r.module.dim());
            ModuleMap iso = equivalence_iso(d, r.module);
            CHECK(iso.intertwines());
            CHECK(iso.is_iso());
            // to_triple(from_triple(t)) reproduces t on the nose
            Module rebuilt = from_triple(d.triple);
            CHECK(validate_module(rebuilt).all_passed());
            TripleOfModule again = to_triple(rebuilt, ctx);
            CHECK(again.triple == d.triple);
        }
    }
    SUBCASE("from_triple of (X, 0) kills the M- and B-blocks")
    {
        ContextPtr ctx = t2(ground(QQ));
        Module z = from_triple(i_star_of(ctx, Module::regular(ctx->algebra_a())));
        CHECK(validate_module(z).all_passed());
        CHECK(z.act(ctx->embed_m(Matrix::identity(QQ, 1))).is_zero());
        CHECK(z.act(ctx->idempotent_b()).is_zero());
    }
    SUBCASE("maps transport across the identification")
    {
        ContextPtr ctx = t2(dual(QQ));
        RandomModuleResult r1 = random_module(ctx->lambda(), 1, 11);
        RandomModuleResult r2 = random_module(ctx->lambda(), 2, 12);
        TripleOfModule d1 = to_triple(r1.module, ctx);
        TripleOfModule d2 = to_triple(r2.module, ctx);
        HomSpace maps = hom_space(r1.module, r2.module);
        for (std::size_t t = 0; t < maps.dim(); ++t) {
            TripleMap tm = to_triple_map(maps.basis_map(t), d1, d2);
            CHECK(tm.is_valid());
        }
    }
    SUBCASE("context mismatch is refused")
    {
        ContextPtr ctx = t2(ground(QQ));
        AlgebraPtr other = dual(QQ);
        CHECK_THROWS_AS(to_triple(Module::regular(other), ctx), Error);
    }
}
