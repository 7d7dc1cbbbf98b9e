#include "doctest.h"

#include "trimod/modrep.hpp"

using namespace trimod;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

AlgebraPtr dual() { return std::make_shared<Algebra>(Algebra::dual_numbers(QQ)); }
AlgebraPtr ground() { return std::make_shared<Algebra>(Algebra::ground_field(QQ)); }

/* the simple module k over k[x]/(x^2): x acts as zero */
Module simple_over_dual(const AlgebraPtr& a)
{
    return Module(a, 1, {Matrix::identity(QQ, 1), Matrix(QQ, 1, 1)});
}

/* socle inclusion k -> A sending 1 to x */
ModuleMap socle_inclusion(const AlgebraPtr& a)
{
    Module k = simple_over_dual(a);
    Module reg = Module::regular(a);
    Matrix m(QQ, 2, 1);
    m.set(1, 0, Rat(1));
    return ModuleMap(k, reg, m);
}

}  // namespace

TEST_CASE("module validation")
{
    AlgebraPtr a = dual();
    CHECK(validate_module(Module::regular(a)).all_passed());
    CHECK(validate_module(simple_over_dual(a)).all_passed());
    CHECK(validate_module(Module::zero(a)).all_passed());
    // x acting as identity is not a k[x]/(x^2) representation
    Module bad(a, 1, {Matrix::identity(QQ, 1), Matrix::identity(QQ, 1)});
    CHECK_FALSE(validate_module(bad).all_passed());
}

TEST_CASE("hom spaces")
{
    AlgebraPtr k = ground();
    SUBCASE("Hom_k(k, k) has dimension 1")
    {
        Module m = Module::regular(k);
        CHECK(hom_space(m, m).dim() == 1);
    }
    AlgebraPtr a = dual();
    Module reg = Module::regular(a);
    Module s = simple_over_dual(a);
    SUBCASE("Hom(k, A) lands in the socle")
    {
        HomSpace h = hom_space(s, reg);
        CHECK(h.dim() == 1);
        ModuleMap f = h.basis_map(0);
        CHECK(f.intertwines());
        // the image is killed by x
        CHECK((reg.action(1) * f.matrix()).is_zero());
    }
    SUBCASE("Hom(A, X) has the dimension of X")
    {
        CHECK(hom_space(reg, s).dim() == s.dim());
        CHECK(hom_space(reg, reg).dim() == reg.dim());
    }
    SUBCASE("maps from the defining basis intertwine")
    {
        HomSpace h = hom_space(reg, reg);
        for (std::size_t r = 0; r < h.dim(); ++r)
            CHECK(h.basis_map(r).intertwines());
    }
}

TEST_CASE("kernel, image, cokernel")
{
    AlgebraPtr a = dual();
    Module reg = Module::regular(a);
    Module s = simple_over_dual(a);

    SUBCASE("identity has zero kernel and cokernel")
    {
        ModuleMap id = ModuleMap::identity(reg);
        CHECK(kernel_module(id).module.dim() == 0);
        CHECK(cokernel_module(id).module.dim() == 0);
    }
    SUBCASE("zero map")
    {
        ModuleMap z = ModuleMap::zero(s, reg);
        CHECK(kernel_module(z).module.dim() == s.dim());
        CHECK(cokernel_module(z).module.dim() == reg.dim());
    }
    SUBCASE("socle inclusion has cokernel isomorphic to k")
    {
        ModuleMap f = socle_inclusion(a);
        REQUIRE(f.intertwines());
        CHECK(kernel_module(f).module.dim() == 0);
        QuotientModuleResult c = cokernel_module(f);
        CHECK(c.module.dim() == 1);
        CHECK(validate_module(c.module).all_passed());
        // x acts as zero on the quotient
        CHECK(c.module.action(1).is_zero());
        CHECK(c.projection.intertwines());
    }
    SUBCASE("exactness: image equals kernel of the cokernel projection")
    {
        ModuleMap f = socle_inclusion(a);
        SubmoduleResult im = image_module(f);
        QuotientModuleResult c = cokernel_module(f);
        CHECK(im.inclusion.matrix().column_space() == c.projection.matrix().kernel());
        CHECK(im.inclusion.intertwines());
    }
}

TEST_CASE("direct sums")
{
    AlgebraPtr a = dual();
    Module reg = Module::regular(a);
    Module s = simple_over_dual(a);
    DirectSumResult d = direct_sum({reg, s});
    CHECK(d.module.dim() == 3);
    CHECK(validate_module(d.module).all_passed());
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(d.injections[i].intertwines());
        CHECK(d.projections[i].intertwines());
        CHECK(d.projections[i].compose(d.injections[i]).matrix().is_identity());
    }
    CHECK(d.projections[0].compose(d.injections[1]).matrix().is_zero());
}

TEST_CASE("submodule generation and random modules")
{
    AlgebraPtr a = dual();
    SUBCASE("a unit vector generates the regular module")
    {
        Module reg = Module::regular(a);
        Matrix v(QQ, 2, 1);
        v.set(0, 0, Rat(1));
        v.set(1, 0, Rat(1));  // 1 + x is a unit
        CHECK(submodule_generated(reg, v).module.dim() == 2);
    }
    SUBCASE("the socle generates only itself")
    {
        Module reg = Module::regular(a);
        Matrix v(QQ, 2, 1);
        v.set(1, 0, Rat(1));
        SubmoduleResult sub = submodule_generated(reg, v);
        CHECK(sub.module.dim() == 1);
        CHECK(validate_module(sub.module).all_passed());
    }
    SUBCASE("random modules are deterministic per seed and validate")
    {
        for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
            RandomModuleResult r1 = random_module(a, 2, seed);
            RandomModuleResult r2 = random_module(a, 2, seed);
            CHECK(r1.module == r2.module);
            CHECK(validate_module(r1.module).all_passed());
            CHECK(r1.inclusion.intertwines());
            CHECK(r1.module.dim() <= 4);
        }
        CHECK(random_module(ground(), 2, 5).module.dim() <= 2);
    }
}

TEST_CASE("arithmetic near the field-size bound")
{
    // the largest 31-bit prime: products of residues must not overflow
    const FieldSpec fbig = FieldSpec::prime(2147483647);
    AlgebraPtr a = std::make_shared<Algebra>(Algebra::dual_numbers(fbig));
    CHECK(validate_algebra(*a).all_passed());
    Module reg = Module::regular(a);
    CHECK(validate_module(reg).all_passed());
    CHECK(hom_space(reg, reg).dim() == 2);
    Matrix v(fbig, 2, 1);
    v.set(0, 0, Rat(2147483646));  // -1 mod p, a unit
    v.set(1, 0, Rat(1073741824));
    CHECK(submodule_generated(reg, v).module.dim() == 2);
    RandomModuleResult r = random_module(a, 2, 99);
    CHECK(validate_module(r.module).all_passed());
    CHECK(ext(r.module, reg, 1).dim == 0);  // self-injective at any p
}

TEST_CASE("bimodules")
{
    AlgebraPtr a = dual();
    SUBCASE("regular bimodule validates")
    {
        Bimodule m = Bimodule::regular(a);
        CHECK(validate_bimodule(m).all_passed());
        CHECK(m.dim() == 2);
    }
    SUBCASE("zero bimodule validates")
    {
        CHECK(validate_bimodule(Bimodule::zero(a, ground())).all_passed());
    }
}

TEST_CASE("tensor products")
{
    AlgebraPtr a = dual();
    AlgebraPtr k = ground();

    SUBCASE("over the ground field the tensor is the full product")
    {
        // M = k^2 as a (dual numbers, k)-bimodule with x acting as 0 on the left
        std::vector<Matrix> left{Matrix::identity(QQ, 2), Matrix(QQ, 2, 2)};
        std::vector<Matrix> right{Matrix::identity(QQ, 2)};
        Bimodule m(a, k, 2, left, right);
        CHECK(validate_bimodule(m).all_passed());
        Module y(k, 3, {Matrix::identity(QQ, 3)});
        TensorResult t = tensor_over(m, y);
        CHECK(t.module.dim() == 6);
        CHECK(validate_module(t.module).all_passed());
    }
    SUBCASE("B tensor_B Y is isomorphic to Y")
    {
        Bimodule breg = Bimodule::regular(a);
        Module y = Module::regular(a);
        TensorResult t = tensor_over(breg, y);
        CHECK(t.module.dim() == y.dim());
        CHECK(validate_module(t.module).all_passed());
        CHECK(hom_space(t.module, y).dim() == hom_space(y, y).dim());
    }
    SUBCASE("A tensor_A k kills the socle")
    {
        Bimodule areg = Bimodule::regular(a);
        Module s = simple_over_dual(a);
        TensorResult t = tensor_over(areg, s);
        CHECK(t.module.dim() == 1);
    }
    SUBCASE("tensor_map is functorial")
    {
        Bimodule areg = Bimodule::regular(a);
        Module reg = Module::regular(a);
        Module s = simple_over_dual(a);
        ModuleMap f = socle_inclusion(a);
        ModuleMap tf = tensor_map(areg, f);
        CHECK(tf.intertwines());
        ModuleMap tid = tensor_map(areg, ModuleMap::identity(s));
        CHECK(tid.matrix().is_identity());
        // composition with the projection reg -> coker
        QuotientModuleResult c = cokernel_module(f);
        ModuleMap tp = tensor_map(areg, c.projection);
        ModuleMap composite = tensor_map(areg, c.projection.compose(f));
        CHECK(tp.compose(tf).matrix() == composite.matrix());
    }
}

TEST_CASE("hom modules")
{
    AlgebraPtr a = dual();
    AlgebraPtr k = ground();
    SUBCASE("Hom_A(A, X) recovers X as a module over the right algebra")
    {
        Bimodule areg = Bimodule::regular(a);
        Module s = simple_over_dual(a);
        HomModuleResult h = hom_module(areg, s);
        CHECK(h.module.dim() == s.dim());
        CHECK(validate_module(h.module).all_passed());
        CHECK(*h.module.algebra() == *a);
    }
    SUBCASE("zero module gives zero")
    {
        Bimodule areg = Bimodule::regular(a);
        CHECK(hom_module(areg, Module::zero(a)).module.dim() == 0);
    }
    SUBCASE("all of k against k")
    {
        Bimodule kk = Bimodule::regular(k);
        CHECK(hom_module(kk, Module::regular(k)).module.dim() == 1);
    }
    SUBCASE("hom-tensor adjunction dimension count")
    {
        Bimodule areg = Bimodule::regular(a);
        Module s = simple_over_dual(a);
        Module reg = Module::regular(a);
        for (const Module& y : {s, reg})
            for (const Module& x : {s, reg}) {
                TensorResult t = tensor_over(areg, y);
                HomModuleResult h = hom_module(areg, x);
                CHECK(hom_space(t.module, x).dim() == hom_space(y, h.module).dim());
            }
    }
}
