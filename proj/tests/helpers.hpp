#pragma once

/* shared builders for the algebras exercised across the test suites */

#include "trimod/triplecat.hpp"

namespace trimod::testing {

inline AlgebraPtr ground(FieldSpec f) { return std::make_shared<Algebra>(Algebra::ground_field(f)); }
inline AlgebraPtr dual(FieldSpec f) { return std::make_shared<Algebra>(Algebra::dual_numbers(f)); }

/* T2(A) = [[A, A],[0, A]] with A as the regular A-A-bimodule */
inline ContextPtr t2(const AlgebraPtr& a) { return build_triangular(a, a, Bimodule::regular(a)); }

/* the simple module of k[x]/(x^2): x acts as zero */
inline Module simple_dual(const AlgebraPtr& a)
{
    const FieldSpec f = a->field();
    return Module(a, 1, {Matrix::identity(f, 1), Matrix(f, 1, 1)});
}

/* socle embedding k -> k[x]/(x^2), 1 |-> x */
inline ModuleMap socle_map(const AlgebraPtr& a)
{
    const FieldSpec f = a->field();
    Matrix m(f, 2, 1);
    m.set(1, 0, Rat(1));
    return ModuleMap(simple_dual(a), Module::regular(a), m);
}

/* j_!(Y) = (M (x) Y, Y)_Id */
inline Triple j_shriek_of(const ContextPtr& ctx, const Module& y)
{
    TensorResult t = tensor_over(ctx->bimodule(), y);
    return Triple(ctx, t.module, y, Matrix::identity(y.field(), t.module.dim()));
}

/* i_*(X) = (X, 0)_0 */
inline Triple i_star_of(const ContextPtr& ctx, const Module& x)
{
    return Triple(ctx, x, Module::zero(ctx->algebra_b()), Matrix(x.field(), x.dim(), 0));
}

}  // namespace trimod::testing
