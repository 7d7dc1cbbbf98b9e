/* Regenerates the shipped workspace corpus under data/. */

#include <iostream>

#include "trimod/recollement.hpp"
#include "trimod/workspace.hpp"

using namespace trimod;

namespace {

Workspace t2_of(const FieldSpec field, bool dual_numbers)
{
    Workspace ws;
    ws.field = field;
    AlgebraPtr a = std::make_shared<Algebra>(dual_numbers ? Algebra::dual_numbers(field) : Algebra::ground_field(field));
    ws.algebras.emplace("A", a);
    ws.bimodules.emplace("M", Workspace::BimoduleEntry{"A", "A", Bimodule::regular(a)});
    ContextPtr ctx = build_triangular(a, a, Bimodule::regular(a));
    ws.contexts.emplace("T2", Workspace::ContextEntry{"A", "A", "M", ctx});
    ws.algebras.emplace("T2", ctx->lambda());

    ws.modules.emplace("A_reg", Workspace::ModuleEntry{"A", Module::regular(a)});
    ws.modules.emplace("zero_A", Workspace::ModuleEntry{"A", Module::zero(a)});
    if (dual_numbers) {
        Module k(a, 1, {Matrix::identity(field, 1), Matrix(field, 1, 1)});
        ws.modules.emplace("k", Workspace::ModuleEntry{"A", k});
        Matrix socle(field, 2, 1);
        socle.set(1, 0, Rat(1));
        ws.maps.emplace("socle", Workspace::MapEntry{"k", "A_reg", ModuleMap(k, Module::regular(a), socle)});
        // (A, k)_phi with phi the socle embedding of M (x) k = k
        ws.triples.emplace("socle_triple", Workspace::TripleEntry{"T2", "A_reg", "k", Triple(ctx, Module::regular(a), k, socle)});
        ws.triples.emplace("j_shriek_k", Workspace::TripleEntry{"T2", "k", "k", rec::j_shriek(ctx, k)});
    } else {
        Module k = Module::regular(a);
        // the three indecomposables of T2(k)
        ws.triples.emplace("proj_kk", Workspace::TripleEntry{"T2", "A_reg", "A_reg", rec::j_shriek(ctx, k)});
        ws.triples.emplace("simple_a", Workspace::TripleEntry{"T2", "A_reg", "zero_A", rec::i_lower(ctx, k)});
        ws.triples.emplace("simple_b", Workspace::TripleEntry{"T2", "zero_A", "A_reg", rec::j_lower(ctx, k)});
    }
    return ws;
}

Workspace m_zero()
{
    Workspace ws;
    ws.field = FieldSpec::rationals();
    AlgebraPtr a = std::make_shared<Algebra>(Algebra::ground_field(ws.field));
    ws.algebras.emplace("A", a);
    ws.algebras.emplace("B", a);
    ws.bimodules.emplace("M", Workspace::BimoduleEntry{"A", "B", Bimodule::zero(a, a)});
    ContextPtr ctx = build_triangular(a, a, Bimodule::zero(a, a));
    ws.contexts.emplace("L", Workspace::ContextEntry{"A", "B", "M", ctx});
    ws.algebras.emplace("L", ctx->lambda());
    ws.modules.emplace("A_reg", Workspace::ModuleEntry{"A", Module::regular(a)});
    return ws;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::string dir = argc > 1 ? argv[1] : "data";
    save_workspace(t2_of(FieldSpec::rationals(), false), dir + "/t2_rationals.json");
    save_workspace(t2_of(FieldSpec::prime(101), true), dir + "/t2_dual_f101.json");
    save_workspace(m_zero(), dir + "/m_zero.json");
    std::cout << "wrote corpus to " << dir << "\n";
    return 0;
}
