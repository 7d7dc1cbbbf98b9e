#pragma once

/* Gorenstein data: the injective-dimension probe, the two independent
 * Gorenstein-projectivity tests (Ext-perpendicularity over the algebra
 * itself, and the structural triple criterion), duality/reflexivity, the
 * cosyzygy embedding sigma, and the triple coresolution built from it. */

#include "trimod/recollement.hpp"
#include "trimod/triplecat.hpp"

namespace trimod {

struct RadicalResult {
    Subspace radical;             // inside the coordinate space of A
    std::vector<Module> simples;  // composition factors of A/rad as A-modules
};
/* trace-form radical; valid in characteristic 0 or p > dim A, otherwise an
 * Inconclusive error instructs the caller to declare inj.dim explicitly */
RadicalResult radical_and_simples(const AlgebraPtr& a);

struct GorensteinContext {
    enum class Mode { Computed, UserDeclared, Inconclusive };
    AlgebraPtr algebra;
    Mode mode = Mode::Inconclusive;
    std::size_t left_injdim = 0;
    std::size_t right_injdim = 0;
    std::size_t cap = 0;

    /* the truncation bound for Ext-vanishing tests on left modules */
    std::size_t bound() const;
    bool usable() const { return mode != Mode::Inconclusive; }
};

/* d = largest i with Ext^i(A/rad, A) != 0, certified by the first vanishing
 * degree; both sides probed (the right side through the opposite algebra) */
GorensteinContext injective_dimension(const AlgebraPtr& a, std::size_t cap = 12, const Limits& limits = {});
GorensteinContext declared_injdim(const AlgebraPtr& a, std::size_t left, std::size_t right);

struct GprojVerdict {
    bool gproj = false;
    std::vector<std::size_t> ext_dims;  // dim Ext^i(g, A) for i = 1..bound
};
GprojVerdict is_gproj_perp(const Module& g, const GorensteinContext& ctx);

struct TripleGprojVerdict {
    bool gproj = false;
    bool phi_monic = false;
    bool x_gproj = false;
    bool coker_gproj = false;
    bool y_gproj = false;
    bool m_tensor_y_gproj = false;  // reported consequence
    bool m_left_projective = false;
    bool m_right_projective = false;
    std::string summary() const;
};
TripleGprojVerdict is_gproj_triple(const Triple& t, const GorensteinContext& ctx_a, const GorensteinContext& ctx_b);

struct DualResult {
    Module dual;         // Hom_A(g, A) over the opposite algebra
    HomSpace hom;        // its carrier basis
    Module double_dual;  // rebuilt over the original algebra
    ModuleMap evaluation;  // g -> g**
};
DualResult dual_and_reflexivity(const Module& g);

struct EmbeddingResult {
    ModuleMap sigma;     // g -> P, injective
    FreeModule p;        // the free target
    Module cokernel;
    ModuleMap coker_projection;
    GprojVerdict cokernel_certificate;
};
/* sigma is the dual of a free presentation of Hom_A(g, A), precomposed with
 * the reflexivity isomorphism; pad adds redundant generators to that
 * presentation, giving an alternate embedding of the same module */
EmbeddingResult cosyzygy_embed(const Module& g, const GorensteinContext& ctx, std::size_t pad = 0);

struct LambdaCoresolution {
    std::vector<Triple> stage_terms;   // (P_i + M(x)Q_i, Q_i) with phi = the second inclusion
    std::vector<TripleMap> stage_maps; // t_i -> stage_terms[i]
    std::vector<Triple> cosyzygies;    // t_{i+1} = coker(stage_maps[i])
    CheckReport checks;                // exactness, commutativity, certification per stage
};
LambdaCoresolution lambda_coresolution(const Triple& t, const GorensteinContext& ctx_a, const GorensteinContext& ctx_b,
                                       std::size_t length, const Limits& limits = {});

}  // namespace trimod
