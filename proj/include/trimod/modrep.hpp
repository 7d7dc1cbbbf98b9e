#pragma once

/* Modules as matrix representations, morphism spaces, kernels/cokernels,
 * tensor and Hom over bimodules, projectivity, free resolutions and Ext.
 * Right modules are uniformly left modules over the opposite algebra. */

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "trimod/algebra.hpp"

namespace trimod {

class Module {
  public:
    Module() = default;
    Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

    static Module zero(AlgebraPtr algebra);
    static Module regular(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return d_->algebra; }
    std::size_t dim() const { return d_->dim; }
    const Matrix& action(std::size_t i) const { return d_->action[i]; }
    /* action of an arbitrary algebra element (n x 1 coordinates) */
    Matrix act(const Matrix& algebra_elt) const;
    const FieldSpec& field() const { return d_->algebra->field(); }

    bool same_algebra(const Module& o) const;
    bool operator==(const Module& o) const;

  private:
    struct Data {
        AlgebraPtr algebra;
        std::size_t dim;
        std::vector<Matrix> action;
    };
    std::shared_ptr<const Data> d_;
};

/* action homomorphism property on generators would suffice, but validation
 * is a correctness gate, so all basis pairs are checked */
CheckReport validate_module(const Module& m);

class ModuleMap {
  public:
    ModuleMap() = default;
    ModuleMap(Module source, Module target, Matrix matrix);

    static ModuleMap identity(const Module& m);
    static ModuleMap zero(Module source, Module target);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const Matrix& matrix() const { return matrix_; }

    bool intertwines() const;
    ModuleMap compose(const ModuleMap& inner) const;  // this after inner
    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    bool is_iso() const;
    std::optional<ModuleMap> inverse() const;

  private:
    Module source_, target_;
    Matrix matrix_;
};

/* ---------- morphism spaces ---------- */

/* Hom_A(x, y) as the exact solution space of the intertwining system;
 * vectors are row-major flattenings of (dim y) x (dim x) matrices. */
class HomSpace {
  public:
    HomSpace(Module source, Module target, Subspace space);

    std::size_t dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }
    const Module& source() const { return source_; }
    const Module& target() const { return target_; }

    ModuleMap basis_map(std::size_t r) const;
    ModuleMap map_from_coords(const Matrix& coeffs) const;  // dim() x 1
    std::optional<Matrix> coords_of(const ModuleMap& f) const;
    std::optional<Matrix> coords_of(const Matrix& raw) const;

  private:
    Module source_, target_;
    Subspace space_;
};

HomSpace hom_space(const Module& x, const Module& y);

/* greedy generating subset of the basis; intertwining with these implies
 * intertwining with the whole algebra */
std::vector<std::size_t> algebra_generators(const Algebra& a);

/* ---------- kernels, images, cokernels, sums ---------- */

struct SubmoduleResult {
    Module module;
    ModuleMap inclusion;
};

struct QuotientModuleResult {
    Module module;
    ModuleMap projection;
    Matrix section;  // linear (not module) splitting with projection*section = I
};

/* restriction of the ambient action to an invariant subspace */
SubmoduleResult restrict_action(const Module& ambient, const Subspace& sub);
QuotientModuleResult quotient_module(const Module& ambient, const Subspace& sub);

SubmoduleResult kernel_module(const ModuleMap& f);
SubmoduleResult image_module(const ModuleMap& f);
QuotientModuleResult cokernel_module(const ModuleMap& f);

struct DirectSumResult {
    Module module;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};
DirectSumResult direct_sum(const std::vector<Module>& parts);

/* smallest invariant subspace containing the seed */
Subspace invariant_closure(const Module& ambient, const Subspace& seed);
/* smallest submodule containing the given column vectors */
SubmoduleResult submodule_generated(const Module& ambient, const Matrix& vectors);

/* seeded-deterministic submodule of A^generators spanned by random vectors */
struct RandomModuleResult {
    Module module;
    Module ambient;
    ModuleMap inclusion;
};
RandomModuleResult random_module(const AlgebraPtr& a, std::size_t generators, std::uint64_t seed);

/* ---------- bimodules, tensor, Hom ---------- */

class Bimodule {
  public:
    /* left_action[i]: action of the i-th basis element of A;
     * right_action[j]: m |-> m * e_j for the j-th basis element of B */
    Bimodule(AlgebraPtr left_algebra, AlgebraPtr right_algebra, std::size_t dim,
             std::vector<Matrix> left_action, std::vector<Matrix> right_action);

    static Bimodule regular(const AlgebraPtr& a);  // A as A-A-bimodule
    static Bimodule zero(AlgebraPtr left_algebra, AlgebraPtr right_algebra);

    const AlgebraPtr& left_algebra() const { return left_.algebra(); }
    const AlgebraPtr& right_algebra() const { return right_algebra_; }
    std::size_t dim() const { return left_.dim(); }
    /* M as a left A-module / as a left B^op-module */
    const Module& left_module() const { return left_; }
    const Module& right_module() const { return right_; }
    const Matrix& left_action(std::size_t i) const { return left_.action(i); }
    const Matrix& right_action(std::size_t j) const { return right_.action(j); }

  private:
    Module left_;
    Module right_;
    AlgebraPtr right_algebra_;
};

CheckReport validate_bimodule(const Bimodule& m);

/* M tensor_B Y: quotient of the dim M * dim Y coordinate space (raw index
 * i*dimY + j for m_i (x) y_j) by the bimodule relations, with the induced
 * left A-action. Basis choice is canonical via quotient_basis. */
struct TensorResult {
    Module module;      // over the left algebra
    Matrix projection;  // dim module x (dim M * dim Y)
    Matrix section;     // (dim M * dim Y) x dim module
};
TensorResult tensor_over(const Bimodule& m, const Module& y);

/* functorial action M (x) g for g: Y -> Y'; the two tensor quotients are
 * recomputed canonically, or supplied when already at hand */
ModuleMap tensor_map(const Bimodule& m, const ModuleMap& g);
ModuleMap tensor_map(const Bimodule& m, const ModuleMap& g, const TensorResult& src, const TensorResult& tgt);

/* Hom_A(M, x) as a left B-module via (b.f)(m) = f(m b) */
struct HomModuleResult {
    Module module;  // over the right algebra of m
    HomSpace hom;   // carrier: basis of Hom_A(M, x)
};
HomModuleResult hom_module(const Bimodule& m, const Module& x);

/* ---------- free modules, projectivity, resolutions, Ext ---------- */

/* defaults honor TRIMOD_DIM_CAP and TRIMOD_LENGTH_CAP when set */
struct Limits {
    Limits();
    std::size_t dim_cap;
    std::size_t length_cap;
};

/* A^rank with the block-diagonal regular action; generator l is the unit
 * vector of block l. Maps out of a free module are free on generator
 * values, which the resolution and Ext machinery exploits throughout. */
class FreeModule {
  public:
    FreeModule(AlgebraPtr algebra, std::size_t rank);

    const Module& module() const { return module_; }
    std::size_t rank() const { return rank_; }
    const AlgebraPtr& algebra() const { return module_.algebra(); }

    Matrix generator(std::size_t l) const;
    /* module map to w with prescribed generator images (dim w x rank) */
    ModuleMap map_from_values(const Module& w, const Matrix& values) const;
    /* recover generator images of a map out of this free module */
    Matrix values_of(const ModuleMap& h) const;

  private:
    Module module_;
    std::size_t rank_;
};

struct FreeCover {
    FreeModule free;
    ModuleMap cover;     // surjection free -> x
    Matrix generators;   // chosen generating vectors of x (dim x rank)
};
/* cover built on a greedy generating subset of the standard basis */
FreeCover free_cover(const Module& x);
/* cover on all dim x basis vectors (a (x) b_i |-> a b_i) */
FreeCover free_cover_full(const Module& x);

/* basis of Hom(x, A^rank) assembled from rank copies of Hom(x, A) */
std::vector<ModuleMap> hom_into_free(const Module& x, const FreeModule& free);

struct ProjectivityResult {
    bool projective;
    ModuleMap cover;
    std::optional<ModuleMap> section;  // cover o section = id when projective
};
ProjectivityResult is_projective(const Module& x);

/* F_length -> ... -> F_0 -> x with every computed stage verified exact */
struct FreeResolution {
    Module target;
    std::vector<FreeModule> terms;
    std::vector<ModuleMap> differentials;  // differentials[i]: F_{i+1} -> F_i
    ModuleMap augmentation;                // F_0 -> x
};
FreeResolution free_resolution(const Module& x, std::size_t length, const Limits& limits = {});

struct ExtResult {
    std::size_t dim;
    std::vector<ModuleMap> basis;  // representative cocycles F_i -> w
};
ExtResult ext(const Module& x, const Module& w, std::size_t degree, const Limits& limits = {});

}  // namespace trimod
