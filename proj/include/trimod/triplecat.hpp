#pragma once

/* The triangular matrix algebra Lambda = [[A, M],[0, B]] and the
 * identification of Lambda-modules with triples (X, Y, phi: M (x)_B Y -> X).
 * The Lambda basis is ordered (A-part, M-part, B-part) and every
 * triple <-> module conversion depends on that ordering. */

#include "trimod/modrep.hpp"

namespace trimod {

class TriangularContext {
  public:
    TriangularContext(AlgebraPtr a, AlgebraPtr b, Bimodule m);

    const AlgebraPtr& algebra_a() const { return a_; }
    const AlgebraPtr& algebra_b() const { return b_; }
    const Bimodule& bimodule() const { return m_; }
    const AlgebraPtr& lambda() const { return lambda_; }

    std::size_t dim_a() const { return a_->dim(); }
    std::size_t dim_m() const { return m_.dim(); }
    std::size_t dim_b() const { return b_->dim(); }
    std::size_t offset_a() const { return 0; }
    std::size_t offset_m() const { return a_->dim(); }
    std::size_t offset_b() const { return a_->dim() + m_.dim(); }

    Matrix embed_a(const Matrix& v) const;
    Matrix embed_m(const Matrix& v) const;
    Matrix embed_b(const Matrix& v) const;
    Matrix idempotent_a() const { return embed_a(a_->unit()); }
    Matrix idempotent_b() const { return embed_b(b_->unit()); }

    bool operator==(const TriangularContext& o) const;

  private:
    AlgebraPtr a_, b_;
    Bimodule m_;
    AlgebraPtr lambda_;
};

using ContextPtr = std::shared_ptr<const TriangularContext>;

ContextPtr build_triangular(AlgebraPtr a, AlgebraPtr b, Bimodule m);

/* (X, Y, phi); phi is stored on the canonical tensor quotient basis of
 * M (x)_B Y, never on the raw m (x) y basis */
class Triple {
  public:
    Triple() = default;
    Triple(ContextPtr ctx, Module x, Module y, Matrix phi_matrix);

    static Triple zero(const ContextPtr& ctx);

    const ContextPtr& ctx() const { return d_->ctx; }
    const Module& x() const { return d_->x; }
    const Module& y() const { return d_->y; }
    const TensorResult& tensor() const { return d_->tensor; }
    const ModuleMap& phi() const { return d_->phi; }
    std::size_t total_dim() const { return d_->x.dim() + d_->y.dim(); }

    bool operator==(const Triple& o) const;

  private:
    struct Data {
        ContextPtr ctx;
        Module x, y;
        TensorResult tensor;
        ModuleMap phi;
    };
    std::shared_ptr<const Data> d_;
};

CheckReport validate_triple(const Triple& t);

class TripleMap {
  public:
    TripleMap() = default;
    TripleMap(Triple source, Triple target, ModuleMap f, ModuleMap g);
    TripleMap(Triple source, Triple target, Matrix f, Matrix g);

    static TripleMap identity(const Triple& t);
    static TripleMap zero(Triple source, Triple target);

    const Triple& source() const { return source_; }
    const Triple& target() const { return target_; }
    const ModuleMap& f() const { return f_; }
    const ModuleMap& g() const { return g_; }

    /* phi' o (Id (x) g) - f o phi; zero iff the compatibility square commutes */
    Matrix residual() const;
    bool is_valid() const { return f_.intertwines() && g_.intertwines() && residual().is_zero(); }
    bool is_iso() const { return f_.is_iso() && g_.is_iso(); }
    std::optional<TripleMap> inverse() const;

    TripleMap compose(const TripleMap& inner) const;
    TripleMap operator+(const TripleMap& o) const;
    TripleMap operator-(const TripleMap& o) const;

  private:
    Triple source_, target_;
    ModuleMap f_, g_;
};

CheckReport validate_triple_map(const TripleMap& tm);

/* Hom of triples: pairs (F, G), both intertwining, satisfying the square.
 * Coordinates: row-major vec of F followed by row-major vec of G. */
class TripleHomSpace {
  public:
    TripleHomSpace(Triple source, Triple target, Subspace space);

    std::size_t dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }
    const Triple& source() const { return source_; }
    const Triple& target() const { return target_; }

    TripleMap basis_map(std::size_t r) const;
    TripleMap map_from_coords(const Matrix& coeffs) const;
    std::optional<Matrix> coords_of(const TripleMap& tm) const;

  private:
    Triple source_, target_;
    Subspace space_;
};

TripleHomSpace triple_hom_space(const Triple& s, const Triple& t);

struct TripleSumResult {
    Triple triple;
    std::vector<TripleMap> injections;
    std::vector<TripleMap> projections;
};
TripleSumResult direct_sum_triples(const std::vector<Triple>& parts);

/* componentwise kernel and cokernel with the induced phi */
struct TripleKernelResult {
    Triple triple;
    TripleMap inclusion;
};
TripleKernelResult triple_kernel(const TripleMap& m);

struct TripleCokernelResult {
    Triple triple;
    TripleMap projection;
};
TripleCokernelResult triple_cokernel(const TripleMap& m);

/* ---------- the adjunction isomorphism alpha and the counit psi ---------- */

/* alpha_{X,Y}: Hom_A(M (x) Y, X) <-> Hom_B(Y, Hom_A(M, X)), with explicit
 * mutually inverse matrices between the two canonical hom bases */
struct AlphaResult {
    TensorResult tensor;      // M (x) Y
    HomModuleResult hom_mx;   // Hom_A(M, X) as a B-module
    HomSpace left;            // Hom_A(M (x) Y, X)
    HomSpace right;           // Hom_B(Y, Hom_A(M, X))
    Matrix forward;           // right coords x left coords
    Matrix backward;          // left coords x right coords
};
AlphaResult alpha(const Module& x, const Module& y, const Bimodule& m);

/* alpha applied to a concrete phi: the B-map Y -> Hom_A(M, X) */
ModuleMap alpha_apply(const AlphaResult& ar, const ModuleMap& phi);

/* psi_X: M (x) Hom_A(M, X) -> X, m (x) f |-> f(m); satisfies alpha(psi) = Id */
struct PsiResult {
    HomModuleResult hom_mx;
    TensorResult tensor;
    ModuleMap map;
};
PsiResult psi(const Module& x, const Bimodule& m);

/* ---------- the equivalence Lambda-mod <-> triples ---------- */

struct TripleOfModule {
    Triple triple;
    Matrix incl_x, proj_x;  // X inside the carrier of z
    Matrix incl_y, proj_y;
};
/* refuses modules over an algebra that is not the registered Lambda */
TripleOfModule to_triple(const Module& z, const ContextPtr& ctx);

Module from_triple(const Triple& t);

/* the canonical comparison from_triple(to_triple(z)) -> z */
ModuleMap equivalence_iso(const TripleOfModule& decomposed, const Module& z);

/* transport of maps across the identification */
TripleMap to_triple_map(const ModuleMap& h, const TripleOfModule& src, const TripleOfModule& tgt);
ModuleMap from_triple_map(const TripleMap& tm, const Module& src_module, const Module& tgt_module);

}  // namespace trimod
