#pragma once

/* Stable categories modulo projectives over Gorenstein-projective objects:
 * stable Hom spaces, the shift (cosyzygy cokernel), the six stable functors
 * including the constructive right adjoint of the restriction to B, and the
 * stable recollement checker. Certification travels as a capability token:
 * stable operations refuse uncertified inputs rather than re-certifying. */

#include "trimod/gorenstein.hpp"
#include "trimod/sampling.hpp"

namespace trimod {

class CertifiedModule {
  public:
    static CertifiedModule certify(Module g, GorensteinContext ctx);
    /* wrap a module whose certification follows from a closure argument the
     * caller just verified (structural criterion or an embedding certificate) */
    static CertifiedModule trusted(Module g, GorensteinContext ctx);

    const Module& module() const { return module_; }
    const GorensteinContext& context() const { return ctx_; }

  private:
    CertifiedModule(Module g, GorensteinContext ctx) : module_(std::move(g)), ctx_(std::move(ctx)) {}
    Module module_;
    GorensteinContext ctx_;
};

class CertifiedTriple {
  public:
    static CertifiedTriple certify(Triple t, GorensteinContext ctx_a, GorensteinContext ctx_b);
    static CertifiedTriple trusted(Triple t, GorensteinContext ctx_a, GorensteinContext ctx_b);

    const Triple& triple() const { return triple_; }
    const GorensteinContext& context_a() const { return ctx_a_; }
    const GorensteinContext& context_b() const { return ctx_b_; }
    CertifiedModule x() const { return CertifiedModule::trusted(triple_.x(), ctx_a_); }
    CertifiedModule y() const { return CertifiedModule::trusted(triple_.y(), ctx_b_); }

  private:
    CertifiedTriple(Triple t, GorensteinContext a, GorensteinContext b)
        : triple_(std::move(t)), ctx_a_(std::move(a)), ctx_b_(std::move(b)) {}
    Triple triple_;
    GorensteinContext ctx_a_, ctx_b_;
};

/* ---------- stable hom spaces ---------- */

struct StableHomModule {
    HomSpace full;
    Subspace p_coords;       // coefficient span of maps factoring through a projective
    QuotientSpace quotient;  // of p_coords inside the coefficient space

    std::size_t stable_dim() const { return quotient.projection.rows(); }
    Matrix stable_coords(const ModuleMap& f) const;
    bool stably_zero(const ModuleMap& f) const;
};
StableHomModule stable_hom(const CertifiedModule& x, const CertifiedModule& y);
/* same subspace from a caller-chosen cover of y; used to check independence */
StableHomModule stable_hom_with_cover(const CertifiedModule& x, const CertifiedModule& y, const FreeCover& cover);

struct StableHomTriple {
    TripleHomSpace full;
    Subspace p_coords;
    QuotientSpace quotient;

    std::size_t stable_dim() const { return quotient.projection.rows(); }
    Matrix stable_coords(const TripleMap& f) const;
    bool stably_zero(const TripleMap& f) const;
};
StableHomTriple stable_hom(const CertifiedTriple& x, const CertifiedTriple& y);

struct Factorization {
    bool factors = false;
    std::optional<ModuleMap> lift;   // x -> F with cover o lift = f
    std::optional<ModuleMap> cover;  // F -> y
};
Factorization factors_through_projective(const ModuleMap& f);

/* ---------- shift ---------- */

struct ShiftResult {
    CertifiedModule shifted;
    EmbeddingResult embedding;
};
ShiftResult shift(const CertifiedModule& g, std::size_t pad = 0);

/* ---------- the six stable functors ---------- */

/* the triangular context together with the two Gorenstein contexts the
 * stable machinery certifies against */
struct StableContext {
    ContextPtr triangular;
    GorensteinContext a, b;
};

CertifiedModule stable_i_upper(const StableContext& sc, const CertifiedTriple& t);  // Coker phi
CertifiedTriple stable_i_lower(const StableContext& sc, const CertifiedModule& x);
CertifiedModule stable_i_shriek(const StableContext& sc, const CertifiedTriple& t);  // X
CertifiedTriple stable_j_shriek(const StableContext& sc, const CertifiedModule& y);
CertifiedModule stable_j_upper(const StableContext& sc, const CertifiedTriple& t);  // Y

struct StableJLower {
    CertifiedTriple triple;     // (P, Y)_sigma
    EmbeddingResult embedding;  // sigma: M (x) Y -> P with Gproj cokernel
};
StableJLower stable_j_lower(const StableContext& sc, const CertifiedModule& y);
/* morphism map of the right adjoint: a lift f with f sigma = sigma' (M(x)g);
 * any two lifts differ by a map factoring through a projective */
TripleMap stable_j_lower_map(const StableContext& sc, const ModuleMap& g, const StableJLower& src, const StableJLower& tgt);

RecObject stable_apply(FunctorTag tag, const StableContext& sc, const RecObject& input);

/* ---------- triangles and isomorphism testing ---------- */

struct FirstTriangle {
    CertifiedTriple left;   // j_! j^* t
    CertifiedTriple right;  // i_* i^* t
    TripleMap into;         // j_!j^*t -> t
    TripleMap out;          // t -> i_*i^*t
    bool exact = false;
};
FirstTriangle first_triangle(const CertifiedTriple& t);

enum class IsoVerdict { Yes, No, Unknown };

struct StableIsoResult {
    IsoVerdict verdict = IsoVerdict::Unknown;
    std::string reason;
    std::optional<std::pair<RecMap, RecMap>> witnesses;  // u: x->y and v: y->x, mutually inverse modulo projectives
};
StableIsoResult stable_iso_check(const CertifiedModule& x, const CertifiedModule& y, std::uint64_t seed = 1, std::size_t budget = 64);
StableIsoResult stable_iso_check(const CertifiedTriple& x, const CertifiedTriple& y, std::uint64_t seed = 1, std::size_t budget = 64);

/* ---------- the stable recollement checker ---------- */

struct StableSampleSet {
    std::vector<CertifiedTriple> triples;
    std::vector<CertifiedModule> a_modules;
    std::vector<CertifiedModule> b_modules;
    std::vector<std::string> inventory;
};
StableSampleSet sample_stable(const StableContext& sc, const SampleConfig& config);

CheckReport check_stable_recollement(const StableContext& sc, const StableSampleSet& samples);

}  // namespace trimod
