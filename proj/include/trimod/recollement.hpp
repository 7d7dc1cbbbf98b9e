#pragma once

/* The eight additive functors between A-mod, Lambda-mod and B-mod, their
 * adjunctions with explicit mutually-inverse matrices, units/counits, and
 * the sample-based recollement axiom checker (R1, R2, R5 plus the exact
 * sequences of counit/unit and the two vanishing composites). */

#include <variant>

#include "trimod/report.hpp"
#include "trimod/triplecat.hpp"

namespace trimod {

struct SampleSet;
struct SampleConfig;

enum class FunctorTag {
    IUpper,     // i^*  : Lambda -> A,  (X,Y)_phi |-> Coker phi
    ILower,     // i_*  : A -> Lambda,  X |-> (X, 0)
    IShriek,    // i^!  : Lambda -> A,  (X,Y)_phi |-> X
    JShriek,    // j_!  : B -> Lambda,  Y |-> (M(x)Y, Y)_Id
    JUpper,     // j^*  : Lambda -> B,  (X,Y)_phi |-> Y
    JLower,     // j_*  : B -> Lambda,  Y |-> (0, Y)
    JQuestion,  // j_?  : Lambda -> B,  (X,Y)_phi |-> Ker alpha(phi)
    IQuestion,  // i_?  : A -> Lambda,  X |-> (X, Hom(M,X))_psi
};
std::string to_string(FunctorTag tag);
std::optional<FunctorTag> parse_functor_tag(const std::string& name);

namespace rec {

/* object maps */
QuotientModuleResult i_upper(const Triple& t);
Triple i_lower(const ContextPtr& ctx, const Module& x);
Module i_shriek(const Triple& t);
Triple j_shriek(const ContextPtr& ctx, const Module& y);
Module j_upper(const Triple& t);
Triple j_lower(const ContextPtr& ctx, const Module& y);
SubmoduleResult j_question(const Triple& t);
Triple i_question(const ContextPtr& ctx, const Module& x);

/* morphism maps */
ModuleMap i_upper_map(const TripleMap& tm);
TripleMap i_lower_map(const ContextPtr& ctx, const ModuleMap& f);
ModuleMap i_shriek_map(const TripleMap& tm);
TripleMap j_shriek_map(const ContextPtr& ctx, const ModuleMap& g);
ModuleMap j_upper_map(const TripleMap& tm);
TripleMap j_lower_map(const ContextPtr& ctx, const ModuleMap& g);
ModuleMap j_question_map(const TripleMap& tm);
TripleMap i_question_map(const ContextPtr& ctx, const ModuleMap& f);

}  // namespace rec

/* dynamic dispatch used by the CLI */
using RecObject = std::variant<Module, Triple>;
using RecMap = std::variant<ModuleMap, TripleMap>;
RecObject rec_apply(FunctorTag tag, const ContextPtr& ctx, const RecObject& input);
RecMap rec_apply_map(FunctorTag tag, const ContextPtr& ctx, const RecMap& input);

enum class AdjPair {
    IUpper_ILower,    // Hom_A(i^* T, X') ~ Hom_L(T, i_* X')
    ILower_IShriek,   // Hom_L(i_* X', T) ~ Hom_A(X', i^! T)
    JShriek_JUpper,   // Hom_L(j_! Y', T) ~ Hom_B(Y', j^* T)
    JUpper_JLower,    // Hom_B(j^* T, Y') ~ Hom_L(T, j_* Y')
    JLower_JQuestion, // Hom_L(j_* Y, T') ~ Hom_B(Y, j_? T')
    IShriek_IQuestion // Hom_A(i^! T, X') ~ Hom_L(T, i_? X')
};
std::string to_string(AdjPair pair);

/* explicit adjunction data at a pair of objects: coordinates of the two hom
 * spaces plus mutually inverse matrices between them */
struct AdjunctionWitness {
    AdjPair pair;
    std::size_t dim = 0;   // common hom dimension
    Matrix to_right;       // Hom(F c, d) coords -> Hom(c, G d) coords
    Matrix to_left;
    bool mutually_inverse = false;
};
/* c lives in the left adjoint's source category, d in its target */
AdjunctionWitness adjunction_iso(AdjPair pair, const ContextPtr& ctx, const RecObject& c, const RecObject& d);

/* unit c -> GF c and counit FG d -> d, built from the isomorphism at the
 * identity; triangle identities are verified exactly on the object */
struct NatWitness {
    AdjPair pair;
    RecMap component;
    bool is_iso = false;
    bool triangles_ok = false;
};
NatWitness unit_at(AdjPair pair, const ContextPtr& ctx, const RecObject& c);
NatWitness counit_at(AdjPair pair, const ContextPtr& ctx, const RecObject& d);

/* R1 (six adjunctions with naturality), R2 (fully faithful i_*, j_!, j_*,
 * i_?), R5 (Im i_* = Ker j^*), the two exact sequences of counits/units,
 * i^* j_! = 0 and i^! j_* = 0, and sampled functoriality */
CheckReport check_abelian_recollement(const ContextPtr& ctx, const SampleSet& samples);

/* explicit counterexample hunt: a triple in Ker i^* but not in Im j_!,
 * nonvanishing i^! j_!, and failure of left-exactness of j_! j^* -> Id */
CheckReport remark_witnesses(const ContextPtr& ctx, const SampleSet& samples);

}  // namespace trimod
