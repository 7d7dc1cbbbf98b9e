#pragma once

/* Seeded, deterministic object and morphism samplers. Axiom checking is
 * sample-based: the checkers receive explicit object/morphism inventories
 * produced here, and reports list what was sampled. */

#include <cstdint>

#include "trimod/triplecat.hpp"

namespace trimod {

struct SampleConfig {
    std::size_t objects = 8;       // random triples
    std::size_t maps = 8;          // random morphisms between sampled triples
    std::uint64_t seed = 1;
    std::size_t max_generators = 2;
};

struct SampleSet {
    std::vector<Triple> triples;
    std::vector<Module> a_modules;
    std::vector<Module> b_modules;
    std::vector<TripleMap> triple_maps;
    std::vector<ModuleMap> a_maps;
    std::vector<ModuleMap> b_maps;
    std::vector<std::string> inventory;
};

/* the structural triples of a context: zero, i_*(A), j_!(B), j_*(B), i_?(A)
 * and the regular module of Lambda seen as a triple */
std::vector<Triple> curated_triples(const ContextPtr& ctx);

/* the three indecomposables of T2(k): (k,0), (0,k) and (k,k)_id */
std::vector<Triple> t2k_indecomposables(const ContextPtr& ctx);

/* random triple: random modules X, Y and a random phi in Hom(M (x) Y, X) */
Triple random_triple(const ContextPtr& ctx, std::uint64_t seed, std::size_t max_generators = 2);

/* random element of the hom space between two sampled objects */
ModuleMap random_hom_element(const Module& x, const Module& y, std::uint64_t seed);
TripleMap random_triple_hom_element(const Triple& s, const Triple& t, std::uint64_t seed);

SampleSet sample_abelian(const ContextPtr& ctx, const SampleConfig& config);

}  // namespace trimod
