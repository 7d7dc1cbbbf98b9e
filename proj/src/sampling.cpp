#include "trimod/sampling.hpp"

#include <random>

#include "trimod/recollement.hpp"

namespace trimod {

namespace {

Matrix random_coeffs(FieldSpec f, std::size_t n, std::mt19937_64& rng)
{
    Matrix c(f, n, 1);
    if (f.kind == FieldSpec::Kind::Rationals) {
        std::uniform_int_distribution<long> dist(-2, 2);
        for (std::size_t i = 0; i < n; ++i)
            c.set(i, 0, Rat(dist(rng)));
    } else {
        std::uniform_int_distribution<std::int64_t> dist(0, f.p - 1);
        for (std::size_t i = 0; i < n; ++i)
            c.set(i, 0, Rat(static_cast<long>(dist(rng))));
    }
    return c;
}

}  // namespace

std::vector<Triple> curated_triples(const ContextPtr& ctx)
{
    std::vector<Triple> out;
    out.push_back(Triple::zero(ctx));
    out.push_back(rec::i_lower(ctx, Module::regular(ctx->algebra_a())));
    out.push_back(rec::j_shriek(ctx, Module::regular(ctx->algebra_b())));
    out.push_back(rec::j_lower(ctx, Module::regular(ctx->algebra_b())));
    out.push_back(rec::i_question(ctx, Module::regular(ctx->algebra_a())));
    out.push_back(to_triple(Module::regular(ctx->lambda()), ctx).triple);
    return out;
}

std::vector<Triple> t2k_indecomposables(const ContextPtr& ctx)
{
    if (ctx->dim_a() != 1 || ctx->dim_b() != 1 || ctx->dim_m() != 1)
        throw validation_error("t2k_indecomposables expects T2 of the ground field");
    Module ka = Module::regular(ctx->algebra_a());
    Module kb = Module::regular(ctx->algebra_b());
    std::vector<Triple> out;
    out.push_back(rec::i_lower(ctx, ka));   // (k, 0)
    out.push_back(rec::j_lower(ctx, kb));   // (0, k)
    out.push_back(rec::j_shriek(ctx, kb));  // (k, k)_id
    return out;
}

Triple random_triple(const ContextPtr& ctx, std::uint64_t seed, std::size_t max_generators)
{
    std::mt19937_64 rng(seed);
    const std::size_t gx = 1 + rng() % max_generators;
    const std::size_t gy = 1 + rng() % max_generators;
    Module x = random_module(ctx->algebra_a(), gx, rng()).module;
    Module y = random_module(ctx->algebra_b(), gy, rng()).module;
    TensorResult t = tensor_over(ctx->bimodule(), y);
    HomSpace homs = hom_space(t.module, x);
    Matrix phi(x.field(), x.dim(), t.module.dim());
    if (homs.dim() > 0)
        phi = homs.map_from_coords(random_coeffs(x.field(), homs.dim(), rng)).matrix();
    return Triple(ctx, x, y, phi);
}

ModuleMap random_hom_element(const Module& x, const Module& y, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    HomSpace h = hom_space(x, y);
    if (h.dim() == 0)
        return ModuleMap::zero(x, y);
    return h.map_from_coords(random_coeffs(x.field(), h.dim(), rng));
}

TripleMap random_triple_hom_element(const Triple& s, const Triple& t, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    TripleHomSpace h = triple_hom_space(s, t);
    if (h.dim() == 0)
        return TripleMap::zero(s, t);
    return h.map_from_coords(random_coeffs(s.x().field(), h.dim(), rng));
}

SampleSet sample_abelian(const ContextPtr& ctx, const SampleConfig& config)
{
    SampleSet set;
    std::mt19937_64 rng(config.seed);

    for (const Triple& t : curated_triples(ctx)) {
        set.triples.push_back(t);
        set.inventory.push_back("curated triple (dim " + std::to_string(t.x().dim()) + ", " + std::to_string(t.y().dim()) + ")");
    }
    for (std::size_t i = 0; i < config.objects; ++i) {
        Triple t = random_triple(ctx, rng(), config.max_generators);
        set.inventory.push_back("random triple #" + std::to_string(i) + " (dim " + std::to_string(t.x().dim()) + ", " + std::to_string(t.y().dim()) + ")");
        set.triples.push_back(std::move(t));
    }

    set.a_modules.push_back(Module::zero(ctx->algebra_a()));
    set.a_modules.push_back(Module::regular(ctx->algebra_a()));
    set.b_modules.push_back(Module::zero(ctx->algebra_b()));
    set.b_modules.push_back(Module::regular(ctx->algebra_b()));
    for (std::size_t i = 0; i < config.objects / 2 + 1; ++i) {
        set.a_modules.push_back(random_module(ctx->algebra_a(), 1 + rng() % config.max_generators, rng()).module);
        set.b_modules.push_back(random_module(ctx->algebra_b(), 1 + rng() % config.max_generators, rng()).module);
    }
    set.inventory.push_back(std::to_string(set.a_modules.size()) + " A-modules, " + std::to_string(set.b_modules.size()) + " B-modules");

    for (std::size_t i = 0; i < config.maps; ++i) {
        const Triple& s = set.triples[rng() % set.triples.size()];
        const Triple& t = set.triples[rng() % set.triples.size()];
        set.triple_maps.push_back(random_triple_hom_element(s, t, rng()));
        const Module& ys = set.b_modules[rng() % set.b_modules.size()];
        const Module& yt = set.b_modules[rng() % set.b_modules.size()];
        set.b_maps.push_back(random_hom_element(ys, yt, rng()));
        const Module& xs = set.a_modules[rng() % set.a_modules.size()];
        const Module& xt = set.a_modules[rng() % set.a_modules.size()];
        set.a_maps.push_back(random_hom_element(xs, xt, rng()));
    }
    set.inventory.push_back(std::to_string(set.triple_maps.size()) + " triple maps, " + std::to_string(set.a_maps.size()) + " A-maps, " + std::to_string(set.b_maps.size()) + " B-maps");
    return set;
}

}  // namespace trimod
