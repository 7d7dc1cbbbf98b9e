/* Command surface: workspace validation, triangular-algebra construction,
 * functor application at the abelian and stable levels, the two
 * Gorenstein-projectivity tests, stable hom dimensions, the recollement
 * checkers and the counterexample hunt. Exit codes: parse errors 2,
 * validation failures 3, failed checks 4, inconclusive 5, resource caps 6. */

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "trimod/gorenstein.hpp"
#include "trimod/stablecat.hpp"
#include "trimod/workspace.hpp"

namespace {

using namespace trimod;

constexpr const char* kVersion = "trimod 1.0.0";

GorensteinContext context_for(const Workspace& ws, const std::string& name, const AlgebraPtr& alg, std::optional<std::size_t> injdim_flag)
{
    if (injdim_flag)
        return declared_injdim(alg, *injdim_flag, *injdim_flag);
    auto it = ws.injdim.find(name);
    if (it != ws.injdim.end())
        return declared_injdim(alg, it->second.first, it->second.second);
    GorensteinContext ctx = injective_dimension(alg);
    if (!ctx.usable())
        throw inconclusive_error("injective dimension of '" + name + "' did not settle below the cap; pass --injdim");
    return ctx;
}

StableContext stable_context_for(const Workspace& ws, const std::string& context_name, std::optional<std::size_t> injdim_flag)
{
    const Workspace::ContextEntry& c = ws.find_context(context_name);
    return StableContext{c.value, context_for(ws, c.a, c.value->algebra_a(), injdim_flag),
                         context_for(ws, c.b, c.value->algebra_b(), injdim_flag)};
}

std::string algebra_name_of(const Workspace& ws, const AlgebraPtr& alg)
{
    for (const auto& [name, a] : ws.algebras)
        if (*a == *alg)
            return name;
    throw validation_error("result algebra is not present in the workspace");
}

void write_report(const CheckReport& report, const std::string& path, bool stable_output)
{
    const std::string text = report.to_json(stable_output);
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path, std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::Usage, "cannot write report to '" + path + "'");
        out << text;
    }
    std::cerr << report.summary_lines();
}

void store_result(Workspace& ws, const std::string& as, const std::string& context_name, const RecObject& result)
{
    if (std::holds_alternative<Module>(result)) {
        const Module& m = std::get<Module>(result);
        ws.modules[as] = Workspace::ModuleEntry{algebra_name_of(ws, m.algebra()), m};
        return;
    }
    const Triple& t = std::get<Triple>(result);
    const std::string xn = as + ".x", yn = as + ".y";
    ws.modules[xn] = Workspace::ModuleEntry{algebra_name_of(ws, t.x().algebra()), t.x()};
    ws.modules[yn] = Workspace::ModuleEntry{algebra_name_of(ws, t.y().algebra()), t.y()};
    ws.triples[as] = Workspace::TripleEntry{context_name, xn, yn, t};
}

int run(int argc, char** argv)
{
    CLI::App app{"exact recollement toolkit for modules over triangular matrix algebras"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string in_path, out_path, report_path, context_name, input_name, as_name = "result";
    std::string functor_name, level = "abelian", method = "both";
    std::string x_name, y_name, witness_kind;
    std::size_t samples = 8;
    std::uint64_t seed = 1;
    bool stable_output = false;
    std::optional<std::size_t> injdim_flag;

    auto add_common = [&](CLI::App* cmd, bool needs_in = true) {
        if (needs_in)
            cmd->add_option("--in", in_path, "workspace file")->required();
        cmd->add_flag("--stable-output", stable_output, "zero the timing fields in reports");
    };

    CLI::App* validate = app.add_subcommand("validate", "run all structural validators on a workspace");
    validate->add_option("file", in_path, "workspace file")->required();

    CLI::App* build = app.add_subcommand("build-lambda", "build a triangular matrix algebra and register the context");
    add_common(build);
    build->add_option("--a", x_name, "name of A")->required();
    build->add_option("--b", y_name, "name of B")->required();
    build->add_option("--m", functor_name, "name of the bimodule")->required();
    build->add_option("--name", as_name, "name for the new context")->required();
    build->add_option("-o,--out", out_path, "output workspace")->required();

    CLI::App* apply = app.add_subcommand("apply", "apply one of the recollement functors to a stored object");
    add_common(apply);
    apply->add_option("--functor", functor_name, "functor tag (i_upper, i_lower, i_shriek, j_shriek, j_upper, j_lower, j_question, i_question)")->required();
    apply->add_option("--level", level, "abelian or stable")->check(CLI::IsMember({"abelian", "stable"}));
    apply->add_option("--input", input_name, "name of the module or triple")->required();
    apply->add_option("--context", context_name, "triangular context")->required();
    apply->add_option("--as", as_name, "name for the stored image");
    apply->add_option("-o,--out", out_path, "output workspace")->required();
    apply->add_option("--injdim", injdim_flag, "declared injective dimension (stable level)");

    CLI::App* gproj = app.add_subcommand("gproj", "decide Gorenstein-projectivity");
    add_common(gproj);
    gproj->add_option("--input", input_name, "name of the module or triple")->required();
    gproj->add_option("--method", method, "perp, triple or both")->check(CLI::IsMember({"perp", "triple", "both"}));
    gproj->add_option("--context", context_name, "triangular context (for triples)");
    gproj->add_option("--injdim", injdim_flag, "declared injective dimension");

    CLI::App* shom = app.add_subcommand("stable-hom", "dimensions of Hom, its projective part and the stable quotient");
    add_common(shom);
    shom->add_option("x", x_name, "source object name")->required();
    shom->add_option("y", y_name, "target object name")->required();
    shom->add_option("--context", context_name, "triangular context (for triples)");
    shom->add_option("--injdim", injdim_flag, "declared injective dimension");

    CLI::App* checkrec = app.add_subcommand("check-recollement", "verify the recollement axioms on seeded samples");
    add_common(checkrec);
    checkrec->add_option("--level", level, "abelian or stable")->check(CLI::IsMember({"abelian", "stable"}));
    checkrec->add_option("--context", context_name, "triangular context")->required();
    checkrec->add_option("--samples", samples, "number of random sample objects");
    checkrec->add_option("--seed", seed, "sampler seed");
    checkrec->add_option("--report", report_path, "write the report to this file");
    checkrec->add_option("--injdim", injdim_flag, "declared injective dimension (stable level)");

    CLI::App* witness = app.add_subcommand("witness", "hunt for the documented counterexamples");
    add_common(witness);
    witness->add_option("kind", witness_kind, "witness family (remark-2.6)")->required()->check(CLI::IsMember({"remark-2.6"}));
    witness->add_option("--context", context_name, "triangular context")->required();
    witness->add_option("--samples", samples, "number of random sample objects");
    witness->add_option("--seed", seed, "sampler seed");
    witness->add_option("--report", report_path, "write the report to this file");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        load_workspace(in_path);
        std::cout << "workspace is valid\n";
        return 0;
    }

    if (build->parsed()) {
        Workspace ws = load_workspace(in_path);
        auto bit = ws.bimodules.find(functor_name);
        if (bit == ws.bimodules.end())
            throw validation_error("unknown bimodule '" + functor_name + "'");
        if (ws.contexts.count(as_name) || ws.algebras.count(as_name))
            throw validation_error("name '" + as_name + "' is already taken");
        ContextPtr ctx = build_triangular(ws.find_algebra(x_name), ws.find_algebra(y_name), bit->second.value);
        ws.algebras.emplace(as_name, ctx->lambda());
        ws.contexts.emplace(as_name, Workspace::ContextEntry{x_name, y_name, functor_name, ctx});
        save_workspace(ws, out_path);
        std::cout << "registered context '" << as_name << "' with Lambda of dimension " << ctx->lambda()->dim() << "\n";
        return 0;
    }

    if (apply->parsed()) {
        Workspace ws = load_workspace(in_path);
        auto tag = parse_functor_tag(functor_name);
        if (!tag)
            throw validation_error("unknown functor tag '" + functor_name + "'");
        const Workspace::ContextEntry& ctx = ws.find_context(context_name);
        RecObject input = [&]() -> RecObject {
            if (auto it = ws.modules.find(input_name); it != ws.modules.end())
                return RecObject(it->second.value);
            if (auto it = ws.triples.find(input_name); it != ws.triples.end())
                return RecObject(it->second.value);
            throw validation_error("no module or triple named '" + input_name + "'");
        }();
        RecObject image = level == "abelian" ? rec_apply(*tag, ctx.value, input)
                                             : stable_apply(*tag, stable_context_for(ws, context_name, injdim_flag), input);
        store_result(ws, as_name, context_name, image);
        save_workspace(ws, out_path);
        if (std::holds_alternative<Module>(image))
            std::cout << "stored module '" << as_name << "' of dimension " << std::get<Module>(image).dim() << "\n";
        else
            std::cout << "stored triple '" << as_name << "' with dimensions (" << std::get<Triple>(image).x().dim() << ", "
                      << std::get<Triple>(image).y().dim() << ")\n";
        return 0;
    }

    if (gproj->parsed()) {
        Workspace ws = load_workspace(in_path);
        auto conditional_note = [](const GorensteinContext& gc) {
            return gc.mode == GorensteinContext::Mode::UserDeclared ? " (conditional on the declared inj.dim)" : "";
        };
        if (auto it = ws.modules.find(input_name); it != ws.modules.end()) {
            const Module& m = it->second.value;
            GorensteinContext gc = context_for(ws, it->second.algebra, m.algebra(), injdim_flag);
            GprojVerdict v = is_gproj_perp(m, gc);
            std::cout << "perp verdict: " << (v.gproj ? "Gorenstein-projective" : "not Gorenstein-projective") << conditional_note(gc) << "\n";
            return 0;
        }
        auto it = ws.triples.find(input_name);
        if (it == ws.triples.end())
            throw validation_error("no module or triple named '" + input_name + "'");
        const Workspace::TripleEntry& te = it->second;
        const Workspace::ContextEntry& ce = ws.find_context(te.context);
        GorensteinContext ca = context_for(ws, ce.a, ce.value->algebra_a(), injdim_flag);
        GorensteinContext cb = context_for(ws, ce.b, ce.value->algebra_b(), injdim_flag);
        bool structural = false, perp = false;
        if (method == "triple" || method == "both") {
            TripleGprojVerdict v = is_gproj_triple(te.value, ca, cb);
            structural = v.gproj;
            std::cout << "triple verdict: " << v.summary() << conditional_note(ca) << "\n";
        }
        if (method == "perp" || method == "both") {
            GorensteinContext cl = context_for(ws, te.context, ce.value->lambda(), injdim_flag);
            perp = is_gproj_perp(from_triple(te.value), cl).gproj;
            std::cout << "perp verdict over Lambda: " << (perp ? "Gorenstein-projective" : "not Gorenstein-projective") << conditional_note(cl) << "\n";
        }
        if (method == "both") {
            const bool agree = structural == perp;
            std::cout << (agree ? "the two routes agree" : "DISAGREEMENT between the two routes") << "\n";
            return agree ? 0 : 4;
        }
        return 0;
    }

    if (shom->parsed()) {
        Workspace ws = load_workspace(in_path);
        auto xm = ws.modules.find(x_name);
        auto ym = ws.modules.find(y_name);
        if (xm != ws.modules.end() && ym != ws.modules.end()) {
            GorensteinContext gc = context_for(ws, xm->second.algebra, xm->second.value.algebra(), injdim_flag);
            StableHomModule s = stable_hom(CertifiedModule::certify(xm->second.value, gc), CertifiedModule::certify(ym->second.value, gc));
            std::cout << "dim Hom = " << s.full.dim() << ", dim P = " << s.p_coords.dim() << ", stable dim = " << s.stable_dim() << "\n";
            return 0;
        }
        auto xt = ws.triples.find(x_name);
        auto yt = ws.triples.find(y_name);
        if (xt == ws.triples.end() || yt == ws.triples.end())
            throw validation_error("arguments must both be modules or both be triples");
        StableContext sc = stable_context_for(ws, xt->second.context, injdim_flag);
        StableHomTriple s = stable_hom(CertifiedTriple::certify(xt->second.value, sc.a, sc.b),
                                       CertifiedTriple::certify(yt->second.value, sc.a, sc.b));
        std::cout << "dim Hom = " << s.full.dim() << ", dim P = " << s.p_coords.dim() << ", stable dim = " << s.stable_dim() << "\n";
        return 0;
    }

    if (checkrec->parsed()) {
        Workspace ws = load_workspace(in_path);
        const Workspace::ContextEntry& ce = ws.find_context(context_name);
        SampleConfig cfg;
        cfg.objects = samples;
        cfg.maps = samples;
        cfg.seed = seed;
        CheckReport report;
        const auto started = std::chrono::steady_clock::now();
        if (level == "abelian") {
            report = check_abelian_recollement(ce.value, sample_abelian(ce.value, cfg));
        } else {
            StableContext sc = stable_context_for(ws, context_name, injdim_flag);
            report = check_stable_recollement(sc, sample_stable(sc, cfg));
        }
        report.tool_version = kVersion;
        report.seed = seed;
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        report.add_timed("total", report.all_passed() ? CheckStatus::Pass : CheckStatus::Fail,
                         std::to_string(report.records.size()) + " records", "summary", ms);
        write_report(report, report_path, stable_output);
        return report.all_passed() ? 0 : 4;
    }

    if (witness->parsed()) {
        Workspace ws = load_workspace(in_path);
        const Workspace::ContextEntry& ce = ws.find_context(context_name);
        SampleConfig cfg;
        cfg.objects = samples;
        cfg.maps = 0;
        cfg.seed = seed;
        CheckReport report = remark_witnesses(ce.value, sample_abelian(ce.value, cfg));
        report.tool_version = kVersion;
        report.seed = seed;
        write_report(report, report_path, stable_output);
        return report.fail_count() == 0 ? 0 : 4;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 7;
    }
}
