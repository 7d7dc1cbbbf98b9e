#pragma once

/* One self-describing workspace document holds the field, algebras,
 * bimodules, triangular contexts, modules, triples, maps and declared
 * injective dimensions. Triples cross-reference algebras and bimodules by
 * name, so dangling references surface at parse time, and emission is
 * canonical: sorted keys, lowest-terms scalars, fixed indentation. */

#include <map>
#include <string>

#include "trimod/triplecat.hpp"

namespace trimod {

struct Workspace {
    FieldSpec field;
    std::map<std::string, AlgebraPtr> algebras;

    struct BimoduleEntry {
        std::string left, right;
        Bimodule value;
    };
    std::map<std::string, BimoduleEntry> bimodules;

    struct ContextEntry {
        std::string a, b, m;
        ContextPtr value;
    };
    std::map<std::string, ContextEntry> contexts;  // the Lambda of context L is the algebra named L

    struct ModuleEntry {
        std::string algebra;
        Module value;
    };
    std::map<std::string, ModuleEntry> modules;

    struct TripleEntry {
        std::string context, x, y;
        Triple value;
    };
    std::map<std::string, TripleEntry> triples;

    struct MapEntry {
        std::string source, target;
        ModuleMap value;
    };
    std::map<std::string, MapEntry> maps;

    std::map<std::string, std::pair<std::size_t, std::size_t>> injdim;  // declared (left, right)

    AlgebraPtr find_algebra(const std::string& name) const;
    const ContextEntry& find_context(const std::string& name) const;
};

Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);
std::string emit_workspace(const Workspace& ws);
void save_workspace(const Workspace& ws, const std::string& path);  // write-temp then rename

/* matrix <-> canonical json fragment helpers shared with report emission */
std::string matrix_to_json_string(const Matrix& m);

}  // namespace trimod
