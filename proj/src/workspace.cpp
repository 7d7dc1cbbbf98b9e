#include "trimod/workspace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trimod {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "trimod-workspace/1";

[[noreturn]] void fail_parse(const std::string& text, std::size_t byte, const std::string& expected)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw parse_error(line, col, expected);
}

json matrix_to_json(const Matrix& m)
{
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            data.push_back(m.get(i, c).str());
    j["data"] = std::move(data);
    return j;
}

Matrix matrix_from_json(const json& j, FieldSpec field, const std::string& where)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw validation_error(where + ": matrix needs rows, cols and data");
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const json& data = j.at("data");
    if (!data.is_array() || data.size() != rows * cols)
        throw validation_error(where + ": matrix data length differs from rows*cols");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(i, c, Rat::from_string(data.at(i * cols + c).get<std::string>()));
    return m;
}

json matrices_to_json(const std::vector<Matrix>& ms)
{
    json j = json::array();
    for (const Matrix& m : ms)
        j.push_back(matrix_to_json(m));
    return j;
}

std::vector<Matrix> matrices_from_json(const json& j, FieldSpec field, const std::string& where)
{
    if (!j.is_array())
        throw validation_error(where + ": expected an array of matrices");
    std::vector<Matrix> out;
    for (const json& item : j)
        out.push_back(matrix_from_json(item, field, where));
    return out;
}

std::string first_failure(const CheckReport& r)
{
    for (const CheckRecord& rec : r.records)
        if (rec.status == CheckStatus::Fail)
            return rec.name + " (" + rec.witness + ")";
    return "unknown";
}

}  // namespace

std::string matrix_to_json_string(const Matrix& m) { return matrix_to_json(m).dump(); }

AlgebraPtr Workspace::find_algebra(const std::string& name) const
{
    auto it = algebras.find(name);
    if (it == algebras.end())
        throw validation_error("unknown algebra '" + name + "'");
    return it->second;
}

const Workspace::ContextEntry& Workspace::find_context(const std::string& name) const
{
    auto it = contexts.find(name);
    if (it == contexts.end())
        throw validation_error("unknown triangular context '" + name + "'");
    return it->second;
}

Workspace parse_workspace(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_parse(text, e.byte > 0 ? e.byte - 1 : 0, "well-formed JSON (" + std::string(e.what()) + ")");
    }
    if (!doc.is_object() || doc.value("format", "") != kFormat)
        throw validation_error(std::string("workspace format marker must be '") + kFormat + "'");

    Workspace ws;
    const json& jf = doc.at("field");
    const std::string kind = jf.value("kind", "");
    if (kind == "rationals")
        ws.field = FieldSpec::rationals();
    else if (kind == "prime")
        ws.field = FieldSpec::prime(jf.at("p").get<std::int64_t>());
    else
        throw validation_error("field.kind must be 'rationals' or 'prime'");

    const json j_algebras = doc.value("algebras", json::object());
    for (const auto& [name, ja] : j_algebras.items()) {
        std::vector<Matrix> table = matrices_from_json(ja.at("table"), ws.field, "algebra " + name);
        Matrix unit = matrix_from_json(ja.at("unit"), ws.field, "algebra " + name + " unit");
        AlgebraPtr alg = std::make_shared<Algebra>(ws.field, std::move(table), std::move(unit));
        CheckReport r = validate_algebra(*alg);
        if (!r.all_passed())
            throw validation_error("algebra " + name + " failed validation: " + first_failure(r));
        ws.algebras.emplace(name, std::move(alg));
    }

    const json j_bimodules = doc.value("bimodules", json::object());
    for (const auto& [name, jm] : j_bimodules.items()) {
        const std::string left = jm.at("left").get<std::string>();
        const std::string right = jm.at("right").get<std::string>();
        Bimodule m(ws.find_algebra(left), ws.find_algebra(right), jm.at("dim").get<std::size_t>(),
                   matrices_from_json(jm.at("left_action"), ws.field, "bimodule " + name),
                   matrices_from_json(jm.at("right_action"), ws.field, "bimodule " + name));
        CheckReport r = validate_bimodule(m);
        if (!r.all_passed())
            throw validation_error("bimodule " + name + " failed validation: " + first_failure(r));
        ws.bimodules.emplace(name, Workspace::BimoduleEntry{left, right, std::move(m)});
    }

    const json j_contexts = doc.value("contexts", json::object());
    for (const auto& [name, jc] : j_contexts.items()) {
        const std::string a = jc.at("a").get<std::string>();
        const std::string b = jc.at("b").get<std::string>();
        const std::string m = jc.at("m").get<std::string>();
        auto bit = ws.bimodules.find(m);
        if (bit == ws.bimodules.end())
            throw validation_error("context " + name + " references unknown bimodule '" + m + "'");
        ContextPtr ctx = build_triangular(ws.find_algebra(a), ws.find_algebra(b), bit->second.value);
        if (ws.algebras.count(name))
            throw validation_error("context name '" + name + "' collides with an algebra name");
        ws.algebras.emplace(name, ctx->lambda());  // the Lambda is addressable by the context name
        ws.contexts.emplace(name, Workspace::ContextEntry{a, b, m, std::move(ctx)});
    }

    const json j_modules = doc.value("modules", json::object());
    for (const auto& [name, jm] : j_modules.items()) {
        const std::string alg_name = jm.at("algebra").get<std::string>();
        Module m(ws.find_algebra(alg_name), jm.at("dim").get<std::size_t>(),
                 matrices_from_json(jm.at("action"), ws.field, "module " + name));
        CheckReport r = validate_module(m);
        if (!r.all_passed())
            throw validation_error("module " + name + " failed validation: " + first_failure(r));
        ws.modules.emplace(name, Workspace::ModuleEntry{alg_name, std::move(m)});
    }

    const json j_triples = doc.value("triples", json::object());
    for (const auto& [name, jt] : j_triples.items()) {
        const std::string cname = jt.at("context").get<std::string>();
        const std::string xname = jt.at("x").get<std::string>();
        const std::string yname = jt.at("y").get<std::string>();
        const Workspace::ContextEntry& ctx = ws.find_context(cname);
        auto xit = ws.modules.find(xname), yit = ws.modules.find(yname);
        if (xit == ws.modules.end() || yit == ws.modules.end())
            throw validation_error("triple " + name + " references unknown modules");
        Triple t(ctx.value, xit->second.value, yit->second.value, matrix_from_json(jt.at("phi"), ws.field, "triple " + name));
        CheckReport r = validate_triple(t);
        if (!r.all_passed())
            throw validation_error("triple " + name + " failed validation: " + first_failure(r));
        ws.triples.emplace(name, Workspace::TripleEntry{cname, xname, yname, std::move(t)});
    }

    const json j_maps = doc.value("maps", json::object());
    for (const auto& [name, jm] : j_maps.items()) {
        const std::string sname = jm.at("source").get<std::string>();
        const std::string tname = jm.at("target").get<std::string>();
        auto sit = ws.modules.find(sname), tit = ws.modules.find(tname);
        if (sit == ws.modules.end() || tit == ws.modules.end())
            throw validation_error("map " + name + " references unknown modules");
        ModuleMap f(sit->second.value, tit->second.value, matrix_from_json(jm.at("matrix"), ws.field, "map " + name));
        if (!f.intertwines())
            throw validation_error("map " + name + " does not intertwine the actions");
        ws.maps.emplace(name, Workspace::MapEntry{sname, tname, std::move(f)});
    }

    const json j_injdim = doc.value("injdim", json::object());
    for (const auto& [name, jd] : j_injdim.items()) {
        if (!ws.algebras.count(name))
            throw validation_error("injdim entry references unknown algebra '" + name + "'");
        ws.injdim.emplace(name, std::make_pair(jd.at("left").get<std::size_t>(), jd.at("right").get<std::size_t>()));
    }
    return ws;
}

Workspace load_workspace(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Usage, "cannot open workspace file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

std::string emit_workspace(const Workspace& ws)
{
    json doc;
    doc["format"] = kFormat;
    if (ws.field.kind == FieldSpec::Kind::Rationals)
        doc["field"] = {{"kind", "rationals"}};
    else
        doc["field"] = {{"kind", "prime"}, {"p", ws.field.p}};

    json algebras = json::object();
    for (const auto& [name, alg] : ws.algebras) {
        if (ws.contexts.count(name))
            continue;  // derived Lambdas are rebuilt at parse time
        json ja;
        ja["dim"] = alg->dim();
        std::vector<Matrix> table;
        for (std::size_t i = 0; i < alg->dim(); ++i)
            table.push_back(alg->left_mult(i));
        ja["table"] = matrices_to_json(table);
        ja["unit"] = matrix_to_json(alg->unit());
        algebras[name] = std::move(ja);
    }
    doc["algebras"] = std::move(algebras);

    json bimodules = json::object();
    for (const auto& [name, entry] : ws.bimodules) {
        json jm;
        jm["left"] = entry.left;
        jm["right"] = entry.right;
        jm["dim"] = entry.value.dim();
        std::vector<Matrix> la, ra;
        for (std::size_t i = 0; i < entry.value.left_algebra()->dim(); ++i)
            la.push_back(entry.value.left_action(i));
        for (std::size_t i = 0; i < entry.value.right_algebra()->dim(); ++i)
            ra.push_back(entry.value.right_action(i));
        jm["left_action"] = matrices_to_json(la);
        jm["right_action"] = matrices_to_json(ra);
        bimodules[name] = std::move(jm);
    }
    doc["bimodules"] = std::move(bimodules);

    json contexts = json::object();
    for (const auto& [name, entry] : ws.contexts)
        contexts[name] = {{"a", entry.a}, {"b", entry.b}, {"m", entry.m}};
    doc["contexts"] = std::move(contexts);

    json modules = json::object();
    for (const auto& [name, entry] : ws.modules) {
        json jm;
        jm["algebra"] = entry.algebra;
        jm["dim"] = entry.value.dim();
        std::vector<Matrix> action;
        for (std::size_t i = 0; i < entry.value.algebra()->dim(); ++i)
            action.push_back(entry.value.action(i));
        jm["action"] = matrices_to_json(action);
        modules[name] = std::move(jm);
    }
    doc["modules"] = std::move(modules);

    json triples = json::object();
    for (const auto& [name, entry] : ws.triples) {
        json jt;
        jt["context"] = entry.context;
        jt["x"] = entry.x;
        jt["y"] = entry.y;
        jt["phi"] = matrix_to_json(entry.value.phi().matrix());
        triples[name] = std::move(jt);
    }
    doc["triples"] = std::move(triples);

    json maps = json::object();
    for (const auto& [name, entry] : ws.maps) {
        json jm;
        jm["source"] = entry.source;
        jm["target"] = entry.target;
        jm["matrix"] = matrix_to_json(entry.value.matrix());
        maps[name] = std::move(jm);
    }
    doc["maps"] = std::move(maps);

    json injdim = json::object();
    for (const auto& [name, d] : ws.injdim)
        injdim[name] = {{"left", d.first}, {"right", d.second}};
    doc["injdim"] = std::move(injdim);

    return doc.dump(2) + "\n";
}

void save_workspace(const Workspace& ws, const std::string& path)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::Usage, "cannot write '" + tmp + "'");
        out << emit_workspace(ws);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error(ErrorKind::Usage, "cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace trimod
