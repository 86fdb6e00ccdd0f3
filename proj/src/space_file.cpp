#include "cspace/space_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cspace {

using nlohmann::json;

ConceptSpace::ConceptSpace(StructurePtr structure,
                           std::vector<std::pair<std::string, Concept>> concepts)
    : structure_(std::move(structure)), concepts_(std::move(concepts)) {}

const Concept& ConceptSpace::at(const std::string& name) const {
    for (const auto& [n, c] : concepts_)
        if (n == name) return c;
    throw validation_error("unknown concept '" + name + "'");
}

bool ConceptSpace::has(const std::string& name) const {
    for (const auto& [n, c] : concepts_)
        if (n == name) return true;
    return false;
}

std::vector<std::string> ConceptSpace::names() const {
    std::vector<std::string> out;
    out.reserve(concepts_.size());
    for (const auto& [n, c] : concepts_) out.push_back(n);
    return out;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw validation_error(where + ": " + what);
}

double number_at(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number())
        fail(where, "missing numeric field '" + key + "'");
    return j[key].get<double>();
}

} // namespace

ConceptSpace parse_space_file(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("space file is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("$", "top level must be an object");
    if (!root.contains("version") || root["version"] != 1)
        fail("$.version", "expected schema version 1");
    if (!root.contains("domains") || !root["domains"].is_array() || root["domains"].empty())
        fail("$.domains", "expected a nonempty array");

    std::vector<std::pair<std::string, std::vector<std::string>>> groups;
    for (std::size_t i = 0; i < root["domains"].size(); ++i) {
        const json& d = root["domains"][i];
        const std::string where = "$.domains[" + std::to_string(i) + "]";
        if (!d.is_object() || !d.contains("name") || !d["name"].is_string())
            fail(where, "domain needs a string 'name'");
        if (!d.contains("dimensions") || !d["dimensions"].is_array() || d["dimensions"].empty())
            fail(where, "domain needs a nonempty 'dimensions' array");
        std::vector<std::string> dims;
        for (const json& x : d["dimensions"]) {
            if (!x.is_string()) fail(where + ".dimensions", "dimension names must be strings");
            dims.push_back(x.get<std::string>());
        }
        groups.emplace_back(d["name"].get<std::string>(), std::move(dims));
    }
    StructurePtr structure;
    try {
        structure = DomainStructure::make(groups);
    } catch (const std::exception& e) {
        fail("$.domains", e.what());
    }

    std::vector<std::pair<std::string, Concept>> concepts;
    if (root.contains("concepts")) {
        if (!root["concepts"].is_array()) fail("$.concepts", "expected an array");
        for (std::size_t ci = 0; ci < root["concepts"].size(); ++ci) {
            const json& c = root["concepts"][ci];
            const std::string where = "$.concepts[" + std::to_string(ci) + "]";
            if (!c.is_object() || !c.contains("name") || !c["name"].is_string())
                fail(where, "concept needs a string 'name'");
            const std::string name = c["name"].get<std::string>();
            const std::string at = where + " ('" + name + "')";

            if (!c.contains("domains") || !c["domains"].is_array() || c["domains"].empty())
                fail(at, "concept needs a nonempty 'domains' array");
            std::vector<std::string> doms;
            for (const json& d : c["domains"]) {
                if (!d.is_string()) fail(at + ".domains", "domain names must be strings");
                doms.push_back(d.get<std::string>());
            }
            StructurePtr sub;
            try {
                sub = structure->subspace(doms);
            } catch (const std::exception& e) {
                fail(at + ".domains", e.what());
            }

            if (!c.contains("cuboids") || !c["cuboids"].is_array() || c["cuboids"].empty())
                fail(at, "concept needs a nonempty 'cuboids' array");
            std::vector<Cuboid> cuboids;
            for (std::size_t bi = 0; bi < c["cuboids"].size(); ++bi) {
                const json& b = c["cuboids"][bi];
                const std::string bat = at + ".cuboids[" + std::to_string(bi) + "]";
                if (!b.is_object() || !b.contains("p_min") || !b.contains("p_max"))
                    fail(bat, "cuboid needs 'p_min' and 'p_max' objects");
                Point lo(sub->dimension_count()), hi(sub->dimension_count());
                for (std::size_t k = 0; k < sub->dimension_count(); ++k) {
                    const std::string& dim = sub->dimension_names()[k];
                    lo[k] = number_at(b["p_min"], dim, bat + ".p_min");
                    hi[k] = number_at(b["p_max"], dim, bat + ".p_max");
                }
                for (const auto& [key, val] : b["p_min"].items())
                    if (!sub->find_dimension(key))
                        fail(bat + ".p_min", "'" + key + "' is not a dimension of this concept");
                try {
                    cuboids.emplace_back(std::move(lo), std::move(hi));
                } catch (const std::exception& e) {
                    fail(bat, e.what());
                }
            }

            const double mu0 = number_at(c, "mu0", at);
            const double sens = number_at(c, "c", at);

            if (!c.contains("domain_weights") || !c["domain_weights"].is_object())
                fail(at, "concept needs a 'domain_weights' object");
            std::vector<double> dw(sub->domain_count());
            for (std::size_t di = 0; di < sub->domain_count(); ++di)
                dw[di] = number_at(c["domain_weights"], sub->domain(di).name,
                                   at + ".domain_weights");
            if (!c.contains("dimension_weights") || !c["dimension_weights"].is_object())
                fail(at, "concept needs a 'dimension_weights' object");
            std::vector<double> xw(sub->dimension_count());
            for (std::size_t k = 0; k < sub->dimension_count(); ++k)
                xw[k] = number_at(c["dimension_weights"], sub->dimension_names()[k],
                                  at + ".dimension_weights");

            try {
                WeightSpec w = WeightSpec::validated(*sub, std::move(dw), std::move(xw));
                CoreRegion core = CoreRegion::validate(std::move(cuboids), *sub);
                concepts.emplace_back(name, Concept(sub, std::move(core), mu0, sens,
                                                    std::move(w)));
            } catch (const std::exception& e) {
                fail(at, e.what());
            }
        }
    }
    return ConceptSpace(structure, std::move(concepts));
}

ConceptSpace load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open space file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_space_file(buf.str());
}

std::string serialize_space(const ConceptSpace& space, int indent) {
    json root;
    root["version"] = 1;
    root["domains"] = json::array();
    for (const auto& d : space.structure().domains()) {
        json jd;
        jd["name"] = d.name;
        jd["dimensions"] = json::array();
        for (std::size_t k : d.dims)
            jd["dimensions"].push_back(space.structure().dimension_names()[k]);
        root["domains"].push_back(std::move(jd));
    }
    root["concepts"] = json::array();
    for (const auto& [name, c] : space.concepts()) {
        json jc;
        jc["name"] = name;
        jc["domains"] = c.space().domain_names();
        jc["cuboids"] = json::array();
        for (const Cuboid& cu : c.core().cuboids()) {
            json jb;
            for (std::size_t k = 0; k < c.space().dimension_count(); ++k) {
                const std::string& dim = c.space().dimension_names()[k];
                jb["p_min"][dim] = cu.p_min[k];
                jb["p_max"][dim] = cu.p_max[k];
            }
            jc["cuboids"].push_back(std::move(jb));
        }
        jc["mu0"] = c.mu0();
        jc["c"] = c.c();
        for (std::size_t di = 0; di < c.space().domain_count(); ++di)
            jc["domain_weights"][c.space().domain(di).name] =
                c.weights().domain_weight(di);
        for (std::size_t k = 0; k < c.space().dimension_count(); ++k)
            jc["dimension_weights"][c.space().dimension_names()[k]] =
                c.weights().dimension_weight(k);
        root["concepts"].push_back(std::move(jc));
    }
    return root.dump(indent);
}

} // namespace cspace
