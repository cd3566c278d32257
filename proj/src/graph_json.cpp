#include "pathoverlap/graph_json.hpp"

#include <json.hpp>

namespace pathoverlap {

namespace {

using nlohmann::json;

EdgeRole parse_role(const std::string& s) {
    if (s == "reactant") {
        return EdgeRole::Reactant;
    }
    if (s == "product") {
        return EdgeRole::Product;
    }
    if (s == "modifier") {
        return EdgeRole::Modifier;
    }
    throw PathwayError(ErrorCode::SchemaViolation, s, "unknown edge role");
}

std::string require_string(const json& obj, const char* key, const char* ctx) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        throw PathwayError(ErrorCode::SchemaViolation, key,
                           std::string("missing or non-string in ") + ctx);
    }
    return it->get<std::string>();
}

std::vector<std::string> string_array(const json& obj, const char* key, const char* ctx) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        return {};
    }
    if (!it->is_array()) {
        throw PathwayError(ErrorCode::SchemaViolation, key,
                           std::string("not an array in ") + ctx);
    }
    std::vector<std::string> out;
    for (const json& v : *it) {
        if (!v.is_string()) {
            throw PathwayError(ErrorCode::SchemaViolation, key,
                               std::string("non-string element in ") + ctx);
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const char* ctx) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known) {
            if (it.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw PathwayError(ErrorCode::SchemaViolation, it.key(),
                               std::string("unknown key in ") + ctx);
        }
    }
}

const json& require_array(const json& root, const char* key) {
    auto it = root.find(key);
    if (it == root.end() || !it->is_array()) {
        throw PathwayError(ErrorCode::SchemaViolation, key, "missing top-level array");
    }
    return *it;
}

} // namespace

PathwayGraph parse_graph_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw PathwayError(ErrorCode::JsonMalformed, "", e.what());
    }
    if (!root.is_object()) {
        throw PathwayError(ErrorCode::SchemaViolation, "", "top level is not an object");
    }
    reject_unknown_keys(root, {"species", "reactions", "edges"}, "top level");

    std::vector<Species> species;
    for (const json& js : require_array(root, "species")) {
        if (!js.is_object()) {
            throw PathwayError(ErrorCode::SchemaViolation, "species", "element not an object");
        }
        reject_unknown_keys(
            js, {"id", "name", "normalized_name", "gene_signature", "constituents"}, "species");
        Species s;
        s.id = require_string(js, "id", "species");
        s.name = require_string(js, "name", "species");
        if (js.contains("normalized_name")) {
            s.normalized_name = require_string(js, "normalized_name", "species");
        }
        for (auto& g : string_array(js, "gene_signature", "species")) {
            s.gene_signature.insert(std::move(g));
        }
        s.constituents = string_array(js, "constituents", "species");
        species.push_back(std::move(s));
    }

    std::vector<Reaction> reactions;
    for (const json& jr : require_array(root, "reactions")) {
        if (!jr.is_object()) {
            throw PathwayError(ErrorCode::SchemaViolation, "reactions", "element not an object");
        }
        reject_unknown_keys(jr, {"id", "sbo_signature"}, "reactions");
        Reaction r;
        r.id = require_string(jr, "id", "reactions");
        for (auto& t : string_array(jr, "sbo_signature", "reactions")) {
            r.sbo_signature.insert(std::move(t));
        }
        reactions.push_back(std::move(r));
    }

    std::vector<Edge> edges;
    for (const json& je : require_array(root, "edges")) {
        if (!je.is_object()) {
            throw PathwayError(ErrorCode::SchemaViolation, "edges", "element not an object");
        }
        reject_unknown_keys(je, {"species", "reaction", "role"}, "edges");
        Edge e;
        e.species = require_string(je, "species", "edges");
        e.reaction = require_string(je, "reaction", "edges");
        e.role = parse_role(require_string(je, "role", "edges"));
        edges.push_back(std::move(e));
    }

    return PathwayGraph::build(std::move(species), std::move(reactions), std::move(edges));
}

std::string write_graph_json(const PathwayGraph& g) {
    json root;
    json& jspecies = root["species"] = json::array();
    for (const auto& [id, s] : g.species()) {
        json js;
        js["id"] = s.id;
        js["name"] = s.name;
        js["normalized_name"] = s.normalized_name;
        js["gene_signature"] = s.gene_signature;
        js["constituents"] = s.constituents;
        jspecies.push_back(std::move(js));
    }
    json& jreactions = root["reactions"] = json::array();
    for (const auto& [id, r] : g.reactions()) {
        json jr;
        jr["id"] = r.id;
        jr["sbo_signature"] = r.sbo_signature;
        jreactions.push_back(std::move(jr));
    }
    json& jedges = root["edges"] = json::array();
    for (const Edge& e : g.edges()) {
        json je;
        je["species"] = e.species;
        je["reaction"] = e.reaction;
        je["role"] = edge_role_name(e.role);
        jedges.push_back(std::move(je));
    }
    return root.dump(2) + "\n";
}

} // namespace pathoverlap
