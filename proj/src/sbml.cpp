#include "pathoverlap/sbml.hpp"

#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace pathoverlap {

namespace {

using boost::property_tree::ptree;

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t sep = csv.find(',', start);
        std::string id = csv.substr(start, sep == std::string::npos ? sep : sep - start);
        std::size_t b = id.find_first_not_of(" \t\r\n");
        std::size_t e = id.find_last_not_of(" \t\r\n");
        if (b != std::string::npos) {
            out.push_back(id.substr(b, e - b + 1));
        }
        if (sep == std::string::npos) {
            break;
        }
        start = sep + 1;
    }
    return out;
}

std::string attr(const ptree& node, const std::string& name) {
    return node.get<std::string>("<xmlattr>." + name, "");
}

void collect_references(const ptree& reaction, const char* list_name, const char* ref_name,
                        EdgeRole role, const ReactionId& rid,
                        const std::set<SpeciesId>& declared, std::vector<Edge>& edges) {
    auto list = reaction.get_child_optional(list_name);
    if (!list) {
        return;
    }
    for (const auto& [key, node] : *list) {
        if (key != ref_name) {
            continue;
        }
        std::string sid = attr(node, "species");
        if (sid.empty()) {
            throw PathwayError(ErrorCode::MissingId, rid,
                               std::string(ref_name) + " without species attribute");
        }
        if (!declared.count(sid)) {
            throw PathwayError(ErrorCode::UnresolvedSpeciesReference, sid);
        }
        edges.push_back(Edge{sid, rid, role});
    }
}

} // namespace

PathwayGraph parse_sbml(const std::string& text) {
    ptree doc;
    try {
        std::istringstream in(text);
        boost::property_tree::read_xml(in, doc,
                                       boost::property_tree::xml_parser::trim_whitespace);
    } catch (const boost::property_tree::xml_parser_error& e) {
        throw PathwayError(ErrorCode::XmlMalformed, "line " + std::to_string(e.line()),
                           e.message());
    }

    auto model = doc.get_child_optional("sbml.model");
    if (!model) {
        throw PathwayError(ErrorCode::XmlMalformed, "", "missing sbml/model element");
    }

    std::vector<Species> species;
    std::set<SpeciesId> declared;
    if (auto list = model->get_child_optional("listOfSpecies")) {
        for (const auto& [key, node] : *list) {
            if (key != "species") {
                continue;
            }
            Species s;
            s.id = attr(node, "id");
            if (s.id.empty()) {
                throw PathwayError(ErrorCode::MissingId, "", "species without id");
            }
            s.name = attr(node, "name");
            if (s.name.empty()) {
                s.name = s.id;
            }
            if (auto constituents = node.get_optional<std::string>("annotation.constituents")) {
                s.constituents = split_ids(*constituents);
            }
            declared.insert(s.id);
            species.push_back(std::move(s));
        }
    }

    std::vector<Reaction> reactions;
    std::vector<Edge> edges;
    if (auto list = model->get_child_optional("listOfReactions")) {
        for (const auto& [key, node] : *list) {
            if (key != "reaction") {
                continue;
            }
            Reaction r;
            r.id = attr(node, "id");
            if (r.id.empty()) {
                throw PathwayError(ErrorCode::MissingId, "", "reaction without id");
            }
            std::string sbo = attr(node, "sboTerm");
            if (!sbo.empty()) {
                r.sbo_signature.insert(sbo);
            }
            if (auto extra = node.get_optional<std::string>("annotation.terms")) {
                for (std::string& t : split_ids(*extra)) {
                    r.sbo_signature.insert(std::move(t));
                }
            }
            collect_references(node, "listOfReactants", "speciesReference",
                               EdgeRole::Reactant, r.id, declared, edges);
            collect_references(node, "listOfProducts", "speciesReference",
                               EdgeRole::Product, r.id, declared, edges);
            collect_references(node, "listOfModifiers", "modifierSpeciesReference",
                               EdgeRole::Modifier, r.id, declared, edges);
            reactions.push_back(std::move(r));
        }
    }

    return PathwayGraph::build(std::move(species), std::move(reactions), std::move(edges));
}

} // namespace pathoverlap
