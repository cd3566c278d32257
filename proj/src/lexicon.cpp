#include "pathoverlap/lexicon.hpp"

#include <sstream>

#include "pathoverlap/errors.hpp"

namespace pathoverlap {

GeneLexicon GeneLexicon::load(const std::string& text) {
    NormalizationConfig key_cfg; // fold + collapse only, no prefix stripping
    key_cfg.strip_prefixes.clear();

    std::map<std::string, std::set<GeneId>> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw PathwayError(ErrorCode::BadLine, std::to_string(lineno), line);
        }
        std::string key = normalize_name(line.substr(0, tab), key_cfg);
        std::set<GeneId>& ids = entries[key];
        std::string rest = line.substr(tab + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t sep = rest.find_first_of(",\t", start);
            std::string id = rest.substr(start, sep == std::string::npos ? sep : sep - start);
            if (!id.empty()) {
                ids.insert(id);
            }
            if (sep == std::string::npos) {
                break;
            }
            start = sep + 1;
        }
        if (ids.empty()) {
            throw PathwayError(ErrorCode::BadLine, std::to_string(lineno), "no gene ids");
        }
    }
    return GeneLexicon(std::move(entries));
}

const std::set<GeneId>* GeneLexicon::lookup(const std::string& normalized_name) const {
    auto it = entries_.find(normalized_name);
    return it == entries_.end() ? nullptr : &it->second;
}

PathwayGraph normalize_species_names(const PathwayGraph& g, const NormalizationConfig& cfg) {
    return g.transform_species([&](const Species& s) {
        Species out = s;
        out.normalized_name = normalize_name(s.name, cfg);
        return out;
    });
}

PathwayGraph assign_gene_signatures(const PathwayGraph& g, const GeneLexicon& lex) {
    return g.transform_species([&](const Species& s) {
        Species out = s;
        const std::set<GeneId>* ids = lex.lookup(s.normalized_name);
        out.gene_signature = ids ? *ids : std::set<GeneId>{};
        return out;
    });
}

double signature_coverage(const PathwayGraph& g) {
    if (g.species().empty()) {
        return 0.0;
    }
    std::size_t covered = 0;
    for (const auto& [id, s] : g.species()) {
        if (!s.gene_signature.empty()) {
            ++covered;
        }
    }
    return static_cast<double>(covered) / static_cast<double>(g.species().size());
}

} // namespace pathoverlap
