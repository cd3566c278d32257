#include "pathoverlap/matchers.hpp"

#include <algorithm>
#include <vector>

namespace pathoverlap {

std::size_t levenshtein(const std::string& a, const std::string& b) {
    const std::string& shorter = a.size() <= b.size() ? a : b;
    const std::string& longer = a.size() <= b.size() ? b : a;

    std::vector<std::size_t> row(shorter.size() + 1);
    for (std::size_t i = 0; i <= shorter.size(); ++i) {
        row[i] = i;
    }
    for (std::size_t j = 1; j <= longer.size(); ++j) {
        std::size_t diagonal = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= shorter.size(); ++i) {
            std::size_t saved = row[i];
            if (shorter[i - 1] == longer[j - 1]) {
                row[i] = diagonal;
            } else {
                row[i] = std::min({row[i - 1], row[i], diagonal}) + 1;
            }
            diagonal = saved;
        }
    }
    return row[shorter.size()];
}

int name_similarity(const std::string& a, const std::string& b) {
    std::size_t longest = std::max(a.size(), b.size());
    if (longest == 0) {
        return 100;
    }
    std::size_t dist = levenshtein(a, b);
    return static_cast<int>((100 * (longest - dist)) / longest);
}

void MatchConfig::validate() const {
    if (species.name_mode == NameMode::Off && species.signature_mode == SignatureMode::Off) {
        throw PathwayError(ErrorCode::InvalidConfig, "",
                           "at least one species clause must be enabled");
    }
    if (similarity_cutoff < 0 || similarity_cutoff > 100) {
        throw PathwayError(ErrorCode::InvalidConfig, std::to_string(similarity_cutoff),
                           "similarity cutoff out of [0,100]");
    }
}

namespace {

bool species_match_base(const Species& cand, const Species& ref, const MatchConfig& cfg) {
    switch (cfg.species.name_mode) {
    case NameMode::Exact:
        if (cand.normalized_name == ref.normalized_name) {
            return true;
        }
        break;
    case NameMode::Approximate:
        if (name_similarity(cand.normalized_name, ref.normalized_name) >=
            cfg.similarity_cutoff) {
            return true;
        }
        break;
    case NameMode::Off:
        break;
    }

    if (cfg.species.signature_mode != SignatureMode::Off && !cand.gene_signature.empty() &&
        !ref.gene_signature.empty()) {
        if (cfg.species.signature_mode == SignatureMode::Equal) {
            if (cand.gene_signature == ref.gene_signature) {
                return true;
            }
        } else {
            const std::set<GeneId>& small =
                cand.gene_signature.size() <= ref.gene_signature.size() ? cand.gene_signature
                                                                        : ref.gene_signature;
            const std::set<GeneId>& large =
                cand.gene_signature.size() <= ref.gene_signature.size() ? ref.gene_signature
                                                                        : cand.gene_signature;
            for (const GeneId& id : small) {
                if (large.count(id)) {
                    return true;
                }
            }
        }
    }
    return false;
}

} // namespace

bool species_match(const Species& cand, const Species& ref, const PathwayGraph& ref_graph,
                   const MatchConfig& cfg) {
    if (species_match_base(cand, ref, cfg)) {
        return true;
    }
    if (cfg.species.with_constituents && ref.is_complex()) {
        for (const SpeciesId& id : constituent_closure(ref_graph, ref.id)) {
            if (id == ref.id) {
                continue;
            }
            if (const Species* member = ref_graph.find_species(id)) {
                if (species_match_base(cand, *member, cfg)) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool reaction_match(const Reaction& a, const Reaction& b, ReactionMatchMode mode,
                    const SboOntology& o) {
    if (a.sbo_signature.empty() || b.sbo_signature.empty()) {
        return false;
    }
    switch (mode) {
    case ReactionMatchMode::SboEq:
        return a.sbo_signature == b.sbo_signature;
    case ReactionMatchMode::SboOv:
        for (const TermId& t : a.sbo_signature) {
            if (b.sbo_signature.count(t)) {
                return true;
            }
        }
        return false;
    case ReactionMatchMode::SboIsa:
        for (const TermId& x : a.sbo_signature) {
            for (const TermId& y : b.sbo_signature) {
                if (o.related(x, y)) {
                    return true;
                }
            }
        }
        return false;
    }
    return false;
}

bool edge_match(const Edge& a, const Edge& b) {
    return a.role == b.role;
}

SpeciesMatchMode parse_species_strategy(const std::string& text) {
    SpeciesMatchMode mode;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t sep = text.find('/', start);
        std::string clause =
            text.substr(start, sep == std::string::npos ? sep : sep - start);
        if (clause == "nmeq") {
            mode.name_mode = std::max(mode.name_mode, NameMode::Exact);
        } else if (clause == "appeq") {
            mode.name_mode = NameMode::Approximate;
        } else if (clause == "enteq") {
            mode.signature_mode = std::max(mode.signature_mode, SignatureMode::Equal);
        } else if (clause == "entov") {
            mode.signature_mode = SignatureMode::Overlap;
        } else if (clause == "wc") {
            mode.with_constituents = true;
        } else {
            throw PathwayError(ErrorCode::UnknownStrategy, clause.empty() ? text : clause);
        }
        if (sep == std::string::npos) {
            break;
        }
        start = sep + 1;
    }
    if (mode.name_mode == NameMode::Off && mode.signature_mode == SignatureMode::Off) {
        throw PathwayError(ErrorCode::UnknownStrategy, text,
                           "wc needs a name or signature clause");
    }
    return mode;
}

ReactionMatchMode parse_reaction_strategy(const std::string& text) {
    if (text == "sboeq") {
        return ReactionMatchMode::SboEq;
    }
    if (text == "sboov") {
        return ReactionMatchMode::SboOv;
    }
    if (text == "sboisa") {
        return ReactionMatchMode::SboIsa;
    }
    throw PathwayError(ErrorCode::UnknownStrategy, text);
}

std::string species_strategy_label(const SpeciesMatchMode& mode) {
    std::string out;
    if (mode.name_mode == NameMode::Exact) {
        out = "nmeq";
    } else if (mode.name_mode == NameMode::Approximate) {
        out = "appeq";
    }
    if (mode.signature_mode != SignatureMode::Off) {
        if (!out.empty()) {
            out += "/";
        }
        out += mode.signature_mode == SignatureMode::Equal ? "enteq" : "entov";
    }
    if (mode.with_constituents) {
        out += "/wc";
    }
    return out;
}

std::string reaction_strategy_label(ReactionMatchMode mode) {
    switch (mode) {
    case ReactionMatchMode::SboEq: return "sboeq";
    case ReactionMatchMode::SboOv: return "sboov";
    case ReactionMatchMode::SboIsa: return "sboisa";
    }
    return "?";
}

} // namespace pathoverlap
