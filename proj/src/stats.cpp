#include "pathoverlap/stats.hpp"

#include <algorithm>
#include <set>

#include "pathoverlap/overlap.hpp"

namespace pathoverlap {

double fscore(double precision, double recall) {
    if (precision + recall == 0.0) {
        return 0.0;
    }
    return 2.0 * precision * recall / (precision + recall);
}

PrecisionRecall PrecisionRecall::from(double precision, double recall) {
    return PrecisionRecall{precision, recall, pathoverlap::fscore(precision, recall)};
}

UniqueNameCounts unique_name_counts(const PathwayGraph& g, const NormalizationConfig& cfg,
                                    int cutoff) {
    UniqueNameCounts counts;
    counts.species_total = g.species().size();

    std::set<std::string> names;
    std::set<std::set<GeneId>> signatures;
    for (const auto& [id, s] : g.species()) {
        names.insert(normalize_name(s.name, cfg));
        if (!s.gene_signature.empty()) {
            signatures.insert(s.gene_signature);
        }
    }
    counts.distinct_names = names.size();
    counts.distinct_signatures = signatures.size();

    // Greedy single-link clustering; seeds in lexicographic order.
    std::vector<std::string> ordered(names.begin(), names.end());
    std::vector<bool> assigned(ordered.size(), false);
    for (std::size_t seed = 0; seed < ordered.size(); ++seed) {
        if (assigned[seed]) {
            continue;
        }
        ++counts.approx_name_clusters;
        std::vector<std::size_t> cluster{seed};
        assigned[seed] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < ordered.size(); ++i) {
                if (assigned[i]) {
                    continue;
                }
                for (std::size_t member : cluster) {
                    if (name_similarity(ordered[i], ordered[member]) >= cutoff) {
                        cluster.push_back(i);
                        assigned[i] = true;
                        grew = true;
                        break;
                    }
                }
            }
        }
    }
    return counts;
}

namespace {

PrecisionRecall item_overlap(std::size_t cand_total, std::size_t cand_matched,
                             std::size_t ref_total, std::size_t ref_matched) {
    double p = cand_total == 0 ? 0.0 : 100.0 * cand_matched / cand_total;
    double r = ref_total == 0 ? 0.0 : 100.0 * ref_matched / ref_total;
    return PrecisionRecall::from(p, r);
}

} // namespace

PrecisionRecall unique_species_overlap(const PathwayGraph& cand, const PathwayGraph& ref,
                                       const MatchConfig& cfg) {
    cfg.validate();
    bool by_name = cfg.species.name_mode != NameMode::Off;
    bool by_signature = cfg.species.signature_mode != SignatureMode::Off;
    if (by_name && by_signature) {
        throw PathwayError(ErrorCode::InvalidConfig, species_strategy_label(cfg.species),
                           "unique species overlap needs a single clause family");
    }

    if (by_name) {
        std::set<std::string> cand_names;
        std::set<std::string> ref_names;
        for (const auto& [id, s] : cand.species()) {
            cand_names.insert(s.normalized_name);
        }
        for (const auto& [id, s] : ref.species()) {
            ref_names.insert(s.normalized_name);
        }
        auto matches = [&](const std::string& a, const std::string& b) {
            if (cfg.species.name_mode == NameMode::Exact) {
                return a == b;
            }
            return name_similarity(a, b) >= cfg.similarity_cutoff;
        };
        std::size_t cand_hit = 0;
        for (const std::string& c : cand_names) {
            for (const std::string& r : ref_names) {
                if (matches(c, r)) {
                    ++cand_hit;
                    break;
                }
            }
        }
        std::size_t ref_hit = 0;
        for (const std::string& r : ref_names) {
            for (const std::string& c : cand_names) {
                if (matches(c, r)) {
                    ++ref_hit;
                    break;
                }
            }
        }
        return item_overlap(cand_names.size(), cand_hit, ref_names.size(), ref_hit);
    }

    std::set<std::set<GeneId>> cand_sigs;
    std::set<std::set<GeneId>> ref_sigs;
    for (const auto& [id, s] : cand.species()) {
        if (!s.gene_signature.empty()) {
            cand_sigs.insert(s.gene_signature);
        }
    }
    for (const auto& [id, s] : ref.species()) {
        if (!s.gene_signature.empty()) {
            ref_sigs.insert(s.gene_signature);
        }
    }
    auto matches = [&](const std::set<GeneId>& a, const std::set<GeneId>& b) {
        if (cfg.species.signature_mode == SignatureMode::Equal) {
            return a == b;
        }
        for (const GeneId& id : a) {
            if (b.count(id)) {
                return true;
            }
        }
        return false;
    };
    std::size_t cand_hit = 0;
    for (const auto& c : cand_sigs) {
        for (const auto& r : ref_sigs) {
            if (matches(c, r)) {
                ++cand_hit;
                break;
            }
        }
    }
    std::size_t ref_hit = 0;
    for (const auto& r : ref_sigs) {
        for (const auto& c : cand_sigs) {
            if (matches(c, r)) {
                ++ref_hit;
                break;
            }
        }
    }
    return item_overlap(cand_sigs.size(), cand_hit, ref_sigs.size(), ref_hit);
}

PrecisionRecall unique_signature_overlap(const PathwayGraph& cand, const PathwayGraph& ref,
                                         ReactionMatchMode mode, const SboOntology& o) {
    std::set<std::set<TermId>> cand_sigs;
    std::set<std::set<TermId>> ref_sigs;
    for (const auto& [id, r] : cand.reactions()) {
        if (!r.sbo_signature.empty()) {
            cand_sigs.insert(r.sbo_signature);
        }
    }
    for (const auto& [id, r] : ref.reactions()) {
        if (!r.sbo_signature.empty()) {
            ref_sigs.insert(r.sbo_signature);
        }
    }
    auto matches = [&](const std::set<TermId>& a, const std::set<TermId>& b) {
        return reaction_match(Reaction{"a", a}, Reaction{"b", b}, mode, o);
    };
    std::size_t cand_hit = 0;
    for (const auto& c : cand_sigs) {
        for (const auto& r : ref_sigs) {
            if (matches(c, r)) {
                ++cand_hit;
                break;
            }
        }
    }
    std::size_t ref_hit = 0;
    for (const auto& r : ref_sigs) {
        for (const auto& c : cand_sigs) {
            if (matches(c, r)) {
                ++ref_hit;
                break;
            }
        }
    }
    return item_overlap(cand_sigs.size(), cand_hit, ref_sigs.size(), ref_hit);
}

std::map<TermId, std::size_t> reaction_type_histogram(const PathwayGraph& g,
                                                      const SboOntology& o) {
    std::map<TermId, std::size_t> out;
    for (const auto& [id, r] : g.reactions()) {
        for (const TermId& t : r.sbo_signature) {
            // t is dropped if some other signature term is a strict
            // descendant of it; the count is non-cumulative.
            bool most_specific = true;
            for (const TermId& s : r.sbo_signature) {
                if (s != t && o.ancestors(s).count(t)) {
                    most_specific = false;
                    break;
                }
            }
            if (most_specific) {
                if (!o.has_term(t)) {
                    throw PathwayError(ErrorCode::UnknownTerm, t);
                }
                ++out[t];
            }
        }
    }
    return out;
}

ComplexStats complex_stats(const PathwayGraph& g) {
    ComplexStats stats;
    std::set<SpeciesId> nested;
    for (const auto& [id, s] : g.species()) {
        if (!s.is_complex()) {
            continue;
        }
        ++stats.complex_count;
        stats.total_constituents += s.constituents.size();
        for (const SpeciesId& c : s.constituents) {
            const Species* member = g.find_species(c);
            if (member && member->is_complex()) {
                nested.insert(c);
            }
        }
    }
    stats.nested_complex_count = nested.size();
    return stats;
}

ConnectivityStats connectivity_stats(const PathwayGraph& g) {
    ConnectivityStats stats;
    for (const PathwayGraph& comp : connected_components(g)) {
        stats.component_sizes.push_back(comp.node_count());
    }
    if (stats.component_sizes.empty()) {
        return stats;
    }
    for (std::size_t size : stats.component_sizes) {
        if (size == 1) {
            ++stats.isolated_species_count;
        } else {
            ++stats.isolated_network_count;
        }
    }
    std::vector<std::size_t> sorted = stats.component_sizes;
    std::sort(sorted.begin(), sorted.end());
    stats.min = sorted.front();
    stats.max = sorted.back();
    std::size_t total = 0;
    for (std::size_t s : sorted) {
        total += s;
    }
    stats.mean = static_cast<double>(total) / static_cast<double>(sorted.size());
    std::size_t mid = sorted.size() / 2;
    stats.median = sorted.size() % 2 == 1
                       ? static_cast<double>(sorted[mid])
                       : (static_cast<double>(sorted[mid - 1]) + static_cast<double>(sorted[mid])) / 2.0;
    return stats;
}

} // namespace pathoverlap
