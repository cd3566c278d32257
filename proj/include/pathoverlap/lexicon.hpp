#pragma once

#include <map>
#include <set>
#include <string>

#include "pathoverlap/model.hpp"
#include "pathoverlap/normalize.hpp"

namespace pathoverlap {

/// Offline normalized-name -> gene-id dictionary. Stands in for a remote
/// normalizer service; see GeneNormalizer for the interface point.
class GeneLexicon {
public:
    GeneLexicon() = default;
    explicit GeneLexicon(std::map<std::string, std::set<GeneId>> entries)
        : entries_(std::move(entries)) {}

    /// Lines `name<TAB>id[,id...]`; repeated names accumulate. Keys are
    /// case-folded and whitespace-collapsed on load.
    static GeneLexicon load(const std::string& text);

    const std::set<GeneId>* lookup(const std::string& normalized_name) const;
    const std::map<std::string, std::set<GeneId>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, std::set<GeneId>> entries_;
};

/// Hook for plugging a remote normalizer in place of the lexicon.
class GeneNormalizer {
public:
    virtual ~GeneNormalizer() = default;
    virtual std::set<GeneId> identify(const std::string& normalized_name) const = 0;
};

/// Recomputes normalized_name for every species from its raw name.
PathwayGraph normalize_species_names(const PathwayGraph& g, const NormalizationConfig& cfg);

/// Sets each species' gene signature to the lexicon entry for its
/// normalized name, or the empty set. Species must be normalized first.
PathwayGraph assign_gene_signatures(const PathwayGraph& g, const GeneLexicon& lex);

/// Fraction of species with a nonempty gene signature, in [0,1].
/// Empty graphs report 0.
double signature_coverage(const PathwayGraph& g);

} // namespace pathoverlap
