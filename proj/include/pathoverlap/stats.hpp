#pragma once

#include <map>
#include <vector>

#include "pathoverlap/matchers.hpp"
#include "pathoverlap/model.hpp"
#include "pathoverlap/normalize.hpp"
#include "pathoverlap/ontology.hpp"

namespace pathoverlap {

/// Percentages in [0,100]; fscore is the harmonic mean, 0 when p+r == 0.
struct PrecisionRecall {
    double precision = 0.0;
    double recall = 0.0;
    double fscore = 0.0;

    static PrecisionRecall from(double precision, double recall);
};

double fscore(double precision, double recall);

struct UniqueNameCounts {
    std::size_t species_total = 0;
    std::size_t distinct_names = 0;       // distinct normalized names
    std::size_t approx_name_clusters = 0; // greedy single-link at the cutoff
    std::size_t distinct_signatures = 0;  // distinct nonempty gene signatures
};

/// Normalizes on the fly from raw names, so the graph need not be
/// annotated. Cluster seeds are taken in lexicographic name order.
UniqueNameCounts unique_name_counts(const PathwayGraph& g, const NormalizationConfig& cfg,
                                    int cutoff);

/// Overlap of unique items: normalized names when cfg enables name
/// matching, gene signatures when it enables signature matching. Exactly
/// one of the two clause families may be enabled; wc has no meaning here.
PrecisionRecall unique_species_overlap(const PathwayGraph& cand, const PathwayGraph& ref,
                                       const MatchConfig& cfg);

/// Overlap of distinct nonempty reaction signatures under reaction_match.
PrecisionRecall unique_signature_overlap(const PathwayGraph& cand, const PathwayGraph& ref,
                                         ReactionMatchMode mode, const SboOntology& o);

/// Counts each reaction once per signature term with no strict descendant
/// also in the signature (most-specific, non-cumulative counting).
std::map<TermId, std::size_t> reaction_type_histogram(const PathwayGraph& g,
                                                      const SboOntology& o);

struct ComplexStats {
    std::size_t complex_count = 0;
    std::size_t total_constituents = 0;   // direct list lengths summed
    std::size_t nested_complex_count = 0; // complexes inside another complex
};

ComplexStats complex_stats(const PathwayGraph& g);

struct ConnectivityStats {
    std::size_t isolated_network_count = 0; // components with >= 2 nodes
    std::size_t isolated_species_count = 0; // singleton components
    std::vector<std::size_t> component_sizes; // species+reaction node counts
    std::size_t min = 0;
    std::size_t max = 0;
    double mean = 0.0;
    double median = 0.0; // midpoint convention for even counts
};

ConnectivityStats connectivity_stats(const PathwayGraph& g);

} // namespace pathoverlap
