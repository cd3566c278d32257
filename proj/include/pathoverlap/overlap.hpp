#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pathoverlap/matchers.hpp"
#include "pathoverlap/model.hpp"
#include "pathoverlap/ontology.hpp"

namespace pathoverlap {

/// Connected components of the bipartite graph, ordered by their smallest
/// contained node id. Degree-0 species form singleton components.
std::vector<PathwayGraph> connected_components(const PathwayGraph& g);

/// Drops degree-0 species (which are the only isolatable nodes).
PathwayGraph strip_isolated(const PathwayGraph& g);

/// One candidate component mapped into the reference: an injective,
/// kind-preserving node correspondence whose matched edges form a single
/// connected common subgraph. Score is matched edges, then matched nodes.
struct ComponentMatch {
    std::vector<std::pair<NodeRef, NodeRef>> node_pairs; // sorted by candidate
    std::vector<std::pair<Edge, Edge>> edge_pairs;       // candidate edge, reference edge
    std::size_t matched_edges = 0;
    std::size_t matched_nodes = 0;
    bool exact = true; // false when the beam fallback produced it

    bool empty() const { return node_pairs.empty(); }
};

struct OverlapOptions {
    std::size_t exact_node_limit = 64;        // larger components go to the beam
    std::size_t expansion_budget = 1'000'000; // search nodes before falling back
    std::size_t beam_width = 8;
    std::size_t beam_extensions = 256; // extension pairs considered per state
    unsigned threads = 0;              // 0 = hardware default, capped by env
};

/// Maximum-score match of one connected candidate component into the
/// reference. Exhaustive anchored backtracking within the budget, greedy
/// beam beyond it (flagged non-exact). Anchors are reaction pairs, so a
/// component whose reactions are all type-incompatible yields an empty
/// match. Deterministic for fixed inputs.
ComponentMatch max_overlap(const PathwayGraph& component, const PathwayGraph& reference,
                           const MatchConfig& cfg, const SboOntology& o,
                           const OverlapOptions& opts = {});

/// Independent oracle: enumerates every injective kind-preserving node map
/// whose pairs satisfy the matchers, and scores its best connected matched
/// subgraph. Throws SizeLimitExceeded beyond 8 component / 12 reference
/// nodes.
ComponentMatch brute_force_overlap(const PathwayGraph& component,
                                   const PathwayGraph& reference, const MatchConfig& cfg,
                                   const SboOntology& o);

struct OverlapReport {
    double node_precision = 0.0;
    double node_recall = 0.0;
    double edge_precision = 0.0;
    double edge_recall = 0.0;

    // Precision denominators: the candidate after isolated-species removal.
    std::size_t candidate_nodes = 0;
    std::size_t candidate_edges = 0;
    std::size_t matched_candidate_nodes = 0;
    std::size_t matched_candidate_edges = 0;

    // Recall: reference coverage is the union over component matches.
    std::size_t reference_nodes = 0;
    std::size_t reference_edges = 0;
    std::size_t covered_reference_nodes = 0;
    std::size_t covered_reference_edges = 0;

    std::size_t exact_components = 0;
    std::size_t approx_components = 0;
    std::vector<ComponentMatch> component_matches; // component order
};

/// Strips isolated candidate species, matches every candidate component
/// into the reference and aggregates node/edge precision and recall.
/// Components are processed in parallel; the result does not depend on
/// the schedule.
OverlapReport network_overlap(const PathwayGraph& candidate, const PathwayGraph& reference,
                              const MatchConfig& cfg, const SboOntology& o,
                              const OverlapOptions& opts = {});

} // namespace pathoverlap
