#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pathoverlap/errors.hpp"

namespace pathoverlap {

using SpeciesId = std::string;
using ReactionId = std::string;
using TermId = std::string;
using GeneId = std::string;

enum class EdgeRole { Reactant, Product, Modifier };

const char* edge_role_name(EdgeRole role);

struct Species {
    SpeciesId id;
    std::string name;
    std::string normalized_name; // empty until annotated
    std::set<GeneId> gene_signature;
    std::vector<SpeciesId> constituents; // nonempty only for complexes

    bool is_complex() const { return !constituents.empty(); }
    bool operator==(const Species&) const = default;
};

struct Reaction {
    ReactionId id;
    std::set<TermId> sbo_signature;

    bool operator==(const Reaction&) const = default;
};

struct Edge {
    SpeciesId species;
    ReactionId reaction;
    EdgeRole role;

    auto operator<=>(const Edge&) const = default;
};

enum class NodeKind { Species, Reaction };

/// Identifies a node of the bipartite graph; species and reaction ids live
/// in separate namespaces, so the kind is part of the identity.
struct NodeRef {
    NodeKind kind;
    std::string id;

    auto operator<=>(const NodeRef&) const = default;
};

/// Bipartite species/reaction graph. Immutable once built; all mutation
/// produces a new graph. Edges are kept in canonical sorted order.
class PathwayGraph {
public:
    PathwayGraph() = default;

    /// Validates and builds. Throws PathwayError with DuplicateId,
    /// DuplicateEdge, DanglingEdge, IsolatedReaction or ConstituentCycle.
    static PathwayGraph build(std::vector<Species> species,
                              std::vector<Reaction> reactions,
                              std::vector<Edge> edges);

    const std::map<SpeciesId, Species>& species() const { return species_; }
    const std::map<ReactionId, Reaction>& reactions() const { return reactions_; }
    const std::vector<Edge>& edges() const { return edges_; }

    const Species* find_species(const SpeciesId& id) const;
    const Reaction* find_reaction(const ReactionId& id) const;

    /// Indexes into edges() for the edges incident to a node.
    const std::vector<std::size_t>& edges_of_species(const SpeciesId& id) const;
    const std::vector<std::size_t>& edges_of_reaction(const ReactionId& id) const;

    std::size_t species_degree(const SpeciesId& id) const;
    std::size_t node_count() const { return species_.size() + reactions_.size(); }
    bool empty() const { return species_.empty() && reactions_.empty(); }

    /// Returns copies with every species (reaction) passed through fn.
    /// fn must not change ids; structure and edges are untouched.
    PathwayGraph transform_species(const std::function<Species(const Species&)>& fn) const;
    PathwayGraph transform_reactions(const std::function<Reaction(const Reaction&)>& fn) const;

    /// Subgraph on the given node sets, keeping edges with both endpoints
    /// retained. Constituent lists are copied verbatim, so a sliced complex
    /// may reference species outside the subgraph; constituent_closure
    /// tolerates that. Caller must not isolate a reaction.
    PathwayGraph induced_subgraph(const std::set<SpeciesId>& keep_species,
                                  const std::set<ReactionId>& keep_reactions) const;

    bool operator==(const PathwayGraph& other) const;

private:
    std::map<SpeciesId, Species> species_;
    std::map<ReactionId, Reaction> reactions_;
    std::vector<Edge> edges_;
    std::map<SpeciesId, std::vector<std::size_t>> species_edges_;
    std::map<ReactionId, std::vector<std::size_t>> reaction_edges_;

    void rebuild_adjacency();
};

/// The species itself plus all direct and transitively nested constituents.
/// Ids that do not resolve in g are included but not expanded.
std::set<SpeciesId> constituent_closure(const PathwayGraph& g, const SpeciesId& s);

} // namespace pathoverlap
