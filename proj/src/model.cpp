#include "pathoverlap/model.hpp"

#include <algorithm>

namespace pathoverlap {

const char* edge_role_name(EdgeRole role) {
    switch (role) {
    case EdgeRole::Reactant: return "reactant";
    case EdgeRole::Product: return "product";
    case EdgeRole::Modifier: return "modifier";
    }
    return "?";
}

namespace {

// DFS over constituent lists; grey node on the stack means a cycle.
enum class Mark { White, Grey, Black };

void check_constituents(const std::map<SpeciesId, Species>& species,
                        const SpeciesId& id,
                        std::map<SpeciesId, Mark>& marks) {
    Mark& m = marks[id];
    if (m == Mark::Grey) {
        throw PathwayError(ErrorCode::ConstituentCycle, id);
    }
    if (m == Mark::Black) {
        return;
    }
    m = Mark::Grey;
    auto it = species.find(id);
    if (it != species.end()) {
        for (const SpeciesId& c : it->second.constituents) {
            if (c == id) {
                throw PathwayError(ErrorCode::ConstituentCycle, id);
            }
            check_constituents(species, c, marks);
        }
    }
    marks[id] = Mark::Black;
}

} // namespace

PathwayGraph PathwayGraph::build(std::vector<Species> species,
                                 std::vector<Reaction> reactions,
                                 std::vector<Edge> edges) {
    PathwayGraph g;
    for (auto& s : species) {
        if (s.id.empty()) {
            throw PathwayError(ErrorCode::MissingId, "", "species with empty id");
        }
        SpeciesId id = s.id;
        if (!g.species_.emplace(id, std::move(s)).second) {
            throw PathwayError(ErrorCode::DuplicateId, id);
        }
    }
    for (auto& r : reactions) {
        if (r.id.empty()) {
            throw PathwayError(ErrorCode::MissingId, "", "reaction with empty id");
        }
        ReactionId id = r.id;
        if (!g.reactions_.emplace(id, std::move(r)).second) {
            throw PathwayError(ErrorCode::DuplicateId, id);
        }
    }

    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i] == edges[i + 1]) {
            throw PathwayError(ErrorCode::DuplicateEdge,
                               edges[i].species + "/" + edges[i].reaction + "/" +
                                   edge_role_name(edges[i].role));
        }
    }
    for (const Edge& e : edges) {
        if (!g.species_.count(e.species)) {
            throw PathwayError(ErrorCode::DanglingEdge, e.species);
        }
        if (!g.reactions_.count(e.reaction)) {
            throw PathwayError(ErrorCode::DanglingEdge, e.reaction);
        }
    }
    g.edges_ = std::move(edges);
    g.rebuild_adjacency();

    for (const auto& [id, r] : g.reactions_) {
        if (g.reaction_edges_.find(id) == g.reaction_edges_.end()) {
            throw PathwayError(ErrorCode::IsolatedReaction, id);
        }
    }

    // Constituents must resolve and the containment relation must be acyclic.
    for (const auto& [id, s] : g.species_) {
        for (const SpeciesId& c : s.constituents) {
            if (!g.species_.count(c)) {
                throw PathwayError(ErrorCode::DanglingEdge, c,
                                   "constituent of " + id + " not in graph");
            }
        }
    }
    std::map<SpeciesId, Mark> marks;
    for (const auto& [id, s] : g.species_) {
        check_constituents(g.species_, id, marks);
    }
    return g;
}

void PathwayGraph::rebuild_adjacency() {
    species_edges_.clear();
    reaction_edges_.clear();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        species_edges_[edges_[i].species].push_back(i);
        reaction_edges_[edges_[i].reaction].push_back(i);
    }
}

const Species* PathwayGraph::find_species(const SpeciesId& id) const {
    auto it = species_.find(id);
    return it == species_.end() ? nullptr : &it->second;
}

const Reaction* PathwayGraph::find_reaction(const ReactionId& id) const {
    auto it = reactions_.find(id);
    return it == reactions_.end() ? nullptr : &it->second;
}

const std::vector<std::size_t>& PathwayGraph::edges_of_species(const SpeciesId& id) const {
    static const std::vector<std::size_t> none;
    auto it = species_edges_.find(id);
    return it == species_edges_.end() ? none : it->second;
}

const std::vector<std::size_t>& PathwayGraph::edges_of_reaction(const ReactionId& id) const {
    static const std::vector<std::size_t> none;
    auto it = reaction_edges_.find(id);
    return it == reaction_edges_.end() ? none : it->second;
}

std::size_t PathwayGraph::species_degree(const SpeciesId& id) const {
    return edges_of_species(id).size();
}

PathwayGraph PathwayGraph::transform_species(
    const std::function<Species(const Species&)>& fn) const {
    PathwayGraph g = *this;
    for (auto& [id, s] : g.species_) {
        Species updated = fn(s);
        updated.id = id;
        s = std::move(updated);
    }
    return g;
}

PathwayGraph PathwayGraph::transform_reactions(
    const std::function<Reaction(const Reaction&)>& fn) const {
    PathwayGraph g = *this;
    for (auto& [id, r] : g.reactions_) {
        Reaction updated = fn(r);
        updated.id = id;
        r = std::move(updated);
    }
    return g;
}

PathwayGraph PathwayGraph::induced_subgraph(const std::set<SpeciesId>& keep_species,
                                            const std::set<ReactionId>& keep_reactions) const {
    PathwayGraph g;
    for (const SpeciesId& id : keep_species) {
        auto it = species_.find(id);
        if (it != species_.end()) {
            g.species_.insert(*it);
        }
    }
    for (const ReactionId& id : keep_reactions) {
        auto it = reactions_.find(id);
        if (it != reactions_.end()) {
            g.reactions_.insert(*it);
        }
    }
    // Every edge touches a reaction, so kept reactions' adjacency covers
    // all candidate edges without scanning the whole edge list.
    std::vector<std::size_t> picked;
    for (const auto& [id, r] : g.reactions_) {
        for (std::size_t i : edges_of_reaction(id)) {
            if (g.species_.count(edges_[i].species)) {
                picked.push_back(i);
            }
        }
    }
    std::sort(picked.begin(), picked.end());
    for (std::size_t i : picked) {
        g.edges_.push_back(edges_[i]);
    }
    g.rebuild_adjacency();
    return g;
}

bool PathwayGraph::operator==(const PathwayGraph& other) const {
    return species_ == other.species_ && reactions_ == other.reactions_ &&
           edges_ == other.edges_;
}

std::set<SpeciesId> constituent_closure(const PathwayGraph& g, const SpeciesId& s) {
    if (!g.find_species(s)) {
        throw PathwayError(ErrorCode::UnknownSpecies, s);
    }
    std::set<SpeciesId> out;
    std::vector<SpeciesId> stack{s};
    while (!stack.empty()) {
        SpeciesId id = std::move(stack.back());
        stack.pop_back();
        if (!out.insert(id).second) {
            continue;
        }
        if (const Species* sp = g.find_species(id)) {
            for (const SpeciesId& c : sp->constituents) {
                stack.push_back(c);
            }
        }
    }
    return out;
}

} // namespace pathoverlap
