#include "pathoverlap/merge.hpp"

namespace pathoverlap {

PathwayGraph merge_graphs(const std::vector<PathwayGraph>& graphs) {
    std::vector<Species> species;
    std::vector<Reaction> reactions;
    std::vector<Edge> edges;

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::string prefix = "g" + std::to_string(i) + ":";
        for (const auto& [id, s] : graphs[i].species()) {
            Species copy = s;
            copy.id = prefix + s.id;
            for (SpeciesId& c : copy.constituents) {
                c = prefix + c;
            }
            species.push_back(std::move(copy));
        }
        for (const auto& [id, r] : graphs[i].reactions()) {
            Reaction copy = r;
            copy.id = prefix + r.id;
            reactions.push_back(std::move(copy));
        }
        for (const Edge& e : graphs[i].edges()) {
            edges.push_back(Edge{prefix + e.species, prefix + e.reaction, e.role});
        }
    }
    return PathwayGraph::build(std::move(species), std::move(reactions), std::move(edges));
}

} // namespace pathoverlap
