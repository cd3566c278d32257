#include "pathoverlap/overlap.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>

namespace pathoverlap {

std::vector<PathwayGraph> connected_components(const PathwayGraph& g) {
    std::map<NodeRef, int> comp_of;
    auto comp_key = [](const NodeRef& n) { return std::make_pair(n.id, n.kind); };

    int next = 0;
    std::vector<std::vector<NodeRef>> groups;
    auto visit = [&](const NodeRef& start) {
        if (comp_of.count(start)) {
            return;
        }
        std::vector<NodeRef> stack{start};
        comp_of[start] = next;
        groups.emplace_back();
        while (!stack.empty()) {
            NodeRef n = std::move(stack.back());
            stack.pop_back();
            groups[next].push_back(n);
            const auto& incident = n.kind == NodeKind::Species ? g.edges_of_species(n.id)
                                                               : g.edges_of_reaction(n.id);
            for (std::size_t i : incident) {
                const Edge& e = g.edges()[i];
                NodeRef other = n.kind == NodeKind::Species
                                    ? NodeRef{NodeKind::Reaction, e.reaction}
                                    : NodeRef{NodeKind::Species, e.species};
                if (comp_of.emplace(other, next).second) {
                    stack.push_back(other);
                }
            }
        }
        ++next;
    };

    for (const auto& [id, s] : g.species()) {
        visit({NodeKind::Species, id});
    }
    for (const auto& [id, r] : g.reactions()) {
        visit({NodeKind::Reaction, id});
    }

    std::vector<int> order(groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<int>(i);
    }
    std::vector<std::pair<std::string, NodeKind>> min_key(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        min_key[i] = comp_key(*std::min_element(
            groups[i].begin(), groups[i].end(),
            [&](const NodeRef& a, const NodeRef& b) { return comp_key(a) < comp_key(b); }));
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return min_key[a] < min_key[b]; });

    std::vector<PathwayGraph> out;
    out.reserve(groups.size());
    for (int i : order) {
        std::set<SpeciesId> sp;
        std::set<ReactionId> re;
        for (const NodeRef& n : groups[i]) {
            if (n.kind == NodeKind::Species) {
                sp.insert(n.id);
            } else {
                re.insert(n.id);
            }
        }
        out.push_back(g.induced_subgraph(sp, re));
    }
    return out;
}

PathwayGraph strip_isolated(const PathwayGraph& g) {
    std::set<SpeciesId> keep;
    for (const auto& [id, s] : g.species()) {
        if (g.species_degree(id) > 0) {
            keep.insert(id);
        }
    }
    std::set<ReactionId> reactions;
    for (const auto& [id, r] : g.reactions()) {
        reactions.insert(id);
    }
    return g.induced_subgraph(keep, reactions);
}

namespace {

constexpr std::int8_t kNoMatch = -1;

// ---------------------------------------------------------------------
// Flat integer views of the two graphs, for the search inner loops.

struct FlatEdge {
    int species;
    int reaction;
    EdgeRole role;
};

struct GraphView {
    const PathwayGraph* graph = nullptr;
    std::vector<const Species*> species;
    std::vector<const Reaction*> reactions;
    std::vector<FlatEdge> edges;
    std::vector<std::vector<int>> species_edges;
    std::vector<std::vector<int>> reaction_edges;
    std::unordered_map<std::uint64_t, std::array<int, 3>> pair_edges;
    std::vector<std::vector<int>> closure_members; // complex -> member species idxs

    int node_count() const {
        return static_cast<int>(species.size() + reactions.size());
    }

    std::uint64_t pair_key(int s, int r) const {
        return static_cast<std::uint64_t>(s) * reactions.size() + static_cast<std::uint64_t>(r);
    }

    // Edge index of (s, r, role), or -1.
    int edge_at(int s, int r, EdgeRole role) const {
        auto it = pair_edges.find(pair_key(s, r));
        if (it == pair_edges.end()) {
            return -1;
        }
        return it->second[static_cast<int>(role)];
    }

    static GraphView build(const PathwayGraph& g) {
        GraphView v;
        v.graph = &g;
        std::map<SpeciesId, int> sidx;
        std::map<ReactionId, int> ridx;
        for (const auto& [id, s] : g.species()) {
            sidx[id] = static_cast<int>(v.species.size());
            v.species.push_back(&s);
        }
        for (const auto& [id, r] : g.reactions()) {
            ridx[id] = static_cast<int>(v.reactions.size());
            v.reactions.push_back(&r);
        }
        v.species_edges.resize(v.species.size());
        v.reaction_edges.resize(v.reactions.size());
        for (const Edge& e : g.edges()) {
            FlatEdge fe{sidx.at(e.species), ridx.at(e.reaction), e.role};
            int idx = static_cast<int>(v.edges.size());
            v.edges.push_back(fe);
            v.species_edges[fe.species].push_back(idx);
            v.reaction_edges[fe.reaction].push_back(idx);
            auto [it, fresh] = v.pair_edges.try_emplace(v.pair_key(fe.species, fe.reaction),
                                                        std::array<int, 3>{-1, -1, -1});
            it->second[static_cast<int>(fe.role)] = idx;
        }
        v.closure_members.resize(v.species.size());
        for (std::size_t i = 0; i < v.species.size(); ++i) {
            if (!v.species[i]->is_complex()) {
                continue;
            }
            for (const SpeciesId& id : constituent_closure(g, v.species[i]->id)) {
                if (id == v.species[i]->id) {
                    continue;
                }
                auto it = sidx.find(id);
                if (it != sidx.end()) {
                    v.closure_members[i].push_back(it->second);
                }
            }
        }
        return v;
    }
};

// ---------------------------------------------------------------------
// Match strengths. Rank 0 is the strictest clause that accepts a pair, so
// relaxing a strategy appends new pairs after existing ones instead of
// reordering them; the search visits pairs in (strength, id) order.

std::int8_t base_species_strength(const Species& a, const Species& b, const MatchConfig& cfg) {
    int best = 127;
    switch (cfg.species.name_mode) {
    case NameMode::Exact:
        if (a.normalized_name == b.normalized_name) {
            best = 0;
        }
        break;
    case NameMode::Approximate:
        if (a.normalized_name == b.normalized_name) {
            best = 0;
        } else if (name_similarity(a.normalized_name, b.normalized_name) >=
                   cfg.similarity_cutoff) {
            best = 1;
        }
        break;
    case NameMode::Off:
        break;
    }
    if (best > 2 && cfg.species.signature_mode != SignatureMode::Off &&
        !a.gene_signature.empty() && !b.gene_signature.empty()) {
        if (a.gene_signature == b.gene_signature) {
            best = 2;
        } else if (cfg.species.signature_mode == SignatureMode::Overlap) {
            for (const GeneId& id : a.gene_signature) {
                if (b.gene_signature.count(id)) {
                    best = 3;
                    break;
                }
            }
        }
    }
    return best == 127 ? kNoMatch : static_cast<std::int8_t>(best);
}

std::int8_t species_strength(const Species& cand, int ref_idx, const GraphView& ref,
                             const MatchConfig& cfg) {
    std::int8_t direct = base_species_strength(cand, *ref.species[ref_idx], cfg);
    if (direct == 0 || !cfg.species.with_constituents) {
        return direct;
    }
    int best = direct == kNoMatch ? 127 : direct;
    for (int member : ref.closure_members[ref_idx]) {
        std::int8_t s = base_species_strength(cand, *ref.species[member], cfg);
        if (s != kNoMatch) {
            best = std::min(best, s + 4);
        }
    }
    return best == 127 ? kNoMatch : static_cast<std::int8_t>(best);
}

std::int8_t reaction_strength(const Reaction& a, const Reaction& b, ReactionMatchMode mode,
                              const SboOntology& o) {
    if (a.sbo_signature.empty() || b.sbo_signature.empty()) {
        return kNoMatch;
    }
    if (a.sbo_signature == b.sbo_signature) {
        return 0;
    }
    if (mode == ReactionMatchMode::SboEq) {
        return kNoMatch;
    }
    for (const TermId& t : a.sbo_signature) {
        if (b.sbo_signature.count(t)) {
            return 1;
        }
    }
    if (mode == ReactionMatchMode::SboOv) {
        return kNoMatch;
    }
    for (const TermId& x : a.sbo_signature) {
        for (const TermId& y : b.sbo_signature) {
            if (o.related(x, y)) {
                return 2;
            }
        }
    }
    return kNoMatch;
}

// ---------------------------------------------------------------------
// Per-run compatibility index: candidate species/reactions share memoized
// compat lists keyed by their matching-relevant fields. prepare() runs
// single-threaded; afterwards the index is read-only.

using CompatList = std::vector<std::pair<int, std::int8_t>>; // (ref idx, strength)

class MatchIndex {
public:
    MatchIndex(const GraphView& ref, const MatchConfig& cfg, const SboOntology& o)
        : ref_(ref), cfg_(cfg), o_(o) {}

    void prepare(const PathwayGraph& candidate) {
        for (const auto& [id, s] : candidate.species()) {
            species_memo_.try_emplace(species_key(s)).first->second = {};
        }
        for (auto& [key, list] : species_memo_) {
            list = compute_species(key);
        }
        for (const auto& [id, r] : candidate.reactions()) {
            auto [it, fresh] = reaction_memo_.try_emplace(reaction_key(r));
            if (fresh) {
                it->second = compute_reaction(r);
            }
        }
    }

    const CompatList& species_compat(const Species& cand) const {
        return species_memo_.at(species_key(cand));
    }

    const CompatList& reaction_compat(const Reaction& cand) const {
        return reaction_memo_.at(reaction_key(cand));
    }

    std::int8_t species_strength_at(const Species& cand, int ref_idx) const {
        return strength_at(species_compat(cand), ref_idx);
    }

    std::int8_t reaction_strength_at(const Reaction& cand, int ref_idx) const {
        return strength_at(reaction_compat(cand), ref_idx);
    }

private:
    const GraphView& ref_;
    MatchConfig cfg_;
    const SboOntology& o_;
    std::map<std::string, CompatList> species_memo_;
    std::map<std::string, CompatList> reaction_memo_;

    static std::int8_t strength_at(const CompatList& list, int ref_idx) {
        auto it = std::lower_bound(list.begin(), list.end(), ref_idx,
                                   [](const auto& p, int v) { return p.first < v; });
        return it != list.end() && it->first == ref_idx ? it->second : kNoMatch;
    }

    static std::string species_key(const Species& s) {
        std::string key = s.normalized_name;
        key.push_back('\x1f');
        for (const GeneId& g : s.gene_signature) {
            key += g;
            key.push_back(',');
        }
        return key;
    }

    static std::string reaction_key(const Reaction& r) {
        std::string key;
        for (const TermId& t : r.sbo_signature) {
            key += t;
            key.push_back(',');
        }
        return key;
    }

    CompatList compute_species(const std::string& key) const {
        // Key carries exactly the fields base_species_strength reads.
        Species probe;
        std::size_t sep = key.find('\x1f');
        probe.normalized_name = key.substr(0, sep);
        std::size_t start = sep + 1;
        while (start < key.size()) {
            std::size_t comma = key.find(',', start);
            if (comma == std::string::npos) {
                probe.gene_signature.insert(key.substr(start));
                break;
            }
            probe.gene_signature.insert(key.substr(start, comma - start));
            start = comma + 1;
        }
        CompatList out;
        for (int i = 0; i < static_cast<int>(ref_.species.size()); ++i) {
            std::int8_t s = species_strength(probe, i, ref_, cfg_);
            if (s != kNoMatch) {
                out.emplace_back(i, s);
            }
        }
        return out;
    }

    CompatList compute_reaction(const Reaction& cand) const {
        CompatList out;
        for (int i = 0; i < static_cast<int>(ref_.reactions.size()); ++i) {
            std::int8_t s = reaction_strength(cand, *ref_.reactions[i], cfg_.reaction, o_);
            if (s != kNoMatch) {
                out.emplace_back(i, s);
            }
        }
        return out;
    }
};

// ---------------------------------------------------------------------
// Search state shared by the exhaustive and beam searches. Component nodes
// are encoded as species idx, or comp.species.size() + reaction idx.

struct SearchState {
    std::vector<int> map_species;  // comp species idx -> ref species idx / -1
    std::vector<int> map_reaction; // comp reaction idx -> ref reaction idx / -1
    std::vector<char> used_species;
    std::vector<char> used_reaction;
    std::size_t matched = 0; // comp edges matched in the reference
    std::size_t decided = 0; // comp edges with both endpoints mapped
    std::size_t mapped_nodes = 0;

    SearchState(const GraphView& comp, const GraphView& ref)
        : map_species(comp.species.size(), -1),
          map_reaction(comp.reactions.size(), -1),
          used_species(ref.species.size(), 0),
          used_reaction(ref.reactions.size(), 0) {}

    bool better_than(std::size_t edges, std::size_t nodes) const {
        return matched > edges || (matched == edges && mapped_nodes > nodes);
    }

    std::string key(const GraphView& comp) const {
        std::string k;
        for (std::size_t i = 0; i < map_species.size(); ++i) {
            if (map_species[i] >= 0) {
                k += 's' + std::to_string(i) + ':' + std::to_string(map_species[i]) + ';';
            }
        }
        for (std::size_t i = 0; i < map_reaction.size(); ++i) {
            if (map_reaction[i] >= 0) {
                k += 'r' + std::to_string(i) + ':' + std::to_string(map_reaction[i]) + ';';
            }
        }
        return k;
    }
};

struct Pair {
    std::int8_t strength;
    bool is_reaction;
    int comp_node; // species or reaction idx, per is_reaction
    int ref_node;

    auto order_key() const { return std::make_tuple(strength, is_reaction, comp_node, ref_node); }
    bool operator==(const Pair&) const = default;
};

struct EdgeDelta {
    int decided;
    int matched;
};

class Matcher {
public:
    Matcher(const GraphView& comp, const GraphView& ref, const MatchIndex& index,
            const OverlapOptions& opts)
        : comp_(comp), ref_(ref), index_(index), opts_(opts) {}

    ComponentMatch run() {
        if (static_cast<std::size_t>(comp_.node_count()) > opts_.exact_node_limit) {
            return beam();
        }
        ComponentMatch exact = exhaustive();
        if (budget_exceeded_) {
            return beam();
        }
        return exact;
    }

private:
    const GraphView& comp_;
    const GraphView& ref_;
    const MatchIndex& index_;
    const OverlapOptions& opts_;

    std::size_t expansions_ = 0;
    bool budget_exceeded_ = false;
    int anchor_reaction_ = 0; // reactions below this index stay unmapped

    std::size_t best_edges_ = 0;
    std::size_t best_nodes_ = 0;
    bool have_best_ = false;
    std::vector<int> best_species_;
    std::vector<int> best_reactions_;

    std::vector<Pair> anchors() const {
        std::vector<Pair> out;
        for (int rc = 0; rc < static_cast<int>(comp_.reactions.size()); ++rc) {
            for (const auto& [rr, strength] : index_.reaction_compat(*comp_.reactions[rc])) {
                out.push_back(Pair{strength, true, rc, rr});
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Pair& a, const Pair& b) { return a.order_key() < b.order_key(); });
        return out;
    }

    // Extension pairs: an unmapped component node adjacent to a mapped one
    // through an edge whose image (same role) exists in the reference.
    std::vector<Pair> frontier(const SearchState& st, const std::vector<Pair>& banned) const {
        std::vector<Pair> out;
        auto push = [&](bool is_reaction, int c, int r, std::int8_t strength) {
            Pair p{strength, is_reaction, c, r};
            for (const Pair& b : banned) {
                if (b == p) {
                    return;
                }
            }
            if (std::find(out.begin(), out.end(), p) == out.end()) {
                out.push_back(p);
            }
        };

        for (std::size_t ce = 0; ce < comp_.edges.size(); ++ce) {
            const FlatEdge& e = comp_.edges[ce];
            int ms = st.map_species[e.species];
            int mr = st.map_reaction[e.reaction];
            if ((ms >= 0) == (mr >= 0)) {
                continue; // both mapped or both unmapped
            }
            if (ms >= 0) {
                // extend to the unmapped reaction
                if (e.reaction < anchor_reaction_) {
                    continue;
                }
                for (int re : ref_.species_edges[ms]) {
                    const FlatEdge& fe = ref_.edges[re];
                    if (fe.role != e.role || st.used_reaction[fe.reaction]) {
                        continue;
                    }
                    std::int8_t s =
                        index_.reaction_strength_at(*comp_.reactions[e.reaction], fe.reaction);
                    if (s != kNoMatch) {
                        push(true, e.reaction, fe.reaction, s);
                    }
                }
            } else {
                for (int re : ref_.reaction_edges[mr]) {
                    const FlatEdge& fe = ref_.edges[re];
                    if (fe.role != e.role || st.used_species[fe.species]) {
                        continue;
                    }
                    std::int8_t s =
                        index_.species_strength_at(*comp_.species[e.species], fe.species);
                    if (s != kNoMatch) {
                        push(false, e.species, fe.species, s);
                    }
                }
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Pair& a, const Pair& b) { return a.order_key() < b.order_key(); });
        return out;
    }

    EdgeDelta apply(SearchState& st, const Pair& p) const {
        EdgeDelta delta{0, 0};
        if (p.is_reaction) {
            st.map_reaction[p.comp_node] = p.ref_node;
            st.used_reaction[p.ref_node] = 1;
            for (int ce : comp_.reaction_edges[p.comp_node]) {
                const FlatEdge& e = comp_.edges[ce];
                int ms = st.map_species[e.species];
                if (ms < 0) {
                    continue;
                }
                ++delta.decided;
                if (ref_.edge_at(ms, p.ref_node, e.role) >= 0) {
                    ++delta.matched;
                }
            }
        } else {
            st.map_species[p.comp_node] = p.ref_node;
            st.used_species[p.ref_node] = 1;
            for (int ce : comp_.species_edges[p.comp_node]) {
                const FlatEdge& e = comp_.edges[ce];
                int mr = st.map_reaction[e.reaction];
                if (mr < 0) {
                    continue;
                }
                ++delta.decided;
                if (ref_.edge_at(p.ref_node, mr, e.role) >= 0) {
                    ++delta.matched;
                }
            }
        }
        st.decided += delta.decided;
        st.matched += delta.matched;
        st.mapped_nodes += 1;
        return delta;
    }

    void undo(SearchState& st, const Pair& p, const EdgeDelta& delta) const {
        if (p.is_reaction) {
            st.map_reaction[p.comp_node] = -1;
            st.used_reaction[p.ref_node] = 0;
        } else {
            st.map_species[p.comp_node] = -1;
            st.used_species[p.ref_node] = 0;
        }
        st.decided -= delta.decided;
        st.matched -= delta.matched;
        st.mapped_nodes -= 1;
    }

    void note_best(const SearchState& st) {
        if (!have_best_ || st.better_than(best_edges_, best_nodes_)) {
            have_best_ = true;
            best_edges_ = st.matched;
            best_nodes_ = st.mapped_nodes;
            best_species_ = st.map_species;
            best_reactions_ = st.map_reaction;
        }
    }

    void dfs(SearchState& st, std::vector<Pair>& banned) {
        if (budget_exceeded_) {
            return;
        }
        if (++expansions_ > opts_.expansion_budget) {
            budget_exceeded_ = true;
            return;
        }
        // Edges with an unmapped endpoint are the only ones that can still
        // match; prune when even those cannot beat the best.
        std::size_t edge_bound = st.matched + (comp_.edges.size() - st.decided);
        if (have_best_) {
            if (edge_bound < best_edges_) {
                return;
            }
            std::size_t node_bound =
                st.mapped_nodes + (static_cast<std::size_t>(comp_.node_count()) - st.mapped_nodes);
            if (edge_bound == best_edges_ && node_bound <= best_nodes_) {
                return;
            }
        }
        std::vector<Pair> pairs = frontier(st, banned);
        if (pairs.empty()) {
            return;
        }
        const Pair p = pairs.front();

        EdgeDelta delta = apply(st, p);
        note_best(st);
        dfs(st, banned);
        undo(st, p, delta);
        if (budget_exceeded_) {
            return;
        }

        banned.push_back(p);
        dfs(st, banned);
        banned.pop_back();
    }

    ComponentMatch exhaustive() {
        have_best_ = false;
        best_edges_ = best_nodes_ = 0;
        expansions_ = 0;
        budget_exceeded_ = false;

        SearchState st(comp_, ref_);
        std::vector<Pair> banned;
        for (const Pair& anchor : anchors()) {
            if (budget_exceeded_) {
                break;
            }
            anchor_reaction_ = anchor.comp_node;
            EdgeDelta delta = apply(st, anchor);
            note_best(st);
            dfs(st, banned);
            undo(st, anchor, delta);
        }
        return extract(true);
    }

    ComponentMatch beam() {
        have_best_ = false;
        best_edges_ = best_nodes_ = 0;
        anchor_reaction_ = 0; // no symmetry breaking in the greedy phase

        struct BeamState {
            SearchState st;
            std::string key;
        };

        std::vector<Pair> no_bans;
        std::vector<BeamState> beam_states;
        std::vector<Pair> seeds = anchors();
        if (seeds.size() > opts_.beam_width * 8) {
            seeds.erase(seeds.begin() + static_cast<std::ptrdiff_t>(opts_.beam_width * 8),
                        seeds.end());
        }
        for (const Pair& seed : seeds) {
            SearchState st(comp_, ref_);
            apply(st, seed);
            note_best(st);
            beam_states.push_back({st, st.key(comp_)});
        }

        while (!beam_states.empty()) {
            std::vector<BeamState> pool;
            for (BeamState& bs : beam_states) {
                std::vector<Pair> pairs = frontier(bs.st, no_bans);
                if (pairs.size() > opts_.beam_extensions) {
                    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(opts_.beam_extensions),
                                pairs.end());
                }
                for (const Pair& p : pairs) {
                    SearchState st = bs.st;
                    apply(st, p);
                    note_best(st);
                    pool.push_back({std::move(st), std::string()});
                }
            }
            if (pool.empty()) {
                break;
            }
            for (BeamState& bs : pool) {
                bs.key = bs.st.key(comp_);
            }
            std::sort(pool.begin(), pool.end(), [](const BeamState& a, const BeamState& b) {
                if (a.st.matched != b.st.matched) {
                    return a.st.matched > b.st.matched;
                }
                if (a.st.mapped_nodes != b.st.mapped_nodes) {
                    return a.st.mapped_nodes > b.st.mapped_nodes;
                }
                return a.key < b.key;
            });
            pool.erase(std::unique(pool.begin(), pool.end(),
                                   [](const BeamState& a, const BeamState& b) {
                                       return a.key == b.key;
                                   }),
                       pool.end());
            if (pool.size() > opts_.beam_width) {
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(opts_.beam_width),
                           pool.end());
            }
            beam_states = std::move(pool);
        }
        // An empty result means no anchor existed at all, which is exact.
        return extract(!have_best_);
    }

    ComponentMatch extract(bool exact) const {
        ComponentMatch m;
        m.exact = exact;
        if (!have_best_) {
            return m;
        }
        for (std::size_t i = 0; i < best_species_.size(); ++i) {
            if (best_species_[i] >= 0) {
                m.node_pairs.push_back({{NodeKind::Species, comp_.species[i]->id},
                                        {NodeKind::Species, ref_.species[best_species_[i]]->id}});
            }
        }
        for (std::size_t i = 0; i < best_reactions_.size(); ++i) {
            if (best_reactions_[i] >= 0) {
                m.node_pairs.push_back(
                    {{NodeKind::Reaction, comp_.reactions[i]->id},
                     {NodeKind::Reaction, ref_.reactions[best_reactions_[i]]->id}});
            }
        }
        std::sort(m.node_pairs.begin(), m.node_pairs.end());
        for (const FlatEdge& e : comp_.edges) {
            int ms = best_species_[e.species];
            int mr = best_reactions_[e.reaction];
            if (ms < 0 || mr < 0 || ref_.edge_at(ms, mr, e.role) < 0) {
                continue;
            }
            Edge cand{comp_.species[e.species]->id, comp_.reactions[e.reaction]->id, e.role};
            Edge ref{ref_.species[ms]->id, ref_.reactions[mr]->id, e.role};
            m.edge_pairs.push_back({cand, ref});
        }
        std::sort(m.edge_pairs.begin(), m.edge_pairs.end());
        m.matched_edges = m.edge_pairs.size();
        m.matched_nodes = m.node_pairs.size();
        return m;
    }
};

unsigned env_thread_cap() {
    if (const char* env = std::getenv("PATHOVERLAP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return 0;
}

unsigned resolve_threads(const OverlapOptions& opts) {
    unsigned n = opts.threads;
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
        if (unsigned cap = env_thread_cap()) {
            n = std::min(n, cap);
        }
    }
    return n;
}

} // namespace

ComponentMatch max_overlap(const PathwayGraph& component, const PathwayGraph& reference,
                           const MatchConfig& cfg, const SboOntology& o,
                           const OverlapOptions& opts) {
    cfg.validate();
    GraphView ref = GraphView::build(reference);
    MatchIndex index(ref, cfg, o);
    index.prepare(component);
    GraphView comp = GraphView::build(component);
    return Matcher(comp, ref, index, opts).run();
}

ComponentMatch brute_force_overlap(const PathwayGraph& component, const PathwayGraph& reference,
                                   const MatchConfig& cfg, const SboOntology& o) {
    cfg.validate();
    if (component.node_count() > 8) {
        throw PathwayError(ErrorCode::SizeLimitExceeded, "component",
                           "brute force handles at most 8 component nodes");
    }
    if (reference.node_count() > 12) {
        throw PathwayError(ErrorCode::SizeLimitExceeded, "reference",
                           "brute force handles at most 12 reference nodes");
    }

    std::vector<const Species*> cs;
    std::vector<const Reaction*> cr;
    for (const auto& [id, s] : component.species()) {
        cs.push_back(&s);
    }
    for (const auto& [id, r] : component.reactions()) {
        cr.push_back(&r);
    }
    std::vector<const Species*> rs;
    std::vector<const Reaction*> rr;
    for (const auto& [id, s] : reference.species()) {
        rs.push_back(&s);
    }
    for (const auto& [id, r] : reference.reactions()) {
        rr.push_back(&r);
    }

    std::vector<int> map_s(cs.size(), -1);
    std::vector<int> map_r(cr.size(), -1);
    std::vector<char> used_s(rs.size(), 0);
    std::vector<char> used_r(rr.size(), 0);

    ComponentMatch best;
    std::size_t best_edges = 0;
    std::size_t best_nodes = 0;
    bool have_best = false;

    // Best connected matched-edge subgraph of the current complete map.
    auto score_leaf = [&]() {
        std::vector<std::pair<const Edge*, Edge>> matched;
        for (const Edge& e : component.edges()) {
            int si = -1;
            int ri = -1;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (cs[i]->id == e.species) {
                    si = map_s[i];
                }
            }
            for (std::size_t i = 0; i < cr.size(); ++i) {
                if (cr[i]->id == e.reaction) {
                    ri = map_r[i];
                }
            }
            if (si < 0 || ri < 0) {
                continue;
            }
            Edge image{rs[si]->id, rr[ri]->id, e.role};
            for (const Edge& fe : reference.edges()) {
                if (fe == image) {
                    matched.push_back({&e, image});
                    break;
                }
            }
        }
        if (matched.empty()) {
            return;
        }
        // Union-find over component nodes joined by matched edges.
        std::map<NodeRef, NodeRef> parent;
        std::function<NodeRef(NodeRef)> find = [&](NodeRef x) {
            auto it = parent.find(x);
            if (it == parent.end() || it->second == x) {
                parent[x] = x;
                return x;
            }
            return parent[x] = find(it->second);
        };
        for (const auto& [ce, image] : matched) {
            NodeRef a{NodeKind::Species, ce->species};
            NodeRef b{NodeKind::Reaction, ce->reaction};
            parent[find(a)] = find(b);
        }
        std::map<NodeRef, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < matched.size(); ++i) {
            groups[find({NodeKind::Species, matched[i].first->species})].push_back(i);
        }
        for (const auto& [root, edge_idxs] : groups) {
            std::set<NodeRef> nodes;
            for (std::size_t i : edge_idxs) {
                nodes.insert({NodeKind::Species, matched[i].first->species});
                nodes.insert({NodeKind::Reaction, matched[i].first->reaction});
            }
            if (!have_best || edge_idxs.size() > best_edges ||
                (edge_idxs.size() == best_edges && nodes.size() > best_nodes)) {
                have_best = true;
                best_edges = edge_idxs.size();
                best_nodes = nodes.size();
                best.node_pairs.clear();
                best.edge_pairs.clear();
                for (const NodeRef& n : nodes) {
                    if (n.kind == NodeKind::Species) {
                        for (std::size_t i = 0; i < cs.size(); ++i) {
                            if (cs[i]->id == n.id) {
                                best.node_pairs.push_back(
                                    {n, {NodeKind::Species, rs[map_s[i]]->id}});
                            }
                        }
                    } else {
                        for (std::size_t i = 0; i < cr.size(); ++i) {
                            if (cr[i]->id == n.id) {
                                best.node_pairs.push_back(
                                    {n, {NodeKind::Reaction, rr[map_r[i]]->id}});
                            }
                        }
                    }
                }
                for (std::size_t i : edge_idxs) {
                    best.edge_pairs.push_back({*matched[i].first, matched[i].second});
                }
                std::sort(best.node_pairs.begin(), best.node_pairs.end());
                std::sort(best.edge_pairs.begin(), best.edge_pairs.end());
            }
        }
    };

    std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (k == cs.size() + cr.size()) {
            score_leaf();
            return;
        }
        if (k < cs.size()) {
            for (std::size_t i = 0; i < rs.size(); ++i) {
                if (used_s[i] || !species_match(*cs[k], *rs[i], reference, cfg)) {
                    continue;
                }
                map_s[k] = static_cast<int>(i);
                used_s[i] = 1;
                assign(k + 1);
                used_s[i] = 0;
            }
            map_s[k] = -1;
            assign(k + 1);
        } else {
            std::size_t j = k - cs.size();
            for (std::size_t i = 0; i < rr.size(); ++i) {
                if (used_r[i] || !reaction_match(*cr[j], *rr[i], cfg.reaction, o)) {
                    continue;
                }
                map_r[j] = static_cast<int>(i);
                used_r[i] = 1;
                assign(k + 1);
                used_r[i] = 0;
            }
            map_r[j] = -1;
            assign(k + 1);
        }
    };
    assign(0);

    if (!have_best) {
        // A lone type-compatible reaction pair is still a one-node common
        // subgraph; take the first in id order.
        for (const Reaction* c : cr) {
            for (const Reaction* r : rr) {
                if (reaction_match(*c, *r, cfg.reaction, o)) {
                    best.node_pairs.push_back(
                        {{NodeKind::Reaction, c->id}, {NodeKind::Reaction, r->id}});
                    best.matched_nodes = 1;
                    return best;
                }
            }
        }
        return best;
    }
    best.matched_edges = best_edges;
    best.matched_nodes = best.node_pairs.size();
    return best;
}

OverlapReport network_overlap(const PathwayGraph& candidate, const PathwayGraph& reference,
                              const MatchConfig& cfg, const SboOntology& o,
                              const OverlapOptions& opts) {
    cfg.validate();
    PathwayGraph stripped = strip_isolated(candidate);
    std::vector<PathwayGraph> components = connected_components(stripped);

    GraphView ref = GraphView::build(reference);
    MatchIndex index(ref, cfg, o);
    index.prepare(stripped);

    OverlapReport report;
    report.candidate_nodes = stripped.node_count();
    report.candidate_edges = stripped.edges().size();
    report.reference_nodes = reference.node_count();
    report.reference_edges = reference.edges().size();
    report.component_matches.resize(components.size());

    unsigned threads = resolve_threads(opts);
    unsigned max_useful = components.empty() ? 1u : static_cast<unsigned>(components.size());
    threads = std::max(1u, std::min(threads, max_useful));

    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= components.size()) {
                return;
            }
            GraphView comp = GraphView::build(components[i]);
            report.component_matches[i] = Matcher(comp, ref, index, opts).run();
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    std::set<NodeRef> covered_nodes;
    std::set<Edge> covered_edges;
    for (const ComponentMatch& m : report.component_matches) {
        report.matched_candidate_nodes += m.node_pairs.size();
        report.matched_candidate_edges += m.edge_pairs.size();
        for (const auto& [cand, ref_node] : m.node_pairs) {
            covered_nodes.insert(ref_node);
        }
        for (const auto& [cand, ref_edge] : m.edge_pairs) {
            covered_edges.insert(ref_edge);
        }
        if (m.exact) {
            ++report.exact_components;
        } else {
            ++report.approx_components;
        }
    }
    report.covered_reference_nodes = covered_nodes.size();
    report.covered_reference_edges = covered_edges.size();

    auto pct = [](std::size_t num, std::size_t den) {
        return den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den);
    };
    report.node_precision = pct(report.matched_candidate_nodes, report.candidate_nodes);
    report.edge_precision = pct(report.matched_candidate_edges, report.candidate_edges);
    report.node_recall = pct(report.covered_reference_nodes, report.reference_nodes);
    report.edge_recall = pct(report.covered_reference_edges, report.reference_edges);
    return report;
}

} // namespace pathoverlap
