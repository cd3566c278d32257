#include "pathoverlap/events.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "pathoverlap/terms.hpp"

namespace pathoverlap {

TriggerMap TriggerMap::defaults() {
    TriggerMap m;
    m.rules = {
        {"Phosphorylation", {TriggerClass::Modification, terms::phosphorylation, "p-"}},
        {"Dephosphorylation", {TriggerClass::Modification, terms::dephosphorylation, "dep-"}},
        {"Ubiquitination", {TriggerClass::Modification, terms::ubiquitination, "ub-"}},
        {"Deubiquitination", {TriggerClass::Modification, terms::deubiquitination, "deub-"}},
        {"Acetylation", {TriggerClass::Modification, terms::acetylation, "ac-"}},
        {"Deacetylation", {TriggerClass::Modification, terms::deacetylation, "deac-"}},
        {"Binding", {TriggerClass::Binding, terms::association, ""}},
        {"Dissociation", {TriggerClass::Degradation, terms::dissociation, ""}},
        {"Localization", {TriggerClass::Translocation, terms::localization, "loc-"}},
        {"Transport", {TriggerClass::Translocation, terms::transport, "loc-"}},
        {"Gene_expression", {TriggerClass::Expression, terms::gene_expression, ""}},
        {"Transcription", {TriggerClass::Expression, terms::transcription, ""}},
        {"Translation", {TriggerClass::Expression, terms::translation, ""}},
        {"Protein_catabolism", {TriggerClass::Degradation, terms::protein_catabolism, ""}},
        {"Regulation", {TriggerClass::Regulation, terms::regulation, ""}},
        {"Positive_regulation", {TriggerClass::Regulation, terms::positive_regulation, ""}},
        {"Negative_regulation", {TriggerClass::Regulation, terms::negative_regulation, ""}},
    };
    return m;
}

namespace {

TriggerClass parse_class(const std::string& s, int lineno) {
    if (s == "modification") return TriggerClass::Modification;
    if (s == "binding") return TriggerClass::Binding;
    if (s == "translocation") return TriggerClass::Translocation;
    if (s == "expression") return TriggerClass::Expression;
    if (s == "degradation") return TriggerClass::Degradation;
    if (s == "regulation") return TriggerClass::Regulation;
    throw PathwayError(ErrorCode::BadLine, std::to_string(lineno), "unknown class " + s);
}

} // namespace

TriggerMap TriggerMap::load(const std::string& text) {
    TriggerMap m;
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
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (fields.size() < 3 || fields[0].empty() || fields[2].empty()) {
            throw PathwayError(ErrorCode::BadLine, std::to_string(lineno), line);
        }
        TriggerRule rule;
        rule.cls = parse_class(fields[1], lineno);
        rule.term = fields[2];
        rule.state_token = fields.size() > 3 ? fields[3] : "";
        m.rules[fields[0]] = rule;
    }
    return m;
}

const TriggerRule* TriggerMap::find(const std::string& kind) const {
    auto it = rules.find(kind);
    return it == rules.end() ? nullptr : &it->second;
}

namespace {

struct EventOutcome {
    std::optional<ReactionId> reaction;
    std::optional<SpeciesId> product;     // synthesized or produced species
    std::vector<SpeciesId> theme_species; // resolved themes, in order
};

bool is_theme_role(const std::string& role) {
    return role.rfind("Theme", 0) == 0;
}

class Converter {
public:
    Converter(const EventSet& es, const TriggerMap& triggers) : es_(es), triggers_(triggers) {
        warnings_.dropped_modifiers = es.dropped_modifiers;
        for (const Event& e : es.events) {
            events_by_id_[e.id] = &e;
        }
    }

    ConversionResult run() {
        // Every a1 entity is a species, participating or not.
        for (std::size_t i = 0; i < es_.a1_entity_count; ++i) {
            add_entity_species(es_.entities[i]);
        }
        for (const Event& e : es_.events) {
            convert(e);
        }
        std::vector<Edge> edges(edges_.begin(), edges_.end());
        PathwayGraph g = PathwayGraph::build(std::move(species_), std::move(reactions_),
                                             std::move(edges));
        return ConversionResult{std::move(g), warnings_};
    }

private:
    const EventSet& es_;
    const TriggerMap& triggers_;
    ConversionWarnings warnings_;
    std::map<std::string, const Event*> events_by_id_;
    std::map<std::string, EventOutcome> outcomes_;
    std::set<SpeciesId> species_ids_;
    std::vector<Species> species_;
    std::vector<Reaction> reactions_;
    std::set<Edge> edges_;

    void add_entity_species(const Entity& ent) {
        if (species_ids_.insert(ent.id).second) {
            species_.push_back(Species{ent.id, ent.surface, "", {}, {}});
        }
    }

    SpeciesId add_generated_species(const SpeciesId& id, const std::string& name,
                                    std::vector<SpeciesId> constituents = {}) {
        if (species_ids_.insert(id).second) {
            species_.push_back(Species{id, name, "", {}, std::move(constituents)});
        }
        return id;
    }

    const std::string& species_name(const SpeciesId& id) const {
        for (const Species& s : species_) {
            if (s.id == id) {
                return s.name;
            }
        }
        static const std::string empty;
        return empty;
    }

    // Species standing in for an argument: the entity itself, or a nested
    // event's product / first theme.
    std::optional<SpeciesId> resolve_arg_species(const std::string& target) {
        if (const Entity* ent = es_.find_entity(target)) {
            add_entity_species(*ent);
            return ent->id;
        }
        auto it = events_by_id_.find(target);
        if (it == events_by_id_.end()) {
            return std::nullopt;
        }
        const EventOutcome& inner = convert(*it->second);
        if (inner.product) {
            return inner.product;
        }
        if (!inner.theme_species.empty()) {
            return inner.theme_species.front();
        }
        warnings_.unresolved_nested += 1;
        return std::nullopt;
    }

    const EventOutcome& convert(const Event& ev) {
        auto done = outcomes_.find(ev.id);
        if (done != outcomes_.end()) {
            return done->second;
        }
        outcomes_[ev.id] = EventOutcome{}; // placeholder; event DAG is acyclic

        const TriggerRule* rule = triggers_.find(ev.trigger_kind);
        if (!rule) {
            throw PathwayError(ErrorCode::UnmappedTrigger, ev.trigger_kind);
        }

        std::vector<SpeciesId> themes;
        std::vector<SpeciesId> causes;
        std::vector<const EventArgument*> theme_args;
        for (const EventArgument& arg : ev.arguments) {
            if (is_theme_role(arg.role)) {
                theme_args.push_back(&arg);
                if (auto s = resolve_arg_species(arg.target)) {
                    themes.push_back(*s);
                }
            } else if (arg.role == "Cause") {
                if (auto s = resolve_arg_species(arg.target)) {
                    causes.push_back(*s);
                }
            } else {
                warnings_.dropped_site_arguments += 1;
            }
        }

        EventOutcome out;
        out.theme_species = themes;
        switch (rule->cls) {
        case TriggerClass::Modification:
        case TriggerClass::Translocation: {
            if (themes.empty()) {
                warnings_.inert_events += 1;
                break;
            }
            ReactionId rid = start_reaction(ev.id, rule->term);
            for (std::size_t i = 0; i < themes.size(); ++i) {
                add_edge(themes[i], rid, EdgeRole::Reactant);
                SpeciesId pid = add_generated_species(
                    ev.id + ".P" + std::to_string(i),
                    rule->state_token + species_name(themes[i]));
                add_edge(pid, rid, EdgeRole::Product);
                if (!out.product) {
                    out.product = pid;
                }
            }
            add_modifiers(causes, rid);
            out.reaction = rid;
            break;
        }
        case TriggerClass::Binding: {
            if (themes.empty()) {
                warnings_.inert_events += 1;
                break;
            }
            ReactionId rid = start_reaction(ev.id, rule->term);
            std::vector<SpeciesId> constituents;
            std::string name;
            for (const SpeciesId& t : themes) {
                add_edge(t, rid, EdgeRole::Reactant);
                if (std::find(constituents.begin(), constituents.end(), t) ==
                    constituents.end()) {
                    constituents.push_back(t);
                    if (!name.empty()) {
                        name += ":";
                    }
                    name += species_name(t);
                }
            }
            SpeciesId cid = add_generated_species(ev.id + ".C", name, constituents);
            add_edge(cid, rid, EdgeRole::Product);
            add_modifiers(causes, rid);
            out.reaction = rid;
            out.product = cid;
            break;
        }
        case TriggerClass::Expression: {
            if (themes.empty()) {
                warnings_.inert_events += 1;
                break;
            }
            ReactionId rid = start_reaction(ev.id, rule->term);
            for (const SpeciesId& t : themes) {
                add_edge(t, rid, EdgeRole::Product);
            }
            add_modifiers(causes, rid);
            out.reaction = rid;
            out.product = themes.front();
            break;
        }
        case TriggerClass::Degradation: {
            if (themes.empty()) {
                warnings_.inert_events += 1;
                break;
            }
            ReactionId rid = start_reaction(ev.id, rule->term);
            for (const SpeciesId& t : themes) {
                add_edge(t, rid, EdgeRole::Reactant);
            }
            add_modifiers(causes, rid);
            out.reaction = rid;
            break;
        }
        case TriggerClass::Regulation: {
            bool effective = false;
            std::vector<SpeciesId> standalone_products;
            for (const EventArgument* arg : theme_args) {
                auto ev_it = events_by_id_.find(arg->target);
                if (ev_it != events_by_id_.end()) {
                    const EventOutcome& inner = outcomes_.at(arg->target);
                    if (inner.reaction) {
                        // Regulation of a reaction: causes modify it, the
                        // regulation itself adds no reaction node.
                        if (add_modifiers(causes, *inner.reaction)) {
                            effective = true;
                        }
                        continue;
                    }
                }
                if (auto s = resolve_arg_species(arg->target)) {
                    standalone_products.push_back(*s);
                }
            }
            if (!standalone_products.empty()) {
                ReactionId rid = start_reaction(ev.id, rule->term);
                for (const SpeciesId& s : standalone_products) {
                    add_edge(s, rid, EdgeRole::Product);
                }
                add_modifiers(causes, rid);
                out.reaction = rid;
                effective = true;
            }
            if (!effective) {
                warnings_.inert_events += 1;
            }
            break;
        }
        }

        return outcomes_[ev.id] = std::move(out);
    }

    ReactionId start_reaction(const std::string& event_id, const TermId& term) {
        reactions_.push_back(Reaction{event_id, {term}});
        return event_id;
    }

    bool add_modifiers(const std::vector<SpeciesId>& causes, const ReactionId& rid) {
        for (const SpeciesId& c : causes) {
            add_edge(c, rid, EdgeRole::Modifier);
        }
        return !causes.empty();
    }

    void add_edge(const SpeciesId& s, const ReactionId& r, EdgeRole role) {
        edges_.insert(Edge{s, r, role});
    }
};

} // namespace

ConversionResult events_to_graph(const EventSet& es, const TriggerMap& triggers) {
    return Converter(es, triggers).run();
}

} // namespace pathoverlap
