#pragma once

#include <map>
#include <string>

#include "pathoverlap/model.hpp"
#include "pathoverlap/standoff.hpp"

namespace pathoverlap {

/// How a trigger kind turns into reaction structure.
enum class TriggerClass {
    Modification,  // Theme -> Reactant, synthesized token-prefixed Product
    Binding,       // Themes -> Reactants, synthesized complex Product
    Translocation, // like Modification, relocation token
    Expression,    // Theme -> Product only
    Degradation,   // Theme -> Reactant only
    Regulation,    // Cause -> Modifier on the Theme's reaction
};

struct TriggerRule {
    TriggerClass cls;
    TermId term;
    std::string state_token; // used by Modification/Translocation
};

/// Maps trigger kinds to conversion rules and reaction-type terms.
struct TriggerMap {
    std::map<std::string, TriggerRule> rules;

    /// Covers the usual BioNLP pathway event inventory.
    static TriggerMap defaults();

    /// TSV lines `kind<TAB>class<TAB>term[<TAB>token]`, class one of
    /// modification|binding|translocation|expression|degradation|regulation.
    static TriggerMap load(const std::string& text);

    const TriggerRule* find(const std::string& kind) const;
};

struct ConversionWarnings {
    std::size_t dropped_site_arguments = 0; // Site/Loc/... roles have no home
    std::size_t dropped_modifiers = 0;      // negation/speculation lines
    std::size_t inert_events = 0;           // events that produced nothing
    std::size_t unresolved_nested = 0;      // nested refs without an anchor

    std::size_t total() const {
        return dropped_site_arguments + dropped_modifiers + inert_events + unresolved_nested;
    }
};

struct ConversionResult {
    PathwayGraph graph;
    ConversionWarnings warnings;
};

/// One reaction per effective event. Every .a1 entity becomes a species
/// (isolated if unused); trigger spans do not. Nested events contribute
/// their synthesized product, falling back to their first theme species.
/// Throws UnmappedTrigger for kinds missing from the map.
ConversionResult events_to_graph(const EventSet& es, const TriggerMap& triggers);

} // namespace pathoverlap
