#pragma once

#include <string>
#include <vector>

#include "pathoverlap/model.hpp"

namespace pathoverlap {

/// Deduces a reaction type from a product named `token + reactant` (forward
/// term) or a reactant named `token + product` (reverse term).
struct StateTokenRule {
    std::string token;
    TermId forward_term;
    TermId reverse_term;
};

struct ReactionTypeRules {
    std::vector<StateTokenRule> token_rules;
    TermId association_term;
    TermId dissociation_term;
    TermId fallback_term; // generic conversion

    static ReactionTypeRules defaults();
};

/// Rule-based typing from reactants and products. The first matching rule's
/// terms extend the signature; a reaction that matches nothing and has an
/// empty signature gets the fallback term. Never removes terms; idempotent.
PathwayGraph infer_reaction_types(const PathwayGraph& g, const ReactionTypeRules& rules);

} // namespace pathoverlap
