#include "pathoverlap/reaction_rules.hpp"

#include <cctype>

#include "pathoverlap/terms.hpp"

namespace pathoverlap {

ReactionTypeRules ReactionTypeRules::defaults() {
    return ReactionTypeRules{
        {
            {"p-", terms::phosphorylation, terms::dephosphorylation},
            {"phospho-", terms::phosphorylation, terms::dephosphorylation},
            {"phosphorylated ", terms::phosphorylation, terms::dephosphorylation},
            {"dep-", terms::dephosphorylation, terms::phosphorylation},
            {"ub-", terms::ubiquitination, terms::deubiquitination},
            {"ubiquitinated ", terms::ubiquitination, terms::deubiquitination},
            {"deub-", terms::deubiquitination, terms::ubiquitination},
            {"ac-", terms::acetylation, terms::deacetylation},
            {"acetylated ", terms::acetylation, terms::deacetylation},
            {"deac-", terms::deacetylation, terms::acetylation},
            {"loc-", terms::transport, terms::transport},
        },
        terms::association,
        terms::dissociation,
        terms::conversion,
    };
}

namespace {

std::string folded(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) {
            out.push_back(' ');
        }
        in_space = false;
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

bool is_prefixed_form(const std::string& derived, const std::string& token,
                      const std::string& base) {
    return folded(derived) == folded(token) + folded(base);
}

} // namespace

PathwayGraph infer_reaction_types(const PathwayGraph& g, const ReactionTypeRules& rules) {
    return g.transform_reactions([&](const Reaction& r) {
        std::vector<const Species*> reactants;
        std::vector<const Species*> products;
        for (std::size_t i : g.edges_of_reaction(r.id)) {
            const Edge& e = g.edges()[i];
            const Species* s = g.find_species(e.species);
            if (e.role == EdgeRole::Reactant) {
                reactants.push_back(s);
            } else if (e.role == EdgeRole::Product) {
                products.push_back(s);
            }
        }

        std::set<TermId> deduced;
        for (const StateTokenRule& rule : rules.token_rules) {
            for (const Species* p : products) {
                for (const Species* c : reactants) {
                    if (is_prefixed_form(p->name, rule.token, c->name)) {
                        deduced.insert(rule.forward_term);
                    } else if (is_prefixed_form(c->name, rule.token, p->name)) {
                        deduced.insert(rule.reverse_term);
                    }
                }
            }
            if (!deduced.empty()) {
                break;
            }
        }
        if (deduced.empty() && reactants.size() >= 2 && products.size() == 1 &&
            products[0]->is_complex()) {
            deduced.insert(rules.association_term);
        }
        if (deduced.empty() && products.size() >= 2 && reactants.size() == 1 &&
            reactants[0]->is_complex()) {
            deduced.insert(rules.dissociation_term);
        }

        Reaction out = r;
        out.sbo_signature.insert(deduced.begin(), deduced.end());
        if (out.sbo_signature.empty()) {
            out.sbo_signature.insert(rules.fallback_term);
        }
        return out;
    });
}

} // namespace pathoverlap
