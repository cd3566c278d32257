#pragma once

#include <string>

#include "pathoverlap/model.hpp"
#include "pathoverlap/ontology.hpp"

namespace pathoverlap {

/// Minimal insert/delete/substitute edit distance, unit costs.
std::size_t levenshtein(const std::string& a, const std::string& b);

/// Percentage similarity: 100 for two empty strings, otherwise
/// floor(100 * (1 - levenshtein/max(|a|,|b|))).
int name_similarity(const std::string& a, const std::string& b);

enum class NameMode { Off, Exact, Approximate };
enum class SignatureMode { Off, Equal, Overlap };
enum class ReactionMatchMode { SboEq, SboOv, SboIsa };

/// Species clauses are combined by OR. At least one of name/signature
/// matching must be enabled.
struct SpeciesMatchMode {
    NameMode name_mode = NameMode::Off;
    SignatureMode signature_mode = SignatureMode::Off;
    bool with_constituents = false;
};

struct MatchConfig {
    SpeciesMatchMode species;
    ReactionMatchMode reaction = ReactionMatchMode::SboEq;
    int similarity_cutoff = 90;

    /// Throws InvalidConfig if no species clause is enabled or the cutoff
    /// is out of [0,100].
    void validate() const;
};

/// OR over the enabled clauses: exact/approximate normalized-name equality
/// and gene-signature equality/overlap. Empty signatures never match. The
/// wc clause additionally tries every species in the reference complex's
/// constituent closure, expanding the reference side only.
bool species_match(const Species& cand, const Species& ref, const PathwayGraph& ref_graph,
                   const MatchConfig& cfg);

/// sboeq: signatures equal; sbov: intersection nonempty; sboisa: some term
/// of each signature equal or in an is_a ancestor relation. Empty
/// signatures never match. sboisa throws UnknownTerm for terms missing
/// from the ontology.
bool reaction_match(const Reaction& a, const Reaction& b, ReactionMatchMode mode,
                    const SboOntology& o);

/// Strict role matching, endpoints assumed already matched.
bool edge_match(const Edge& a, const Edge& b);

/// Parses a species strategy like "appeq/entov/wc" (clauses nmeq, appeq,
/// enteq, entov, wc joined by '/') and a reaction mode "sboeq|sboov|sboisa".
/// Throws UnknownStrategy.
SpeciesMatchMode parse_species_strategy(const std::string& text);
ReactionMatchMode parse_reaction_strategy(const std::string& text);

std::string species_strategy_label(const SpeciesMatchMode& mode);
std::string reaction_strategy_label(ReactionMatchMode mode);

} // namespace pathoverlap
