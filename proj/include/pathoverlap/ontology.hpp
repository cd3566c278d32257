#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "pathoverlap/model.hpp"

namespace pathoverlap {

/// DAG of reaction-type terms with is_a edges. Immutable after load;
/// the reflexive-transitive ancestor closure is precomputed.
class SboOntology {
public:
    SboOntology() = default;

    /// terms: id -> label. is_a: (child, parent) pairs. Validates that edge
    /// endpoints are declared and that the edges form a DAG.
    static SboOntology build(std::map<TermId, std::string> terms,
                             std::set<std::pair<TermId, TermId>> is_a);

    const std::map<TermId, std::string>& terms() const { return terms_; }
    const std::set<std::pair<TermId, TermId>>& is_a() const { return is_a_; }

    bool has_term(const TermId& t) const { return terms_.count(t) != 0; }
    const std::string& label(const TermId& t) const;

    /// Reflexive-transitive closure over is_a; includes t itself.
    /// Throws UnknownTerm for undeclared terms.
    const std::set<TermId>& ancestors(const TermId& t) const;

    /// True iff a == b, or a is an ancestor of b, or b is an ancestor of a.
    bool related(const TermId& a, const TermId& b) const;

    std::size_t term_count() const { return terms_.size(); }

private:
    std::map<TermId, std::string> terms_;
    std::set<std::pair<TermId, TermId>> is_a_;
    std::map<TermId, std::set<TermId>> ancestors_;
};

/// Loads the flat TSV format: edge lines `child<TAB>parent` and label lines
/// `term<TAB>=<TAB>label`. Blank lines and `#` comments are skipped.
/// Throws BadLine, UnknownTermInEdge or CyclicOntology.
SboOntology load_ontology(const std::string& text);

} // namespace pathoverlap
