#include "pathoverlap/ontology.hpp"

#include <sstream>
#include <vector>

namespace pathoverlap {

namespace {

enum class Mark { White, Grey, Black };

// Upward DFS that also fills the ancestor cache bottom-up.
void close_ancestors(const TermId& t,
                     const std::map<TermId, std::vector<TermId>>& parents,
                     std::map<TermId, std::set<TermId>>& out,
                     std::map<TermId, Mark>& marks) {
    Mark& m = marks[t];
    if (m == Mark::Grey) {
        throw PathwayError(ErrorCode::CyclicOntology, t);
    }
    if (m == Mark::Black) {
        return;
    }
    m = Mark::Grey;
    std::set<TermId> acc{t};
    auto it = parents.find(t);
    if (it != parents.end()) {
        for (const TermId& p : it->second) {
            close_ancestors(p, parents, out, marks);
            const std::set<TermId>& pa = out.at(p);
            acc.insert(pa.begin(), pa.end());
        }
    }
    out[t] = std::move(acc);
    marks[t] = Mark::Black;
}

} // namespace

SboOntology SboOntology::build(std::map<TermId, std::string> terms,
                               std::set<std::pair<TermId, TermId>> is_a) {
    SboOntology o;
    o.terms_ = std::move(terms);
    o.is_a_ = std::move(is_a);

    std::map<TermId, std::vector<TermId>> parents;
    for (const auto& [child, parent] : o.is_a_) {
        if (!o.terms_.count(child)) {
            throw PathwayError(ErrorCode::UnknownTermInEdge, child);
        }
        if (!o.terms_.count(parent)) {
            throw PathwayError(ErrorCode::UnknownTermInEdge, parent);
        }
        parents[child].push_back(parent);
    }

    std::map<TermId, Mark> marks;
    for (const auto& [t, label] : o.terms_) {
        close_ancestors(t, parents, o.ancestors_, marks);
    }
    return o;
}

const std::string& SboOntology::label(const TermId& t) const {
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        throw PathwayError(ErrorCode::UnknownTerm, t);
    }
    return it->second;
}

const std::set<TermId>& SboOntology::ancestors(const TermId& t) const {
    auto it = ancestors_.find(t);
    if (it == ancestors_.end()) {
        throw PathwayError(ErrorCode::UnknownTerm, t);
    }
    return it->second;
}

bool SboOntology::related(const TermId& a, const TermId& b) const {
    if (a == b) {
        return has_term(a) ? true : throw PathwayError(ErrorCode::UnknownTerm, a);
    }
    return ancestors(a).count(b) != 0 || ancestors(b).count(a) != 0;
}

SboOntology load_ontology(const std::string& text) {
    std::map<TermId, std::string> terms;
    std::set<std::pair<TermId, TermId>> edges;

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
        if (fields.size() == 3 && fields[1] == "=") {
            terms[fields[0]] = fields[2];
        } else if (fields.size() == 2) {
            edges.emplace(fields[0], fields[1]);
        } else {
            throw PathwayError(ErrorCode::BadLine, std::to_string(lineno), line);
        }
    }
    return SboOntology::build(std::move(terms), std::move(edges));
}

} // namespace pathoverlap
