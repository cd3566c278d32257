#include "pathoverlap/standoff.hpp"

#include <map>
#include <set>
#include <sstream>

namespace pathoverlap {

const Entity* EventSet::find_entity(const std::string& id) const {
    for (const Entity& e : entities) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

const Event* EventSet::find_event(const std::string& id) const {
    for (const Event& e : events) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

namespace {

struct LineRef {
    const char* file;
    int number;

    std::string tag() const { return std::string(file) + ":" + std::to_string(number); }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

Entity parse_entity_line(const std::string& line, const LineRef& ref) {
    // Tn <TAB> Kind start end <TAB> surface
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() < 2) {
        throw PathwayError(ErrorCode::BadLine, ref.tag(), line);
    }
    std::vector<std::string> head = split(fields[1], ' ');
    if (head.size() != 3) {
        throw PathwayError(ErrorCode::BadLine, ref.tag(), "expected `Kind start end`");
    }
    Entity e;
    e.id = fields[0];
    e.kind = head[0];
    try {
        e.char_start = std::stoul(head[1]);
        e.char_end = std::stoul(head[2]);
    } catch (const std::exception&) {
        throw PathwayError(ErrorCode::BadLine, ref.tag(), "non-numeric offsets");
    }
    if (e.char_start >= e.char_end) {
        throw PathwayError(ErrorCode::BadLine, ref.tag(), "empty or reversed span");
    }
    e.surface = fields.size() > 2 ? fields[2] : "";
    return e;
}

Event parse_event_line(const std::string& line, const LineRef& ref) {
    // En <TAB> Kind:Ttrigger Role1:X1 Role2:X2 ...
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() < 2) {
        throw PathwayError(ErrorCode::BadLine, ref.tag(), line);
    }
    std::vector<std::string> parts = split(fields[1], ' ');
    Event ev;
    ev.id = fields[0];
    bool first = true;
    for (const std::string& part : parts) {
        if (part.empty()) {
            continue;
        }
        std::size_t colon = part.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 >= part.size()) {
            throw PathwayError(ErrorCode::BadLine, ref.tag(), "malformed argument `" + part + "`");
        }
        std::string role = part.substr(0, colon);
        std::string target = part.substr(colon + 1);
        if (first) {
            ev.trigger_kind = role;
            ev.trigger_entity = target;
            first = false;
        } else {
            ev.arguments.push_back({role, target});
        }
    }
    if (first) {
        throw PathwayError(ErrorCode::BadLine, ref.tag(), "event without trigger");
    }
    return ev;
}

void detect_event_cycles(const EventSet& es) {
    enum class Mark { White, Grey, Black };
    std::map<std::string, Mark> marks;
    std::map<std::string, const Event*> by_id;
    for (const Event& e : es.events) {
        by_id[e.id] = &e;
    }

    // Iterative DFS over event->event argument references.
    for (const Event& root : es.events) {
        if (marks[root.id] != Mark::White) {
            continue;
        }
        std::vector<std::pair<const Event*, std::size_t>> stack{{&root, 0}};
        marks[root.id] = Mark::Grey;
        while (!stack.empty()) {
            auto& [ev, next] = stack.back();
            bool descended = false;
            while (next < ev->arguments.size()) {
                const std::string& target = ev->arguments[next++].target;
                auto it = by_id.find(target);
                if (it == by_id.end()) {
                    continue;
                }
                Mark m = marks[target];
                if (m == Mark::Grey) {
                    throw PathwayError(ErrorCode::CyclicEvent, target);
                }
                if (m == Mark::White) {
                    marks[target] = Mark::Grey;
                    stack.push_back({it->second, 0});
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                marks[ev->id] = Mark::Black;
                stack.pop_back();
            }
        }
    }
}

} // namespace

EventSet parse_standoff(const std::string& a1, const std::string& a2,
                        const std::string& doc_id,
                        const std::optional<std::string>& source_text) {
    EventSet es;
    es.doc_id = doc_id;

    std::set<std::string> seen_ids;
    auto check_unique = [&](const std::string& id, const LineRef& ref) {
        if (!seen_ids.insert(id).second) {
            throw PathwayError(ErrorCode::BadLine, ref.tag(), "duplicate id " + id);
        }
    };

    auto scan = [&](const std::string& text, const char* file, bool allow_events) {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty()) {
                continue;
            }
            LineRef ref{file, lineno};
            switch (line[0]) {
            case 'T': {
                Entity e = parse_entity_line(line, ref);
                check_unique(e.id, ref);
                es.entities.push_back(std::move(e));
                break;
            }
            case 'E': {
                if (!allow_events) {
                    throw PathwayError(ErrorCode::BadLine, ref.tag(),
                                       "event line in entity file");
                }
                Event ev = parse_event_line(line, ref);
                check_unique(ev.id, ref);
                es.events.push_back(std::move(ev));
                break;
            }
            case 'M': {
                if (!allow_events) {
                    throw PathwayError(ErrorCode::BadLine, ref.tag(),
                                       "modifier line in entity file");
                }
                ++es.dropped_modifiers;
                break;
            }
            default:
                throw PathwayError(ErrorCode::BadLine, ref.tag(), line);
            }
        }
    };

    scan(a1, "a1", false);
    es.a1_entity_count = es.entities.size();
    scan(a2, "a2", true);

    if (source_text) {
        for (const Entity& e : es.entities) {
            if (e.char_end > source_text->size() ||
                source_text->substr(e.char_start, e.char_end - e.char_start) != e.surface) {
                throw PathwayError(ErrorCode::BadLine, e.id,
                                   "surface does not match source text");
            }
        }
    }

    for (const Event& ev : es.events) {
        if (!es.find_entity(ev.trigger_entity)) {
            throw PathwayError(ErrorCode::UnresolvedArgument, ev.trigger_entity);
        }
        for (const EventArgument& arg : ev.arguments) {
            if (!es.find_entity(arg.target) && !es.find_event(arg.target)) {
                throw PathwayError(ErrorCode::UnresolvedArgument, arg.target);
            }
        }
    }
    detect_event_cycles(es);
    return es;
}

} // namespace pathoverlap
