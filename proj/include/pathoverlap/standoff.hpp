#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathoverlap/errors.hpp"

namespace pathoverlap {

/// A text-bound annotation (protein mention, trigger span, site, ...).
struct Entity {
    std::string id;   // "T1"
    std::string kind; // "Protein", "Phosphorylation", ...
    std::size_t char_start = 0;
    std::size_t char_end = 0;
    std::string surface;

    bool operator==(const Entity&) const = default;
};

struct EventArgument {
    std::string role;   // "Theme", "Theme2", "Cause", "Site", ...
    std::string target; // entity or event id

    bool operator==(const EventArgument&) const = default;
};

struct Event {
    std::string id;             // "E1"
    std::string trigger_kind;   // "Phosphorylation"
    std::string trigger_entity; // id of the trigger span
    std::vector<EventArgument> arguments;

    bool operator==(const Event&) const = default;
};

struct EventSet {
    std::string doc_id;
    std::vector<Entity> entities; // a1 entities first, then a2 spans
    std::vector<Event> events;
    std::size_t a1_entity_count = 0; // entities[:n] came from the .a1 file
    std::size_t dropped_modifiers = 0; // negation/speculation lines

    const Entity* find_entity(const std::string& id) const;
    const Event* find_event(const std::string& id) const;
};

/// Parses BioNLP shared-task standoff. a1 holds given entities; a2 holds
/// trigger spans, events, and modifier (M) lines which are counted and
/// dropped. If source_text is given, each span's surface is checked
/// against it. Throws BadLine, UnresolvedArgument, CyclicEvent.
EventSet parse_standoff(const std::string& a1, const std::string& a2,
                        const std::string& doc_id = "",
                        const std::optional<std::string>& source_text = std::nullopt);

} // namespace pathoverlap
