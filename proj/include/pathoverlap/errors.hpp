#pragma once

#include <stdexcept>
#include <string>

namespace pathoverlap {

enum class ErrorCode {
    DuplicateId,
    DuplicateEdge,
    DanglingEdge,
    IsolatedReaction,
    ConstituentCycle,
    UnknownSpecies,
    XmlMalformed,
    MissingId,
    UnresolvedSpeciesReference,
    BadLine,
    UnresolvedArgument,
    CyclicEvent,
    UnmappedTrigger,
    JsonMalformed,
    SchemaViolation,
    CyclicOntology,
    UnknownTermInEdge,
    UnknownTerm,
    SizeLimitExceeded,
    UnknownStrategy,
    InvalidConfig,
};

const char* error_code_name(ErrorCode code);

/// Carries a machine-checkable code plus the offending id or line.
class PathwayError : public std::runtime_error {
public:
    PathwayError(ErrorCode code, std::string subject, const std::string& detail = "");

    ErrorCode code() const { return code_; }
    const std::string& subject() const { return subject_; }

private:
    ErrorCode code_;
    std::string subject_;
};

} // namespace pathoverlap
