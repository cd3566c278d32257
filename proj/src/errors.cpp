#include "pathoverlap/errors.hpp"

namespace pathoverlap {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::IsolatedReaction: return "IsolatedReaction";
    case ErrorCode::ConstituentCycle: return "ConstituentCycle";
    case ErrorCode::UnknownSpecies: return "UnknownSpecies";
    case ErrorCode::XmlMalformed: return "XmlMalformed";
    case ErrorCode::MissingId: return "MissingId";
    case ErrorCode::UnresolvedSpeciesReference: return "UnresolvedSpeciesReference";
    case ErrorCode::BadLine: return "BadLine";
    case ErrorCode::UnresolvedArgument: return "UnresolvedArgument";
    case ErrorCode::CyclicEvent: return "CyclicEvent";
    case ErrorCode::UnmappedTrigger: return "UnmappedTrigger";
    case ErrorCode::JsonMalformed: return "JsonMalformed";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::CyclicOntology: return "CyclicOntology";
    case ErrorCode::UnknownTermInEdge: return "UnknownTermInEdge";
    case ErrorCode::UnknownTerm: return "UnknownTerm";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::UnknownStrategy: return "UnknownStrategy";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

namespace {

std::string build_message(ErrorCode code, const std::string& subject, const std::string& detail) {
    std::string msg = error_code_name(code);
    if (!subject.empty()) {
        msg += "(" + subject + ")";
    }
    if (!detail.empty()) {
        msg += ": " + detail;
    }
    return msg;
}

} // namespace

PathwayError::PathwayError(ErrorCode code, std::string subject, const std::string& detail)
    : std::runtime_error(build_message(code, subject, detail)),
      code_(code),
      subject_(std::move(subject)) {}

} // namespace pathoverlap
