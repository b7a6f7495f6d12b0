#include "birack/error.hpp"

namespace birack {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NonBijectiveColumn: return "NonBijectiveColumn";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
        case ErrorKind::KinkMapMissing: return "KinkMapMissing";
        case ErrorKind::KinkMapNotUnique: return "KinkMapNotUnique";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::RelationFails: return "RelationFails";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::DanglingSemiarc: return "DanglingSemiarc";
        case ErrorKind::DuplicateEndpoint: return "DuplicateEndpoint";
        case ErrorKind::BadSign: return "BadSign";
        case ErrorKind::UnmatchedCrossingLabel: return "UnmatchedCrossingLabel";
        case ErrorKind::SignMismatch: return "SignMismatch";
        case ErrorKind::AmbiguousOrientation: return "AmbiguousOrientation";
        case ErrorKind::BadComponent: return "BadComponent";
        case ErrorKind::InvalidLabeling: return "InvalidLabeling";
        case ErrorKind::NotReducedCocycle: return "NotReducedCocycle";
        case ErrorKind::BadFraming: return "BadFraming";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

}  // namespace birack
