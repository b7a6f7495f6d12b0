#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace birack {

enum class ErrorKind {
    ParseError,
    NonBijectiveColumn,
    AxiomViolation,
    KinkMapMissing,
    KinkMapNotUnique,
    NotAUnit,
    RelationFails,
    OutOfRange,
    ResourceLimit,
    DanglingSemiarc,
    DuplicateEndpoint,
    BadSign,
    UnmatchedCrossingLabel,
    SignMismatch,
    AmbiguousOrientation,
    BadComponent,
    InvalidLabeling,
    NotReducedCocycle,
    BadFraming,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; kind() is stable and
// suitable for programmatic dispatch, what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace birack
