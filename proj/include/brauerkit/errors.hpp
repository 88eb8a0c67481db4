#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauerkit {

enum class ErrorCode {
    DuplicateLabel,
    UncoveredLabel,
    SelfPair,
    SharedSetMismatch,
    ArityMismatch,
    RingMismatch,
    TypeMismatch,
    PaletteMismatch,
    IncoherentCycleColour,
    BlockMismatch,
    ArityBoundExceeded,
    ColourMismatch,
    IndexError,
    NotAMorphism,
    NotAPort,
    SamePort,
    DegenerateSubstitution,
    BoundaryMismatch,
    NotDeletable,
    ShapeMismatch,
    BoundTooLarge,
    MissingRestriction,
    NotOriented,
    InvalidParameter,
    ParseError,
};

std::string_view to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace brauerkit
