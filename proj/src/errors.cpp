#include "brauerkit/errors.hpp"

namespace brauerkit {

std::string_view to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::UncoveredLabel: return "UncoveredLabel";
        case ErrorCode::SelfPair: return "SelfPair";
        case ErrorCode::SharedSetMismatch: return "SharedSetMismatch";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::PaletteMismatch: return "PaletteMismatch";
        case ErrorCode::IncoherentCycleColour: return "IncoherentCycleColour";
        case ErrorCode::BlockMismatch: return "BlockMismatch";
        case ErrorCode::ArityBoundExceeded: return "ArityBoundExceeded";
        case ErrorCode::ColourMismatch: return "ColourMismatch";
        case ErrorCode::IndexError: return "IndexError";
        case ErrorCode::NotAMorphism: return "NotAMorphism";
        case ErrorCode::NotAPort: return "NotAPort";
        case ErrorCode::SamePort: return "SamePort";
        case ErrorCode::DegenerateSubstitution: return "DegenerateSubstitution";
        case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorCode::NotDeletable: return "NotDeletable";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::BoundTooLarge: return "BoundTooLarge";
        case ErrorCode::MissingRestriction: return "MissingRestriction";
        case ErrorCode::NotOriented: return "NotOriented";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace brauerkit
