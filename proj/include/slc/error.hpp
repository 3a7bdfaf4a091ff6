#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slc {

enum class Errc {
    LoopEdge,
    DuplicateEdge,
    IndexOutOfRange,
    ParseError,
    NotBicyclic,
    TooLarge,
    TooSmall,
    NotMonic,
    NegativeCoefficient,
    LengthMismatch,
    TooManyEdges,
    Disconnected,
    InvalidSpec,
    OutOfRange,
    NotApplicable,
    NotABridge,
    PendantEdge,
    CycleTooShort,
    NeighborhoodsOverlap,
    PositionConditionViolated,
    NoPendantsToMove,
    StuckNoApplicableTransform,
    ConvergenceFailure,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::NotBicyclic: return "NotBicyclic";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotMonic: return "NotMonic";
    case Errc::NegativeCoefficient: return "NegativeCoefficient";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooManyEdges: return "TooManyEdges";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::NotABridge: return "NotABridge";
    case Errc::PendantEdge: return "PendantEdge";
    case Errc::CycleTooShort: return "CycleTooShort";
    case Errc::NeighborhoodsOverlap: return "NeighborhoodsOverlap";
    case Errc::PositionConditionViolated: return "PositionConditionViolated";
    case Errc::NoPendantsToMove: return "NoPendantsToMove";
    case Errc::StuckNoApplicableTransform: return "StuckNoApplicableTransform";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace slc
