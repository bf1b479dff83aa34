#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orthoradial {

using VertexId = std::int32_t;
using DartId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr DartId kNoDart = -1;
inline constexpr VertexId kNoVertex = -1;
inline constexpr FaceId kNoFace = -1;
inline constexpr EdgeId kNoEdge = -1;

// Axis direction of a dart. +1 is one clockwise quarter turn, so
// right+1 = down, down+1 = left, left+1 = up (mod 4).
enum class Direction : int { Right = 0, Down = 1, Left = 2, Up = 3 };

inline Direction turned(Direction d, int quarters) {
    return static_cast<Direction>((((static_cast<int>(d) + quarters) % 4) + 4) % 4);
}

inline Direction opposite(Direction d) { return turned(d, 2); }

inline bool is_horizontal(Direction d) { return d == Direction::Right || d == Direction::Left; }
inline bool is_vertical(Direction d) { return !is_horizontal(d); }

inline const char* to_string(Direction d) {
    switch (d) {
        case Direction::Right: return "right";
        case Direction::Down: return "down";
        case Direction::Left: return "left";
        case Direction::Up: return "up";
    }
    return "?";
}

enum class Errc {
    DegreeExceeded,
    NotConnected,
    EulerViolation,
    NotIncident,
    Disconnected,
    NotACycle,
    SelfCrossing,
    NotEssential,
    Unreachable,
    InconsistentDirections,
    CentralBoundaryMonotone,
    ConditionsViolated,
    NoCandidates,
    NotACandidate,
    PreconditionUnmet,
    NotValid,
    NotRectangulated,
    InfeasibleLengths,
    InconsistentMap,
    CapExceeded,
    GenerationFailed,
    ParseError,
    Internal,
};

inline const char* to_string(Errc c) {
    switch (c) {
        case Errc::DegreeExceeded: return "DegreeExceeded";
        case Errc::NotConnected: return "NotConnected";
        case Errc::EulerViolation: return "EulerViolation";
        case Errc::NotIncident: return "NotIncident";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NotACycle: return "NotACycle";
        case Errc::SelfCrossing: return "SelfCrossing";
        case Errc::NotEssential: return "NotEssential";
        case Errc::Unreachable: return "Unreachable";
        case Errc::InconsistentDirections: return "InconsistentDirections";
        case Errc::CentralBoundaryMonotone: return "CentralBoundaryMonotone";
        case Errc::ConditionsViolated: return "ConditionsViolated";
        case Errc::NoCandidates: return "NoCandidates";
        case Errc::NotACandidate: return "NotACandidate";
        case Errc::PreconditionUnmet: return "PreconditionUnmet";
        case Errc::NotValid: return "NotValid";
        case Errc::NotRectangulated: return "NotRectangulated";
        case Errc::InfeasibleLengths: return "InfeasibleLengths";
        case Errc::InconsistentMap: return "InconsistentMap";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::GenerationFailed: return "GenerationFailed";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace orthoradial
