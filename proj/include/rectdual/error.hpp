#pragma once

#include <stdexcept>
#include <string>

namespace rectdual {

enum class Errc {
    NonTriangularFace,
    InconsistentRotation,
    Disconnected,
    BadOuterFace,
    ParseError,
    AdjacencyMismatch,
    IdMismatch,
    NotComparable,
    IllegalMove,
    NontrivialCycleHost,
    NotDownwardClosed,
    CapExceeded,
    BudgetExceeded,
    NoConvergence,
    MissingLeaf,
    InvalidLayout,
    InvalidRel,
    Internal,
};

inline const char *errc_name(Errc c)
{
    switch (c) {
    case Errc::NonTriangularFace: return "NonTriangularFace";
    case Errc::InconsistentRotation: return "InconsistentRotation";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BadOuterFace: return "BadOuterFace";
    case Errc::ParseError: return "ParseError";
    case Errc::AdjacencyMismatch: return "AdjacencyMismatch";
    case Errc::IdMismatch: return "IdMismatch";
    case Errc::NotComparable: return "NotComparable";
    case Errc::IllegalMove: return "IllegalMove";
    case Errc::NontrivialCycleHost: return "NontrivialCycleHost";
    case Errc::NotDownwardClosed: return "NotDownwardClosed";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::MissingLeaf: return "MissingLeaf";
    case Errc::InvalidLayout: return "InvalidLayout";
    case Errc::InvalidRel: return "InvalidRel";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

/// Library-wide error type. `code` identifies the first violated contract.
struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string &msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c)
    {
    }
};

[[noreturn]] inline void fail(Errc c, const std::string &msg) { throw Error(c, msg); }

} // namespace rectdual
