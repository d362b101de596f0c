#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repstab {

enum class ErrorKind {
    InvalidPartition,
    PadTooSmall,
    SizeMismatch,
    RankMismatch,
    NotACharacter,
    SymbolicCoefficient,
    EmptyFiltration,
    NotConverged,
    RankTooSmall,
    NoStoredDecomposition,
    BelowStableRange,
    InvalidArgument,
};

constexpr std::string_view name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidPartition: return "InvalidPartition";
        case ErrorKind::PadTooSmall: return "PadTooSmall";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::NotACharacter: return "NotACharacter";
        case ErrorKind::SymbolicCoefficient: return "SymbolicCoefficient";
        case ErrorKind::EmptyFiltration: return "EmptyFiltration";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::RankTooSmall: return "RankTooSmall";
        case ErrorKind::NoStoredDecomposition: return "NoStoredDecomposition";
        case ErrorKind::BelowStableRange: return "BelowStableRange";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Bad input or a query outside what the library can answer.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// An internal consistency check failed; always a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace repstab
