#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isocycle {

enum class ErrorKind {
    InconsistentRotation,
    NonPlanarEmbedding,
    NotSimple,
    Disconnected,
    ParseError,
    ContractViolation,
    DegenerateSide,
    MinorOneFacePresent,
    CycleTooShort,
    NotInTunnel,
    InvalidMove,
    ExtensionNotFound,
    TooLarge,
    BaseNotFourConnected,
    SizeTooSmall,
    UnknownName,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace isocycle
