#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccr {

enum class ErrorKind {
    NotNormalized,
    BadSubsystemIndex,
    DimensionMismatch,
    NormNotPreserved,
    NotHermitian,
    NonFinite,
    VelocityOutOfRange,
    InvalidMomentum,
    InvalidBoost,
    LabelCollision,
    NonPerpendicularGeometry,
    ThetaOutOfRange,
    BadPhysicalParams,
    GlobalStateNotPure,
    NotXShaped,
    InvalidConfig,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ccr
