#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace howe {

enum class ErrorCode {
    InvalidSpace,
    MismatchedType,
    NotEmbeddable,
    BadSign,
    NotAdmissible,
    BadShape,
    BoundExceeded,
    UnsupportedRealClosure,
    UnsupportedBase,
    IncompatiblePair,
    NotInImage,
    EmptyLift,
    AmbiguousMaximum,
    NotNilpotent,
    NotInAlgebra,
    IdentityViolated,
    NotDescentPair,
    IncomparableSupports,
    NonpositiveDimCirc,
    InvalidCycle,
    MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a stable code. `context` is a short free-form
/// string (usually the offending object rendered as JSON).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(code), context_(std::move(context)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    ErrorCode code_;
    std::string context_;
};

} // namespace howe
