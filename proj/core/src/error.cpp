#include "howe/error.hpp"

namespace howe {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::MismatchedType: return "MismatchedType";
    case ErrorCode::NotEmbeddable: return "NotEmbeddable";
    case ErrorCode::BadSign: return "BadSign";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::UnsupportedRealClosure: return "UnsupportedRealClosure";
    case ErrorCode::UnsupportedBase: return "UnsupportedBase";
    case ErrorCode::IncompatiblePair: return "IncompatiblePair";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::EmptyLift: return "EmptyLift";
    case ErrorCode::AmbiguousMaximum: return "AmbiguousMaximum";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::NotDescentPair: return "NotDescentPair";
    case ErrorCode::IncomparableSupports: return "IncomparableSupports";
    case ErrorCode::NonpositiveDimCirc: return "NonpositiveDimCirc";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

} // namespace howe
