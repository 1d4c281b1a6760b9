#include "gqt/error.hpp"

namespace gqt {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::Reducible: return "Reducible";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NoInvolution: return "NoInvolution";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::DependentBasis: return "DependentBasis";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotKernelPoint: return "NotKernelPoint";
        case ErrorCode::SelfOrthogonalInput: return "SelfOrthogonalInput";
        case ErrorCode::NotUnique: return "NotUnique";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotInSpan: return "NotInSpan";
        case ErrorCode::Char2NotSupported: return "Char2NotSupported";
        case ErrorCode::NotChar2: return "NotChar2";
        case ErrorCode::ZeroState: return "ZeroState";
        case ErrorCode::Char2MessageUnsupported: return "Char2MessageUnsupported";
        case ErrorCode::NotBellRay: return "NotBellRay";
        case ErrorCode::ExhaustedSearch: return "ExhaustedSearch";
        case ErrorCode::SelfOrthogonalState: return "SelfOrthogonalState";
        case ErrorCode::DegenerateSpan: return "DegenerateSpan";
        case ErrorCode::MalformedBitstream: return "MalformedBitstream";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace gqt
