#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gqt {

/// Machine-readable error categories. Every domain failure raised by the
/// library carries one of these; the CLI forwards the name verbatim.
enum class ErrorCode {
    NotPrime,
    Reducible,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NoInvolution,
    DimensionMismatch,
    NotSquare,
    NotHermitian,
    Singular,
    ZeroVector,
    DependentBasis,
    TooLarge,
    NotKernelPoint,
    SelfOrthogonalInput,
    NotUnique,
    NotUnitary,
    NotInSpan,
    Char2NotSupported,
    NotChar2,
    ZeroState,
    Char2MessageUnsupported,
    NotBellRay,
    ExhaustedSearch,
    SelfOrthogonalState,
    DegenerateSpan,
    MalformedBitstream,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace gqt
