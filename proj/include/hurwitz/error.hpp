#ifndef HURWITZ_ERROR_HPP
#define HURWITZ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

enum class ErrorCode {
    InvalidArgument,
    BadConfig,
    DegenerateSimplex,
    VolumeMismatch,
    OverlapNotFace,
    UnsupportedFlip,
    DimensionUnsupported,
    BudgetExceeded,
    NonconstantSum,
    NonConvex,
    LinearityViolation,
    TriangulationMismatch,
    CheckpointCorrupt,
    DigestMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code; the CLI serializes the code verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hurwitz

#endif
