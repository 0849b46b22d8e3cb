#pragma once

#include <stdexcept>
#include <string>

namespace k3aut {

enum class ErrorCode {
    InvalidArgument,
    SquareInput,
    OnlyTrivial,
    MismatchedD,
    ZeroM,
    Degenerate,
    NotIsometry,
    ZeroK,
    SquareDiscriminant,
    ZeroClass,
    NotHyperbolic,
    NoHyperbolicIsometry,
    NotRealizable,
    Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

/// True for rejections caused by the mathematical input (CLI exit code 2),
/// false for failures of the library itself.
bool is_domain_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace k3aut
