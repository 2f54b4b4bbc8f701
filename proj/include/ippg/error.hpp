#pragma once

#include <stdexcept>
#include <string>

namespace ippg {

enum class ErrorCode {
    InvalidArgument,
    InvalidDimension,
    NumericOverflow,
    UndefinedPercentage,
    EmptyPrompt,
    WidthTooSmall,
    UnknownCounter,
    Parse,
    DuplicateSampleId,
    MissingImageFile,
    UnknownSliceKey,
    MissingConfig,
    NoFeasibleConfig,
    Io,
    Transport,
    Provider,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Transient failure reaching the provider; callers may retry.
class TransportError : public Error {
public:
    explicit TransportError(const std::string& message)
        : Error(ErrorCode::Transport, message) {}
};

// Terminal rejection from the provider; retrying will not help.
class ProviderError : public Error {
public:
    explicit ProviderError(const std::string& message)
        : Error(ErrorCode::Provider, message) {}
};

}  // namespace ippg
