#include "ippg/error.hpp"

namespace ippg {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::InvalidDimension: return "invalid-dimension";
        case ErrorCode::NumericOverflow: return "numeric-overflow";
        case ErrorCode::UndefinedPercentage: return "undefined-percentage";
        case ErrorCode::EmptyPrompt: return "empty-prompt";
        case ErrorCode::WidthTooSmall: return "width-too-small";
        case ErrorCode::UnknownCounter: return "unknown-counter";
        case ErrorCode::Parse: return "parse-error";
        case ErrorCode::DuplicateSampleId: return "duplicate-sample-id";
        case ErrorCode::MissingImageFile: return "missing-image-file";
        case ErrorCode::UnknownSliceKey: return "unknown-slice-key";
        case ErrorCode::MissingConfig: return "missing-config";
        case ErrorCode::NoFeasibleConfig: return "no-feasible-config";
        case ErrorCode::Io: return "io-error";
        case ErrorCode::Transport: return "transport-error";
        case ErrorCode::Provider: return "provider-error";
    }
    return "unknown-error";
}

}  // namespace ippg
