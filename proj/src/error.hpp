#pragma once

#include <stdexcept>
#include <string>

namespace grassfold {

// Error categories mirrored one-to-one by the C API status codes.
enum class ErrorCode : int {
    Ok = 0,
    InvalidArgument = 1,
    InvalidMutation = 2,
    Incomparable = 3,
    NotAFactor = 4,
    Evaluation = 5,
    Structure = 6,
    Sampling = 7,
    Parse = 8,
    Io = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace grassfold
