#pragma once

#include <stdexcept>
#include <string>

namespace socprobe {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: malformed files, violated preconditions, schema errors.
// The CLI maps this to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

// A judgments file that does not cover every comment. Exit code 3.
struct IncompleteJudgmentsError : Error {
    using Error::Error;
};

// External judge transport failure after retries were exhausted,
// or an unparseable judge reply. Exit code 4.
struct ExternalJudgeError : Error {
    using Error::Error;
};

}  // namespace socprobe
