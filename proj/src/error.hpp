#pragma once

#include <stdexcept>
#include <string>

namespace bgode {

// Status codes shared with the C API (values must stay in sync with bgode.h).
enum class status : int {
    ok = 0,
    invalid_argument = 1,  // malformed inputs: bad sizes, null handles, unknown enum values
    domain = 2,            // math-domain violation: x <= 0, non-positive samples, |u| >= 1
    overflow = 3,          // exact-integer range exceeded
    step_failure = 4,      // non-finite RHS value at a solver stage
    config = 5,            // inconsistent solver configuration (e.g. guard without ordinary form)
    lookup = 6,            // unknown problem or method name
    io = 7,                // file read/write failure
    internal = 8,
};

const char* status_name(status s) noexcept;

// The core throws this; the C API boundary converts it to a status code plus message.
class error : public std::runtime_error {
  public:
    error(status code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    status code() const noexcept { return code_; }

  private:
    status code_;
};

[[noreturn]] inline void fail(status code, const std::string& message) {
    throw error(code, message);
}

}  // namespace bgode
