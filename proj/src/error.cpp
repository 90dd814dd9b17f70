#include "error.hpp"

namespace bgode {

const char* status_name(status s) noexcept {
    switch (s) {
        case status::ok: return "ok";
        case status::invalid_argument: return "invalid_argument";
        case status::domain: return "domain";
        case status::overflow: return "overflow";
        case status::step_failure: return "step_failure";
        case status::config: return "config";
        case status::lookup: return "lookup";
        case status::io: return "io";
        case status::internal: return "internal";
    }
    return "unknown";
}

}  // namespace bgode
