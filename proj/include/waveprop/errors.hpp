#pragma once

#include <stdexcept>

namespace waveprop {

// Invalid parameters, malformed configuration or malformed input files.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical guard tripped: the requested result would be untrustworthy
// (wraparound at the domain edge, totally evanescent field, ...).
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace waveprop
