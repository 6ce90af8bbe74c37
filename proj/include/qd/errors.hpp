#pragma once

#include <stdexcept>
#include <string>

namespace qd {

/// Malformed group spec or other unparseable user input.
struct SpecParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured cap (group order, class count, ...) was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal exact cross-check failed. Never expected on valid input.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// exp of a vector field whose flow would need 1/p! over F_p.
struct UnsupportedExponentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qd
