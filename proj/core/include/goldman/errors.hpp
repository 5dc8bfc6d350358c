#pragma once

#include <stdexcept>
#include <string>

namespace goldman {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (bad word syntax, bad rational, bad config).
struct parse_error : error {
    using error::error;
};

/// Precondition violation on otherwise well-formed input.
struct domain_error : error {
    using error::error;
};

/// A representation could not be built from the requested parameters.
struct construction_error : error {
    using error::error;
};

/// Geometry too close to a tangency or case boundary to classify safely.
struct degenerate_error : error {
    using error::error;
};

/// Input shape the library deliberately does not handle.
struct unsupported_error : error {
    using error::error;
};

}  // namespace goldman
