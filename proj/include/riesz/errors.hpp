#ifndef RIESZ_ERRORS_HPP
#define RIESZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riesz {

/// Base class for all riesz-tiler errors. Each subclass maps to a CLI
/// exit code; see exit_code().
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Instance parsing / validation problems (bad JSON, inconsistent
/// dimensions, empty regions, ...).  Exit code 1.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Two input boxes of a box union intersect in positive measure.
/// Carries a witness point formatted into the message.  Exit code 1.
class OverlapError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A box-union region does not stay axis-aligned under the lattice
/// normalization map.  Exit code 1.
class NonAxisAlignedError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Rendering requested for a dimension other than 2.  Exit code 1.
class DimensionError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A stage that requires a verified tiling was run on a region that is
/// not a level-k tile.  Exit code 2.
class NotATilingError : public Error {
public:
    using Error::Error;
};

/// Shift selection could not reach the quality tolerance.  Exit code 3.
class SelectionFailure : public Error {
public:
    SelectionFailure(const std::string& msg, double best_quality)
        : Error(msg), best_quality(best_quality) {}
    double best_quality;
};

/// A profile matrix is numerically singular for the given shifts.
/// Exit code 3.
class SingularProfileError : public Error {
public:
    using Error::Error;
};

/// Grid resolution violates the breakpoint-denominator divisibility
/// required for box regions.  Exit code 4.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Internal invariant violation; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// CLI exit code for an error class.
inline int exit_code(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 1;
    if (dynamic_cast<const NotATilingError*>(&e)) return 2;
    if (dynamic_cast<const SelectionFailure*>(&e)) return 3;
    if (dynamic_cast<const SingularProfileError*>(&e)) return 3;
    if (dynamic_cast<const ResolutionError*>(&e)) return 4;
    return 10;
}

} // namespace riesz

#endif
