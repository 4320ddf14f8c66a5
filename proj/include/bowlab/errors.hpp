#pragma once

#include <stdexcept>
#include <string>

namespace bowlab {

// Requested coefficient lies below the known window of a truncated series.
// Callers that can retry at a deeper truncation catch this; it is never
// silently converted to zero.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Division by zero, singular matrix, or an operation whose precondition on
// the input data fails (e.g. a non-invertible denominator polynomial).
class SingularError : public std::runtime_error {
public:
    explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

// Input fails a documented validity check (shape membership, signature
// validity, malformed JSON payloads, ...). The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency assertion failed: the library refuses to return a
// result it could not re-verify. Indicates a bug or an out-of-contract input
// that slipped past validation.
class VerificationError : public std::logic_error {
public:
    explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

} // namespace bowlab
