#pragma once

#include <stdexcept>
#include <string>

namespace conormal {

/// Malformed input text: line number plus reason.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Adjacency auto-derivation requested on a face list with duplicated index sets.
class AmbiguityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural invariant of the data model does not hold. Carries the full
/// validation report text.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proven identity failed at runtime (delta^2 != 0, cross-path rank
/// disagreement, B-isomorphism mismatch). Always a bug, never bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace conormal
