#pragma once

#include <stdexcept>
#include <string>

namespace socialist {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input file content does not follow its format.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A persisted checkpoint does not belong to the current configuration or
/// cannot be parsed.
class CheckpointError : public std::runtime_error {
public:
    enum class Kind { DigestMismatch, Corrupt };

    CheckpointError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A computed result contradicts an identity that must hold for every
/// prime. Never caught inside the library.
class ContradictionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace socialist
