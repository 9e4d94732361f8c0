#pragma once

#include <stdexcept>
#include <string>

namespace latpath {

/// A query, path or parameter set violates an operation's precondition.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A request exceeds an explicit size guard (e.g. enumeration length).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An invariant of the implementation itself broke (e.g. a closed form
/// summed to a non-integer). Never expected on valid input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace latpath
