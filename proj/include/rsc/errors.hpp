#pragma once

#include <stdexcept>
#include <string>

namespace rsc {

/// Invalid input: malformed simplex, bad parameter, unmet precondition.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A vertex or simplex that was expected to be present is missing.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource limit (simplex cap, point cap) was exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rsc
