#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

/// Raised for out-of-range algebra parameters, module labels and arrows.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an operation is called outside its documented precondition,
/// e.g. asking for the middle term of an AR triangle of a non-CY module.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

} // namespace nakayama
