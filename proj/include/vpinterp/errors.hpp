#pragma once

#include <stdexcept>
#include <string>

namespace vpinterp {

// Bad user input or a violated operation precondition. CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Division by zero and similar arithmetic misuse.
class ArithmeticError : public ValidationError {
public:
    explicit ArithmeticError(const std::string& what) : ValidationError(what) {}
};

// A state the underlying theory forbids; reaching one means the
// implementation is wrong, not the input. CLI exit code 2.
class InternalInvariantError : public std::logic_error {
public:
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

inline void invariant(bool cond, const std::string& msg) {
    if (!cond) throw InternalInvariantError(msg);
}

} // namespace vpinterp
