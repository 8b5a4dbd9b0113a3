#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msdual {

// Domain-level failure with a stable name used for CLI error reporting and
// structured test assertions.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Bad input text; `offset` is the byte position of the first offending char.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error("SyntaxError", what + " (byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

class NonAperiodicError : public Error {
public:
    explicit NonAperiodicError(const std::string& what) : Error("NonAperiodic", what) {}
};

class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error("ResourceLimit", what) {}
};

// A checked internal postcondition failed; always a bug, never user error.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error("InvariantViolation", what) {}
};

class DivisionFailure : public Error {
public:
    explicit DivisionFailure(const std::string& what) : Error("DivisionFailure", what) {}
};

class LeadingTermFailure : public Error {
public:
    explicit LeadingTermFailure(const std::string& what) : Error("LeadingTermFailure", what) {}
};

class GenericityNotReached : public Error {
public:
    explicit GenericityNotReached(const std::string& what) : Error("GenericityNotReached", what) {}
};

class InterpolationFailure : public Error {
public:
    explicit InterpolationFailure(const std::string& what) : Error("InterpolationFailure", what) {}
};

// Exact arithmetic would exceed the 128-bit intermediates we allow.
class ArithmeticOverflow : public Error {
public:
    explicit ArithmeticOverflow(const std::string& what) : Error("ArithmeticOverflow", what) {}
};

} // namespace msdual
