#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acs {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition or domain invariant was violated by the caller's input.
class validation_error : public error {
public:
    explicit validation_error(const std::string& what) : error(what) {}
};

/// Coboundary solving and dimension counting need a prime modulus.
class unsupported_modulus_error : public validation_error {
public:
    explicit unsupported_modulus_error(const std::string& what) : validation_error(what) {}
};

/// Text input could not be parsed; `offset` is the byte position of the problem.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A configured memory or arithmetic budget would be exceeded.
class resource_error : public error {
public:
    explicit resource_error(const std::string& what) : error(what) {}
};

/// Two routes that must agree produced different answers. This diagnoses a bug
/// in the implementation (or corrupt fixture data), never a bad user input.
class consistency_error : public error {
public:
    explicit consistency_error(const std::string& what) : error(what) {}
};

} // namespace acs
