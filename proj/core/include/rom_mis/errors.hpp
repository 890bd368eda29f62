#pragma once

#include <stdexcept>
#include <string>

namespace rommis {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke a documented precondition or a value invariant
/// (dimension mismatch, axis out of range, malformed object, ...).
class ContractViolation : public Error {
public:
    explicit ContractViolation(const std::string& what) : Error(what) {}
};

/// An online runner received a stream that does not match the announced
/// length, or was driven past its end.
class ProtocolViolation : public Error {
public:
    explicit ProtocolViolation(const std::string& what) : Error(what) {}
};

/// Malformed textual input (instance files, rationals).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace rommis
