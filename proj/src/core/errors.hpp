#ifndef Z4SD_CORE_ERRORS_HPP
#define Z4SD_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace z4sd {

// Base for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed argument values (length mismatch, digit out of range, ...).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// A mathematical precondition of the operation does not hold.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// The input is beyond the size guards of an exhaustive method.
class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Reached a state that valid inputs cannot produce.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace z4sd

#endif
