#pragma once

#include <stdexcept>
#include <string>

namespace exemplar {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument or record violates a contract.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A referenced member, session, skill or other entity does not exist.
class NotFound : public Error {
public:
    using Error::Error;
};

/// File could not be read, written or decoded.
class IoError : public Error {
public:
    using Error::Error;
};

/// A line-delimited input file contained a record that failed to decode.
class MalformedRecord : public IoError {
public:
    MalformedRecord(std::string file, std::size_t line, const std::string& what)
        : IoError(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

}  // namespace exemplar
