#pragma once

#include <stdexcept>
#include <string>

namespace cfconn {

/// Failure categories. The CLI maps each one to a fixed exit status.
enum class ErrorKind {
  parse,         // malformed input text
  validation,    // well-formed input violating a domain invariant
  disconnected,  // operation requires a connected graph
  cap_exceeded,  // input beyond a configured search cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(const std::string& what) : Error(ErrorKind::disconnected, what) {}
};

class CapExceededError : public Error {
 public:
  CapExceededError(std::string cap, long limit, long actual)
      : Error(ErrorKind::cap_exceeded, "cap " + cap + "=" + std::to_string(limit) +
                                           " exceeded (got " + std::to_string(actual) + ")"),
        cap_(std::move(cap)) {}
  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

}  // namespace cfconn
