#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oml {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input with inconsistent dimensions or out-of-range indices.
class MalformedInput : public Error {
public:
  using Error::Error;
};

/// A search or construction would exceed its configured size cap.
class CapExceeded : public Error {
public:
  CapExceeded(const std::string &what, std::size_t requested, std::size_t cap)
      : Error(what + ": " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested), cap_(cap) {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

private:
  std::size_t requested_;
  std::size_t cap_;
};

class NotBoolean : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

/// Raised when a result that must hold by construction fails its re-check.
class InternalInvariantViolation : public Error {
public:
  using Error::Error;
};

/// A Greechie diagram breaks one of its structural invariants.
class InvalidDiagram : public Error {
public:
  using Error::Error;
};

using MalformedDiagram = InvalidDiagram;

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace oml
