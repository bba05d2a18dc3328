#pragma once

#include <stdexcept>
#include <string>

namespace symbiont {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coalition references agents outside its universe.
class InvalidCoalition : public Error {
 public:
  using Error::Error;
};

/// An operation needing 2^n enumeration was asked to run above the agent cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input data is structurally malformed (missing entries, overlaps, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a universe do not.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// File-level parse failure. `pointer` is a JSON pointer to the offending
/// field, empty when the document itself is unreadable.
class ParseError : public Error {
 public:
  ParseError(std::string pointer, const std::string& what)
      : Error(pointer.empty() ? what : pointer + ": " + what),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace symbiont
