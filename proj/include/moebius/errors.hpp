#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moebius {

// Every failure the library reports is one of these kinds. The CLI maps each
// kind onto a distinct process exit code.
enum class ErrorKind {
  usage,
  structural,
  precondition,
  resource,
  verification,
  consistency,
  io,
};

std::string_view to_string(ErrorKind kind);
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::usage, what) {}
};

// Malformed graph data: bad pairing, half-edges missing from rotations, ...
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what)
      : Error(ErrorKind::structural, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

// A configured budget (half-edges, assignments, polynomial size) was exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::resource, what) {}
};

// Two routes that must agree exactly did not.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what)
      : Error(ErrorKind::verification, what) {}
};

// An internal invariant broke (non-integer exponent, odd monomial, ...).
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what)
      : Error(ErrorKind::consistency, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace moebius
