#pragma once

#include <stdexcept>
#include <string>

namespace bier {

/// Failure categories. The CLI maps them onto its exit codes.
enum class ErrorKind {
  Parse,       ///< malformed input file or JSON
  Domain,      ///< a documented precondition was violated
  Degenerate,  ///< the input is valid but the quantity is undefined for it
  Internal,    ///< a checked invariant failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& what) : Error(ErrorKind::Degenerate, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

}  // namespace bier
