#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctl {

/// Base of every error raised by the library. `kind()` is a stable tag that
/// the CLI and the Python bindings surface to callers.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CTL_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

CTL_DEFINE_ERROR(UnknownVertex)
CTL_DEFINE_ERROR(InvalidComplex)
CTL_DEFINE_ERROR(NonOrientableWalk)
CTL_DEFINE_ERROR(UnresolvedExcess)
CTL_DEFINE_ERROR(InfeasibleScheme)
CTL_DEFINE_ERROR(TooSmall)
CTL_DEFINE_ERROR(TooLarge)
CTL_DEFINE_ERROR(NotConnected)
CTL_DEFINE_ERROR(InvalidPartition)
CTL_DEFINE_ERROR(MissingCluster)
CTL_DEFINE_ERROR(NotSimplyConnected)
CTL_DEFINE_ERROR(DomainError)
CTL_DEFINE_ERROR(NoConvergence)
CTL_DEFINE_ERROR(PreconditionFailed)
CTL_DEFINE_ERROR(StageMissing)

#undef CTL_DEFINE_ERROR

/// Malformed `.spg`, `.tlg` or `.gpt` input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("ParseError", std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ctl
