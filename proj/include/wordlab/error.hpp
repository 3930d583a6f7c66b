#pragma once

#include <stdexcept>
#include <string>

namespace wordlab {

enum class ErrorKind {
  InvalidArgument,
  Precondition,
  Overflow,
  Guard,
  Parse,
  Fit,
};

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wordlab
