#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumgraph {

enum class ErrorKind {
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  NoInverse,
  BadParameter,
  OrderLimit,
  NotASubgroup,
  NotNormal,
  NotAbelian,
  NotDedekind,
  PreconditionViolated,
  InternalInconsistency,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sumgraph
