#pragma once

#include <stdexcept>
#include <string>

namespace stanley {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different variable sets.
class AmbientMismatchError : public Error {
public:
  using Error::Error;
};

/// Input outside an operation's domain (unit/zero ideal where a proper
/// nonzero one is required, bad variable index, non-face, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Exponent arithmetic left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A configured limit (poset points, search nodes, enumeration box) was hit.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

}  // namespace stanley
