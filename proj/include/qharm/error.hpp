#pragma once

#include <stdexcept>
#include <string>

namespace qharm {

/// Raised when an input violates a documented invariant. The message names
/// the invariant that failed.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the restricted-class test when the input does not carry the
/// fixed sign pattern of the restricted family.
class NotRestrictedError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qharm
