#pragma once

#include <stdexcept>
#include <string>

namespace lenscob {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad modulus, gcd != 1, malformed input).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured effort bound (prime search cap, factoring budget) ran out.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Never expected; carries diagnostics.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace lenscob
