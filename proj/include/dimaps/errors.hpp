#pragma once

#include <stdexcept>
#include <string>

namespace dimaps {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed element text, map JSON or tag string.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Skew-morphism tables that are not total on D_n.
class TablesIncomplete : public Error {
 public:
  using Error::Error;
};

/// The skew-morphism extension and the arc-transitivity oracle disagree.
/// Always a bug.
class OracleDisagreement : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  using Error::Error;
};

class NotReflexibleRegular : public Error {
 public:
  using Error::Error;
};

/// Family parameters violate the admissibility constraint.
class BadParameters : public Error {
 public:
  using Error::Error;
};

/// A family's closed-form tables failed verification.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

class DegenerateQuotient : public Error {
 public:
  using Error::Error;
};

/// Enumeration requested beyond the configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dimaps
