#pragma once

#include <stdexcept>
#include <string>

namespace hkpos {

/// Base for every failure the engine reports on well-formed but
/// mathematically or semantically invalid input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a numeric argument was violated (negative q, wrong
/// weight, truncation mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A family document does not follow the schema or violates a table invariant.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A Fujiki table lacks the constant for a Chern monomial that a computation needs.
class MissingPairing : public Error {
 public:
  explicit MissingPairing(std::string monomial)
      : Error("missing pairing constant for monomial " + monomial), monomial_(std::move(monomial)) {}

  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

/// An internal cross-check between two derivation routes disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hkpos
