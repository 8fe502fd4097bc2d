#pragma once

#include <stdexcept>
#include <string>

namespace sgtc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or ambient dimensions do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// No construction is available for the requested Clifford signature / module size.
class UnsupportedSignature : public Error {
 public:
  using Error::Error;
};

// A subspace that must be invariant is not; `generator()` names a witness.
class InvarianceError : public Error {
 public:
  InvarianceError(const std::string& what, std::string generator)
      : Error(what), generator_(std::move(generator)) {}
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

// Input that fails structural validation (e.g. not a subalgebra).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A model config document is malformed; `pointer()` is a JSON pointer to the offending node.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string pointer)
      : Error(what + " at " + (pointer.empty() ? std::string("/") : pointer)),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// An internal identity that must hold did not (indicates a sign-convention bug).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgtc
