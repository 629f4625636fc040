#pragma once

#include <stdexcept>
#include <string>

namespace weylclifford {

// Base of everything the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

// Two cyclotomic numbers from different fields met without an explicit lift.
class OrderMismatch : public Error {
public:
  OrderMismatch(int lhs, int rhs)
      : Error("cyclotomic order mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class SignatureMismatch : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

// A pair or generator set does not satisfy the expected commutation relation.
class RelationViolated : public Error {
public:
  using Error::Error;
};

// Input pair is a reducible Weyl representation (no single standard block).
class ReducibleRepresentation : public Error {
public:
  using Error::Error;
};

class NotSymplectic : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace weylclifford
