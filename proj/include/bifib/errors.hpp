#pragma once

#include <stdexcept>
#include <string>

namespace bifib {

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial contains a monomial outside the expected canonical basis.
class MalformedElement : public Error {
 public:
  using Error::Error;
};

/// An order index lies outside the domain of a basis or operator family.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix shapes do not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A coefficient index (n, k) lies outside a triangle's domain.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A value that must be an integer turned out not to be one.
class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

}  // namespace bifib
