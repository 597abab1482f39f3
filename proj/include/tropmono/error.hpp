#pragma once

#include <stdexcept>
#include <string>

namespace tropmono {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Shapes, ambient dimensions or index ranges do not line up.
class DimensionError : public Error {
public:
  using Error::Error;
};

// An operation was applied outside the domain where it is defined.
class DomainError : public Error {
public:
  using Error::Error;
};

// Input data is structurally valid but internally inconsistent.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace tropmono
