#pragma once

#include <stdexcept>
#include <string>

namespace tristrip {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A polynomial quotient that was required to be exact left a remainder.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

// Engine node budget, enumeration bound, or iteration cap exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Identifying two adjacent vertices would create a loop; the colouring count
// of the requested auxiliary graph is identically zero.
class AdjacentMergeError : public Error {
 public:
  using Error::Error;
};

class GraphFormatError : public Error {
 public:
  using Error::Error;
};

// D(x) has a zero falling factorial on its diagonal (x in {0,1,2,3}).
class SingularDError : public Error {
 public:
  using Error::Error;
};

class GuardViolation : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

class NonPositiveAtFour : public Error {
 public:
  using Error::Error;
};

class InconclusiveClassification : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace tristrip
