#pragma once

#include <stdexcept>
#include <string>

namespace ifscdf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The map family does not tile [0,1] with exactly matching endpoints.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// A weight is nonpositive or the weights do not sum to one.
class WeightError : public Error {
 public:
  using Error::Error;
};

/// A map is malformed or is not a contraction.
class ContractionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation only applies to a restricted class of systems.
class ApplicabilityError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter set (duplicates, out-of-range values).
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifscdf
