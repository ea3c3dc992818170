#ifndef METRIC_COMPLETER_ERRORS_H_
#define METRIC_COMPLETER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace metric_completer {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters are not acceptable, or a distance is not magic for them.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A distance or vertex index lies outside its permitted range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Malformed input: loops, conflicting edges, unparsable text.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A brute-force search would exceed its configured size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace metric_completer

#endif  // METRIC_COMPLETER_ERRORS_H_
