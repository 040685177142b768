#ifndef WMIX_ERRORS_HPP
#define WMIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wmix {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (bad arguments, unsorted
// input, parameter out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed polynomial / pattern / config text.
class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A computation would need set membership beyond the set's horizon.  The
// message names the binding constraint.
class HorizonError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A comparison against an arc boundary fell inside the tracked error band
// of an approximate real; more precision is required.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure: something the underlying theory rules out
// happened (e.g. a reduction tree exceeding its depth bound).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace wmix

#endif
