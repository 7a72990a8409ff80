#pragma once

#include <stdexcept>

namespace cayleyfn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct SizeMismatchError : Error {
  using Error::Error;
};

struct NotIdempotentError : Error {
  using Error::Error;
};

struct NotInCentralizerError : Error {
  using Error::Error;
};

struct CarrierTooLargeError : Error {
  using Error::Error;
};

struct RadiusTooSmallError : Error {
  using Error::Error;
};

struct InfiniteBranchError : Error {
  using Error::Error;
};

// Thrown when two deciders that must agree do not. This is a bug in the
// library, never a property of the input.
struct DeciderDisagreement : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cayleyfn
