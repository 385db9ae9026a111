#pragma once

#include <stdexcept>
#include <string>

namespace nsbox {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Marginal-dependent operation invoked on a signaling box.
class SignalingError : public Error {
public:
  using Error::Error;
};

// Mixture weights negative or not summing to one.
class WeightError : public Error {
public:
  using Error::Error;
};

// Scalar argument outside its admissible interval.
class RangeError : public Error {
public:
  using Error::Error;
};

// Family parameters violate the family's invariants.
class ParamError : public Error {
public:
  using Error::Error;
};

// PR weight is one but the box is not a PR box.
class DegenerateError : public Error {
public:
  using Error::Error;
};

// Family context does not regenerate the queried box.
class ContextMismatchError : public Error {
public:
  using Error::Error;
};

// Malformed input; `path` names the offending location.
class ParseError : public Error {
public:
  ParseError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace nsbox
