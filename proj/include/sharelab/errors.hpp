#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharelab {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class MixedRegime : public Error {
  public:
    using Error::Error;
};

class ZeroLambda : public Error {
  public:
    using Error::Error;
};

class LeadingZero : public Error {
  public:
    using Error::Error;
};

class NoConvergence : public Error {
  public:
    using Error::Error;
};

class DegenerateCandidate : public Error {
  public:
    using Error::Error;
};

class AllSamplesDegenerate : public Error {
  public:
    using Error::Error;
};

class InvalidUnit : public Error {
  public:
    using Error::Error;
};

class DegenerateDenominator : public Error {
  public:
    using Error::Error;
};

class DegenerateParameters : public Error {
  public:
    using Error::Error;
};

class InvalidParameters : public Error {
  public:
    using Error::Error;
};

// Parse failure with a byte offset into the source and the token classes
// that would have been accepted at that position.
class ParseError : public Error {
  public:
    ParseError(std::string message, std::size_t offset,
               std::vector<std::string> expected = {})
        : Error(std::move(message)), offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

  private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// A syntactically valid expression that does not define an entire function
// (non-constant denominator or non-integer exponent).
class NonEntire : public Error {
  public:
    NonEntire(std::string message, std::size_t offset)
        : Error(std::move(message)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

}  // namespace sharelab
