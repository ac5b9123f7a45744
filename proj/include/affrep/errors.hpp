#pragma once

#include <stdexcept>
#include <string>

namespace affrep {

// Base class for every error raised by the library. The CLI maps
// ConfigError subtypes to exit code 2 and CheckError subtypes to exit 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- configuration / usage errors -----------------------------------------

class ConfigError : public Error {
 public:
  using Error::Error;
};

class NonPrimeError : public ConfigError {
 public:
  explicit NonPrimeError(int p)
      : ConfigError("NonPrime: " + std::to_string(p) + " is not prime") {}
};

class UnsupportedSizeError : public ConfigError {
 public:
  explicit UnsupportedSizeError(long long q, long long bound)
      : ConfigError("UnsupportedSize: q = " + std::to_string(q) +
                    " exceeds bound " + std::to_string(bound)) {}
};

// --- argument errors --------------------------------------------------------

class ContextMismatchError : public Error {
 public:
  using Error::Error;
  ContextMismatchError() : Error("ContextMismatch: element does not belong to this field") {}
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("DivisionByZero: inverse of 0 is undefined") {}
};

class ZeroScaleError : public Error {
 public:
  ZeroScaleError() : Error("ZeroScale: scaling part must be nonzero") {}
};

class LengthMismatchError : public Error {
 public:
  explicit LengthMismatchError(const std::string& msg) : Error("LengthMismatch: " + msg) {}
};

class NotAbelianError : public Error {
 public:
  explicit NotAbelianError(const std::string& msg) : Error("NotAbelian: " + msg) {}
};

// Raised when a thresholded-rank decision is not clearly separated from the
// noise floor; an integer dimension read off such a spectrum would be a guess.
class RankGapError : public Error {
 public:
  explicit RankGapError(const std::string& msg) : Error("RankGap: " + msg) {}
};

// --- falsification ----------------------------------------------------------

class CounterexampleFound : public Error {
 public:
  CounterexampleFound(const std::string& msg, std::string details)
      : Error("CounterexampleFound: " + msg), details_(std::move(details)) {}

  // JSON-formatted trial state (seed, trial index, operator entries).
  const std::string& details() const { return details_; }

 private:
  std::string details_;
};

}  // namespace affrep
