#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace marketlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs traders and both market sides are empty.
class EmptyMarketError : public Error {
 public:
  using Error::Error;
};

/// Raised for parameter violations in generator or session specs.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// Raised by statistics that need more (or more varied) data than given.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Raised when efficiency is requested for a market with no gains from trade.
class ZeroSurplusError : public Error {
 public:
  using Error::Error;
};

/// Raised when a quote's time index does not advance the book clock.
class StaleQuoteError : public Error {
 public:
  using Error::Error;
};

/// Raised for malformed input text (CSV, JSON) before validation starts.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Carries every validation failure found in a config, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> errors)
      : Error(join(errors)), errors_(std::move(errors)) {}

  const std::vector<std::string>& errors() const { return errors_; }

 private:
  static std::string join(const std::vector<std::string>& errors) {
    std::string out = "config validation failed:";
    for (const auto& e : errors) {
      out += "\n  - " + e;
    }
    return out;
  }

  std::vector<std::string> errors_;
};

}  // namespace marketlab
