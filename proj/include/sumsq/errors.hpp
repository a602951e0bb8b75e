#pragma once
#include <stdexcept>
#include <string>

namespace sumsq {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct AccuracyError : Error { using Error::Error; };
struct DivergenceError : Error { using Error::Error; };
struct CapacityError : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct UnsupportedPointError : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Point rejected before evaluation; code is machine readable ("region", ...).
struct RejectedError : Error {
  std::string code;
  RejectedError(std::string c, const std::string& msg) : Error(msg), code(std::move(c)) {}
};

}  // namespace sumsq
