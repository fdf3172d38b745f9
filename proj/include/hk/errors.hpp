#ifndef HK_ERRORS_HPP
#define HK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hk {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Result is certifiably too large for a double. log_value carries the
// natural log of the magnitude so callers can still reason about it.
class OverflowError : public std::runtime_error {
public:
  OverflowError(const std::string& msg, double log_value)
      : std::runtime_error(msg), log_value(log_value) {}
  double log_value;
};

// Adaptive quadrature did not reach the requested tolerance within the
// subdivision budget. error_estimate is the last achieved estimate.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& msg, double error_estimate)
      : std::runtime_error(msg), error_estimate(error_estimate) {}
  double error_estimate;
};

}  // namespace hk

#endif
