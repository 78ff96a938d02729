// Exception hierarchy shared by all barnes:: components.
#pragma once

#include <stdexcept>
#include <string>

namespace barnes {

// Base class for all library failures, so callers can catch coarsely.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested at (or numerically indistinguishable from) a pole.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

// An intermediate or final quantity left the representable floating range.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// A truncated series could not meet the requested tolerance; carries the
// a-posteriori tail bound that was actually achieved.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double tail_bound)
      : Error(what), tail_bound_(tail_bound) {}
  double tail_bound() const { return tail_bound_; }

 private:
  double tail_bound_;
};

// Rationalizing a real input produced an unusable approximation (e.g. 0).
class ApproximationError : public Error {
 public:
  explicit ApproximationError(const std::string& what) : Error(what) {}
};

// Root bracketing failed: f has the same sign at both endpoints.
class NoSignChangeError : public Error {
 public:
  explicit NoSignChangeError(const std::string& what) : Error(what) {}
};

// Arguments outside the supported domain (non-positive periods, caps, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace barnes
