#pragma once

#include <stdexcept>
#include <string>

namespace chebmellin {

// A Gamma or Pochhammer factor vanished in a denominator (or hit a Gamma pole).
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Non-terminating series outside its disc of convergence.
class DivergenceError : public std::domain_error {
 public:
  explicit DivergenceError(const std::string& what) : std::domain_error(what) {}
};

class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chebmellin
