#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace circlepat {

/// Malformed or invariant-violating input. Carries every diagnostic found.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg)
      : std::runtime_error(msg), diagnostics_{msg} {}
  explicit InputError(std::vector<std::string> diagnostics)
      : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }
  std::vector<std::string> diagnostics_;
};

/// Operation not available for this input (missing vertices, Euclidean KKT, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Data fails the existence conditions, so a solve was refused.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration cap exceeded, bracket failure, LP breakdown.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg, double last_residual = 0.0)
      : std::runtime_error(msg), last_residual_(last_residual) {}
  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace circlepat
