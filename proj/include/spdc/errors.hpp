#pragma once

#include <stdexcept>
#include <string>

namespace spdc {

/// Bad arguments or configuration detected before any computation starts.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure during integration; carries the last time that was
/// reached with an accepted step.
class PropagationError : public std::runtime_error {
  public:
    PropagationError(const std::string& what, double tau_last_good)
        : std::runtime_error(what), tau_last_good_(tau_last_good) {}
    double tau_last_good() const { return tau_last_good_; }

  private:
    double tau_last_good_;
};

/// File system failure; message carries the offending path.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace spdc
