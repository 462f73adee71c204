#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace pwshs {

inline constexpr const char* kVersion = "0.1.0";

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Caller handed us something malformed (dimension mismatch, bad range, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed beyond recovery (factorization, eigensolve, ...).
/// The message starts with the originating module, e.g. "gp: ...".
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad run configuration (missing mode data, malformed config file, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pwshs
