// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace specpol {

/// A caller violated a documented precondition (bad window, non-coprime
/// rational angle, lambda outside the gap, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation is not defined for the given input (second
/// derivatives of a C^0 space, profile evaluation of the ODE-system model).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dense solver backend failed or produced unusable output.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The mass matrix is numerically singular (min eigenvalue below the rank
/// tolerance), so the generalized problem is ill posed.
class IllPosedMassError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A constructive routine cannot reach the requested target within its
/// configured frequency budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specpol
