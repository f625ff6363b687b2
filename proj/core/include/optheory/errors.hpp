// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace optheory {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input objects have incompatible sizes.
struct DimensionError : Error {
  using Error::Error;
};

/// A file or JSON document does not match the theory/report schema.
struct SchemaError : Error {
  using Error::Error;
};

/// An operation required a faithful (full-rank) bipartite form, or a
/// preparation that does not exist.
struct FaithfulnessError : Error {
  using Error::Error;
};

/// Conditioning on a transformation of (numerically) zero probability.
struct ConditioningError : Error {
  using Error::Error;
};

/// A matrix violates the physicality cone where membership was required.
struct ConeError : Error {
  using Error::Error;
};

/// The calibration linear model is rank deficient.
struct IdentifiabilityError : Error {
  using Error::Error;
};

/// A form that must be positive semidefinite has a genuinely negative
/// eigenvalue; the construction premise fails for this input.
struct PositivityError : Error {
  using Error::Error;
};

struct NumericalError : Error {
  using Error::Error;
};

}  // namespace optheory
