// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <stdexcept>
#include <string>

namespace pfz {

// Base class for all library errors so callers can catch pfz failures
// without swallowing unrelated std exceptions.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};
struct DimensionOverflow : Error {
  using Error::Error;
};
struct EmptyKeepSet : Error {
  using Error::Error;
};
struct NonCommutingOperators : Error {
  using Error::Error;
};
struct IllConditionedPolynomial : Error {
  using Error::Error;
};
struct UnsupportedTerm : Error {
  using Error::Error;
};
struct SingularMode : Error {
  using Error::Error;
};
struct PlaneMismatch : Error {
  using Error::Error;
};
struct NonPositivePartition : Error {
  using Error::Error;
};
struct AngleCountMismatch : Error {
  using Error::Error;
};
struct LayoutMismatch : Error {
  using Error::Error;
};
struct EmptyAfterFiltering : Error {
  using Error::Error;
};
struct DidNotConverge : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace pfz
