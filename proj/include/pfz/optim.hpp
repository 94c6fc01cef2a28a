// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <functional>
#include <vector>

namespace pfz {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

struct OptimResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct NelderMeadOptions {
  int max_iter = 4000;
  double f_tol = 1e-12;   // simplex spread in function value
  double x_tol = 1e-10;   // simplex spread in parameter space
  double initial_step = 0.5;
};

// Minimizes fn starting from x0 (downhill simplex; reflection 1, expansion 2,
// contraction 0.5, shrink 0.5).
OptimResult nelder_mead(const ObjectiveFn& fn, const std::vector<double>& x0,
                        const NelderMeadOptions& options = {});

struct CoordinateDescentOptions {
  int max_cycles = 200;
  double span = 1.0;      // initial one-sided bracket per coordinate
  double tol = 1e-10;     // golden-section bracket width and improvement floor
};

// Cyclic coordinate descent; each coordinate is minimized by golden-section
// search on [x_i - span, x_i + span] with the span halved when a full cycle
// fails to improve.
OptimResult coordinate_descent(const ObjectiveFn& fn, const std::vector<double>& x0,
                               const CoordinateDescentOptions& options = {});

}  // namespace pfz
