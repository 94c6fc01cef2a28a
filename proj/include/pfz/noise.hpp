// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pfz/circuit.hpp"

namespace pfz {

// Coherent control error on entangling gates: the implemented XX rotation
// angle is a * t and each qubit picks up a z frame shift b * t, modeled as
//   XX(t)  ->  [Rz(b * t_trim) x Rz(b * t_trim)]  XX(a * t_trim)  [X x X]^n
// (rightmost factor applied first, i.e. the frame shift acts last) after
// folding t = t_trim + n * pi/2 with t_trim in (-pi/4, pi/4].
struct LinearShiftParams {
  double a = 1.0;
  double b = 0.0;
};

struct FoldedAngle {
  double trimmed = 0.0;
  long long quarter_turns = 0;  // n in t = trimmed + n * pi/2
};

FoldedAngle fold_angle(double t);

// Gate sequence replacing XX(q0, q1, t) under the model.
std::vector<Gate> noisy_xx_gates(int q0, int q1, double t, const LinearShiftParams& params);

struct NoiseModel {
  LinearShiftParams params;
  // When true, YY and ZZ rotations are also replaced through their exact
  // XX conjugations (Rz(-pi/2) pair for YY, Hadamard pair for ZZ); by
  // default only XX gates are affected.
  bool replace_yy_zz = false;
};

// Rewrites a circuit gate by gate under the model; non-entangling gates and
// gates outside the model pass through unchanged.
Circuit apply_noise(const Circuit& ideal, const NoiseModel& model);

// Least-squares fit of (a, b): minimizes sum_i |model(params)[i] - observed[i]|^2
// with Nelder-Mead restarts around (1, 0).  `model` evaluates the full
// observable trace for a candidate parameter pair.
using TraceModelFn = std::function<std::vector<cplx>(const LinearShiftParams&)>;

LinearShiftParams fit_linear_shift(const TraceModelFn& model,
                                   const std::vector<cplx>& observed,
                                   std::uint64_t seed = 777, int n_restarts = 5);

}  // namespace pfz
