// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/noise.hpp"

#include <cmath>

#include "pfz/errors.hpp"
#include "pfz/optim.hpp"
#include "pfz/util.hpp"

namespace pfz {

FoldedAngle fold_angle(double t) {
  const double half_pi = 0.5 * kPi;
  const long long n = static_cast<long long>(std::ceil((t - 0.25 * kPi) / half_pi));
  FoldedAngle f;
  f.quarter_turns = n;
  f.trimmed = t - static_cast<double>(n) * half_pi;
  return f;
}

std::vector<Gate> noisy_xx_gates(int q0, int q1, double t, const LinearShiftParams& params) {
  const FoldedAngle f = fold_angle(t);
  std::vector<Gate> out;
  if ((f.quarter_turns % 2 + 2) % 2 == 1) {
    out.push_back(Gate::x(q0));
    out.push_back(Gate::x(q1));
  }
  out.push_back(Gate::xx(q0, q1, params.a * f.trimmed));
  out.push_back(Gate::rz(q0, params.b * f.trimmed));
  out.push_back(Gate::rz(q1, params.b * f.trimmed));
  return out;
}

Circuit apply_noise(const Circuit& ideal, const NoiseModel& model) {
  Circuit out(ideal.n_qubits);
  auto append = [&](const std::vector<Gate>& gates) {
    for (const Gate& g : gates) out.add(g);
  };
  for (const Gate& g : ideal.gates) {
    switch (g.kind) {
      case GateKind::XX:
        append(noisy_xx_gates(g.q0, g.q1, g.theta, model.params));
        break;
      case GateKind::YY:
        if (model.replace_yy_zz) {
          // YY(t) = [Rz(pi/2) x Rz(pi/2)] XX(t) [Rz(-pi/2) x Rz(-pi/2)].
          out.add(Gate::rz(g.q0, -0.5 * kPi));
          out.add(Gate::rz(g.q1, -0.5 * kPi));
          append(noisy_xx_gates(g.q0, g.q1, g.theta, model.params));
          out.add(Gate::rz(g.q0, 0.5 * kPi));
          out.add(Gate::rz(g.q1, 0.5 * kPi));
        } else {
          out.add(g);
        }
        break;
      case GateKind::ZZ:
        if (model.replace_yy_zz) {
          // ZZ(t) = [H x H] XX(t) [H x H].
          out.add(Gate::h(g.q0));
          out.add(Gate::h(g.q1));
          append(noisy_xx_gates(g.q0, g.q1, g.theta, model.params));
          out.add(Gate::h(g.q0));
          out.add(Gate::h(g.q1));
        } else {
          out.add(g);
        }
        break;
      default:
        out.add(g);
        break;
    }
  }
  return out;
}

LinearShiftParams fit_linear_shift(const TraceModelFn& model,
                                   const std::vector<cplx>& observed,
                                   std::uint64_t seed, int n_restarts) {
  if (observed.empty()) throw ConfigError("fit_linear_shift: empty observation vector");
  if (n_restarts < 1) throw ConfigError("fit_linear_shift: need n_restarts >= 1");

  ObjectiveFn objective = [&](const std::vector<double>& x) {
    const std::vector<cplx> predicted = model(LinearShiftParams{x[0], x[1]});
    if (predicted.size() != observed.size()) {
      throw ConfigError("fit_linear_shift: model length does not match observations");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) s += std::norm(predicted[i] - observed[i]);
    return s;
  };

  NelderMeadOptions nm;
  nm.max_iter = 2000;
  nm.initial_step = 0.05;

  std::vector<double> best_x = {1.0, 0.0};
  double best_f = objective(best_x);
  for (int r = 0; r < n_restarts; ++r) {
    std::vector<double> x0 = {1.0, 0.0};
    if (r > 0) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
      x0[0] += rng.uniform(-0.1, 0.1);
      x0[1] += rng.uniform(-0.1, 0.1);
    }
    OptimResult res = nelder_mead(objective, x0, nm);
    if (res.value < best_f) {
      best_f = res.value;
      best_x = res.x;
    }
  }
  return LinearShiftParams{best_x[0], best_x[1]};
}

}  // namespace pfz
